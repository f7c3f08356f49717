import numpy as np
import pytest

from powerlimit.classify import Verdict, classify
from powerlimit.generator import Family, MatrixFamily, family_from_name, generate
from powerlimit.iteration import IterationOutcome, iterate
from powerlimit.matrix import column_abs_sums


@pytest.mark.parametrize(
    "family, d", [(f, d) for f in Family for d in (2, 3, 5) if f is not Family.PHASE_TWISTED_2X2 or d == 2]
)
def test_reproducible(family, d):
    f = MatrixFamily(family, d)
    for seed in range(20):
        a, b = generate(f, seed), generate(f, seed)
        assert a.tobytes() == b.tobytes()
    assert generate(f, 0).tobytes() != generate(f, 1).tobytes()


def test_frozen_sample():
    # pins the documented stream: PCG64 seeded from (seed, family index, d)
    M = generate(MatrixFamily("PositiveStochastic", 2), 0)
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence((0, 0, 2))))
    cols = []
    for _ in range(2):
        w = -np.log1p(-rng.random(2))
        cols.append(0.01 + 0.98 * w / w.sum())
    np.testing.assert_array_equal(M.real, np.column_stack(cols))


@pytest.mark.parametrize("seed", range(50))
def test_positive_stochastic_contract(seed):
    M = generate(MatrixFamily("PositiveStochastic", 3), seed)
    np.testing.assert_allclose(column_abs_sums(M), 1, atol=1e-12)
    assert M.real.min() >= 0.01 and np.all(M.imag == 0)


@pytest.mark.parametrize("seed", range(50))
def test_substochastic_contract(seed):
    M = generate(MatrixFamily("Substochastic", 2), seed)
    sums = column_abs_sums(M)
    assert np.all(sums <= 1) and sums.min() <= 0.95
    assert iterate(M).verdict is IterationOutcome.ZERO_LIMIT


@pytest.mark.parametrize("seed", range(50))
def test_phase_twisted_classified_nonzero(seed):
    M = generate(MatrixFamily("PhaseTwisted2x2", 2), seed)
    assert classify(M).verdict is Verdict.NONZERO_LIMIT


@pytest.mark.parametrize("d", [2, 4])
@pytest.mark.parametrize("seed", range(30))
def test_violating_families(d, seed):
    off = generate(MatrixFamily("ComplexOffDiagonal", d), seed)
    assert np.count_nonzero(off.imag) == 1 and np.count_nonzero(np.diag(off).imag) == 0
    diag = generate(MatrixFamily("ComplexDiagonal", d), seed)
    assert np.count_nonzero(diag.imag) == 1 and np.count_nonzero(np.diag(diag).imag) == 1
    neg = generate(MatrixFamily("NegativeEntry", d), seed)
    assert np.all(neg.imag == 0) and np.any(neg.real < 0)
    alln = generate(MatrixFamily("AllNegative", d), seed)
    assert np.all(alln.real < 0)
    for M in (off, diag, neg, alln):
        np.testing.assert_allclose(column_abs_sums(M), 1, atol=1e-12)
        assert classify(M).verdict is Verdict.NO_NONZERO_LIMIT


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(name="PhaseTwisted2x2", d=3),
        dict(name="PositiveStochastic", d=2, min_modulus=0),
        dict(name="PositiveStochastic", d=10, min_modulus=0.1),
        dict(name="PositiveStochastic", d=1),
        dict(name="NoSuchFamily", d=2),
    ],
)
def test_family_validation(kwargs):
    with pytest.raises(ValueError):
        MatrixFamily(**kwargs)


@pytest.mark.parametrize("name", ["substochastic", "Substochastic", "SUBSTOCHASTIC"])
def test_family_names(name):
    assert family_from_name(name) is Family.SUBSTOCHASTIC
    assert family_from_name("negative-entry") is Family.NEGATIVE_ENTRY
