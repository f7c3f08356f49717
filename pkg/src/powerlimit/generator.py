"""Seeded random matrices that satisfy, or deliberately violate, the convergence conditions.

Randomness comes from numpy's ``PCG64`` bit generator seeded through
``SeedSequence((seed, family_index, d))``, and only ``Generator.random`` is
drawn from, so a ``(family, seed)`` pair gives bit-identical output on every
platform and numpy release that keeps PCG64.

Column moduli are uniform on the shifted simplex
``{m : m_i >= min_modulus, sum(m) = total}``: an ordinary uniform simplex
point (normalised exponentials) scaled into the slack ``total - d*min``.
"""
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .transforms import PhaseTwist, phase_twist

PI_EXCLUSION = 1e-6
# Rotations closer than this to 0 (mod 2*pi) leave B^n decaying too slowly to
# reach zero within the default iteration budget.
ROTATION_MARGIN = 0.25
SUBSTOCHASTIC_MARGIN = 0.05


class Family(str, Enum):
    POSITIVE_STOCHASTIC = "PositiveStochastic"
    PHASE_TWISTED_2X2 = "PhaseTwisted2x2"
    COMPLEX_OFF_DIAGONAL = "ComplexOffDiagonal"
    COMPLEX_DIAGONAL = "ComplexDiagonal"
    NEGATIVE_ENTRY = "NegativeEntry"
    SUBSTOCHASTIC = "Substochastic"
    ALL_NEGATIVE = "AllNegative"


_FAMILY_INDEX = {f: i for i, f in enumerate(Family)}
_ALIASES = {f.value.lower(): f for f in Family}
_ALIASES.update({f.name.lower().replace("_", "-"): f for f in Family})
_ALIASES.update({f.name.lower(): f for f in Family})


def family_from_name(name):
    try:
        return _ALIASES[name.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown family {name!r}; choose from {[f.value for f in Family]}") from None


@dataclass(frozen=True)
class MatrixFamily:
    name: Family
    d: int
    min_modulus: float = 0.01

    def __post_init__(self):
        if not isinstance(self.name, Family):
            object.__setattr__(self, "name", family_from_name(self.name))
        if self.d < 2:
            raise ValueError("families need d >= 2")
        if self.name is Family.PHASE_TWISTED_2X2 and self.d != 2:
            raise ValueError("PhaseTwisted2x2 requires d = 2")
        if not self.min_modulus > 0:
            raise ValueError("min_modulus must be positive")
        if self.min_modulus * self.d >= 1:
            raise ValueError(f"infeasible: min_modulus*d = {self.min_modulus * self.d:g} >= 1")


def _rng(family, seed):
    ss = np.random.SeedSequence((int(seed) & (2**63 - 1), _FAMILY_INDEX[family.name], family.d))
    return np.random.Generator(np.random.PCG64(ss))


def _randint(rng, k):
    return min(int(rng.random() * k), k - 1)


def _simplex_column(rng, d, lo, total):
    w = -np.log1p(-rng.random(d))  # 1 - U avoids log(0)
    w /= w.sum()
    return lo + (total - d * lo) * w


def _stochastic(rng, d, lo):
    return np.column_stack([_simplex_column(rng, d, lo, 1.0) for _ in range(d)])


def _angle(rng):
    """Uniform on (0, 2*pi) minus small neighbourhoods of 0 and pi."""
    while True:
        t = ROTATION_MARGIN + (2 * math.pi - 2 * ROTATION_MARGIN) * rng.random()
        if t > 0 and abs(t - math.pi) > max(PI_EXCLUSION, ROTATION_MARGIN):
            return t


def _signature_similar(signs):
    """True iff ``signs[i, j] == s_i * s_j`` for some vector ``s`` of +-1.

    Those sign patterns are diagonally similar to the positive matrix, so the
    powers keep a nonzero limit.
    """
    s = signs[0] * signs[0, 0]
    return bool(np.all(signs == np.outer(s, s)))


def generate(family, seed):
    """Deterministic sample of ``family`` for ``seed``; see :class:`Family`."""
    d, lo = family.d, family.min_modulus
    rng = _rng(family, seed)
    name = family.name

    if name is Family.SUBSTOCHASTIC:
        totals = 0.5 + 0.5 * rng.random(d)
        j = _randint(rng, d)
        totals[j] = 0.5 + (0.5 - SUBSTOCHASTIC_MARGIN) * rng.random()
        M = np.column_stack([_simplex_column(rng, d, lo, t) for t in totals])
        out = M.astype(np.complex128)
    else:
        P = _stochastic(rng, d, lo)
        if name is Family.POSITIVE_STOCHASTIC:
            out = P.astype(np.complex128)
        elif name is Family.ALL_NEGATIVE:
            out = (-P).astype(np.complex128)
        elif name is Family.PHASE_TWISTED_2X2:
            while True:
                phi = 2 * math.pi * rng.random()
                if abs(phi - math.pi) > PI_EXCLUSION:
                    break
            out = phase_twist(P, PhaseTwist(phi))
        elif name is Family.COMPLEX_OFF_DIAGONAL:
            off = P + np.diag(np.full(d, -np.inf))
            i, j = np.unravel_index(np.argmax(off), P.shape)
            out = P.astype(np.complex128)
            out[i, j] *= np.exp(1j * _angle(rng))
        elif name is Family.COMPLEX_DIAGONAL:
            i = int(np.argmax(np.diag(P)))
            out = P.astype(np.complex128)
            out[i, i] *= np.exp(1j * _angle(rng))
        elif name is Family.NEGATIVE_ENTRY:
            while True:
                signs = np.where(rng.random((d, d)) < 0.5, -1.0, 1.0)
                if np.any(signs < 0) and not _signature_similar(signs):
                    break
            out = (signs * P).astype(np.complex128)
        else:  # pragma: no cover
            raise ValueError(f"unhandled family {name}")
    _check_contract(family, out)
    return out


def _check_contract(family, M):
    sums = np.abs(M).sum(axis=0)
    assert np.all(np.isfinite(M))
    assert np.min(np.abs(M)) >= family.min_modulus * (1 - 1e-12)
    if family.name is Family.SUBSTOCHASTIC:
        assert np.all(M.imag == 0) and np.all(M.real > 0)
        assert np.all(sums <= 1 + 1e-12) and np.min(sums) <= 1 - SUBSTOCHASTIC_MARGIN + 1e-12
    else:
        assert np.max(np.abs(sums - 1.0)) <= 1e-12
    if family.name is Family.NEGATIVE_ENTRY:
        assert np.all(M.imag == 0) and np.any(M.real < 0)
    if family.name is Family.ALL_NEGATIVE:
        assert np.all(M.real < 0)
