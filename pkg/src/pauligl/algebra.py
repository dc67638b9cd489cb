"""Exact arithmetic for the 2x2 generator matrices and their Kronecker products.

A length-m tuple of digits in {0, 1, 2, 3} (a multi-index) names one basis
element of the space of 2^m x 2^m complex matrices: the Kronecker product of
the corresponding 2x2 generators, leftmost factor first.  The product of two
basis elements is again a single basis element times a phase in
{1, i, -1, -i}.  That phase is carried exactly, as an integer power of i, so
multiplying basis elements involves no floating-point arithmetic at all.
"""

from __future__ import annotations

import enum
import functools
from typing import NamedTuple

import numpy as np

from .errors import DimensionError, DomainError

__all__ = [
    "EPSILON",
    "Phase",
    "ScaledMultiIndex",
    "pauli_matrix",
    "single_product",
    "multi_product",
    "kron",
    "basis_element",
    "validate_multi_index",
]

#: Levi-Civita symbol on indices 0..2 with EPSILON[0, 1, 2] == +1.
EPSILON = np.zeros((3, 3, 3), dtype=np.int8)
for _i, _j, _k, _s in [(0, 1, 2, 1), (1, 2, 0, 1), (2, 0, 1, 1),
                       (2, 1, 0, -1), (1, 0, 2, -1), (0, 2, 1, -1)]:
    EPSILON[_i, _j, _k] = _s
EPSILON.flags.writeable = False


class Phase(enum.Enum):
    """A fourth root of unity, stored exactly as the exponent of i."""

    PLUS_ONE = 0
    PLUS_I = 1
    MINUS_ONE = 2
    MINUS_I = 3

    def __mul__(self, other: "Phase") -> "Phase":
        return Phase((self.value + other.value) % 4)

    def to_complex(self) -> complex:
        return (1 + 0j, 1j, -1 + 0j, -1j)[self.value]

    def __repr__(self) -> str:
        return ("+1", "+i", "-1", "-i")[self.value]


class ScaledMultiIndex(NamedTuple):
    """A basis element together with an exact phase: phase * basis[index]."""

    phase: Phase
    index: tuple[int, ...]


def _readonly(rows) -> np.ndarray:
    m = np.array(rows, dtype=complex)
    m.flags.writeable = False
    return m


_GENERATORS = (
    _readonly([[1, 0], [0, 1]]),
    _readonly([[0, 1], [1, 0]]),
    _readonly([[0, -1j], [1j, 0]]),
    _readonly([[1, 0], [0, -1]]),
)


def _check_digit(mu) -> int:
    mu = int(mu)
    if mu not in (0, 1, 2, 3):
        raise DomainError(f"generator index must be in 0..3, got {mu}")
    return mu


def validate_multi_index(idx) -> tuple[int, ...]:
    """Normalize to a tuple of digits in 0..3; reject empty or out-of-range."""
    idx = tuple(_check_digit(mu) for mu in idx)
    if not idx:
        raise DimensionError("multi-index must have at least one factor")
    return idx


def pauli_matrix(mu: int) -> np.ndarray:
    """The 2x2 generator for digit mu: identity, then the three Pauli matrices.

    Entries are exact (0, +-1, +-i).  The returned array is read-only.
    """
    return _GENERATORS[_check_digit(mu)]


# single_product(mu, nu) as a precomputed 16-entry table.  For distinct
# nonzero digits the result digit is the remaining one and the phase is
# i * epsilon; digit 0 and equal digits multiply to phase +1.
def _single_table() -> dict[tuple[int, int], tuple[Phase, int]]:
    table = {}
    for mu in range(4):
        for nu in range(4):
            if mu == 0:
                table[mu, nu] = (Phase.PLUS_ONE, nu)
            elif nu == 0:
                table[mu, nu] = (Phase.PLUS_ONE, mu)
            elif mu == nu:
                table[mu, nu] = (Phase.PLUS_ONE, 0)
            else:
                lam = ({1, 2, 3} - {mu, nu}).pop()
                sign = int(EPSILON[mu - 1, nu - 1, lam - 1])
                table[mu, nu] = (Phase.PLUS_I if sign == 1 else Phase.MINUS_I, lam)
    return table


_SINGLE = _single_table()


def single_product(mu: int, nu: int) -> ScaledMultiIndex:
    """Exact product of two generators: generator(mu) @ generator(nu)."""
    phase, lam = _SINGLE[_check_digit(mu), _check_digit(nu)]
    return ScaledMultiIndex(phase, (lam,))


def multi_product(a, b) -> ScaledMultiIndex:
    """Factorwise product of two equal-length multi-indices.

    Returns the single phased basis element equal to
    basis_element(a) @ basis_element(b); phases multiply across factors.
    """
    a = validate_multi_index(a)
    b = validate_multi_index(b)
    if len(a) != len(b):
        raise DimensionError(
            f"incompatible tensor orders: {len(a)} vs {len(b)}")
    exponent = 0
    out = []
    for mu, nu in zip(a, b):
        phase, lam = _SINGLE[mu, nu]
        exponent += phase.value
        out.append(lam)
    return ScaledMultiIndex(Phase(exponent % 4), tuple(out))


def kron(a, b) -> np.ndarray:
    """Kronecker product; entry ((ia*nb + ib), (ja*nb + jb)) = a[ia,ja]*b[ib,jb]."""
    return np.kron(np.asarray(a, dtype=complex), np.asarray(b, dtype=complex))


@functools.lru_cache(maxsize=None)
def _basis_element_cached(idx: tuple[int, ...]) -> np.ndarray:
    mat = _GENERATORS[idx[0]]
    for mu in idx[1:]:
        mat = np.kron(mat, _GENERATORS[mu])
    mat.flags.writeable = False
    return mat


def basis_element(idx) -> np.ndarray:
    """Dense 2^m x 2^m basis element for a multi-index (read-only, cached)."""
    return _basis_element_cached(validate_multi_index(idx))
