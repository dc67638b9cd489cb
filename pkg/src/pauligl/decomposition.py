"""Bijection between dense 2^m x 2^m matrices and sparse basis coefficients.

Every 2^m x 2^m complex matrix A has a unique expansion over the tensor-product
generator basis; the coefficient attached to a multi-index is

    c(idx) = 2^-m * Tr(basis_element(idx) @ A).

``decompose`` evaluates this with a factorized transform (one 4x4 mixing pass
per tensor factor, O(m * 4^m) total); ``decompose_via_traces`` evaluates the
trace formula literally and is kept as the slow reference path.  Both must
agree to 1e-13.
"""

from __future__ import annotations

import cmath
import itertools

import numpy as np

from .algebra import basis_element, validate_multi_index
from .errors import DimensionError, DomainError

__all__ = [
    "DEFAULT_PRUNE_TOL",
    "CoefficientTensor",
    "decompose",
    "decompose_via_traces",
    "reconstruct",
    "trace_from_coeffs",
    "coeff_distance",
]

#: Coefficients with modulus <= this are dropped from canonical sparse form.
DEFAULT_PRUNE_TOL = 1e-12


class CoefficientTensor:
    """Sparse coefficients of one matrix over the generator basis.

    Maps length-m multi-indices to complex coefficients.  Construction
    canonicalizes: indices are validated, entries with modulus <= tol are
    dropped, and survivors are stored in lexicographic index order.
    Instances are treated as immutable.
    """

    __slots__ = ("m", "coeffs")

    def __init__(self, m: int, coeffs=None, *, tol: float = DEFAULT_PRUNE_TOL):
        m = int(m)
        if m < 1:
            raise DimensionError(f"tensor order must be >= 1, got {m}")
        if tol < 0:
            raise DomainError(f"prune tolerance must be >= 0, got {tol}")
        items = coeffs.items() if hasattr(coeffs, "items") else (coeffs or ())
        kept = {}
        for idx, value in items:
            idx = validate_multi_index(idx)
            if len(idx) != m:
                raise DimensionError(
                    f"multi-index {idx} has {len(idx)} factors, expected {m}")
            value = complex(value)
            if not cmath.isfinite(value):
                raise DomainError(f"non-finite coefficient at {idx}")
            if abs(value) > tol:
                kept[idx] = value
            else:
                kept.pop(idx, None)
        self.m = m
        self.coeffs = dict(sorted(kept.items()))

    @classmethod
    def identity(cls, m: int) -> "CoefficientTensor":
        return cls(m, {(0,) * m: 1.0})

    @property
    def side(self) -> int:
        """Side length of the dense matrix this tensor represents."""
        return 2 ** self.m

    def coeff(self, idx) -> complex:
        """Coefficient at a multi-index; 0 where nothing is stored."""
        return self.coeffs.get(tuple(idx), 0j)

    def support(self) -> frozenset:
        return frozenset(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoefficientTensor):
            return NotImplemented
        return self.m == other.m and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"CoefficientTensor(m={self.m}, nnz={len(self.coeffs)})"


def coeff_distance(a: CoefficientTensor, b: CoefficientTensor) -> float:
    """Max absolute coefficient difference over the union of supports."""
    if a.m != b.m:
        raise DimensionError(f"tensor orders differ: {a.m} vs {b.m}")
    keys = set(a.coeffs) | set(b.coeffs)
    return max((abs(a.coeff(k) - b.coeff(k)) for k in keys), default=0.0)


def _order_of(side: int) -> int:
    m = side.bit_length() - 1
    if side < 2 or 2 ** m != side:
        raise DimensionError(
            f"matrix side must be a power of two >= 2, got {side}")
    return m


def _as_square(matrix) -> np.ndarray:
    a = np.asarray(matrix, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {a.shape}")
    return a


# 4x4 mixing matrices for one tensor factor.  Entry pairs (r, s) of a 2x2
# block are flattened to p = 2r + s.
#   forward:  c[mu] = sum_p FORWARD[mu, p] * block[p]   (trace formula)
#   inverse:  block[p] = sum_mu INVERSE[p, mu] * c[mu]
def _mixing_matrices() -> tuple[np.ndarray, np.ndarray]:
    from .algebra import pauli_matrix

    forward = np.zeros((4, 4), dtype=complex)
    inverse = np.zeros((4, 4), dtype=complex)
    for mu in range(4):
        g = pauli_matrix(mu)
        for r in range(2):
            for s in range(2):
                forward[mu, 2 * r + s] = g[s, r] / 2
                inverse[2 * r + s, mu] = g[r, s]
    return forward, inverse


_FORWARD, _INVERSE = _mixing_matrices()


def _interleaved(matrix: np.ndarray, m: int) -> np.ndarray:
    # (2^m, 2^m) -> (4,)*m with axis k the flattened (row_k, col_k) pair
    t = matrix.reshape((2,) * (2 * m))
    perm = [ax for k in range(m) for ax in (k, m + k)]
    return t.transpose(perm).reshape((4,) * m)


def _deinterleaved(tensor: np.ndarray, m: int) -> np.ndarray:
    t = tensor.reshape((2,) * (2 * m))
    perm = [2 * k for k in range(m)] + [2 * k + 1 for k in range(m)]
    return t.transpose(perm).reshape((2 ** m, 2 ** m))


def _apply_along_each_axis(tensor: np.ndarray, mix: np.ndarray, m: int) -> np.ndarray:
    for k in range(m):
        tensor = np.moveaxis(np.tensordot(tensor, mix, axes=([k], [1])), -1, k)
    return tensor


def coefficient_array(matrix) -> np.ndarray:
    """Dense (4,)*m array of all basis coefficients of a 2^m x 2^m matrix."""
    a = _as_square(matrix)
    m = _order_of(a.shape[0])
    return _apply_along_each_axis(_interleaved(a, m), _FORWARD, m)


def decompose(matrix, tol: float = DEFAULT_PRUNE_TOL) -> CoefficientTensor:
    """Expand a dense matrix into sparse basis coefficients.

    The side must be a power of two >= 2.  Coefficients with modulus <= tol
    are omitted; ``reconstruct`` inverts the result up to tol.
    """
    if tol < 0:
        raise DomainError(f"prune tolerance must be >= 0, got {tol}")
    c = coefficient_array(matrix)
    m = c.ndim
    flat = c.reshape(-1)
    keep = np.nonzero(np.abs(flat) > tol)[0]
    coeffs = {}
    for pos in keep:
        idx = np.unravel_index(pos, c.shape)
        coeffs[tuple(int(d) for d in idx)] = complex(flat[pos])
    return CoefficientTensor(m, coeffs, tol=0.0)


def decompose_via_traces(matrix, tol: float = DEFAULT_PRUNE_TOL) -> CoefficientTensor:
    """Reference path: evaluate c(idx) = 2^-m * Tr(basis_element(idx) @ A) per index."""
    if tol < 0:
        raise DomainError(f"prune tolerance must be >= 0, got {tol}")
    a = _as_square(matrix)
    m = _order_of(a.shape[0])
    scale = 2.0 ** -m
    coeffs = {}
    for idx in itertools.product(range(4), repeat=m):
        value = scale * complex(np.einsum("ij,ji->", basis_element(idx), a))
        if abs(value) > tol:
            coeffs[idx] = value
    return CoefficientTensor(m, coeffs, tol=0.0)


def reconstruct(c: CoefficientTensor) -> np.ndarray:
    """Dense matrix equal to the coefficient-weighted sum of basis elements."""
    dense = np.zeros((4,) * c.m, dtype=complex)
    for idx, value in c.coeffs.items():
        dense[idx] = value
    return _deinterleaved(_apply_along_each_axis(dense, _INVERSE, c.m), c.m)


def trace_from_coeffs(c: CoefficientTensor) -> complex:
    """Matrix trace read off the all-zeros coefficient: 2^m * c((0,...,0))."""
    return (2 ** c.m) * c.coeff((0,) * c.m)
