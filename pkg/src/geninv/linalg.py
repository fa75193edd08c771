"""Dense complex matrix kernel: tolerance policy, predicates, rank, nullspace.

Every matrix in this package is a validated 2-D ``numpy.complex128`` array.
All approximate decisions (rank, equality, nilpotency, zero products) are
governed by a single :class:`TolerancePolicy` so that results are reproducible
from the policy alone.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "DimensionError",
    "TolerancePolicy",
    "DEFAULT_POLICY",
    "as_matrix",
    "conjugate_transpose",
    "add",
    "subtract",
    "multiply",
    "scale",
    "power",
    "frobenius",
    "rel_residual",
    "numerical_rank",
    "approx_equal",
    "same_column_space",
    "is_projection",
    "is_nilpotent",
    "null_space_basis",
    "scaled_power",
    "power_rank_chain",
    "product_with_scale",
    "is_zero_product",
]


class DimensionError(ValueError):
    """Shapes do not conform for the requested operation."""


@dataclass(frozen=True)
class TolerancePolicy:
    """Relative thresholds for rank, equality and certificate decisions.

    rank_rel_tol: singular values below ``rank_rel_tol * sigma_max`` count as
        zero.
    eq_rel_tol: relative Frobenius threshold for matrix equality.
    residual_tol: acceptance threshold for defining-equation residuals.
    """

    rank_rel_tol: float = 1e-10
    eq_rel_tol: float = 1e-8
    residual_tol: float = 1e-8

    def __post_init__(self):
        for name in ("rank_rel_tol", "eq_rel_tol", "residual_tol"):
            value = getattr(self, name)
            if not (0.0 <= value < 1.0):
                raise ValueError(f"{name} must lie in [0, 1), got {value!r}")


DEFAULT_POLICY = TolerancePolicy()


def as_matrix(data) -> np.ndarray:
    """Validate and coerce ``data`` to a 2-D complex128 matrix.

    Raises DimensionError for non-2-D input and ValueError for non-finite
    entries.
    """
    A = np.asarray(data, dtype=np.complex128)
    if A.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got ndim={A.ndim}")
    if A.size and not (np.isfinite(A.real).all() and np.isfinite(A.imag).all()):
        raise ValueError("matrix entries must all be finite")
    return A


def _require_square(A):
    if A.shape[0] != A.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {A.shape}")


def conjugate_transpose(A) -> np.ndarray:
    """Conjugate transpose; applying it twice returns the input exactly."""
    return as_matrix(A).conj().T


def add(A, B) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape:
        raise DimensionError(f"cannot add shapes {A.shape} and {B.shape}")
    return A + B


def subtract(A, B) -> np.ndarray:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape:
        raise DimensionError(f"cannot subtract shapes {A.shape} and {B.shape}")
    return A - B


def multiply(A, B) -> np.ndarray:
    """Matrix product with explicit conformability checking (no broadcasting)."""
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[1] != B.shape[0]:
        raise DimensionError(f"cannot multiply shapes {A.shape} and {B.shape}")
    return A @ B


def scale(alpha, A) -> np.ndarray:
    return complex(alpha) * as_matrix(A)


def power(A, k: int) -> np.ndarray:
    """Integer power of a square matrix; ``A^0`` is the identity."""
    A = as_matrix(A)
    _require_square(A)
    if k < 0:
        raise ValueError(f"exponent must be >= 0, got {k}")
    return np.linalg.matrix_power(A, k)


def frobenius(A) -> float:
    return float(np.linalg.norm(A))


def rel_residual(X, Y) -> float:
    """``||X - Y||_F / max(1, ||Y||_F)`` - the package-wide residual scale."""
    return frobenius(np.asarray(X) - np.asarray(Y)) / max(1.0, frobenius(Y))


def numerical_rank(A, tol: TolerancePolicy = DEFAULT_POLICY) -> int:
    """Count of singular values above ``rank_rel_tol`` times the largest."""
    A = as_matrix(A)
    if A.size == 0:
        return 0
    s = np.linalg.svd(A, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.sum(s > tol.rank_rel_tol * s[0]))


def approx_equal(A, B, tol: TolerancePolicy = DEFAULT_POLICY) -> bool:
    A, B = as_matrix(A), as_matrix(B)
    if A.shape != B.shape:
        raise DimensionError(f"cannot compare shapes {A.shape} and {B.shape}")
    bound = tol.eq_rel_tol * max(1.0, frobenius(A), frobenius(B))
    return frobenius(A - B) <= bound


def same_column_space(A, B, tol: TolerancePolicy = DEFAULT_POLICY) -> bool:
    """Column spaces coincide: rank(A) = rank(B) = rank([A | B])."""
    A, B = as_matrix(A), as_matrix(B)
    if A.shape[0] != B.shape[0]:
        raise DimensionError(
            f"row counts differ: {A.shape[0]} vs {B.shape[0]}")
    ra = numerical_rank(A, tol)
    rb = numerical_rank(B, tol)
    if ra != rb:
        return False
    return numerical_rank(np.hstack([A, B]), tol) == ra


def is_projection(P, tol: TolerancePolicy = DEFAULT_POLICY) -> bool:
    """True iff P is idempotent and Hermitian under the policy."""
    P = as_matrix(P)
    _require_square(P)
    return approx_equal(P @ P, P, tol) and approx_equal(P.conj().T, P, tol)


def scaled_power(A, k: int, tol: TolerancePolicy = DEFAULT_POLICY):
    """``A^k`` renormalized after each multiply, with collapse detection.

    Returns ``(P, collapsed)``.  ``collapsed`` is True when some intermediate
    product fell below ``rank_rel_tol * ||A||`` of its predecessor, i.e. the
    true power is the zero matrix and what remains is rounding noise.  In that
    case P is exactly zero.  Renormalizing keeps rank decisions meaningful for
    high powers without overflow or underflow.
    """
    A = as_matrix(A)
    _require_square(A)
    n = A.shape[0]
    P = np.eye(n, dtype=np.complex128)
    if k == 0:
        return P, False
    nA = frobenius(A)
    if nA == 0.0:
        return np.zeros_like(A), True
    for _ in range(k):
        P = P @ A
        nf = frobenius(P)
        if nf <= tol.rank_rel_tol * nA:
            return np.zeros_like(A), True
        P = P / nf
    return P, False


def power_rank_chain(A, tol: TolerancePolicy = DEFAULT_POLICY):
    """Ranks of A^0, A^1, ..., A^n (n = dimension), computed on scaled powers."""
    A = as_matrix(A)
    _require_square(A)
    n = A.shape[0]
    ranks = [n]
    nA = frobenius(A)
    if nA == 0.0:
        return ranks + [0] * n
    P = np.eye(n, dtype=np.complex128)
    dead = False
    for _ in range(n):
        if dead:
            ranks.append(0)
            continue
        P = P @ A
        nf = frobenius(P)
        if nf <= tol.rank_rel_tol * nA:
            dead = True
            ranks.append(0)
            continue
        P = P / nf
        ranks.append(numerical_rank(P, tol))
    return ranks


def is_nilpotent(A, tol: TolerancePolicy = DEFAULT_POLICY) -> bool:
    """True iff the n-th scaled power of the n-by-n input has rank zero."""
    A = as_matrix(A)
    _require_square(A)
    if A.shape[0] == 0:
        return True
    P, collapsed = scaled_power(A, A.shape[0], tol)
    return collapsed or numerical_rank(P, tol) == 0


def null_space_basis(A, tol: TolerancePolicy = DEFAULT_POLICY) -> np.ndarray:
    """Orthonormal kernel basis as the columns of the returned matrix."""
    A = as_matrix(A)
    if A.size == 0:
        return np.eye(A.shape[1], dtype=np.complex128)
    nA = frobenius(A)
    if nA == 0.0:
        return np.eye(A.shape[1], dtype=np.complex128)
    _, _, Vh = np.linalg.svd(A / nA)
    r = numerical_rank(A, tol)
    return Vh[r:].conj().T


def product_with_scale(factors):
    """Product of the factors plus the product of their Frobenius norms.

    The scale is the natural magnitude against which the product's norm must
    be judged: a result far below ``eps * scale`` is rounding dust left over
    from exact cancellation, not a genuinely tiny matrix.
    """
    factors = [as_matrix(F) for F in factors]
    P = factors[0]
    scale_acc = frobenius(P)
    for F in factors[1:]:
        if P.shape[1] != F.shape[0]:
            raise DimensionError(
                f"cannot multiply shapes {P.shape} and {F.shape}")
        P = P @ F
        scale_acc *= frobenius(F)
    return P, scale_acc


def is_zero_product(factors, tol: TolerancePolicy = DEFAULT_POLICY) -> bool:
    """Does the product of the factors vanish, at the factors' own scale?"""
    P, scale_acc = product_with_scale(factors)
    if frobenius(P) <= tol.residual_tol * max(1.0, scale_acc):
        return True
    return numerical_rank(P, tol) == 0
