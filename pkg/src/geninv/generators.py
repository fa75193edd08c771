"""Seeded generators for structured instances satisfying theorem hypotheses.

Hypotheses that are linear (or conjugate-linear) in one unknown block are
satisfied exactly by sampling from the nullspace of the corresponding
realified constraint system; the one nonlinear hypothesis (nilpotency of a
coupling product) is handled by rejection with a capped retry count and a
guaranteed zero fallback, flagged as degenerate.

Every generator is a pure function of its arguments: equal seeds give
bit-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import DEFAULT_POLICY, TolerancePolicy, frobenius
from .inverses import drazin, index, pseudo_core

__all__ = [
    "MAX_DIM",
    "MAX_BLOCK_DIM",
    "InstanceSpec",
    "Instance",
    "trial_seed",
    "gen_with_index",
    "gen_commutant_pair",
    "gen_star_dmp",
    "gen_annihilating_pair",
    "gen_lemma_2_5_instance",
    "gen_intertwined_4_1",
    "gen_intertwined_4_2",
    "gen_intertwined_4_3",
    "gen_intertwined_4_4",
    "gen_zero_product_4_5",
    "gen_zero_product_4_6",
    "generate",
    "instance_for",
]

MAX_DIM = 16        # nullspace solves stay desk-scale below this
MAX_BLOCK_DIM = 8   # per-block cap for the 2x2 block samplers
_RETRY_CAP = 64

SPEC_KINDS = ("plain", "with_index", "commutant_pair", "star_dmp",
              "annihilating_pair", "lemma_2_5", "intertwined_4_1",
              "intertwined_4_3", "zero_product_4_5")


@dataclass(frozen=True)
class InstanceSpec:
    """Seeded recipe for one structured instance."""

    kind: str
    dims: tuple
    seed: int
    target_index: int | None = None
    scale: float = 1.0

    def __post_init__(self):
        if self.kind not in SPEC_KINDS:
            raise ValueError(f"unknown instance kind {self.kind!r}")
        if any(d < 1 or d > MAX_DIM for d in self.dims):
            raise ValueError(f"dims must lie in [1, {MAX_DIM}], got {self.dims}")
        if self.scale <= 0:
            raise ValueError("scale must be positive")


@dataclass
class Instance:
    """Generated matrices keyed by symbol name, plus a degeneracy flag."""

    matrices: dict
    degenerate: bool = False


def trial_seed(master_seed: int, trial: int) -> np.random.SeedSequence:
    """Per-trial seed derivation; trials are independent of scheduling order."""
    return np.random.SeedSequence((int(master_seed), int(trial)))


def _rng(seed):
    if isinstance(seed, np.random.SeedSequence):
        return np.random.default_rng(seed)
    return np.random.default_rng(np.random.SeedSequence(int(seed)))


def _crandn(rg, *shape):
    return (rg.standard_normal(shape) + 1j * rg.standard_normal(shape)) / np.sqrt(2.0)


def _clamp_singular_values(M, lo, hi):
    if M.size == 0:
        return M
    U, s, Vh = np.linalg.svd(M)
    return (U * np.clip(s, lo, hi)) @ Vh


def _random_unitary(rg, n):
    Q, R = np.linalg.qr(_crandn(rg, n, n))
    # fix the phase so Q is a deterministic function of the sample
    return Q * (np.diagonal(R) / np.abs(np.diagonal(R)))


def _nilpotent_chain(rg, m, order):
    """m x m nilpotent whose nilpotency order is exactly max(order, 1)."""
    N = np.zeros((m, m), dtype=np.complex128)
    for i in range(min(order - 1, m - 1)):
        N[i, i + 1] = rg.uniform(0.5, 2.0)
    return N


def _with_index_rng(rg, n, k, r):
    K = (_clamp_singular_values(_crandn(rg, r, r), 0.1, 10.0)
         if r else np.zeros((0, 0), dtype=np.complex128))
    core = np.zeros((n, n), dtype=np.complex128)
    core[:r, :r] = K
    core[r:, r:] = _nilpotent_chain(rg, n - r, k)
    S = _clamp_singular_values(_crandn(rg, n, n), 0.5, 2.0)
    return S @ core @ np.linalg.inv(S)


def gen_with_index(n: int, k: int, r: int, seed) -> np.ndarray:
    """Matrix of dimension n with index exactly k and core rank r.

    Built as S (K + N) S^{-1}: K an r x r random invertible block with
    singular values clamped into [0.1, 10], N a nilpotent chain of order
    exactly max(k, 1), S well conditioned.  k = 0 requires r = n.
    """
    if not (1 <= n <= MAX_DIM):
        raise ValueError(f"n must lie in [1, {MAX_DIM}], got {n}")
    if k == 0:
        if r != n:
            raise ValueError("index 0 means invertible: r must equal n")
    elif not (1 <= k <= n and 0 <= r and r + k <= n):
        raise ValueError(f"infeasible (n={n}, k={k}, r={r}): need r + k <= n")
    return _with_index_rng(_rng(seed), n, k, r)


def _draw_index_rank(rg, n, target_index=None, kmax=3):
    k = int(target_index) if target_index is not None else int(
        rg.integers(0, min(kmax, n) + 1))
    if k == 0:
        return 0, n
    lo = 1 if n - k >= 1 else 0
    r = int(rg.integers(lo, n - k + 1))
    return k, r


# ---------------------------------------------------------------------------
# Realified homogeneous constraint systems


def _commutation_matrix(p, q):
    K = np.zeros((p * q, p * q))
    for i in range(p):
        for j in range(q):
            K[j + i * q, i + j * p] = 1.0
    return K


def _equation_rows(shape, lin_terms, conj_terms):
    """Realified rows of one equation sum L X R + sum M X* N = 0.

    Returns (rows, ref_scale); ref_scale is the natural coefficient magnitude
    (sum of the term factors' norm products), against which an equation whose
    coefficients cancelled to rounding dust can be recognized and dropped.
    """
    p, q = shape
    ref = 0.0
    S = None
    for L, R in lin_terms:
        L, R = np.asarray(L), np.asarray(R)
        ref += frobenius(L) * frobenius(R)
        part = np.kron(R.T, L)
        S = part if S is None else S + part
    T = None
    if conj_terms:
        K = _commutation_matrix(p, q)
        for M, N in conj_terms:
            M, N = np.asarray(M), np.asarray(N)
            ref += frobenius(M) * frobenius(N)
            part = np.kron(N.T, M) @ K
            T = part if T is None else T + part
    if S is not None and T is not None:
        rows = np.block([[S.real + T.real, -S.imag + T.imag],
                         [S.imag + T.imag, S.real - T.real]])
    elif S is not None:
        rows = np.block([[S.real, -S.imag], [S.imag, S.real]])
    else:
        rows = np.block([[T.real, T.imag], [T.imag, -T.real]])
    return rows, ref


def _nullspace_sample(rg, shape, equations, scale=1.0, rtol=None):
    """Random solution of the stacked homogeneous equations, or zero.

    equations: list of (lin_terms, conj_terms) as in :func:`_equation_rows`.
    Equations whose coefficients vanish at their factors' scale are dropped
    as identically-zero constraints.  Returns (X, nullity); X has Frobenius
    norm ``scale`` unless the solution space is trivial.
    """
    rtol = DEFAULT_POLICY.rank_rel_tol if rtol is None else rtol
    p, q = shape
    rows = []
    for lin, conj in equations:
        block, ref = _equation_rows(shape, lin, conj)
        if np.linalg.norm(block) > rtol * max(1.0, ref):
            rows.append(block)
    if not rows:
        X = _crandn(rg, p, q)
        return X * (scale / frobenius(X)), 2 * p * q
    A = np.vstack(rows)
    s = np.linalg.svd(A, compute_uv=False)
    rank = int(np.sum(s > rtol * s[0])) if s.size and s[0] > 0 else 0
    _, _, Vh = np.linalg.svd(A)
    basis = Vh[rank:].T
    nullity = basis.shape[1]
    if nullity == 0:
        return np.zeros((p, q), dtype=np.complex128), 0
    v = basis @ rg.standard_normal(nullity)
    X = (v[: p * q] + 1j * v[p * q:]).reshape((p, q), order="F")
    nf = frobenius(X)
    if nf > 0:
        X = X * (scale / nf)
    return X, nullity


# ---------------------------------------------------------------------------
# Single-matrix and pair generators


def gen_commutant_pair(n: int, seed, target_index=None, scale: float = 1.0):
    """(a, b) with ab = ba and a*b = ba* exactly, b sampled from the joint
    nullspace of the two stacked intertwining systems."""
    rg = _rng(seed)
    k, r = _draw_index_rank(rg, n, target_index)
    a = _with_index_rng(rg, n, k, r)
    b = _commutant_sample(rg, a, scale)
    return a, b


def _commutant_sample(rg, a, scale):
    n = a.shape[0]
    eye = np.eye(n, dtype=np.complex128)
    astar = a.conj().T
    equations = [
        ([(a, eye), (-eye, a)], []),
        ([(astar, eye), (-eye, astar)], []),
    ]
    b, _ = _nullspace_sample(rg, (n, n), equations, scale)
    return b


def gen_star_dmp(n: int, r: int, k: int, seed, scale: float = 1.0):
    """Unitary block sum of a normal invertible part and a nilpotent chain.

    Some power of the result has coinciding Moore-Penrose and group inverses.
    """
    if r + k > n or r < 0 or k < 0 or n < 1:
        raise ValueError(f"infeasible (n={n}, r={r}, k={k}): need r + k <= n")
    if k == 0 and r != n:
        raise ValueError("k = 0 leaves no nilpotent part: r must equal n")
    rg = _rng(seed)
    core = np.zeros((n, n), dtype=np.complex128)
    if r:
        W = _random_unitary(rg, r)
        lam = rg.uniform(0.1, 10.0, r) * np.exp(2j * np.pi * rg.uniform(0, 1, r))
        core[:r, :r] = W @ np.diag(lam) @ W.conj().T
    core[r:, r:] = _nilpotent_chain(rg, n - r, k)
    U = _random_unitary(rg, n)
    return scale * (U @ core @ U.conj().T)


def gen_annihilating_pair(n: int, seed, scale: float = 1.0):
    """(a, b) supported on complementary orthogonal projections, so that
    ab = ba = a*b = 0 exactly."""
    if n < 2:
        raise ValueError("need n >= 2 to split the space")
    rg = _rng(seed)
    W = _random_unitary(rg, n)
    s = int(rg.integers(1, n))
    P = W[:, :s] @ W[:, :s].conj().T
    Q = W[:, s:] @ W[:, s:].conj().T
    a = P @ (scale * _crandn(rg, n, n)) @ P
    b = Q @ (scale * _crandn(rg, n, n)) @ Q
    return a, b


def gen_lemma_2_5_instance(na: int, nd: int, seed, scale: float = 1.0):
    """(a, b, d) with the triangular coupling sum vanishing at
    m = index(a) + index(d) + 1 by construction.

    Returns (a, b, d, degenerate); b = 0 with the flag set when the sum map
    has no nonzero solutions.
    """
    if na > MAX_BLOCK_DIM or nd > MAX_BLOCK_DIM:
        raise ValueError(f"block dims capped at {MAX_BLOCK_DIM}")
    rg = _rng(seed)
    ka, ra = _draw_index_rank(rg, na)
    kd, rd = _draw_index_rank(rg, nd)
    a = _with_index_rng(rg, na, ka, ra)
    d = _with_index_rng(rg, nd, kd, rd)
    m = ka + kd + 1
    api = np.eye(na, dtype=np.complex128) - a @ drazin(a).inverse
    terms = [(np.linalg.matrix_power(a, i - 1) @ api,
              np.linalg.matrix_power(d, m - i)) for i in range(1, m + 1)]
    b, nullity = _nullspace_sample(rg, (na, nd), [(terms, [])], scale)
    return a, b, d, nullity == 0


# ---------------------------------------------------------------------------
# Block samplers: a shared unitarily-reducing nilpotent block guarantees the
# intertwining systems have nonzero solutions (for unrelated diagonal blocks
# they only have the zero solution).


def _shared_block_pair(rg, nA, nD, keep_complement=False):
    gmax = min(nA, nD)
    if keep_complement and gmax >= 2:
        gmax -= 1
    g = int(rg.integers(1, gmax + 1))
    chain = g >= 2 and bool(rg.integers(0, 2))
    # chain order capped at 4: longer coupled chains make the assembled block
    # matrix invertible but exponentially ill conditioned, which defeats the
    # point of generated instances (residual tolerances must stay meaningful)
    G = _nilpotent_chain(rg, g, min(g, 4) if chain else 1)

    def embed(nrest):
        M = np.zeros((g + nrest, g + nrest), dtype=np.complex128)
        M[:g, :g] = G
        if nrest:
            M[g:, g:] = _clamp_singular_values(_crandn(rg, nrest, nrest), 0.3, 3.0)
        return M

    UA, UD = _random_unitary(rg, nA), _random_unitary(rg, nD)
    A = UA @ embed(nA - g) @ UA.conj().T
    D = UD @ embed(nD - g) @ UD.conj().T
    return A, D


def _check_block_dims(nA, nD):
    if not (1 <= nA <= MAX_BLOCK_DIM and 1 <= nD <= MAX_BLOCK_DIM):
        raise ValueError(f"block dims must lie in [1, {MAX_BLOCK_DIM}]")


def _intertwined_both_star(rg, nA, nD, product_factors, scale):
    """Common body of the fully-starred intertwined samplers."""
    A, D = _shared_block_pair(rg, nA, nD)
    IA = np.eye(nA, dtype=np.complex128)
    ID = np.eye(nD, dtype=np.complex128)
    st = lambda M: M.conj().T
    b_eqs = [([(A, ID), (-IA, D)], []), ([(st(A), ID), (-IA, st(D))], [])]
    c_eqs = [([(D, IA), (-ID, A)], []), ([(st(D), IA), (-ID, st(A))], [])]
    B, _ = _nullspace_sample(rg, (nA, nD), b_eqs, scale)
    degenerate = frobenius(B) == 0.0
    C = None
    for _ in range(_RETRY_CAP):
        Cc, nullity = _nullspace_sample(rg, (nD, nA), c_eqs, scale)
        if nullity == 0:
            break
        if _coupling_nilpotent(product_factors(A, B, Cc, D)):
            C = Cc
            break
    if C is None:
        C = np.zeros((nD, nA), dtype=np.complex128)
        degenerate = True
    return A, B, C, D, degenerate


def _coupling_nilpotent(factors, tol: TolerancePolicy = DEFAULT_POLICY):
    from .linalg import is_nilpotent, product_with_scale

    P, scale_acc = product_with_scale(factors)
    if frobenius(P) <= tol.residual_tol * max(1.0, scale_acc):
        return True
    return is_nilpotent(P, tol)


def gen_intertwined_4_1(nA: int, nD: int, seed, scale: float = 1.0):
    """(A, B, C, D) with AB=BD, DC=CA, A*B=BD*, D*C=CA* exact and
    A_pc B D_pc C nilpotent; returns (..., degenerate)."""
    _check_block_dims(nA, nD)
    rg = _rng(seed)

    def factors(A, B, C, D):
        return [pseudo_core(A).inverse, B, pseudo_core(D).inverse, C]

    return _intertwined_both_star(rg, nA, nD, factors, scale)


def gen_intertwined_4_2(nA: int, nD: int, seed, scale: float = 1.0):
    """Same constraints as :func:`gen_intertwined_4_1` but the rejection
    tests nilpotency of B D_pc C A_pc."""
    _check_block_dims(nA, nD)
    rg = _rng(seed)

    def factors(A, B, C, D):
        return [B, pseudo_core(D).inverse, C, pseudo_core(A).inverse]

    return _intertwined_both_star(rg, nA, nD, factors, scale)


def _intertwined_one_star(rg, nA, nD, star_on_b, product_factors, scale):
    A, D = _shared_block_pair(rg, nA, nD)
    IA = np.eye(nA, dtype=np.complex128)
    ID = np.eye(nD, dtype=np.complex128)
    b_eqs = [([(A, ID), (-IA, D)], [])]
    c_eqs = [([(D, IA), (-ID, A)], [])]
    if star_on_b:
        # B*A = DB*, conjugate-linear in B
        b_eqs.append(([], [(ID, A), (-D, IA)]))
    else:
        # AC* = C*D, conjugate-linear in C
        c_eqs.append(([], [(A, ID), (-IA, D)]))
    B, _ = _nullspace_sample(rg, (nA, nD), b_eqs, scale)
    degenerate = frobenius(B) == 0.0
    C = None
    for _ in range(_RETRY_CAP):
        Cc, nullity = _nullspace_sample(rg, (nD, nA), c_eqs, scale)
        if nullity == 0:
            break
        if _coupling_nilpotent(product_factors(A, B, Cc, D)):
            C = Cc
            break
    if C is None:
        C = np.zeros((nD, nA), dtype=np.complex128)
        degenerate = True
    return A, B, C, D, degenerate


def gen_intertwined_4_3(nA: int, nD: int, seed, scale: float = 1.0):
    """(A, B, C, D) with AB=BD, DC=CA, B*A=DB* exact and
    B (CB)_pc D C (BC)_pc A nilpotent; returns (..., degenerate)."""
    _check_block_dims(nA, nD)
    rg = _rng(seed)

    def factors(A, B, C, D):
        return [B, pseudo_core(C @ B).inverse, D, C,
                pseudo_core(B @ C).inverse, A]

    return _intertwined_one_star(rg, nA, nD, True, factors, scale)


def gen_intertwined_4_4(nA: int, nD: int, seed, scale: float = 1.0):
    """(A, B, C, D) with AB=BD, DC=CA, AC*=C*D exact and
    A (BC)_pc B D (CB)_pc C nilpotent; returns (..., degenerate)."""
    _check_block_dims(nA, nD)
    rg = _rng(seed)

    def factors(A, B, C, D):
        return [A, pseudo_core(B @ C).inverse, B, D,
                pseudo_core(C @ B).inverse, C]

    return _intertwined_one_star(rg, nA, nD, False, factors, scale)


def gen_zero_product_4_5(nA: int, nD: int, seed, scale: float = 1.0):
    """(A, B, C, D) with BC=0, CB=0, CA=DC, AC*=C*D and a vanishing coupling
    sum: C is sampled first (conjugate-linear system), then B from the linear
    system {BC = 0, CB = 0, coupling sum = 0}; returns (..., degenerate)."""
    _check_block_dims(nA, nD)
    rg = _rng(seed)
    A, D = _shared_block_pair(rg, nA, nD, keep_complement=True)
    IA = np.eye(nA, dtype=np.complex128)
    ID = np.eye(nD, dtype=np.complex128)
    C, _ = _nullspace_sample(
        rg, (nD, nA),
        [([(ID, A), (-D, IA)], []), ([], [(A, ID), (-IA, D)])], scale)
    degenerate = frobenius(C) == 0.0
    iA = index(A)
    b_eqs = [([(IA, C)], []), ([(C, ID)], [])]
    if iA >= 1:
        api = IA - A @ drazin(A).inverse
        terms = [(np.linalg.matrix_power(A, i - 1) @ api,
                  np.linalg.matrix_power(D, iA - i)) for i in range(1, iA + 1)]
        b_eqs.append((terms, []))
    B, nullity = _nullspace_sample(rg, (nA, nD), b_eqs, scale)
    if nullity == 0 or frobenius(B) == 0.0:
        degenerate = True
    return A, B, C, D, degenerate


def gen_zero_product_4_6(nA: int, nD: int, seed, scale: float = 1.0):
    """(A, B, C, D) with BC=0, CB=0, AB=BD, A*B=BD* and C annihilating the
    nilpotent-part powers of A; B sampled first, then C; returns
    (..., degenerate)."""
    _check_block_dims(nA, nD)
    rg = _rng(seed)
    A, D = _shared_block_pair(rg, nA, nD, keep_complement=True)
    IA = np.eye(nA, dtype=np.complex128)
    ID = np.eye(nD, dtype=np.complex128)
    st = lambda M: M.conj().T
    B, _ = _nullspace_sample(
        rg, (nA, nD),
        [([(A, ID), (-IA, D)], []), ([(st(A), ID), (-IA, st(D))], [])], scale)
    degenerate = frobenius(B) == 0.0
    iA = index(A)
    c_eqs = [([(B, IA)], []), ([(ID, B)], [])]
    if iA >= 1:
        api = IA - A @ drazin(A).inverse
        SA = np.zeros((nA, nA), dtype=np.complex128)
        for i in range(1, iA + 1):
            SA += np.linalg.matrix_power(A, i - 1) @ api
        c_eqs.append(([(ID, SA)], []))
    C, nullity = _nullspace_sample(rg, (nD, nA), c_eqs, scale)
    if nullity == 0 or frobenius(C) == 0.0:
        degenerate = True
    return A, B, C, D, degenerate


# ---------------------------------------------------------------------------
# Dispatchers


def generate(spec: InstanceSpec) -> Instance:
    """Materialize an :class:`InstanceSpec` into named matrices."""
    rg = _rng(spec.seed)
    dims = spec.dims
    if spec.kind == "plain":
        return Instance({"a": spec.scale * _crandn(rg, dims[0], dims[0])})
    if spec.kind == "with_index":
        n = dims[0]
        k, r = _draw_index_rank(rg, n, spec.target_index)
        return Instance({"a": _with_index_rng(rg, n, k, r)})
    if spec.kind == "commutant_pair":
        a, b = gen_commutant_pair(dims[0], spec.seed, spec.target_index, spec.scale)
        return Instance({"a": a, "b": b})
    if spec.kind == "star_dmp":
        n = dims[0]
        k, r = _draw_index_rank(rg, n, spec.target_index, kmax=2)
        a = gen_star_dmp(n, r, k, spec.seed, spec.scale)
        return Instance({"a": a})
    if spec.kind == "annihilating_pair":
        a, b = gen_annihilating_pair(dims[0], spec.seed, spec.scale)
        return Instance({"a": a, "b": b})
    if spec.kind == "lemma_2_5":
        na, nd = dims if len(dims) == 2 else (dims[0], dims[0])
        a, b, d, degenerate = gen_lemma_2_5_instance(na, nd, spec.seed, spec.scale)
        return Instance({"a": a, "b": b, "d": d}, degenerate)
    samplers = {
        "intertwined_4_1": gen_intertwined_4_1,
        "intertwined_4_3": gen_intertwined_4_3,
        "zero_product_4_5": gen_zero_product_4_5,
    }
    nA, nD = dims if len(dims) == 2 else (dims[0], dims[0])
    A, B, C, D, degenerate = samplers[spec.kind](nA, nD, spec.seed, spec.scale)
    return Instance({"A": A, "B": B, "C": C, "D": D}, degenerate)


def _l2_4_instance(rg, n, scale):
    k, r = _draw_index_rank(rg, n)
    a = _with_index_rng(rg, n, k, r)
    if rg.integers(0, 2):
        X = pseudo_core(a).inverse
        b = (X @ a) @ (scale * _crandn(rg, n, n))   # inside the range condition
    else:
        b = scale * _crandn(rg, n, n)
    return a, b


def _c3_2_instance(rg, n, scale, seed):
    k, r = _draw_index_rank(rg, n, kmax=2)
    a = gen_star_dmp(n, r, k, seed, scale)
    b = _commutant_sample(rg, a, scale)
    return a, b


def instance_for(theorem_id: str, dims, seed, scale: float = 1.0) -> Instance:
    """Instance satisfying the named result's hypotheses, for fuzzing."""
    rg = _rng(seed)
    if theorem_id in ("L2_1", "L2_2", "T3_1"):
        a, b = gen_commutant_pair(dims[0], seed, None, scale)
        return Instance({"a": a, "b": b})
    if theorem_id == "L2_3":
        a, b = gen_annihilating_pair(dims[0], seed, scale)
        return Instance({"a": a, "b": b})
    if theorem_id == "L2_4":
        a, b = _l2_4_instance(rg, dims[0], scale)
        return Instance({"a": a, "b": b})
    if theorem_id == "C3_2":
        a, b = _c3_2_instance(rg, dims[0], scale, seed)
        return Instance({"a": a, "b": b})
    if theorem_id == "T1_1":
        k, r = _draw_index_rank(rg, dims[0])
        return Instance({"A": _with_index_rng(rg, dims[0], k, r)})
    if theorem_id == "EX3_3":
        return Instance({})
    na, nd = (dims[0], dims[1]) if len(dims) >= 2 else (dims[0], dims[0])
    if theorem_id == "L2_5a":
        a, b, d, degenerate = gen_lemma_2_5_instance(na, nd, seed, scale)
        return Instance({"a": a, "b": b, "d": d}, degenerate)
    if theorem_id == "L2_5b":
        a, b, d, degenerate = gen_lemma_2_5_instance(na, nd, seed, scale)
        x = np.block([[a, b], [np.zeros((nd, na), dtype=np.complex128), d]])
        return Instance({"x": x, "split": na}, degenerate)
    block_samplers = {
        "T4_1": gen_intertwined_4_1,
        "C4_2": gen_intertwined_4_2,
        "T4_3": gen_intertwined_4_3,
        "C4_4": gen_intertwined_4_4,
        "T4_5": gen_zero_product_4_5,
        "C4_6": gen_zero_product_4_6,
    }
    if theorem_id not in block_samplers:
        raise KeyError(f"no instance generator for theorem id {theorem_id!r}")
    A, B, C, D, degenerate = block_samplers[theorem_id](na, nd, seed, scale)
    return Instance({"A": A, "B": B, "C": C, "D": D}, degenerate)
