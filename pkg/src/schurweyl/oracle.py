"""Dense construction of the actual operators on (C^d)^(x n), at desk scale.

Everything the weight calculus asserts algebraically is rebuilt here as a
literal matrix and re-measured: permutation operators, duality-block
projectors, single-irrep projectors from standard tableaux, both partial
traces, the permutation average and the trace norm.

Operators are stored as an integer matrix (numpy object dtype, so entries
are unbounded Python ints) times one global Fraction.  Every operator this
module constructs is real symmetric in the computational product basis with
rational entries, so exact comparisons are just integer comparisons.
Matrix products run through float64 BLAS whenever a magnitude bound proves
every intermediate integer stays below 2^53 (hence exact), with an object
dtype fallback otherwise.

Basis conventions, fixed and relied on by all index bookkeeping:
* combined indices are base-d numerals with factor 1 as the most
  significant digit;
* a bipartite factor C^p (x) C^q uses x = i*q + j with i the C^p index,
  so the C^p part is the major digit.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import comb, factorial, gcd
from typing import Iterator

import numpy as np

from .characters import dim_sym, dim_unitary, mn_character
from .errors import SizeCapError
from .partitions import Partition, as_partition, partitions_of, rows
from .werner import WernerWeights, definetti_bound_dual

DEFAULT_SIZE_CAP = 4096

_EXACT_FLOAT = float(2**53)
_SLACK = 1e-7  # slack on float inequality assertions; asserted gaps are >= 1e-3


def _check_cap(dim: int, size_cap: int | None) -> None:
    cap = DEFAULT_SIZE_CAP if size_cap is None else size_cap
    if cap < 64:
        raise ValueError("size cap must be at least 64")
    if dim > cap:
        raise SizeCapError(f"matrix side {dim} exceeds the size cap {cap}")


def _int_object(mat: np.ndarray) -> np.ndarray:
    # via tolist so entries are Python ints, not overflow-prone numpy scalars
    return np.array(np.rint(mat).astype(np.int64).tolist(), dtype=object)


def _imatmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact product of integer object matrices, BLAS-accelerated when safe."""
    af = a.astype(np.float64)
    bf = b.astype(np.float64)
    amax, bmax = np.abs(af).max(initial=0.0), np.abs(bf).max(initial=0.0)
    if amax < _EXACT_FLOAT and bmax < _EXACT_FLOAT and a.shape[1] * amax * bmax < _EXACT_FLOAT:
        return _int_object(af @ bf)
    return a.dot(b)


class DenseOperator:
    """value = scale * mat, on n factors of dimension base each.

    bipartite, when set, records the (p, q) split of each factor.
    """

    def __init__(self, mat: np.ndarray, scale: Fraction, n: int, base: int,
                 bipartite: tuple[int, int] | None = None):
        self.mat = mat
        self.scale = Fraction(scale)
        self.n = n
        self.base = base
        self.bipartite = bipartite
        if bipartite is not None and bipartite[0] * bipartite[1] != base:
            raise ValueError("bipartite split does not match the factor dimension")
        if mat.shape != (base**n, base**n):
            raise ValueError("matrix shape does not match the factor metadata")

    @property
    def dim(self) -> int:
        return self.base**self.n

    def _meta(self) -> tuple[int, int, tuple[int, int] | None]:
        return (self.n, self.base, self.bipartite)

    def _aligned(self, other: "DenseOperator") -> tuple[np.ndarray, np.ndarray, Fraction]:
        ratio = self.scale / other.scale
        return (self.mat * ratio.numerator,
                other.mat * ratio.denominator,
                other.scale / ratio.denominator)

    def __add__(self, other: "DenseOperator") -> "DenseOperator":
        if self._meta()[:2] != other._meta()[:2]:
            raise ValueError("operators live on different spaces")
        a, b, s = self._aligned(other)
        return DenseOperator(a + b, s, self.n, self.base, self.bipartite or other.bipartite)

    def __sub__(self, other: "DenseOperator") -> "DenseOperator":
        return self + (other * -1)

    def __mul__(self, c) -> "DenseOperator":
        c = Fraction(c)
        if c == 0:
            return DenseOperator(np.zeros((self.dim, self.dim), dtype=object),
                                 Fraction(1), self.n, self.base, self.bipartite)
        return DenseOperator(self.mat, self.scale * c, self.n, self.base, self.bipartite)

    __rmul__ = __mul__

    def __matmul__(self, other: "DenseOperator") -> "DenseOperator":
        if self._meta()[:2] != other._meta()[:2]:
            raise ValueError("operators live on different spaces")
        return DenseOperator(_imatmul(self.mat, other.mat), self.scale * other.scale,
                             self.n, self.base, self.bipartite or other.bipartite)

    def trace(self) -> Fraction:
        return self.scale * int(np.trace(self.mat))

    def entry(self, i: int, j: int) -> Fraction:
        return self.scale * int(self.mat[i, j])

    def transpose(self) -> "DenseOperator":
        return DenseOperator(self.mat.T.copy(), self.scale, self.n, self.base, self.bipartite)

    def is_symmetric(self) -> bool:
        return bool((self.mat == self.mat.T).all())

    def same_as(self, other: "DenseOperator") -> bool:
        """Exact equality of the underlying rational matrices."""
        if self._meta()[:2] != other._meta()[:2]:
            return False
        a, b, _ = self._aligned(other)
        return bool((a == b).all())

    def is_zero(self) -> bool:
        return bool((self.mat == 0).all())

    def to_float(self) -> np.ndarray:
        return self.mat.astype(np.float64) * float(self.scale)


def _digit_weights(base: int, n: int) -> list[int]:
    return [base ** (n - 1 - i) for i in range(n)]


def _perm_index_map(pi: tuple[int, ...], base: int) -> np.ndarray:
    """enc(pi . x) for every combined index x, where (pi . x)[pi(i)] = x[i]."""
    n = len(pi)
    dim = base**n
    idx = np.arange(dim)
    w = _digit_weights(base, n)
    out = np.zeros(dim, dtype=np.int64)
    for i in range(n):
        digit = (idx // w[i]) % base
        out += digit * w[pi[i]]
    return out


def cycle_type(pi: tuple[int, ...]) -> Partition:
    """Cycle type of a permutation given as a tuple of 0-based images."""
    seen = [False] * len(pi)
    lengths = []
    for start in range(len(pi)):
        if seen[start]:
            continue
        length, cur = 0, start
        while not seen[cur]:
            seen[cur] = True
            cur = pi[cur]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def identity_operator(n: int, d: int, bipartite: tuple[int, int] | None = None,
                      size_cap: int | None = None) -> DenseOperator:
    _check_cap(d**n, size_cap)
    mat = np.empty((d**n, d**n), dtype=object)
    mat[:] = 0
    np.fill_diagonal(mat, 1)
    return DenseOperator(mat, Fraction(1), n, d, bipartite)


def permutation_operator(pi: tuple[int, ...], d: int,
                         bipartite: tuple[int, int] | None = None,
                         size_cap: int | None = None) -> DenseOperator:
    """The 0/1 operator permuting the tensor factors by pi; trace d^c(pi)."""
    n = len(pi)
    if sorted(pi) != list(range(n)):
        raise ValueError(f"{pi} is not a permutation of 0..{n - 1}")
    _check_cap(d**n, size_cap)
    dim = d**n
    target = _perm_index_map(pi, d)
    mat = np.empty((dim, dim), dtype=object)
    mat[:] = 0
    mat[target, np.arange(dim)] = 1
    return DenseOperator(mat, Fraction(1), n, d, bipartite)


def schur_weyl_projector(lam: Partition, d: int, size_cap: int | None = None) -> DenseOperator:
    """Projector onto the duality block of lambda: (f/n!) sum_pi chi(pi) pi.

    Zero when lambda has more than d rows.  The family over Par(n, d) is a
    complete orthogonal resolution of the identity with traces e^d f.
    """
    lam = as_partition(lam)
    n = sum(lam)
    _check_cap(d**n, size_cap)
    dim = d**n
    acc = np.empty((dim, dim), dtype=object)
    acc[:] = 0
    for pi in permutations(range(n)):
        chi = mn_character(lam, cycle_type(pi))
        if chi == 0:
            continue
        target = _perm_index_map(pi, d)
        acc[target, np.arange(dim)] += chi
    return DenseOperator(acc, Fraction(dim_sym(lam), factorial(n)), n, d)


# --- standard tableaux ----------------------------------------------------

Tableau = tuple[tuple[int, ...], ...]


def standard_tableaux(shape: Partition) -> Iterator[Tableau]:
    """All standard fillings of `shape` with 1..n, deterministic order."""
    shape = as_partition(shape)
    n = sum(shape)
    grid = [[0] * r for r in shape]

    def place(k: int) -> Iterator[Tableau]:
        if k > n:
            yield tuple(tuple(row) for row in grid)
            return
        fill_len = [sum(1 for v in row if v) for row in grid]
        for r in range(len(shape)):
            c = fill_len[r]
            if c >= shape[r]:
                continue
            if r > 0 and fill_len[r - 1] <= c:
                continue
            grid[r][c] = k
            yield from place(k + 1)
            grid[r][c] = 0

    yield from place(1)


def first_standard_tableau(shape: Partition) -> Tableau:
    """The row-reading filling: 1..n left to right, top to bottom."""
    shape = as_partition(shape)
    out, k = [], 1
    for r in shape:
        out.append(tuple(range(k, k + r)))
        k += r
    return tuple(out)


def tableau_shape(t: Tableau) -> Partition:
    return as_partition(len(row) for row in t)


def check_standard_tableau(t: Tableau) -> None:
    shape = tableau_shape(t)
    n = sum(shape)
    seen = sorted(v for row in t for v in row)
    if seen != list(range(1, n + 1)):
        raise ValueError("filling must use 1..n exactly once")
    for r, row in enumerate(t):
        for c, v in enumerate(row):
            if c + 1 < len(row) and row[c + 1] <= v:
                raise ValueError("rows must increase to the right")
            if r + 1 < len(t) and c < len(t[r + 1]) and t[r + 1][c] <= v:
                raise ValueError("columns must increase downwards")


def _contents(t: Tableau) -> dict[int, int]:
    """entry k -> column - row of its box."""
    return {v: c - r for r, row in enumerate(t) for c, v in enumerate(row)}


def young_projector(t: Tableau, d: int, size_cap: int | None = None) -> DenseOperator:
    """Orthogonal projector onto a single unitary irrep selected by the tableau.

    Built as the joint spectral projector of the commuting transposition
    sums L_k = sum_{i<k} (i k) at the eigenvalue vector given by the box
    contents of t.  Each L_k is symmetric with integer entries and the
    content vector singles out one copy of the irrep of shape(t), so the
    result is an exact rational orthogonal projector with trace e^d_shape
    (the zero operator when the shape has more than d rows).
    """
    check_standard_tableau(t)
    shape = tableau_shape(t)
    n = sum(shape)
    _check_cap(d**n, size_cap)
    contents = _contents(t)

    proj = identity_operator(n, d, size_cap=size_cap)
    denom = 1
    for k in range(2, n + 1):
        lk = np.empty((d**n, d**n), dtype=object)
        lk[:] = 0
        for i in range(1, k):
            swap = list(range(n))
            swap[i - 1], swap[k - 1] = swap[k - 1], swap[i - 1]
            target = _perm_index_map(tuple(swap), d)
            lk[target, np.arange(d**n)] += 1
        ck = contents[k]
        for c in range(-(k - 1), k):
            if c == ck:
                continue
            shifted = lk.copy()
            idx = np.arange(d**n)
            shifted[idx, idx] -= c
            proj = DenseOperator(_imatmul(proj.mat, shifted), proj.scale, n, d)
            denom *= ck - c
    return DenseOperator(proj.mat, proj.scale / denom, n, d)


# --- traces and averages ---------------------------------------------------


def partial_trace_subsystems(m: DenseOperator, keep: int) -> DenseOperator:
    """Trace out the last n-keep factors; the total trace is preserved."""
    if not 0 < keep <= m.n:
        raise ValueError(f"keep must be in 1..{m.n}")
    head = m.base**keep
    tail = m.base ** (m.n - keep)
    r = m.mat.reshape(head, tail, head, tail)
    out = np.empty((head, head), dtype=object)
    out[:] = 0
    for t in range(tail):
        out += r[:, t, :, t]
    return DenseOperator(out, m.scale, keep, m.base, m.bipartite)


def partial_trace_inner(m: DenseOperator, p: int | None = None,
                        q: int | None = None) -> DenseOperator:
    """Trace out the C^q half of every factor, landing on (C^p)^(x n)."""
    if p is None or q is None:
        if m.bipartite is None:
            raise ValueError("operator carries no bipartite split; pass p and q")
        p, q = m.bipartite
    if p * q != m.base:
        raise ValueError(f"factor dimension {m.base} is not {p}*{q}")
    n = m.n
    wk = _digit_weights(m.base, n)
    wp = _digit_weights(p, n)
    wq = _digit_weights(q, n)
    kept = np.zeros(p**n, dtype=np.int64)
    a = np.arange(p**n)
    for i in range(n):
        kept += ((a // wp[i]) % p) * (q * wk[i])
    out = np.empty((p**n, p**n), dtype=object)
    out[:] = 0
    for j in range(q**n):
        off = sum(((j // wq[i]) % q) * wk[i] for i in range(n))
        idx = kept + off
        out += m.mat[np.ix_(idx, idx)]
    return DenseOperator(out, m.scale, n, p)


def symmetric_average(m: DenseOperator) -> DenseOperator:
    """Average of pi M pi^{-1} over all n! factor permutations."""
    n = m.n
    dim = m.dim
    acc = np.empty((dim, dim), dtype=object)
    acc[:] = 0
    # pi M pi^{-1} is the index relabelling M[pi^{-1}a, pi^{-1}b]; summing over
    # the whole group absorbs the inversion, so the forward map can be used
    for pi in permutations(range(n)):
        relabel = _perm_index_map(pi, m.base)
        acc += m.mat[np.ix_(relabel, relabel)]
    return DenseOperator(acc, m.scale / factorial(n), n, m.base, m.bipartite)


def trace_norm(m: DenseOperator) -> float:
    """Sum of absolute eigenvalues, via a float symmetric eigensolve."""
    if not m.is_symmetric():
        raise ValueError("trace norm here expects a symmetric operator")
    return float(np.abs(np.linalg.eigvalsh(m.to_float())).sum())


def schur_weyl_weights(m: DenseOperator, size_cap: int | None = None) -> dict[Partition, Fraction]:
    """Projection tr(P_mu m) of an operator onto the duality-block basis.

    When m is a symmetric Werner state these are exactly its weights; in
    general they are the block components of the twirl-symmetrized part.
    """
    out: dict[Partition, Fraction] = {}
    for mu in partitions_of(m.n, m.base):
        pmu = schur_weyl_projector(mu, m.base, size_cap=size_cap)
        acc = int((pmu.mat * m.mat.T).sum())
        out[mu] = pmu.scale * m.scale * acc
    return out


def werner_combination(w: WernerWeights, size_cap: int | None = None) -> DenseOperator:
    """The literal operator sum_mu a_mu rho_mu on (C^d)^(x n)."""
    total = identity_operator(w.n, w.d, size_cap=size_cap) * 0
    for mu, a in w.weights.items():
        if a == 0:
            continue
        pmu = schur_weyl_projector(mu, w.d, size_cap=size_cap)
        total = total + pmu * (Fraction(a) / (dim_unitary(mu, w.d) * dim_sym(mu)))
    return total


def operator_to_json(m: DenseOperator) -> dict:
    """Row-major dump with exact entries as num/den strings."""
    dim = m.dim
    entries = [str(m.entry(i, j)) for i in range(dim) for j in range(dim)]
    return {
        "n": m.n,
        "base": m.base,
        "bipartite": list(m.bipartite) if m.bipartite else None,
        "entries": entries,
    }


def operator_from_json(data: dict) -> DenseOperator:
    n, base = int(data["n"]), int(data["base"])
    dim = base**n
    fr = [Fraction(s) for s in data["entries"]]
    den = 1
    for f in fr:
        den = den * f.denominator // gcd(den, f.denominator)
    flat = np.empty(dim * dim, dtype=object)
    flat[:] = [int(f * den) for f in fr]
    bip = tuple(data["bipartite"]) if data.get("bipartite") else None
    return DenseOperator(flat.reshape(dim, dim), Fraction(1, den), n, base, bip)


def verify_general_dual(t: Tableau, p: int, q: int,
                        size_cap: int | None = None) -> dict:
    """Measure the inner-trace distance of a single-irrep state to fully mixed.

    Builds rho from the tableau projector on ((C^p)(x)(C^q))^(x n), traces
    out every C^q, and checks both the distance bound 2 - 2((q-n+1)/q)^n
    and positivity of the remainder after subtracting
    beta = f * C(q, n) * p^n / e^{pq} times the fully mixed state.
    """
    shape = tableau_shape(t)
    n = sum(shape)
    if q < n:
        raise ValueError(f"the bound needs q >= n, got q={q} < n={n}")
    e = dim_unitary(shape, p * q)
    if e == 0:
        raise ValueError(f"{shape} does not fit in {p * q} rows")
    proj = young_projector(t, p * q, size_cap=size_cap)
    proj.bipartite = (p, q)
    rho = proj * Fraction(1, e)
    traced = partial_trace_inner(rho, p, q)
    mixed = identity_operator(n, p) * Fraction(1, p**n)
    delta = trace_norm(traced - mixed)
    bound = definetti_bound_dual(n, q)
    beta = Fraction(dim_sym(shape) * comb(q, n) * p**n, e)
    residual = traced - mixed * beta
    min_eig = float(np.linalg.eigvalsh(residual.to_float()).min())
    ok = delta <= float(bound) + _SLACK and min_eig >= -_SLACK
    return {
        "check": "general-dual-definetti",
        "shape": list(shape),
        "tableau": [list(r) for r in t],
        "p": p,
        "q": q,
        "delta": delta,
        "bound": float(bound),
        "beta": str(beta),
        "min_residual_eig": min_eig,
        "pass": ok,
    }
