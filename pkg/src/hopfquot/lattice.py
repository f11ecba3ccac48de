"""Integer lattices: Hermite and Smith normal forms, kernels, intersections.

Matrices are plain lists of rows of Python ints, so every computation is exact
at any size.  A subgroup of Z^n is stored as a ``SubgroupHNF``: its basis
vectors, stacked as rows, form an upper echelon matrix with positive pivots,
and each entry sitting above a pivot is reduced into ``[0, pivot)``.  Two
generating sets of the same subgroup therefore give the same basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .scalars import INFINITE

IntMatrix = list[list[int]]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence[int]], ncols: int | None = None) -> IntMatrix:
    if not a:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*a)]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> IntMatrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def matpow(a: Sequence[Sequence[int]], k: int) -> IntMatrix:
    if k < 0:
        raise ValueError("negative power; pass the inverse matrix instead")
    out = identity(len(a))
    base = [list(r) for r in a]
    while k:
        if k & 1:
            out = matmul(out, base)
        base = matmul(base, base)
        k >>= 1
    return out


def det(a: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    m = [list(r) for r in a]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


# ---------------------------------------------------------------------------
# Hermite normal form


def hnf_rows(rows: Sequence[Sequence[int]], ncols: int) -> tuple[IntMatrix, IntMatrix, int]:
    """Row-style HNF with transform.

    Returns ``(H, U, rank)`` with ``U`` unimodular and ``U @ rows == H``; the
    first ``rank`` rows of ``H`` are the echelon basis, the rest are zero, so
    rows ``rank:`` of ``U`` form a basis of the left kernel of ``rows``.
    """
    a = [list(r) for r in rows]
    m = len(a)
    u = identity(m)
    r = 0
    for col in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if a[i][col]]
            if not nz:
                break
            piv = min(nz, key=lambda i: abs(a[i][col]))
            a[r], a[piv] = a[piv], a[r]
            u[r], u[piv] = u[piv], u[r]
            clean = True
            p = a[r][col]
            for i in range(r + 1, m):
                if a[i][col]:
                    q = a[i][col] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if a[i][col]:
                        clean = False
            if clean:
                break
        if r < m and a[r][col]:
            if a[r][col] < 0:
                a[r] = [-x for x in a[r]]
                u[r] = [-x for x in u[r]]
            p = a[r][col]
            for i in range(r):
                q = a[i][col] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            r += 1
    return a, u, r


@dataclass(frozen=True)
class SubgroupHNF:
    """Subgroup of Z^n with canonical echelon basis (see module docstring)."""

    n: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_generators(cls, n: int, gens: Sequence[Sequence[int]]) -> "SubgroupHNF":
        gens = [list(g) for g in gens]
        for g in gens:
            if len(g) != n:
                raise ValueError(f"generator {g} is not in Z^{n}")
        h, _, r = hnf_rows(gens, n)
        return cls(n, tuple(tuple(row) for row in h[:r]))

    @classmethod
    def zero(cls, n: int) -> "SubgroupHNF":
        return cls(n, ())

    @classmethod
    def full(cls, n: int) -> "SubgroupHNF":
        return cls(n, tuple(tuple(r) for r in identity(n)))

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(b) if x) for b in self.basis]

    def is_full_rank(self) -> bool:
        return self.rank == self.n

    def index(self) -> int | float:
        """[Z^n : self], or INFINITE."""
        if not self.is_full_rank():
            return INFINITE
        return math.prod(b[p] for b, p in zip(self.basis, self.pivots))

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        """Canonical representative of ``v`` modulo the subgroup."""
        v = list(v)
        for b, p in zip(self.basis, self.pivots):
            q = v[p] // b[p]
            if q:
                v = [x - q * y for x, y in zip(v, b)]
        return tuple(v)

    def __contains__(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def coordinates(self, v: Sequence[int]) -> list[int]:
        """Integer coefficients of ``v`` in the basis; ``v`` must be a member."""
        v = list(v)
        coords = []
        for b, p in zip(self.basis, self.pivots):
            q, rem = divmod(v[p], b[p])
            if rem:
                raise ValueError(f"{tuple(v)} is not in the subgroup")
            coords.append(q)
            if q:
                v = [x - q * y for x, y in zip(v, b)]
        if any(v):
            raise ValueError("vector is not in the subgroup")
        return coords

    def combine(self, coords: Sequence[int]) -> tuple[int, ...]:
        out = [0] * self.n
        for c, b in zip(coords, self.basis):
            if c:
                out = [x + c * y for x, y in zip(out, b)]
        return tuple(out)

    def issubset(self, other: "SubgroupHNF") -> bool:
        return all(b in other for b in self.basis)

    def to_json(self) -> list[list[int]]:
        return [list(b) for b in self.basis]


def hnf(matrix: Sequence[Sequence[int]]) -> SubgroupHNF:
    """Canonical basis of the lattice spanned by the *columns* of ``matrix``."""
    if not matrix:
        return SubgroupHNF.zero(0)
    n = len(matrix)
    return SubgroupHNF.from_generators(n, transpose(matrix))


# ---------------------------------------------------------------------------
# Smith normal form


def snf(matrix: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Smith form ``S = U @ M @ V`` with U, V unimodular and d_1 | d_2 | ... ."""
    a = [list(r) for r in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    u, v = identity(m), identity(n)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(a[i][j]), i, j) for i in range(t, m) for j in range(t, n) if a[i][j]]
            if not entries:
                break
            _, i, j = min(entries)
            swap_rows(t, i)
            swap_cols(t, j)
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
            if any(a[i][t] for i in range(t + 1, m)) or any(a[t][j] for j in range(t + 1, n)):
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p), None
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and t < n and a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
    return a, u, v


# ---------------------------------------------------------------------------
# kernels, intersections, quotients


def left_kernel(rows: Sequence[Sequence[int]], ncols: int) -> IntMatrix:
    """Basis of {x : x @ rows == 0} as a list of integer vectors."""
    _, u, r = hnf_rows(rows, ncols)
    return u[r:]


def kernel_of_unit_map(a: Sequence[Sequence[int]], orders: Sequence[int | float]) -> SubgroupHNF:
    """Preimage of 1 under Z^n -> (+) Z_{m_j} (+) Z^s.

    Row ``i`` of ``a`` is the exponent vector of the image of the i-th basis
    vector; column ``j`` lives in a cyclic group of order ``orders[j]``
    (``INFINITE`` for a free coordinate).  Torsion is handled by adjoining
    the relation rows ``m_j e_j`` and projecting the integer kernel.
    """
    n = len(a)
    s = len(orders)
    rows = [list(r) for r in a]
    for r in rows:
        if len(r) != s:
            raise ValueError("row length does not match the number of target orders")
    for j, o in enumerate(orders):
        if o is not INFINITE:
            rel = [0] * s
            rel[j] = o
            rows.append(rel)
    if s == 0:
        return SubgroupHNF.full(n)
    ker = left_kernel(rows, s)
    return SubgroupHNF.from_generators(n, [k[:n] for k in ker])


def lattice_intersect(lattices: Sequence[SubgroupHNF]) -> SubgroupHNF:
    if not lattices:
        raise ValueError("intersection of an empty family")
    out = lattices[0]
    for other in lattices[1:]:
        if other.n != out.n:
            raise ValueError("ambient ranks differ")
        if not out.basis or not other.basis:
            out = SubgroupHNF.zero(out.n)
            continue
        k1 = len(out.basis)
        stacked = [list(b) for b in out.basis] + [list(b) for b in other.basis]
        ker = left_kernel(stacked, out.n)
        gens = [
            [sum(c * b[j] for c, b in zip(x[:k1], out.basis)) for j in range(out.n)]
            for x in ker
        ]
        out = SubgroupHNF.from_generators(out.n, gens)
    return out


@dataclass(frozen=True)
class AbelianGroupStructure:
    """Z_{d_1} x ... x Z_{d_k} x Z^free_rank with d_1 | d_2 | ... and each d_i >= 2."""

    invariant_factors: tuple[int, ...]
    free_rank: int = 0

    def __post_init__(self):
        f = self.invariant_factors
        if any(d < 2 for d in f) or any(f[i + 1] % f[i] for i in range(len(f) - 1)):
            raise ValueError(f"not an invariant factor chain: {f}")

    @classmethod
    def from_cyclic_orders(cls, orders: Sequence[int], free_rank: int = 0) -> "AbelianGroupStructure":
        """Normalize an arbitrary product of cyclic groups Z_{a_1} x ... ."""
        s, _, _ = snf([[a if i == j else 0 for j in range(len(orders))] for i, a in enumerate(orders)])
        diag = [abs(s[i][i]) for i in range(len(orders))]
        return cls(tuple(d for d in diag if d > 1), free_rank + sum(1 for d in diag if d == 0))

    @property
    def order(self) -> int | float:
        if self.free_rank:
            return INFINITE
        return math.prod(self.invariant_factors)

    def to_json(self) -> dict:
        return {"invariant_factors": list(self.invariant_factors), "free_rank": self.free_rank}

    def __str__(self):
        parts = [f"Z_{d}" for d in self.invariant_factors] + ["Z"] * self.free_rank
        return " x ".join(parts) or "1"


def quotient_structure(n: int, sub: SubgroupHNF) -> AbelianGroupStructure:
    """Isomorphism type of Z^n / sub."""
    if sub.n != n:
        raise ValueError("subgroup lives in a different ambient rank")
    if not sub.basis:
        return AbelianGroupStructure((), n)
    s, _, _ = snf([list(b) for b in sub.basis])
    diag = [s[i][i] for i in range(sub.rank)]
    return AbelianGroupStructure(tuple(d for d in diag if d > 1), n - sub.rank)


def enumerate_sublattices(n: int, max_index: int):
    """Every full-rank sublattice of Z^n of index <= max_index, as a SubgroupHNF."""

    def diagonals(k, bound):
        if k == 0:
            yield ()
            return
        for d in range(1, bound + 1):
            for rest in diagonals(k - 1, bound // d):
                yield (d,) + rest

    for diag in diagonals(n, max_index):
        # entries above pivot j range over [0, d_j)
        slots = [(i, j) for j in range(n) for i in range(j)]

        def fill(idx, rows):
            if idx == len(slots):
                yield SubgroupHNF(n, tuple(tuple(r) for r in rows))
                return
            i, j = slots[idx]
            for x in range(diag[j]):
                rows[i][j] = x
                yield from fill(idx + 1, rows)
            rows[i][j] = 0

        rows = [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)]
        yield from fill(0, rows)
