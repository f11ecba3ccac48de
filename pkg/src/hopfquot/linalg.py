"""Exact linear algebra over the scalar rings.

Sparse vectors are ``dict[key, scalar]`` with no zero entries.  Elimination
normalizes pivots when they are units and falls back to fraction-free
updates otherwise, so ranks are ranks over the fraction field of the
(integral) Laurent ring.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Sequence

from .scalars import CycloLaurentScalar

SparseVec = dict


def vadd(x: SparseVec, y: SparseVec, c=None) -> SparseVec:
    """x + c*y (c defaults to 1)."""
    out = dict(x)
    for k, v in y.items():
        if c is not None:
            v = c * v
        if k in out:
            s = out[k] + v
            if s.is_zero():
                del out[k]
            else:
                out[k] = s
        elif not v.is_zero():
            out[k] = v
    return out


def vscale(x: SparseVec, c) -> SparseVec:
    out = {}
    for k, v in x.items():
        w = c * v
        if not w.is_zero():
            out[k] = w
    return out


def vsub(x: SparseVec, y: SparseVec) -> SparseVec:
    return vadd(x, {k: -v for k, v in y.items()})


class SparseEchelon:
    """Incrementally maintained echelon basis of a span of sparse vectors."""

    def __init__(self, order=None):
        self.rows: dict[Hashable, SparseVec] = {}
        self._key = order or (lambda k: k)

    def _pivot(self, v: SparseVec):
        return min(v, key=self._key)

    def reduce(self, v: SparseVec) -> SparseVec:
        v = dict(v)
        while v:
            hit = [k for k in v if k in self.rows]
            if not hit:
                break
            k = min(hit, key=self._key)
            row = self.rows[k]
            pc = row[k]
            if pc.is_one():
                v = vadd(v, row, -v[k])
            else:
                v = vadd(vscale(v, pc), row, -v[k])
        return v

    def add(self, v: SparseVec) -> bool:
        """Insert ``v``; return True when it enlarged the span."""
        r = self.reduce(v)
        if not r:
            return False
        p = self._pivot(r)
        if r[p].is_unit():
            r = vscale(r, r[p].inverse())
        self.rows[p] = r
        return True

    def contains(self, v: SparseVec) -> bool:
        return not self.reduce(v)

    @property
    def rank(self) -> int:
        return len(self.rows)


def span_rank(vectors: Iterable[SparseVec]) -> int:
    ech = SparseEchelon()
    for v in vectors:
        ech.add(v)
    return ech.rank


def sparse_kernel(columns: Sequence[SparseVec], ring_one) -> list[SparseVec]:
    """Basis of {x : sum_j x_j * columns[j] = 0}, as sparse vectors over column indices.

    Each column is augmented with a private tag coordinate; vectors whose
    image part reduces to zero leave their tag combination as a kernel vector.
    """
    ech = SparseEchelon(order=lambda k: (k[0] == "tag", k))
    kernel = []
    for j, col in enumerate(columns):
        v = {("img", k): c for k, c in col.items()}
        v[("tag", j)] = ring_one
        r = ech.reduce(v)
        if r and all(k[0] == "tag" for k in r):
            kernel.append({k[1]: c for k, c in r.items()})
        elif r:
            ech.add(r)
    return kernel


# ---------------------------------------------------------------------------
# dense matrices over Q(zeta_L) (scalars with no Laurent variables)


def nullspace(rows: list[list[CycloLaurentScalar]], ncols: int, zero) -> list[list[CycloLaurentScalar]]:
    """Right nullspace basis of a dense matrix over a field."""
    a = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if not a[i][c].is_zero()), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    one = zero + 1
    for fcol in free:
        v = [zero] * ncols
        v[fcol] = one
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][fcol]
        basis.append(v)
    return basis
