"""The groups Gamma_{M,N} = T x| Z_N in normal form, their two cyclic actions,
and finite quotients (T/U) x| Z_N.

An element ``(tvec, npart)`` stands for ``prod a_ic^tvec[i,c] * g0^npart``
where ``a_ic = g0^(c-1) g_i g0^(-c)``; ``tvec`` is indexed by ``1 <= i <= M-1``,
``1 <= c <= N-1`` in row-major order.  The remaining symbols are rewritten
through ``a_0c = 1`` and ``a_i0 = -(a_i1 + ... + a_i,N-1)`` (additively).
"""

from __future__ import annotations

import math

import random
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from . import lattice as lat
from .groups import FiniteGroupTable, cyclic
from .lattice import SubgroupHNF
from .report import Report


@dataclass(frozen=True)
class GammaMNElement:
    tvec: tuple[int, ...]
    npart: int

    def to_json(self) -> dict:
        return {"t": list(self.tvec), "n": self.npart}


@dataclass(frozen=True)
class GammaMN:
    """Arithmetic in Gamma_{M,N}; all relations are built into the normal form."""

    M: int
    N: int

    def __post_init__(self):
        if self.M < 2 or self.N < 2:
            raise ValueError("Gamma_{M,N} needs M, N >= 2")

    # -- coordinates ---------------------------------------------------------
    @property
    def rank(self) -> int:
        return (self.M - 1) * (self.N - 1)

    def coord(self, i: int, c: int) -> int:
        return (i - 1) * (self.N - 1) + (c - 1)

    @cached_property
    def coord_labels(self) -> tuple[tuple[int, int], ...]:
        return tuple((i, c) for i in range(1, self.M) for c in range(1, self.N))

    def avec(self, i: int, c: int) -> tuple[int, ...]:
        """Additive coordinates of a_ic for arbitrary (cyclic) indices."""
        i %= self.M
        c %= self.N
        v = [0] * self.rank
        if i == 0:
            return tuple(v)
        if c == 0:
            for cc in range(1, self.N):
                v[self.coord(i, cc)] = -1
        else:
            v[self.coord(i, c)] = 1
        return tuple(v)

    @cached_property
    def t_matrix(self) -> lat.IntMatrix:
        """Matrix of conjugation by g0 on T (column k = image of basis vector k)."""
        cols = [self.avec(i, c + 1) for i, c in self.coord_labels]
        return lat.transpose(cols)

    @lru_cache(maxsize=None)
    def t_power(self, n: int) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(r) for r in lat.matpow(self.t_matrix, n % self.N))

    # -- group law -----------------------------------------------------------
    def element(self, tvec: Sequence[int], npart: int = 0) -> GammaMNElement:
        if len(tvec) != self.rank:
            raise ValueError(f"tvec must have length {self.rank}")
        return GammaMNElement(tuple(int(x) for x in tvec), npart % self.N)

    @property
    def identity(self) -> GammaMNElement:
        return GammaMNElement((0,) * self.rank, 0)

    def _check(self, x: GammaMNElement):
        if len(x.tvec) != self.rank:
            raise ValueError(f"element {x} does not live in Gamma_{{{self.M},{self.N}}}")

    def mul(self, x: GammaMNElement, y: GammaMNElement) -> GammaMNElement:
        self._check(x)
        self._check(y)
        moved = lat.matvec(self.t_power(x.npart), y.tvec)
        return GammaMNElement(
            tuple(a + b for a, b in zip(x.tvec, moved)), (x.npart + y.npart) % self.N
        )

    def inv(self, x: GammaMNElement) -> GammaMNElement:
        self._check(x)
        back = lat.matvec(self.t_power(-x.npart), x.tvec)
        return GammaMNElement(tuple(-a for a in back), (-x.npart) % self.N)

    def power(self, x: GammaMNElement, k: int) -> GammaMNElement:
        if k < 0:
            x, k = self.inv(x), -k
        out = self.identity
        base = x
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def product(self, xs) -> GammaMNElement:
        out = self.identity
        for x in xs:
            out = self.mul(out, x)
        return out

    def generator(self, i: int) -> GammaMNElement:
        """g_i = a_i1 * g0."""
        if not 0 <= i < self.M:
            raise ValueError(f"generator index {i} outside 0..{self.M - 1}")
        return GammaMNElement(self.avec(i, 1), 1 % self.N)

    def a(self, i: int, c: int) -> GammaMNElement:
        return GammaMNElement(self.avec(i, c), 0)

    def random_element(self, rng: random.Random, bound: int = 4) -> GammaMNElement:
        return GammaMNElement(
            tuple(rng.randint(-bound, bound) for _ in range(self.rank)), rng.randrange(self.N)
        )

    # -- the Z_M action --------------------------------------------------------
    def expand_t(self, tvec: Sequence[int], gens: Sequence[GammaMNElement]) -> GammaMNElement:
        """Evaluate prod a_ic^tvec with a_ic = g0^(c-1) g_i g0^(-c) read in ``gens``."""
        g0 = gens[0]
        g0inv = self.inv(g0)
        out = self.identity
        for (i, c), e in zip(self.coord_labels, tvec):
            if e:
                a_ic = self.product([self.power(g0, c - 1), gens[i], self.power(g0inv, c)])
                out = self.mul(out, self.power(a_ic, e))
        return out

    def apply_generator_images(self, images: Sequence[GammaMNElement], x: GammaMNElement) -> GammaMNElement:
        """Image of ``x`` under the endomorphism defined by g_i -> images[i]."""
        return self.mul(self.expand_t(x.tvec, images), self.power(images[0], x.npart))

    @lru_cache(maxsize=None)
    def zm_images(self, l: int) -> tuple[GammaMNElement, ...]:
        return tuple(self.generator((i + l) % self.M) for i in range(self.M))

    @lru_cache(maxsize=None)
    def zm_matrix(self, l: int) -> tuple[tuple[int, ...], ...]:
        """Linear action of h^l on T, derived from h.g_i = g_(i+1)."""
        images = self.zm_images(l % self.M)
        cols = []
        for k in range(self.rank):
            e = [0] * self.rank
            e[k] = 1
            y = self.expand_t(e, images)
            assert y.npart == 0
            cols.append(y.tvec)
        return tuple(tuple(r) for r in lat.transpose(cols))

    def zm_act(self, l: int, x: GammaMNElement) -> GammaMNElement:
        l %= self.M
        if l == 0:
            return x
        moved = GammaMNElement(tuple(lat.matvec(self.zm_matrix(l), x.tvec)), 0)
        return self.mul(moved, self.power(self.generator(l), x.npart))

    def zm_act_on_t(self, l: int, tvec: Sequence[int]) -> tuple[int, ...]:
        return tuple(lat.matvec(self.zm_matrix(l % self.M), tvec))

    def canonical_action(self) -> "GammaAction":
        return GammaAction(self, cyclic(self.M), (self.zm_images(1),))


def gamma_mul(ctx: GammaMN, x: GammaMNElement, y: GammaMNElement) -> GammaMNElement:
    return ctx.mul(x, y)


def gamma_inv(ctx: GammaMN, x: GammaMNElement) -> GammaMNElement:
    return ctx.inv(x)


def gamma_generator(M: int, N: int, i: int) -> GammaMNElement:
    return GammaMN(M, N).generator(i)


def zm_act(ctx: GammaMN, l: int, x: GammaMNElement) -> GammaMNElement:
    return ctx.zm_act(l, x)


def companion_matrices(p: int) -> tuple[lat.IntMatrix, lat.IntMatrix]:
    """The two (p-1)x(p-1) integer matrices with characteristic polynomial 1+X+...+X^(p-1).

    The first has ones below the diagonal and -1 down the last column; the
    second has ones below the diagonal and -1 along the first row.
    """
    n = p - 1
    first = [[1 if i == j + 1 else 0 for j in range(n)] for i in range(n)]
    second = [row[:] for row in first]
    for i in range(n):
        first[i][n - 1] = -1
        second[0][i] = -1
    return first, second


def krylov_independent(matrix: lat.IntMatrix, vector: Sequence) -> bool:
    """Are v, Av, ..., A^(n-1) v linearly independent over Q?  Rational v is cleared to integers."""
    from fractions import Fraction

    fr = [Fraction(x) for x in vector]
    scale = math.lcm(*(x.denominator for x in fr)) if fr else 1
    v = [int(x * scale) for x in fr]
    cols = []
    for _ in range(len(matrix)):
        cols.append(v)
        v = lat.matvec(matrix, v)
    return lat.det(cols) != 0


# ---------------------------------------------------------------------------
# actions


@dataclass(frozen=True)
class GammaAction:
    """A cyclic group acting on Gamma_{M,N}: its generator sends g_i to images[0][i]."""

    gamma: GammaMN
    acting: FiniteGroupTable
    images: tuple[tuple[GammaMNElement, ...], ...]

    def apply(self, x: GammaMNElement, times: int = 1) -> GammaMNElement:
        for _ in range(times):
            x = self.gamma.apply_generator_images(self.images[0], x)
        return x


def verify_action(action: GammaAction, samples: int = 100, seed: int = 0) -> Report:
    """Homomorphism check on random pairs plus the order relation of the acting generator."""
    rep = Report("action")
    gam = action.gamma
    rng = random.Random(seed)
    k = action.acting.element_order(1 % action.acting.order) if action.acting.order > 1 else 1
    imgs = action.images[0]
    witness = None
    for _ in range(samples):
        x, y = gam.random_element(rng), gam.random_element(rng)
        if action.apply(gam.mul(x, y)) != gam.mul(action.apply(x), action.apply(y)):
            witness = (x.to_json(), y.to_json())
            break
    rep.add("homomorphism", witness is None, "phi(xy) = phi(x)phi(y) on random pairs", witness)
    bad = [i for i, g in enumerate(imgs) if gam.power(g, gam.N) != gam.identity]
    rep.add("relations g_i^N = 1", not bad, "", bad or None)
    witness = None
    for x in [gam.generator(i) for i in range(gam.M)] + [gam.random_element(rng) for _ in range(samples)]:
        if action.apply(x, k) != x:
            witness = x.to_json()
            break
    rep.add("order", witness is None, f"generator^{k} acts trivially", witness)
    return rep


# ---------------------------------------------------------------------------
# finite quotients


@dataclass(eq=False)
class GammaQuotient:
    """(T/U) x| Z_N as a table; element index = npart * |T/U| + coset index."""

    gamma: GammaMN
    U: SubgroupHNF
    table: FiniteGroupTable
    reps: np.ndarray  # coset representatives of T/U, one row per coset
    zm_perms: tuple[np.ndarray, ...] = field(default=())  # h^l acting on indices

    @property
    def tsize(self) -> int:
        return self.reps.shape[0]

    @cached_property
    def _radix(self) -> tuple[list[int], list[int]]:
        diag = [b[k] for k, b in enumerate(self.U.basis)]
        weights = [1] * len(diag)
        for k in range(len(diag) - 2, -1, -1):
            weights[k] = weights[k + 1] * diag[k + 1]
        return diag, weights

    def coset_index(self, tvec: Sequence[int]) -> int:
        _, weights = self._radix
        r = self.U.reduce(tvec)
        return sum(w * x for w, x in zip(weights, r))

    def project(self, x: GammaMNElement) -> int:
        return x.npart * self.tsize + self.coset_index(x.tvec)

    def section(self, idx: int) -> GammaMNElement:
        n, k = divmod(idx, self.tsize)
        return GammaMNElement(tuple(int(v) for v in self.reps[k]), n)

    def in_U(self, x: GammaMNElement) -> bool:
        return x.npart == 0 and x.tvec in self.U


def _reduce_rows(v: np.ndarray, U: SubgroupHNF) -> np.ndarray:
    for k, b in enumerate(U.basis):
        bb = np.array(b, dtype=np.int64)
        q = np.floor_divide(v[..., k], b[k])
        v = v - q[..., None] * bb
    return v


def finite_quotient(gamma: GammaMN, U: SubgroupHNF, push_zm: bool = True) -> GammaQuotient:
    """Multiplication table of Gamma_{M,N}/U for a full-rank, normal U inside T."""
    if U.n != gamma.rank:
        raise ValueError("U must live in T")
    if not U.is_full_rank():
        raise ValueError(f"T/U is infinite (rank {U.rank} < {gamma.rank}); no finite table")
    for b in U.basis:
        if tuple(lat.matvec(gamma.t_matrix, b)) not in U:
            raise ValueError(f"U is not normal: not stable under t (conjugation by g0); witness {list(b)}")
    if push_zm:
        for b in U.basis:
            if gamma.zm_act_on_t(1, b) not in U:
                raise ValueError(f"U is not stable under h; witness {list(b)}")
    diag = [b[k] for k, b in enumerate(U.basis)]
    grids = np.meshgrid(*[np.arange(d) for d in diag], indexing="ij")
    reps = np.stack([g.ravel() for g in grids], axis=-1).astype(np.int64).reshape(-1, gamma.rank)
    K = reps.shape[0]
    N = gamma.N
    bound = int(np.abs(np.array(gamma.t_matrix)).sum()) * max(diag) * 4
    if bound > 2**40:
        raise OverflowError("quotient too large for the int64 table builder")
    weights = np.ones(len(diag), dtype=np.int64)
    for k in range(len(diag) - 2, -1, -1):
        weights[k] = weights[k + 1] * diag[k + 1]
    mult = np.empty((N * K, N * K), dtype=np.int64)
    for nx in range(N):
        moved = reps @ np.array(gamma.t_power(nx), dtype=np.int64).T  # C^nx applied to each rep
        tsum = _reduce_rows(reps[:, None, :] + moved[None, :, :], U)
        cos = tsum @ weights
        for ny in range(N):
            mult[nx * K:(nx + 1) * K, ny * K:(ny + 1) * K] = ((nx + ny) % N) * K + cos
    labels = tuple(f"{list(reps[k])}g0^{n}" for n in range(N) for k in range(K))
    q = GammaQuotient(gamma, U, FiniteGroupTable(mult, 0, labels), reps)
    if push_zm:
        perms = []
        for l in range(gamma.M):
            perms.append(np.array([q.project(gamma.zm_act(l, q.section(x))) for x in range(N * K)], dtype=np.int64))
        q.zm_perms = tuple(perms)
    return q
