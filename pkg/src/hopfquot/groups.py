"""Finite groups given by multiplication tables."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

import numpy as np


@dataclass(frozen=True, eq=False)
class FiniteGroupTable:
    """Group on ``{0, ..., n-1}``; ``mult[a, b]`` is the index of ``a*b``."""

    mult: np.ndarray
    identity: int = 0
    labels: tuple[str, ...] = ()
    inverse: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        mult = np.asarray(self.mult, dtype=np.int64)
        object.__setattr__(self, "mult", mult)
        n = mult.shape[0]
        if mult.shape != (n, n):
            raise ValueError("multiplication table must be square")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(n)))
        inv = np.full(n, -1, dtype=np.int64)
        rows, cols = np.nonzero(mult == self.identity)
        inv[rows] = cols
        object.__setattr__(self, "inverse", inv)

    @property
    def order(self) -> int:
        return self.mult.shape[0]

    def mul(self, a: int, b: int) -> int:
        return int(self.mult[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        out = self.identity
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def validate(self) -> list[str]:
        """Return a list of violated group axioms (empty when the table is a group)."""
        m = self.mult
        n = self.order
        problems = []
        if m.min() < 0 or m.max() >= n:
            return ["entries out of range"]
        e = self.identity
        if not (np.array_equal(m[e], np.arange(n)) and np.array_equal(m[:, e], np.arange(n))):
            problems.append("identity")
        for a in range(n):
            if sorted(m[a]) != list(range(n)):
                problems.append(f"row {a} is not a permutation")
                break
        if (self.inverse < 0).any():
            problems.append("inverses")
        # (ab)c == a(bc) for all triples, vectorized over b, c
        for a in range(n):
            if not np.array_equal(m[m[a]], m[a][m]):
                problems.append(f"associativity fails at a={a}")
                break
        return problems

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mult, self.mult.T))

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            k += 1
        return k

    def order_profile(self) -> tuple[int, ...]:
        return tuple(sorted(self.element_order(a) for a in range(self.order)))

    def exponent(self) -> int:
        return math.lcm(*(self.element_order(a) for a in range(self.order)))

    def generated_subgroup(self, gens: Sequence[int]) -> list[int]:
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mul(x, g)
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return sorted(seen)

    def minimal_generating_set_size(self) -> int:
        for k in range(0, self.order + 1):
            for gens in itertools.combinations(range(self.order), k):
                if len(self.generated_subgroup(gens)) == self.order:
                    return k
        raise AssertionError("unreachable")

    def to_json(self) -> dict:
        return {"order": self.order, "mult": self.mult.tolist(), "identity": self.identity}

    @classmethod
    def from_json(cls, data: dict) -> "FiniteGroupTable":
        g = cls(np.array(data["mult"]), int(data.get("identity", 0)))
        if g.order != data["order"]:
            raise ValueError("declared order does not match the table")
        return g

    @classmethod
    def from_elements(
        cls,
        elements: Sequence[Hashable],
        op: Callable[[Hashable, Hashable], Hashable],
        identity: Hashable,
        label: Callable[[Hashable], str] = str,
    ) -> "FiniteGroupTable":
        index = {x: i for i, x in enumerate(elements)}
        mult = np.array([[index[op(a, b)] for b in elements] for a in elements], dtype=np.int64)
        return cls(mult, index[identity], tuple(label(x) for x in elements))


def cyclic(n: int) -> FiniteGroupTable:
    i = np.arange(n)
    return FiniteGroupTable((i[:, None] + i[None, :]) % n, 0, tuple(f"h^{k}" for k in range(n)))


def trivial_group() -> FiniteGroupTable:
    return cyclic(1)


def dihedral(m: int) -> FiniteGroupTable:
    """Dihedral group of order 2m; element (k, s) means r^k s^s."""
    elems = [(k, s) for s in range(2) for k in range(m)]

    def op(x, y):
        k1, s1 = x
        k2, s2 = y
        return ((k1 + (-k2 if s1 else k2)) % m, (s1 + s2) % 2)

    return FiniteGroupTable.from_elements(elems, op, (0, 0), lambda x: f"r^{x[0]}s^{x[1]}")


def direct_product(a: FiniteGroupTable, b: FiniteGroupTable) -> FiniteGroupTable:
    elems = [(x, y) for x in range(a.order) for y in range(b.order)]
    return FiniteGroupTable.from_elements(
        elems,
        lambda u, v: (a.mul(u[0], v[0]), b.mul(u[1], v[1])),
        (a.identity, b.identity),
        lambda u: f"({a.labels[u[0]]},{b.labels[u[1]]})",
    )


def symmetric(n: int) -> FiniteGroupTable:
    perms = list(itertools.permutations(range(n)))
    return FiniteGroupTable.from_elements(
        perms, lambda p, q: tuple(p[q[i]] for i in range(n)), tuple(range(n))
    )


def find_isomorphism(a: FiniteGroupTable, b: FiniteGroupTable) -> dict[int, int] | None:
    """Explicit isomorphism a -> b by backtracking over generator images, or None."""
    if a.order != b.order or a.order_profile() != b.order_profile():
        return None
    gens: list[int] = []
    span = [a.identity]
    for x in range(a.order):
        if x not in span:
            gens.append(x)
            span = a.generated_subgroup(gens)
    orders_b = [b.element_order(y) for y in range(b.order)]

    def extend(images: list[int]) -> dict[int, int] | None:
        if len(images) < len(gens):
            g = gens[len(images)]
            want = a.element_order(g)
            for y in range(b.order):
                if orders_b[y] == want:
                    found = extend(images + [y])
                    if found is not None:
                        return found
            return None
        # breadth-first extension along generator words; reject on conflict
        phi = {a.identity: b.identity}
        frontier = [a.identity]
        while frontier:
            x = frontier.pop()
            for g, y in zip(gens, images):
                xg, ty = a.mul(x, g), b.mul(phi[x], y)
                if xg in phi:
                    if phi[xg] != ty:
                        return None
                else:
                    phi[xg] = ty
                    frontier.append(xg)
        if len(set(phi.values())) != a.order:
            return None
        for x in range(a.order):
            for y in range(a.order):
                if phi[a.mul(x, y)] != b.mul(phi[x], phi[y]):
                    return None
        return phi

    return extend([])


def is_isomorphic(a: FiniteGroupTable, b: FiniteGroupTable) -> bool:
    return find_isomorphism(a, b) is not None
