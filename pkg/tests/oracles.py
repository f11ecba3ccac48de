"""Brute-force oracles, deliberately independent of the package algorithms."""

from __future__ import annotations

import itertools
import math
from collections import Counter, deque


def leibniz_det(m) -> int:
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        total += (-1) ** inv * math.prod(m[i][perm[i]] for i in range(n))
    return total


def invariant_factors(rows, ncols: int) -> list[int]:
    """Nonzero invariant factors from gcds of k x k minors (determinantal divisors)."""
    nrows = len(rows)
    divisors = [1]
    for k in range(1, min(nrows, ncols) + 1):
        g = 0
        for rs in itertools.combinations(range(nrows), k):
            for cs in itertools.combinations(range(ncols), k):
                g = math.gcd(g, leibniz_det([[rows[r][c] for c in cs] for r in rs]))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[k] // divisors[k - 1] for k in range(1, len(divisors))]


def closure_mod(gens, d: int, n: int) -> set[tuple]:
    """Subgroup of (Z_d)^n generated by the reductions of ``gens``."""
    start = (0,) * n
    seen = {start}
    queue = deque([start])
    steps = [tuple(x % d for x in g) for g in gens]
    while queue:
        v = queue.popleft()
        for s in steps:
            w = tuple((a + b) % d for a, b in zip(v, s))
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def quotient_order_profile(gens, d: int, n: int) -> Counter:
    """Element-order counts of (Z_d)^n / <gens mod d>; equals Z^n/L when d Z^n lies in L."""
    S = closure_mod(gens, d, n)
    reps = {}
    for x in itertools.product(range(d), repeat=n):
        key = min(tuple((a + b) % d for a, b in zip(x, s)) for s in S)
        reps[key] = x
    prof = Counter()
    for x in reps.values():
        k = 1
        while tuple(k * a % d for a in x) not in S:
            k += 1
        prof[k] += 1
    return prof


def cyclic_product_profile(orders) -> Counter:
    prof = Counter()
    for x in itertools.product(*(range(o) for o in orders)):
        k = 1
        for a, o in zip(x, orders):
            k = math.lcm(k, o // math.gcd(a, o))
        prof[k] += 1
    return prof


def bfs_lattice(gens, n: int, radius: int) -> set[tuple]:
    """Lattice points reachable from 0 by generator steps inside the cube of the given radius."""
    start = (0,) * n
    seen = {start}
    queue = deque([start])
    steps = [tuple(g) for g in gens] + [tuple(-x for x in g) for g in gens]
    while queue:
        v = queue.popleft()
        for s in steps:
            w = tuple(a + b for a, b in zip(v, s))
            if max(map(abs, w), default=0) <= radius and w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def box(n: int, radius: int):
    return itertools.product(range(-radius, radius + 1), repeat=n)
