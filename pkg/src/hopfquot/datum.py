"""Quotient data (G, N, Phi) for a finite group H acting on a group Gamma.

Two flavours share one interface:

* ``LatticeDatum``: Gamma = Gamma_{M,N} with H = Z_M acting cyclically on the
  generators, N a lattice inside T, Phi stored on the HNF basis of N and
  extended multiplicatively.
* ``FiniteDatum``: Gamma given by a multiplication table, the H-action by a
  permutation table, N by generators; everything is checked by exhaustion.

For both, ``phi_value(r, g)`` returns Phi(r)(g) as a ``UnitValue``.  Report
lines are prefixed by the axiom group they test: ``subgroup:`` (G inside H),
``normality:`` (N normal and G-stable) and ``phi:`` (Phi a morphism with the
cocycle identity and conjugation invariance).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from . import lattice as lat
from .gamma import GammaMN, GammaMNElement
from .groups import FiniteGroupTable, cyclic
from .lattice import SubgroupHNF
from .report import Report
from .scalars import UnitGroupSpec, UnitValue


def zm_label(l: int) -> str:
    return "e" if l == 0 else ("h" if l == 1 else f"h^{l}")


def _subgroup_problems(H: FiniteGroupTable, G: Sequence[int]) -> list:
    Gs = set(G)
    if H.identity not in Gs:
        return ["identity missing"]
    for a in G:
        if H.inv(a) not in Gs:
            return [("inverse", a)]
        for b in G:
            if H.mul(a, b) not in Gs:
                return [("product", a, b)]
    return []


# ---------------------------------------------------------------------------
# lattice flavour


@dataclass(frozen=True, eq=False)
class LatticeDatum:
    gamma: GammaMN
    G: tuple[int, ...]
    N: SubgroupHNF
    phi: tuple[tuple[UnitValue, ...], ...]
    spec: UnitGroupSpec

    @cached_property
    def H(self) -> FiniteGroupTable:
        return cyclic(self.gamma.M)

    @cached_property
    def gpos(self) -> dict[int, int]:
        return {g: k for k, g in enumerate(self.G)}

    def act(self, l: int, x: GammaMNElement) -> GammaMNElement:
        return self.gamma.zm_act(l, x)

    def contains(self, x: GammaMNElement) -> bool:
        return x.npart == 0 and x.tvec in self.N

    def phi_vector(self, tvec: Sequence[int]) -> tuple[UnitValue, ...]:
        return self._phi_cache(tuple(tvec))

    def _phi_cache(self, tvec: tuple) -> tuple[UnitValue, ...]:
        cache = self.__dict__.setdefault("_phi_memo", {})
        if tvec not in cache:
            coords = self.N.coordinates(tvec)
            out = [self.spec.one()] * len(self.G)
            for c, vals in zip(coords, self.phi):
                if c:
                    out = [o * v ** c for o, v in zip(out, vals)]
            cache[tvec] = tuple(out)
        return cache[tvec]

    def phi_value(self, r: GammaMNElement, g: int) -> UnitValue:
        if r.npart:
            raise ValueError("Phi is only defined on N, which lies inside T")
        return self.phi_vector(r.tvec)[self.gpos[g]]

    def basis_elements(self) -> list[GammaMNElement]:
        return [GammaMNElement(b, 0) for b in self.N.basis]

    def to_json(self) -> dict:
        return {
            "M": self.gamma.M,
            "N": self.gamma.N,
            "unit_group": self.spec.to_json(),
            "G": list(self.G),
            "N_basis": self.N.to_json(),
            "Phi": {
                f"gen{k}": {zm_label(g): v.to_json() for g, v in zip(self.G, vals)}
                for k, vals in enumerate(self.phi)
            },
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "LatticeDatum":
        gamma = GammaMN(int(data["M"]), int(data["N"]))
        spec = UnitGroupSpec.from_json(data["unit_group"])
        G = tuple(int(g) % gamma.M for g in data["G"])
        gens = [list(b) for b in data["N_basis"]]
        N = SubgroupHNF.from_generators(gamma.rank, gens)
        if N.rank != len(gens):
            raise ValueError("N_basis must be linearly independent")
        phi_in = data.get("Phi", {})
        # Phi is given on the supplied generators; transport it to the HNF basis
        raw = []
        for k in range(len(gens)):
            entry = phi_in.get(f"gen{k}", {})
            raw.append(tuple(spec.value(entry.get(zm_label(g), {})) for g in G))
        return cls(gamma, G, N, _transport_phi(N, gens, raw, spec, len(G)), spec)


def _transport_phi(N: SubgroupHNF, gens, raw, spec, width) -> tuple:
    """Rewrite Phi from arbitrary independent generators onto the HNF basis of their span."""
    if not gens:
        return ()
    # express each HNF basis vector as an integer combination of the generators
    stacked = [list(g) for g in gens]
    out = []
    for b in N.basis:
        coeffs = _solve_integer_combination(stacked, list(b))
        vals = [spec.one()] * width
        for c, gv in zip(coeffs, raw):
            if c:
                vals = [v * w ** c for v, w in zip(vals, gv)]
        out.append(tuple(vals))
    return tuple(out)


def _solve_integer_combination(gens: list[list[int]], target: list[int]) -> list[int]:
    _, u, r = lat.hnf_rows(gens, len(target))
    h = [list(row) for row in lat.matmul(u, gens)][:r]
    sub = SubgroupHNF(len(target), tuple(tuple(x) for x in h))
    coords = sub.coordinates(target)
    # target = coords @ h = coords @ U[:r] @ gens
    return [sum(c * u[i][j] for i, c in enumerate(coords)) for j in range(len(gens))]


def trivial_datum(gamma: GammaMN, spec: UnitGroupSpec | None = None) -> LatticeDatum:
    spec = spec or UnitGroupSpec((), ())
    return LatticeDatum(gamma, tuple(range(gamma.M)), SubgroupHNF.zero(gamma.rank), (), spec)


def family_datum(m: int, twisted: bool, spec: UnitGroupSpec | None = None) -> LatticeDatum:
    """The A(m) (untwisted) or B(m) (twisted) datum on Gamma_{2,2}.

    N = <a_11^m>; in the twisted case Phi(a_11^m) is the sign character of Z_2.
    """
    spec = spec or UnitGroupSpec.of(s=2)
    gamma = GammaMN(2, 2)
    N = SubgroupHNF.from_generators(1, [[m]])
    sign = spec.value([spec.orders[0] // 2] + [0] * (spec.rank - 1)) if twisted else spec.one()
    if twisted and (spec.orders[0] % 2):
        raise ValueError("the twisted family needs a first generator of even order")
    return LatticeDatum(gamma, (0, 1), N, ((spec.one(), sign),), spec)


def gamma33_datum(m: int, alpha: UnitValue, beta: UnitValue) -> LatticeDatum:
    """N_m = m Z^4 in Gamma_{3,3} with the two-parameter Phi on e, h, h^2."""
    spec = alpha.spec
    gamma = GammaMN(3, 3)
    N = SubgroupHNF.from_generators(4, [[m if i == j else 0 for j in range(4)] for i in range(4)])
    one = spec.one()
    first = (one, alpha, alpha * beta)
    second = (one, beta.inv(), alpha)
    return LatticeDatum(gamma, (0, 1, 2), N, (first, first, second, second), spec)


def _validate_lattice(d: LatticeDatum, samples: int, seed: int) -> Report:
    rep = Report("quotient datum")
    gam = d.gamma
    H = d.H
    bad = _subgroup_problems(H, d.G)
    if not rep.add("subgroup: G is a subgroup of H", not bad, "", bad or None):
        return rep
    shape_ok = len(d.phi) == d.N.rank and all(len(v) == len(d.G) for v in d.phi)
    if not rep.add("Phi table shape", shape_ok, "one value per basis vector of N and element of G"):
        return rep
    witness = next((list(b) for b in d.N.basis if tuple(lat.matvec(gam.t_matrix, b)) not in d.N), None)
    if not rep.add("normality: N normal (stable under t)", witness is None, "", witness):
        return rep
    witness = next(
        ([l, list(b)] for l in d.G for b in d.N.basis if gam.zm_act_on_t(l, b) not in d.N), None
    )
    if not rep.add("normality: N is G-stable", witness is None, "", witness):
        return rep
    # (3) cocycle: Phi(r)(lh) = Phi(l^-1 . r)(h) Phi(r)(l)
    witness = None
    for k, b in enumerate(d.N.basis):
        for l in d.G:
            moved = gam.zm_act_on_t(-l, b)
            for h in d.G:
                lhs = d.phi_vector(b)[d.gpos[(l + h) % gam.M]]
                rhs = d.phi_vector(moved)[d.gpos[h]] * d.phi_vector(b)[d.gpos[l]]
                if lhs != rhs:
                    witness = witness or {"basis": k, "l": l, "h": h}
    rep.add("phi: cocycle identity", witness is None, "checked on the basis of N and all of G x G", witness)
    # (3) conjugation invariance, reduced to the automorphism t (see module docstring)
    witness = None
    for k, b in enumerate(d.N.basis):
        v = list(b)
        for a in range(1, gam.N):
            v = lat.matvec(gam.t_matrix, v)
            if d.phi_vector(v) != d.phi_vector(b):
                witness = witness or {"basis": k, "t_power": a}
    rep.add("phi: conjugation invariance", witness is None, "Phi(t^a . r) = Phi(r)", witness)
    return rep


# ---------------------------------------------------------------------------
# finite flavour


@dataclass(frozen=True, eq=False)
class FiniteDatum:
    gamma: FiniteGroupTable
    H: FiniteGroupTable
    action: np.ndarray  # action[h, r] = h . r
    G: tuple[int, ...]
    N_gens: tuple[int, ...]
    phi_gens: tuple[tuple[UnitValue, ...], ...]
    spec: UnitGroupSpec

    @cached_property
    def gpos(self) -> dict[int, int]:
        return {g: k for k, g in enumerate(self.G)}

    @cached_property
    def _extension(self) -> tuple[dict[int, tuple], list]:
        """Multiplicative extension of Phi from generators by breadth-first search."""
        one = tuple(self.spec.one() for _ in self.G)
        table = {self.gamma.identity: one}
        conflicts = []
        frontier = [self.gamma.identity]
        while frontier:
            x = frontier.pop(0)
            for gen, vals in zip(self.N_gens, self.phi_gens):
                y = self.gamma.mul(x, gen)
                val = tuple(a * b for a, b in zip(table[x], vals))
                if y in table:
                    if table[y] != val:
                        conflicts.append(y)
                else:
                    table[y] = val
                    frontier.append(y)
        return table, conflicts

    @property
    def N_elements(self) -> list[int]:
        return sorted(self._extension[0])

    def contains(self, x: int) -> bool:
        return x in self._extension[0]

    def act(self, h: int, x: int) -> int:
        return int(self.action[h, x])

    def phi_vector(self, r: int) -> tuple[UnitValue, ...]:
        return self._extension[0][r]

    def phi_value(self, r: int, g: int) -> UnitValue:
        return self._extension[0][r][self.gpos[g]]

    def basis_elements(self) -> list[int]:
        return list(self.N_gens)


def _validate_finite(d: FiniteDatum) -> Report:
    rep = Report("quotient datum")
    Gam, H = d.gamma, d.H
    bad = _subgroup_problems(H, d.G)
    if not rep.add("subgroup: G is a subgroup of H", not bad, "", bad or None):
        return rep
    Nset = set(d.N_elements)
    witness = next(
        ((s, r) for r in sorted(Nset) for s in range(Gam.order) if Gam.mul(Gam.mul(s, r), Gam.inv(s)) not in Nset),
        None,
    )
    if not rep.add("normality: N normal", witness is None, "", witness):
        return rep
    witness = next(((g, r) for g in d.G for r in sorted(Nset) if d.act(g, r) not in Nset), None)
    if not rep.add("normality: N is G-stable", witness is None, "", witness):
        return rep
    table, conflicts = d._extension
    ok = not conflicts
    witness = conflicts[:1] or None
    if ok:
        for x in Nset:
            for y in Nset:
                prod = tuple(a * b for a, b in zip(table[x], table[y]))
                if table[Gam.mul(x, y)] != prod:
                    ok, witness = False, (x, y)
                    break
            if not ok:
                break
    if not rep.add("phi: Phi is a well-defined morphism", ok, "", witness):
        return rep
    witness = None
    for r in sorted(Nset):
        for l in d.G:
            for h in d.G:
                lhs = d.phi_value(r, H.mul(l, h))
                rhs = d.phi_value(d.act(H.inv(l), r), h) * d.phi_value(r, l)
                if lhs != rhs and witness is None:
                    witness = {"r": r, "l": l, "h": h}
    rep.add("phi: cocycle identity", witness is None, "all r in N, all (l, h) in G x G", witness)
    witness = next(
        ({"r": r, "s": s} for r in sorted(Nset) for s in range(Gam.order)
         if d.phi_vector(Gam.mul(Gam.mul(s, r), Gam.inv(s))) != d.phi_vector(r)),
        None,
    )
    rep.add("phi: conjugation invariance", witness is None, "Phi(s r s^-1) = Phi(r) for all s", witness)
    return rep


# ---------------------------------------------------------------------------
# public operations


QuotientDatum = LatticeDatum | FiniteDatum


def validate_datum(d: QuotientDatum, samples: int = 50, seed: int = 0) -> Report:
    if isinstance(d, LatticeDatum):
        return _validate_lattice(d, samples, seed)
    return _validate_finite(d)


def derived_consequences(d: QuotientDatum, samples: int = 50, seed: int = 0) -> Report:
    """Check Phi(r)(1) = 1, Phi(h.r)(h) = Phi(r^-1)(h^-1), and Phi(rs) = Phi(sr)."""
    rep = Report("derived consequences")
    if isinstance(d, LatticeDatum):
        gam = d.gamma
        M = gam.M
        one = d.spec.one()
        basis = [list(b) for b in d.N.basis]
        w = next((k for k, b in enumerate(basis) if d.phi_vector(b)[d.gpos[0]] != one), None)
        rep.add("Phi(r)(1) = 1", w is None, "", w)
        w = None
        for k, b in enumerate(basis):
            neg = [-x for x in b]
            for h in d.G:
                if d.phi_vector(gam.zm_act_on_t(h, b))[d.gpos[h]] != d.phi_vector(neg)[d.gpos[(-h) % M]]:
                    w = w or {"basis": k, "h": h}
        rep.add("Phi(h.r)(h) = Phi(r^-1)(h^-1)", w is None, "", w)
        rng = random.Random(seed)
        w = None
        for _ in range(samples if basis else 0):
            n = GammaMNElement(tuple(rng.choice(basis)), 0)
            r = gam.random_element(rng)
            s = gam.mul(gam.inv(r), n)  # r s = n lies in N
            sr = gam.mul(s, r)
            if not d.contains(sr) or d.phi_vector(sr.tvec) != d.phi_vector(n.tvec):
                w = w or {"r": r.to_json(), "s": s.to_json()}
        rep.add("rs in N implies sr in N and Phi(rs) = Phi(sr)", w is None, "random pairs", w)
        return rep
    Gam, H = d.gamma, d.H
    Nset = d.N_elements
    one = d.spec.one()
    w = next((r for r in Nset if d.phi_value(r, H.identity) != one), None)
    rep.add("Phi(r)(1) = 1", w is None, "", w)
    w = next(
        ((r, h) for r in Nset for h in d.G
         if d.phi_value(d.act(h, r), h) != d.phi_value(Gam.inv(r), H.inv(h))),
        None,
    )
    rep.add("Phi(h.r)(h) = Phi(r^-1)(h^-1)", w is None, "", w)
    w = None
    for r in range(Gam.order):
        for n in Nset:
            s = Gam.mul(Gam.inv(r), n)
            sr = Gam.mul(s, r)
            if not d.contains(sr) or d.phi_vector(sr) != d.phi_vector(n):
                w = w or (r, s)
    rep.add("rs in N implies sr in N and Phi(rs) = Phi(sr)", w is None, "exhaustive", w)
    return rep


def is_char_valued(d: QuotientDatum) -> bool:
    """True when every Phi(r) is a character of G."""
    if isinstance(d, LatticeDatum):
        M = d.gamma.M
        vectors = [d.phi_vector(b) for b in d.N.basis]
        mul = lambda a, b: (a + b) % M
    else:
        vectors = [d.phi_vector(r) for r in d.N_elements]
        mul = d.H.mul
    for vals in vectors:
        for a in d.G:
            for b in d.G:
                if vals[d.gpos[mul(a, b)]] != vals[d.gpos[a]] * vals[d.gpos[b]]:
                    return False
    return True


def finite_datum_from_lattice(d: LatticeDatum, quotient) -> FiniteDatum:
    """Push a lattice datum down to a finite model Gamma/U with U inside N (and inside ker Phi)."""
    gam = d.gamma
    N_gens = tuple(quotient.project(x) for x in d.basis_elements())
    return FiniteDatum(
        quotient.table,
        d.H,
        np.stack(quotient.zm_perms),
        d.G,
        N_gens,
        d.phi,
        d.spec,
    )
