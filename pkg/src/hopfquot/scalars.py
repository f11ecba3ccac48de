"""Exact values: a presented abelian unit group and cyclotomic-Laurent scalars.

Two layers live here.  ``UnitGroupSpec``/``UnitValue`` model the multiplicative
group in which all parameters live (matrix entries, cocycle values, ...): a
finitely generated abelian group given by generators with declared orders, so
equality and orders are decided by integer arithmetic.  ``CycloLaurentScalar``
is the concrete coefficient ring used for structure constants: Laurent
polynomials in the infinite-order generators with coefficients in Q(zeta_L).
``embed`` connects the two.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Iterable, Mapping, Sequence

INFINITE = math.inf


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


# ---------------------------------------------------------------------------
# presented unit group


@dataclass(frozen=True)
class UnitGroupSpec:
    """Generators with declared orders; an order of ``INFINITE`` means free."""

    names: tuple[str, ...]
    orders: tuple[int | float, ...]

    def __post_init__(self):
        if len(self.names) != len(self.orders):
            raise ValueError("names and orders differ in length")
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"duplicate generator names in {self.names}")
        for name, order in zip(self.names, self.orders):
            if order is not INFINITE and (not isinstance(order, int) or order < 1):
                raise ValueError(f"generator {name!r}: order must be a positive int or INFINITE")

    @classmethod
    def of(cls, **orders: int | None) -> "UnitGroupSpec":
        """``UnitGroupSpec.of(q=12, t=None)``; ``None`` marks an infinite order."""
        names = tuple(orders)
        return cls(names, tuple(INFINITE if o is None else o for o in orders.values()))

    @property
    def rank(self) -> int:
        return len(self.names)

    @property
    def finite_orders(self) -> list[int]:
        return [o for o in self.orders if o is not INFINITE]

    @property
    def infinite_names(self) -> tuple[str, ...]:
        return tuple(n for n, o in zip(self.names, self.orders) if o is INFINITE)

    def torsion_lcm(self) -> int:
        return reduce(_lcm, self.finite_orders, 1)

    def one(self) -> "UnitValue":
        return UnitValue(self, (0,) * self.rank)

    def gen(self, name: str) -> "UnitValue":
        return self.value({name: 1})

    def value(self, exponents: Mapping[str, int] | Sequence[int]) -> "UnitValue":
        if isinstance(exponents, Mapping):
            unknown = set(exponents) - set(self.names)
            if unknown:
                raise ValueError(f"unknown generators {sorted(unknown)}")
            exps = tuple(int(exponents.get(n, 0)) for n in self.names)
        else:
            exps = tuple(int(e) for e in exponents)
        return UnitValue(self, exps)

    def to_json(self) -> dict:
        return {
            "generators": [
                {"name": n, "order": None if o is INFINITE else o}
                for n, o in zip(self.names, self.orders)
            ]
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "UnitGroupSpec":
        gens = data["generators"]
        return cls(
            tuple(g["name"] for g in gens),
            tuple(INFINITE if g.get("order") is None else int(g["order"]) for g in gens),
        )


@dataclass(frozen=True, init=False)
class UnitValue:
    """Element of the group presented by ``spec``, stored in canonical form."""

    spec: UnitGroupSpec
    exps: tuple[int, ...]

    def __init__(self, spec: UnitGroupSpec, exps: Iterable[int]):
        exps = tuple(exps)
        if len(exps) != spec.rank:
            raise ValueError(f"expected {spec.rank} exponents, got {len(exps)}")
        canon = tuple(e if o is INFINITE else e % o for e, o in zip(exps, spec.orders))
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "exps", canon)

    def _check(self, other: "UnitValue"):
        if not isinstance(other, UnitValue) or other.spec != self.spec:
            raise ValueError("unit values belong to different unit groups")

    def __mul__(self, other: "UnitValue") -> "UnitValue":
        self._check(other)
        return UnitValue(self.spec, (a + b for a, b in zip(self.exps, other.exps)))

    def __truediv__(self, other: "UnitValue") -> "UnitValue":
        self._check(other)
        return UnitValue(self.spec, (a - b for a, b in zip(self.exps, other.exps)))

    def __pow__(self, k: int) -> "UnitValue":
        return UnitValue(self.spec, (k * a for a in self.exps))

    def inv(self) -> "UnitValue":
        return UnitValue(self.spec, (-a for a in self.exps))

    def is_one(self) -> bool:
        return not any(self.exps)

    def order(self) -> int | float:
        out = 1
        for e, o in zip(self.exps, self.spec.orders):
            if o is INFINITE:
                if e:
                    return INFINITE
            else:
                out = _lcm(out, o // math.gcd(e, o))
        return out

    def to_json(self) -> dict[str, int]:
        return {n: e for n, e in zip(self.spec.names, self.exps) if e}

    def __str__(self) -> str:
        parts = [n if e == 1 else f"{n}^{e}" for n, e in zip(self.spec.names, self.exps) if e]
        return "*".join(parts) or "1"


def unit_mul(a: UnitValue, b: UnitValue) -> UnitValue:
    return a * b


def unit_inv(a: UnitValue) -> UnitValue:
    return a.inv()


def unit_is_one(a: UnitValue) -> bool:
    return a.is_one()


def unit_order(a: UnitValue) -> int | float:
    """Multiplicative order of ``a``; ``INFINITE`` when a free generator occurs."""
    return a.order()


# ---------------------------------------------------------------------------
# integer / rational polynomials (coefficient lists, low degree first)


def _trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_divmod(a: Sequence, b: Sequence) -> tuple[list, list]:
    """Division in Q[X]; ``b`` must be nonzero (trimmed)."""
    a = _trim([Fraction(x) for x in a])
    b = _trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b):
        c = a[-1] / lead
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] -= c * y
        a.pop()
        _trim(a)
    return q, a


@lru_cache(maxsize=None)
def _cyclotomic(L: int) -> tuple[int, ...]:
    num = [-1] + [0] * (L - 1) + [1]
    for d in range(1, L):
        if L % d == 0:
            num, rem = _poly_divmod(num, _cyclotomic(d))
            assert not rem
    return tuple(int(c) for c in num)


def cyclotomic_poly(L: int) -> list[int]:
    """Coefficients of the L-th cyclotomic polynomial, constant term first."""
    if L < 1:
        raise ValueError("L must be positive")
    return list(_cyclotomic(L))


# ---------------------------------------------------------------------------
# Q(zeta_L)


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class CyclotomicField:
    """Q(zeta_L) with elements as coefficient tuples reduced modulo Phi_L."""

    def __init__(self, L: int):
        self.L = L
        self.modulus = cyclotomic_poly(L)
        self.degree = len(self.modulus) - 1
        self.zero = (0,) * self.degree
        self.one = self.reduce([1])
        self._powers = [self.reduce([0] * k + [1]) for k in range(L)]

    def __repr__(self):
        return f"CyclotomicField({self.L})"

    def reduce(self, poly: Sequence) -> tuple:
        p = list(poly)
        mod, d = self.modulus, self.degree
        for k in range(len(p) - 1, d - 1, -1):
            c = p[k]
            if c:
                # modulus is monic
                for i in range(d):
                    if mod[i]:
                        p[k - d + i] -= c * mod[i]
                p[k] = 0
        p = p[:d] + [0] * (d - len(p))
        return tuple(_norm(c) for c in p)

    def zeta(self, k: int) -> tuple:
        return self._powers[k % self.L]

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple(_norm(x + y) for x, y in zip(a, b))

    def neg(self, a: tuple) -> tuple:
        return tuple(-x for x in a)

    def mul(self, a: tuple, b: tuple) -> tuple:
        if a == self.one:
            return b
        if b == self.one:
            return a
        return self.reduce(_poly_mul(a, b))

    def scale(self, a: tuple, c) -> tuple:
        return tuple(_norm(x * c) for x in a)

    def inv(self, a: tuple) -> tuple:
        if not any(a):
            raise ZeroDivisionError("inverse of zero")
        # extended Euclid: s*a + t*mod = g, with g a nonzero constant
        r0, r1 = [Fraction(x) for x in self.modulus], _trim([Fraction(x) for x in a])
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            r0, r1 = r1, r
            prod = _poly_mul(q, s1)
            n = max(len(s0), len(prod))
            s0, s1 = s1, _trim([(s0[i] if i < len(s0) else 0) - (prod[i] if i < len(prod) else 0) for i in range(n)])
        c = r1[0]
        return self.reduce([x / c for x in s1])

    def embedding_exponent(self, other: "CyclotomicField") -> int:
        """zeta_self maps to zeta_other ** k under Q(zeta_self) -> Q(zeta_other)."""
        if other.L % self.L:
            raise ValueError(f"Q(zeta_{self.L}) does not embed in Q(zeta_{other.L})")
        return other.L // self.L

    def lift(self, a: tuple, other: "CyclotomicField") -> tuple:
        k = self.embedding_exponent(other)
        out = other.zero
        for i, c in enumerate(a):
            if c:
                out = other.add(out, other.scale(other.zeta(i * k), c))
        return out


@lru_cache(maxsize=None)
def cyclotomic_field(L: int) -> CyclotomicField:
    return CyclotomicField(L)


# ---------------------------------------------------------------------------
# Laurent polynomials over Q(zeta_L)


class CycloLaurentScalar:
    """Finite sum of ``coeff * t^mono``; ``coeff`` in Q(zeta_L), ``mono`` in Z^nvars.

    Values are immutable; every operation returns a new scalar.  Zero
    coefficients are never stored, so equality is equality of term maps.
    """

    __slots__ = ("field", "nvars", "terms", "_hash")

    def __init__(self, field: CyclotomicField, nvars: int, terms: Mapping[tuple, tuple] | None = None):
        self.field = field
        self.nvars = nvars
        self.terms = {m: c for m, c in (terms or {}).items() if any(c)}
        self._hash = None

    # constructors
    @classmethod
    def constant(cls, field: CyclotomicField, nvars: int, c) -> "CycloLaurentScalar":
        return cls(field, nvars, {(0,) * nvars: field.scale(field.one, c)})

    @classmethod
    def monomial(cls, field: CyclotomicField, nvars: int, mono: tuple, k: int = 0) -> "CycloLaurentScalar":
        return cls(field, nvars, {tuple(mono): field.zeta(k)})

    def _like(self, terms) -> "CycloLaurentScalar":
        return CycloLaurentScalar(self.field, self.nvars, terms)

    def _coerce(self, other) -> "CycloLaurentScalar":
        if isinstance(other, CycloLaurentScalar):
            if other.field.L != self.field.L or other.nvars != self.nvars:
                raise ValueError("scalars from different rings")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloLaurentScalar.constant(self.field, self.nvars, other)
        return NotImplemented

    # predicates
    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        if len(self.terms) != 1:
            return False
        (m, c), = self.terms.items()
        return not any(m) and c == self.field.one

    def is_unit(self) -> bool:
        return len(self.terms) == 1

    # arithmetic
    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = self.field.add(out[m], c) if m in out else c
        return self._like(out)

    __radd__ = __add__

    def __neg__(self):
        return self._like({m: self.field.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_one():
            return other
        if other.is_one():
            return self
        out: dict = {}
        f = self.field
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                c = f.mul(c1, c2)
                out[m] = f.add(out[m], c) if m in out else c
        return self._like(out)

    __rmul__ = __mul__

    def inverse(self) -> "CycloLaurentScalar":
        """Inverse of a unit (a single nonzero term); other elements raise."""
        if len(self.terms) != 1:
            raise ArithmeticError(f"{self} is not a unit of the Laurent ring")
        (m, c), = self.terms.items()
        return self._like({tuple(-e for e in m): self.field.inv(c)})

    def __truediv__(self, other):
        other = self._coerce(other)
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = CycloLaurentScalar.constant(self.field, self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CycloLaurentScalar.constant(self.field, self.nvars, other)
        if not isinstance(other, CycloLaurentScalar):
            return NotImplemented
        return self.field.L == other.field.L and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field.L, self.nvars, frozenset(self.terms.items())))
        return self._hash

    def lift(self, field: CyclotomicField) -> "CycloLaurentScalar":
        """Image under Q(zeta_L) -> Q(zeta_L') for L | L'."""
        if field.L == self.field.L:
            return self
        return CycloLaurentScalar(field, self.nvars, {m: self.field.lift(c, field) for m, c in self.terms.items()})

    def to_json(self) -> list:
        return [
            [list(m), [str(c) for c in coeffs]]
            for m, coeffs in sorted(self.terms.items())
        ]

    @classmethod
    def from_json(cls, field: CyclotomicField, nvars: int, data) -> "CycloLaurentScalar":
        terms = {}
        for mono, coeffs in data:
            if len(mono) != nvars or len(coeffs) != field.degree:
                raise ValueError("scalar does not match ring shape")
            terms[tuple(int(e) for e in mono)] = tuple(_norm(Fraction(c)) for c in coeffs)
        return cls(field, nvars, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in sorted(self.terms.items()):
            coeff = "+".join(
                f"{x}" + (f"*z^{i}" if i else "") for i, x in enumerate(c) if x
            )
            mono = "".join(f"*t{j}^{e}" for j, e in enumerate(m) if e)
            parts.append(f"({coeff}){mono}")
        return " + ".join(parts)


@dataclass(frozen=True)
class ScalarRing:
    """Laurent polynomials in ``variables`` over Q(zeta_L)."""

    L: int
    variables: tuple[str, ...] = ()

    @property
    def field(self) -> CyclotomicField:
        return cyclotomic_field(self.L)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    @classmethod
    def for_spec(cls, spec: UnitGroupSpec, L: int | None = None) -> "ScalarRing":
        return cls(L or spec.torsion_lcm(), spec.infinite_names)

    def scalar(self, c) -> CycloLaurentScalar:
        return CycloLaurentScalar.constant(self.field, self.nvars, c)

    @property
    def one(self) -> CycloLaurentScalar:
        return self.scalar(1)

    @property
    def zero(self) -> CycloLaurentScalar:
        return CycloLaurentScalar(self.field, self.nvars)

    def zeta(self, k: int) -> CycloLaurentScalar:
        return CycloLaurentScalar.monomial(self.field, self.nvars, (0,) * self.nvars, k)

    def embed(self, a: UnitValue) -> CycloLaurentScalar:
        if a.spec.infinite_names != self.variables:
            raise ValueError("unit group variables do not match the scalar ring")
        return embed(a, self.L)

    def to_json(self) -> dict:
        return {"L": self.L, "variables": list(self.variables)}


@lru_cache(maxsize=None)
def _embed_cached(a: UnitValue, L: int) -> CycloLaurentScalar:
    field = cyclotomic_field(L)
    k = 0
    mono = []
    for e, o in zip(a.exps, a.spec.orders):
        if o is INFINITE:
            mono.append(e)
        else:
            k += e * (L // o)
    return CycloLaurentScalar.monomial(field, len(mono), tuple(mono), k)


def embed(a: UnitValue, L: int) -> CycloLaurentScalar:
    """Realize ``a`` in Q(zeta_L)[t^{+-1}]: order-m generators go to zeta_L^(L/m)."""
    for name, o in zip(a.spec.names, a.spec.orders):
        if o is not INFINITE and L % o:
            raise ValueError(f"L={L} is not a multiple of the order {o} of {name!r}")
    return _embed_cached(a, L)
