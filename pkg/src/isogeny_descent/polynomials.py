"""Univariate polynomials and rational functions over an ExtField."""

from __future__ import annotations

import random
from typing import Iterable

from .finite_fields import ExtField, FieldElement, embed


class Poly:
    """Dense polynomial, coefficients low degree first, no trailing zeros."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: ExtField, coeffs: Iterable = ()):
        self.field = field
        cs = [c if isinstance(c, FieldElement) else field(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = cs

    @classmethod
    def x(cls, field: ExtField) -> "Poly":
        return cls(field, [field.zero, field.one])

    @classmethod
    def const(cls, field: ExtField, c) -> "Poly":
        return cls(field, [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({self.coeffs})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(c.c for c in self.coeffs))

    def lead(self) -> FieldElement:
        return self.coeffs[-1]

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        return Poly(self.field, [other])

    def __add__(self, other):
        o = self._lift(other)
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly(self.field, [x + y for x, y in zip(a, b)] + a[len(b):])

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = other if isinstance(other, FieldElement) else self.field(other)
            return Poly(self.field, [a * c for a in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(self.field)
        F = self.field
        if F.k == 1:
            p = F.p
            r = [0] * (len(a) + len(b) - 1)
            bi = [y.c[0] for y in b]
            for i, x in enumerate(a):
                xv = x.c[0]
                if xv:
                    for j, yv in enumerate(bi):
                        r[i + j] += xv * yv
            return Poly(F, [FieldElement(F, (v % p,)) for v in r])
        r = [F.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    r[i + j] = r[i + j] + x * y
        return Poly(F, r)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Poly":
        result, base = Poly(self.field, [self.field.one]), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        F = self.field
        r = list(self.coeffs)
        db = other.degree
        inv = other.lead().inverse()
        if len(r) - 1 < db:
            return Poly(F), self
        q = [F.zero] * (len(r) - db)
        b = other.coeffs
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] * inv
            if c:
                q[i - db] = c
                for j in range(db + 1):
                    r[i - db + j] = r[i - db + j] - c * b[j]
        return Poly(F, q), Poly(F, r[:db])

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if not self:
            return self
        inv = self.lead().inverse()
        return Poly(self.field, [c * inv for c in self.coeffs])

    def gcd(self, other: "Poly") -> "Poly":
        a, b = self, other
        while b:
            a, b = b, a % b
        return a.monic()

    def derivative(self) -> "Poly":
        return Poly(self.field, [c * i for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: FieldElement) -> FieldElement:
        F = x.field
        cs = self.coeffs if F == self.field else [embed(c, F) for c in self.coeffs]
        acc = F.zero
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly(self.field)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def powmod(self, e: int, mod: "Poly") -> "Poly":
        result = Poly(self.field, [self.field.one]) % mod
        base = self % mod
        while e:
            if e & 1:
                result = (result * base) % mod
            e >>= 1
            if e:
                base = (base * base) % mod
        return result

    def map_coeffs(self, fn) -> "Poly":
        return Poly(self.field, [fn(c) for c in self.coeffs])

    def frobenius(self, j: int) -> "Poly":
        return self.map_coeffs(lambda c: c.frobenius(j))

    def over(self, dst: ExtField) -> "Poly":
        if dst == self.field:
            return self
        return Poly(dst, [embed(c, dst) for c in self.coeffs])

    def key(self) -> tuple:
        return tuple(c.c for c in self.coeffs)

    def roots(self) -> list[FieldElement]:
        """Distinct roots in the coefficient field, sorted canonically."""
        F = self.field
        if self.degree < 1:
            return []
        f = self.monic()
        x = Poly.x(F)
        g = f.gcd(x.powmod(F.q, f) - x)
        found: list[FieldElement] = []
        rng = random.Random(0x5EED + F.q)
        stack = [g]
        while stack:
            h = stack.pop()
            if h.degree == 0:
                continue
            if h.degree == 1:
                found.append(-h.coeffs[0])
                continue
            while True:
                delta = F([rng.randrange(F.p) for _ in range(F.k)])
                w = (x + delta).powmod((F.q - 1) // 2, h) - 1
                d = h.gcd(w)
                if 0 < d.degree < h.degree:
                    stack.extend([d, h // d])
                    break
        return sorted(set(found), key=FieldElement.key)


class RationalFunction:
    """num/den in lowest terms with monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly | None = None, reduce: bool = True):
        F = num.field
        if den is None:
            den = Poly(F, [F.one])
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if reduce:
            g = num.gcd(den) if num else den.monic()
            if g.degree > 0:
                num, den = num // g, den // g
            lc = den.lead()
            if lc != 1:
                inv = lc.inverse()
                num, den = num * inv, den * inv
        self.num, self.den = num, den

    @property
    def field(self) -> ExtField:
        return self.num.field

    @classmethod
    def x(cls, field: ExtField) -> "RationalFunction":
        return cls(Poly.x(field), reduce=False)

    @classmethod
    def const(cls, field: ExtField, c) -> "RationalFunction":
        return cls(Poly(field, [c]), reduce=False)

    def __repr__(self) -> str:
        return f"({self.num.coeffs}) / ({self.den.coeffs})"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalFunction) and self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def _lift(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Poly):
            return RationalFunction(other, reduce=False)
        return RationalFunction.const(self.field, other)

    def __add__(self, other):
        o = self._lift(other)
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, reduce=False)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        # cross-cancel before multiplying keeps degrees small
        g1 = self.num.gcd(o.den) if self.num else None
        g2 = o.num.gcd(self.den) if o.num else None
        a, d2 = (self.num // g1, o.den // g1) if g1 is not None and g1.degree > 0 else (self.num, o.den)
        b, d1 = (o.num // g2, self.den // g2) if g2 is not None and g2.degree > 0 else (o.num, self.den)
        return RationalFunction(a * b, d1 * d2)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if not self.num:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RationalFunction(self.num**e, self.den**e, reduce=False)

    def __bool__(self) -> bool:
        return bool(self.num)

    def derivative(self) -> "RationalFunction":
        n, d = self.num, self.den
        return RationalFunction(n.derivative() * d - n * d.derivative(), d * d)

    def degree(self) -> int:
        return max(self.num.degree, self.den.degree)

    def __call__(self, x: FieldElement) -> FieldElement | None:
        """Value at x, or None at a pole."""
        d = self.den(x)
        if not d:
            return None
        return self.num(x) / d

    def compose(self, inner: "RationalFunction") -> "RationalFunction":
        """self(inner(x)) via homogenisation."""
        F = self.field
        deg = self.degree()
        A, B = inner.num, inner.den
        powA = [Poly(F, [F.one])]
        powB = [Poly(F, [F.one])]
        for _ in range(deg):
            powA.append(powA[-1] * A)
            powB.append(powB[-1] * B)

        def homog(poly: Poly) -> Poly:
            acc = Poly(F)
            for i, c in enumerate(poly.coeffs):
                if c:
                    acc = acc + powA[i] * powB[deg - i] * c
            return acc

        return RationalFunction(homog(self.num), homog(self.den))

    def frobenius(self, j: int) -> "RationalFunction":
        return RationalFunction(self.num.frobenius(j), self.den.frobenius(j), reduce=False)

    def over(self, dst: ExtField) -> "RationalFunction":
        return RationalFunction(self.num.over(dst), self.den.over(dst), reduce=False)

    def key(self) -> tuple:
        return (self.num.key(), self.den.key())

