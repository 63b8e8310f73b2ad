"""Exact arithmetic in F_p and F_{p^k}.

Every extension is built directly over F_p as F_p[t]/(g) where g is the
lexicographically smallest monic irreducible of degree k (coefficients
compared constant term first). Elements are immutable; coefficient tuples
are stored low degree first and are always fully reduced.
"""

from __future__ import annotations

import functools
import itertools
from typing import Iterator, Optional, Sequence

MAX_DEGREE = 24
SQRT_TABLE_LIMIT = 10**4


class FieldError(ValueError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for d in (2, 3, 5, 7, 11, 13):
        if n % d == 0:
            return n == d
    d = 17
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


# --- dense polynomials over F_p as int lists, low degree first ------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a: list[int], g: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    for i in range(len(a) - 1, dg - 1, -1):
        c = a[i]
        if c:
            c = c * inv % p
            for j in range(dg + 1):
                a[i - dg + j] = (a[i - dg + j] - c * g[j]) % p
    return _trim(a[:dg])


def _pmulmod(a: list[int], b: list[int], g: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    r = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                r[i + j] += ai * bj
    return _pmod(r, g, p)


def _ppowmod(a: list[int], e: int, g: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _pmod(list(a), g, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, g, p)
        base = _pmulmod(base, base, g, p)
        e >>= 1
    return result


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim([c % p for c in a]), _trim([c % p for c in b])
    while b:
        a, b = b, _pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def _prime_factors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible_mod_p(g: Sequence[int], p: int) -> bool:
    """Rabin's test for a monic g over F_p."""
    k = len(g) - 1
    if k == 1:
        return True
    x = [0, 1]

    def x_pow_p_iter(times: int) -> list[int]:
        h = x
        for _ in range(times):
            h = _ppowmod(h, p, g, p)
        return h

    full = x_pow_p_iter(k)
    if _trim([(c - d) % p for c, d in itertools.zip_longest(full, x, fillvalue=0)]):
        return False
    for r in _prime_factors(k):
        h = x_pow_p_iter(k // r)
        diff = _trim([(c - d) % p for c, d in itertools.zip_longest(h, x, fillvalue=0)])
        if len(_pgcd(list(g), diff, p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    if k == 1:
        return (0, 1)
    # low-degree coefficient is the most significant key
    for c0 in range(1, p):
        for rest in itertools.product(range(p), repeat=k - 1):
            g = (c0,) + rest + (1,)
            if is_irreducible_mod_p(g, p):
                return g
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p}")


# --- fields ---------------------------------------------------------------

class ExtField:
    """The field F_{p^k} = F_p[t]/(modulus)."""

    __slots__ = ("p", "k", "q", "modulus", "_frob", "_sqrt_table", "_nonresidue", "__weakref__")

    def __init__(self, p: int, k: int, modulus: Sequence[int]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = tuple(modulus)
        self._frob: dict[int, tuple[tuple[int, ...], ...]] = {}
        self._sqrt_table: Optional[dict] = None
        self._nonresidue = None

    def __repr__(self) -> str:
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, ExtField) and self.p == other.p and self.k == other.k

    def __hash__(self) -> int:
        return hash((self.p, self.k))

    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field == self:
                return value
            if value.field.k == 1:
                return FieldElement(self, (value.c[0],) + (0,) * (self.k - 1))
            raise FieldError(f"cannot coerce {value.field} element into {self}")
        if isinstance(value, int):
            return FieldElement(self, (value % self.p,) + (0,) * (self.k - 1))
        coeffs = [int(c) % self.p for c in value]
        if len(coeffs) > self.k:
            coeffs = _pmod(coeffs, self.modulus, self.p)
        coeffs += [0] * (self.k - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.k)

    @property
    def one(self) -> "FieldElement":
        return self(1)

    @property
    def gen(self) -> "FieldElement":
        return self([0, 1]) if self.k > 1 else self(0)

    @property
    def order(self) -> int:
        return self.q

    def from_index(self, index: int) -> "FieldElement":
        digits = []
        for _ in range(self.k):
            index, r = divmod(index, self.p)
            digits.append(r)
        return FieldElement(self, tuple(reversed(digits)))

    def elements(self) -> Iterator["FieldElement"]:
        """All elements in canonical order (constant coefficient most significant)."""
        if self.k == 1:
            for c in range(self.p):
                yield FieldElement(self, (c,))
            return
        for coeffs in itertools.product(range(self.p), repeat=self.k):
            yield FieldElement(self, coeffs)

    def frobenius_images(self, j: int) -> tuple[tuple[int, ...], ...]:
        """Coefficient vectors of t^i under x -> x^(p^j), for i < k."""
        j %= self.k
        if j not in self._frob:
            if j == 0:
                rows = tuple(tuple(int(a == b) for a in range(self.k)) for b in range(self.k))
            else:
                tp = _ppowmod([0, 1], self.p**j, self.modulus, self.p)
                rows, cur = [], [1]
                for _ in range(self.k):
                    rows.append(tuple(cur + [0] * (self.k - len(cur))))
                    cur = _pmulmod(cur, tp, self.modulus, self.p)
                rows = tuple(rows)
            self._frob[j] = rows
        return self._frob[j]

    def sqrt_table(self) -> dict:
        if self._sqrt_table is None:
            table = {}
            for e in self.elements():
                table.setdefault((e * e).c, e)
            self._sqrt_table = table
        return self._sqrt_table

    def nonresidue(self) -> "FieldElement":
        if self._nonresidue is None:
            self._nonresidue = next(e for e in self.elements() if e and not e.is_square())
        return self._nonresidue


@functools.lru_cache(maxsize=None)
def make_ext_field(p: int, k: int = 1) -> ExtField:
    """Return F_{p^k} with its canonical modulus; identical inputs give the same object."""
    if not isinstance(p, int) or p < 3 or not is_prime(p):
        raise FieldError(f"p must be an odd prime, got {p!r}")
    if not 1 <= k <= MAX_DEGREE:
        raise FieldError(f"extension degree must lie in [1, {MAX_DEGREE}], got {k}")
    return ExtField(p, k, smallest_irreducible(p, k))


def GF(p: int, k: int = 1) -> ExtField:
    return make_ext_field(p, k)


class FieldElement:
    __slots__ = ("field", "c")

    def __init__(self, field: ExtField, c: tuple[int, ...]):
        self.field = field
        self.c = c

    # -- structural --------------------------------------------------------
    def __repr__(self) -> str:
        if self.field.k == 1:
            return str(self.c[0])
        terms = []
        for i, a in enumerate(self.c):
            if a:
                terms.append(f"{a}" if i == 0 else (f"{a}*t" if i == 1 else f"{a}*t^{i}"))
        return " + ".join(terms) if terms else "0"

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.c == other.c and self.field == other.field
        if isinstance(other, int):
            return self.c == self.field(other).c
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.k, self.c))

    def __bool__(self) -> bool:
        return any(self.c)

    def __lt__(self, other: "FieldElement") -> bool:
        return self.c < other.c

    def key(self) -> tuple[int, ...]:
        return self.c

    def to_list(self) -> list[int]:
        return list(self.c)

    def is_prime_field(self) -> bool:
        return not any(self.c[1:])

    def __int__(self) -> int:
        if not self.is_prime_field():
            raise FieldError(f"{self} is not in the prime field")
        return self.c[0]

    # -- arithmetic --------------------------------------------------------
    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is self.field or other.field == self.field:
                return other
            raise FieldError(f"mixed fields {self.field} and {other.field}")
        if isinstance(other, int):
            return self.field(other)
        raise TypeError(type(other))

    def __add__(self, other):
        o = self._coerce(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a - b) % p for a, b in zip(self.c, o.c)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple(-a % p for a in self.c))

    def __mul__(self, other):
        F = self.field
        p = F.p
        if isinstance(other, int):
            return FieldElement(F, tuple(a * other % p for a in self.c))
        o = self._coerce(other)
        k = F.k
        if k == 1:
            return FieldElement(F, (self.c[0] * o.c[0] % p,))
        a, b = self.c, o.c
        r = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    r[i + j] += ai * bj
        g = F.modulus
        for i in range(2 * k - 2, k - 1, -1):
            c = r[i] % p
            if c:
                base = i - k
                for j in range(k):
                    r[base + j] -= c * g[j]
        return FieldElement(F, tuple(x % p for x in r[:k]))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        F = self.field
        p = F.p
        if not self:
            raise ZeroDivisionError("inverse of zero in " + repr(F))
        if F.k == 1:
            return FieldElement(F, (pow(self.c[0], -1, p),))
        # extended Euclid on (modulus, self)
        r0, r1 = list(F.modulus), _trim(list(self.c))
        s0, s1 = [], [1]
        while len(r1) > 1:
            inv = pow(r1[-1], -1, p)
            quo = [0] * (len(r0) - len(r1) + 1)
            r = list(r0)
            for i in range(len(r) - 1, len(r1) - 2, -1):
                c = r[i] * inv % p
                quo[i - len(r1) + 1] = c
                if c:
                    for j, rj in enumerate(r1):
                        r[i - len(r1) + 1 + j] = (r[i - len(r1) + 1 + j] - c * rj) % p
            r = _trim(r[: len(r1) - 1])
            qs = [0] * (len(quo) + len(s1) - 1) if s1 else []
            for i, qi in enumerate(quo):
                if qi:
                    for j, sj in enumerate(s1):
                        qs[i + j] += qi * sj
            s2 = [((s0[i] if i < len(s0) else 0) - (qs[i] if i < len(qs) else 0)) % p
                  for i in range(max(len(s0), len(qs)))]
            r0, r1, s0, s1 = r1, r, s1, _trim(s2)
        inv = pow(r1[0], -1, p)
        return F([c * inv for c in s1])

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        F = self.field
        if F.k == 1:
            return FieldElement(F, (pow(self.c[0], e, F.p),))
        result = F.one
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- Galois structure ----------------------------------------------------
    def frobenius(self, j: int = 1) -> "FieldElement":
        F = self.field
        if F.k == 1 or j % F.k == 0:
            return self
        rows = F.frobenius_images(j)
        p = F.p
        out = [0] * F.k
        for a, row in zip(self.c, rows):
            if a:
                for i, r in enumerate(row):
                    out[i] += a * r
        return FieldElement(F, tuple(x % p for x in out))

    def norm(self) -> int:
        """Norm to F_p as an integer in [0, p)."""
        F = self.field
        if F.k == 1:
            return self.c[0]
        acc, conj = self, self
        for _ in range(F.k - 1):
            conj = conj.frobenius(1)
            acc = acc * conj
        return acc.c[0]

    def is_square(self) -> bool:
        if not self:
            return True
        p = self.field.p
        return pow(self.norm(), (p - 1) // 2, p) == 1

    def multiplicative_order(self) -> int:
        from sympy import factorint

        if not self:
            raise ZeroDivisionError("zero has no multiplicative order")
        order = self.field.q - 1
        for ell, e in factorint(order).items():
            for _ in range(e):
                if (self ** (order // ell)) == 1:
                    order //= ell
                else:
                    break
        return order

    def sqrt(self) -> Optional["FieldElement"]:
        return sqrt_in_field(self)


def field_frobenius(x: FieldElement, j: int) -> FieldElement:
    """x^(p^j)."""
    if j < 0:
        raise FieldError("Frobenius power must be non-negative")
    return x.frobenius(j)


def _tonelli_shanks(x: FieldElement) -> FieldElement:
    F = x.field
    q = F.q
    if q % 4 == 3:
        return x ** ((q + 1) // 4)
    s, r = 0, q - 1
    while r % 2 == 0:
        s, r = s + 1, r // 2
    z = F.nonresidue()
    m, c, t, y = s, z**r, x**r, x ** ((r + 1) // 2)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2, i = t2 * t2, i + 1
        b = c ** (1 << (m - i - 1))
        m, c = i, b * b
        t, y = t * c, y * b
    return y


def sqrt_in_field(x: FieldElement) -> Optional[FieldElement]:
    """A square root of x (the canonically smaller one) or None for non-squares."""
    if not x:
        return x
    if not x.is_square():
        return None
    F = x.field
    if F.q <= SQRT_TABLE_LIMIT:
        return F.sqrt_table()[x.c]
    y = _tonelli_shanks(x)
    ny = -y
    return y if y.c < ny.c else ny


@functools.lru_cache(maxsize=None)
def _embedding_image(p: int, a: int, b: int) -> FieldElement:
    from .polynomials import Poly

    src, dst = make_ext_field(p, a), make_ext_field(p, b)
    g = Poly(dst, [dst(c) for c in src.modulus])
    return min(g.roots(), key=FieldElement.key)


def embed(x: FieldElement, dst: ExtField) -> FieldElement:
    """Image of x under the canonical embedding F_{p^a} -> F_{p^b}, a | b.

    The generator of the smaller field is sent to the smallest root of its
    modulus in the larger field.
    """
    src = x.field
    if src == dst:
        return x
    if src.p != dst.p or dst.k % src.k:
        raise FieldError(f"no embedding {src} -> {dst}")
    if src.k == 1 or x.is_prime_field():
        return dst(x.c[0])
    rho = _embedding_image(src.p, src.k, dst.k)
    acc, power = dst.zero, dst.one
    for c in x.c:
        if c:
            acc = acc + power * c
        power = power * rho
    return acc


def restrict(x: FieldElement, dst: ExtField) -> FieldElement:
    """Inverse of embed: the element of the subfield dst mapping to x."""
    src = x.field
    if src == dst:
        return x
    if x.is_prime_field():
        return dst(x.c[0])
    if src.k % dst.k:
        raise FieldError(f"{dst} is not a subfield of {src}")
    if x.frobenius(dst.k) != x:
        raise FieldError(f"{x} does not lie in the subfield {dst}")
    rho = _embedding_image(src.p, dst.k, src.k)
    # solve sum c_i rho^i = x over F_p
    p, k = src.p, dst.k
    cols, power = [], src.one
    for _ in range(k):
        cols.append(power.c)
        power = power * rho
    sol = _solve_mod_p([list(r) for r in zip(*cols)], list(x.c), p)
    return dst(sol)


def _solve_mod_p(mat: list[list[int]], rhs: list[int], p: int) -> list[int]:
    rows, ncols = len(mat), len(mat[0])
    aug = [[v % p for v in row] + [r % p] for row, r in zip(mat, rhs)]
    pivots, r = [], 0
    for col in range(ncols):
        piv = next((i for i in range(r, rows) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = pow(aug[r][col], -1, p)
        aug[r] = [v * inv % p for v in aug[r]]
        for i in range(rows):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [(a - f * b) % p for a, b in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    sol = [0] * ncols
    for i, col in enumerate(pivots):
        sol[col] = aug[i][-1]
    return sol
