"""Short Weierstrass curves over finite fields.

Point counting is exhaustive (quadratic-character sum over x). Group
structure, torsion bases and Frobenius matrices are computed from point
orders against the factored group order; every returned structure carries
a certificate that is checked before it is handed out.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Iterator, Optional

import numpy as np
from sympy import factorint

from .finite_fields import ExtField, FieldElement, GF, embed, restrict, sqrt_in_field

EXHAUSTIVE_LIMIT = 10**7
EXT_EXHAUSTIVE_LIMIT = 10**5


class CurveError(ValueError):
    pass


class Curve:
    """y^2 = x^3 + a x + b over `field`."""

    __slots__ = ("field", "a", "b", "_hash")

    def __init__(self, field: ExtField, a, b):
        self.field = field
        self.a = field(a) if not isinstance(a, FieldElement) or a.field != field else a
        self.b = field(b) if not isinstance(b, FieldElement) or b.field != field else b
        if not (self.a * self.a * self.a * 4 + self.b * self.b * 27):
            raise CurveError(f"singular curve a={self.a}, b={self.b} over {field}")
        self._hash = hash((field.p, field.k, self.a.c, self.b.c))

    @classmethod
    def from_ints(cls, p: int, a, b, k: int = 1) -> "Curve":
        F = GF(p, k)
        return cls(F, F(a), F(b))

    def __repr__(self) -> str:
        return f"Curve(y^2 = x^3 + ({self.a})x + ({self.b}) over {self.field})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, Curve) and self.field == other.field
                and self.a.c == other.a.c and self.b.c == other.b.c)

    def __hash__(self) -> int:
        return self._hash

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def q(self) -> int:
        return self.field.q

    def rhs(self, x: FieldElement) -> FieldElement:
        return (x * x + self.a) * x + self.b

    def contains(self, x: FieldElement, y: FieldElement) -> bool:
        return y * y == self.rhs(x)

    def __call__(self, x, y) -> "CurvePoint":
        x, y = self.field(x), self.field(y)
        if not self.contains(x, y):
            raise CurveError(f"({x}, {y}) is not on {self}")
        return CurvePoint(self, x, y)

    @property
    def identity(self) -> "CurvePoint":
        return CurvePoint(self, None, None)

    def lift_x(self, x: FieldElement) -> Optional["CurvePoint"]:
        y = sqrt_in_field(self.rhs(x))
        if y is None:
            return None
        return CurvePoint(self, x, y)

    def points(self) -> Iterator["CurvePoint"]:
        """Identity, then affine points by ascending canonical x (y and -y)."""
        yield self.identity
        for x in self.field.elements():
            P = self.lift_x(x)
            if P is None:
                continue
            yield P
            if P.y:
                yield -P

    def sample_points(self) -> Iterator["CurvePoint"]:
        """Deterministic stream of affine points, one per admissible x."""
        for x in self.field.elements():
            P = self.lift_x(x)
            if P is not None:
                yield P

    def j_invariant(self) -> FieldElement:
        a3 = self.a * self.a * self.a * 4
        return a3 * 1728 / (a3 + self.b * self.b * 27)

    def is_defined_over(self, j: int) -> bool:
        return self.a.frobenius(j) == self.a and self.b.frobenius(j) == self.b

    def frobenius_conjugate(self, j: int) -> "Curve":
        return Curve(self.field, self.a.frobenius(j), self.b.frobenius(j))

    def over(self, K: ExtField) -> "Curve":
        return _base_change(self, K)

    def coefficient_degree(self) -> int:
        """Smallest d | k with a, b in F_{p^d}."""
        k = self.field.k
        for d in range(1, k + 1):
            if k % d == 0 and self.is_defined_over(d):
                return d
        return k

    def descend(self, d: int) -> "Curve":
        K = GF(self.p, d)
        return Curve(K, restrict(self.a, K), restrict(self.b, K))


@functools.lru_cache(maxsize=4096)
def _base_change(E: Curve, K: ExtField) -> Curve:
    if K == E.field:
        return E
    return Curve(K, embed(E.a, K), embed(E.b, K))


class CurvePoint:
    __slots__ = ("curve", "x", "y")

    def __init__(self, curve: Curve, x: Optional[FieldElement], y: Optional[FieldElement]):
        self.curve = curve
        self.x = x
        self.y = y

    @property
    def is_identity(self) -> bool:
        return self.x is None

    def __repr__(self) -> str:
        return "O" if self.x is None else f"({self.x}, {self.y})"

    def key(self) -> tuple:
        return () if self.x is None else (self.x.c, self.y.c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CurvePoint):
            return NotImplemented
        return self.curve == other.curve and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __neg__(self) -> "CurvePoint":
        if self.x is None:
            return self
        return CurvePoint(self.curve, self.x, -self.y)

    def __add__(self, other: "CurvePoint") -> "CurvePoint":
        if self.curve is not other.curve and self.curve != other.curve:
            raise CurveError("points lie on different curves")
        if self.x is None:
            return other
        if other.x is None:
            return self
        E = self.curve
        if self.x == other.x:
            if self.y != other.y or not self.y:
                return E.identity
            x2 = self.x * self.x
            lam = (x2 * 3 + E.a) / (self.y * 2)
        else:
            lam = (other.y - self.y) / (other.x - self.x)
        x3 = lam * lam - self.x - other.x
        y3 = lam * (self.x - x3) - self.y
        return CurvePoint(E, x3, y3)

    def __sub__(self, other: "CurvePoint") -> "CurvePoint":
        return self + (-other)

    def __mul__(self, n: int) -> "CurvePoint":
        return point_mul(self, n)

    __rmul__ = __mul__

    def frobenius(self, j: int = 1) -> "CurvePoint":
        """Coordinatewise x -> x^(p^j); lands on the conjugate curve."""
        if self.x is None:
            return self.curve.frobenius_conjugate(j).identity
        E = self.curve
        Ej = E if E.is_defined_over(j) else E.frobenius_conjugate(j)
        return CurvePoint(Ej, self.x.frobenius(j), self.y.frobenius(j))

    def over(self, K: ExtField) -> "CurvePoint":
        EK = self.curve.over(K)
        if self.x is None:
            return EK.identity
        return CurvePoint(EK, embed(self.x, K), embed(self.y, K))

    def order(self, multiple: Optional[int] = None) -> int:
        n = multiple if multiple is not None else count_points_over(self.curve)
        return order_from_multiple(self, n)


def point_add(P: CurvePoint, Q: CurvePoint) -> CurvePoint:
    return P + Q


def point_mul(P: CurvePoint, s: int) -> CurvePoint:
    if s < 0:
        return point_mul(-P, -s)
    if s == 0 or P.x is None:
        return P.curve.identity
    result = P.curve.identity
    addend = P
    while s:
        if s & 1:
            result = result + addend
        s >>= 1
        if s:
            addend = addend + addend
    return result


def order_from_multiple(P: CurvePoint, n: int, factors: Optional[dict] = None) -> int:
    if point_mul(P, n).x is not None:
        raise CurveError(f"{n} does not annihilate {P}")
    order = n
    for ell in (factors or factorint(n)):
        while order % ell == 0 and point_mul(P, order // ell).x is None:
            order //= ell
    return order


# --- point counting --------------------------------------------------------

def _count_prime_field(p: int, a: int, b: int) -> int:
    x = np.arange(p, dtype=np.int64)
    rhs = ((x * x % p) * x % p + a * x + b) % p
    is_sq = np.zeros(p, dtype=np.int8)
    is_sq[(x * x) % p] = 1
    chi = np.where(rhs == 0, 0, np.where(is_sq[rhs] == 1, 1, -1))
    return int(p + 1 + chi.sum())


def _count_extension(E: Curve) -> int:
    F = E.field
    total = 1
    if F.q <= 10**4:
        squares = F.sqrt_table()
        for x in F.elements():
            r = E.rhs(x)
            if not r:
                total += 1
            elif r.c in squares:
                total += 2
        return total
    for x in F.elements():
        r = E.rhs(x)
        if not r:
            total += 1
        elif r.is_square():
            total += 2
    return total


@functools.lru_cache(maxsize=None)
def _count_cached(E: Curve) -> int:
    if E.field.k == 1:
        return _count_prime_field(E.p, E.a.c[0], E.b.c[0])
    return _count_extension(E)


def count_points(E: Curve, mode: str = "auto") -> int:
    """#E(F_q) including the identity.

    mode="exhaustive" always enumerates x in F_q (refusing fields beyond the
    exhaustive limit); "auto" counts over the smallest field containing the
    coefficients and lifts with the trace recurrence.
    """
    if mode not in ("auto", "exhaustive"):
        raise ValueError(f"unknown counting mode {mode!r}")
    q, k = E.q, E.field.k
    if mode == "exhaustive" or k == 1:
        limit = EXHAUSTIVE_LIMIT if k == 1 else EXT_EXHAUSTIVE_LIMIT
        if q > limit:
            raise CurveError(f"field of size {q} too large for exhaustive counting")
        return _count_cached(E)
    d = E.coefficient_degree()
    if d == k:
        if q > EXT_EXHAUSTIVE_LIMIT:
            raise CurveError(f"field of size {q} too large for exhaustive counting")
        return _count_cached(E)
    small = E.descend(d)
    t = frobenius_trace(small)
    return q + 1 - trace_over_extension(t, small.q, k // d)


def count_points_over(E: Curve, m: int = 1) -> int:
    """#E(F_{q^m}) for E over F_q."""
    t = frobenius_trace(E)
    Q = E.q**m
    return Q + 1 - trace_over_extension(t, E.q, m)


def frobenius_trace(E: Curve) -> int:
    return E.q + 1 - count_points(E)


def trace_over_extension(t: int, q: int, m: int) -> int:
    """Trace of the q^m-power Frobenius from t_0 = 2, t_1 = t."""
    if m < 0:
        raise ValueError("extension degree must be non-negative")
    if m == 0:
        return 2
    prev, cur = 2, t
    for _ in range(m - 1):
        prev, cur = cur, t * cur - q * prev
    return cur


def hasse_ok(E: Curve) -> bool:
    t = frobenius_trace(E)
    return t * t <= 4 * E.q


def is_supersingular(E: Curve) -> bool:
    if E.field.k != 1:
        raise CurveError("supersingularity test expects a prime-field curve")
    return frobenius_trace(E) % E.p == 0


# --- group structure -------------------------------------------------------

@dataclass(frozen=True)
class GroupStructure:
    """E(F_q) = Z/a x Z/ab with generators of orders a and ab."""

    a: int
    ab: int
    generators: tuple[CurvePoint, CurvePoint]

    @property
    def b(self) -> int:
        return self.ab // self.a

    @property
    def order(self) -> int:
        return self.a * self.ab

    @property
    def invariants(self) -> tuple[int, int]:
        return (self.a, self.ab)


def _ell_exponent(P: CurvePoint, ell: int) -> int:
    s = 0
    while P.x is not None:
        P = point_mul(P, ell)
        s += 1
    return s


def _digit(T: CurvePoint, gamma: CurvePoint, ell: int) -> Optional[int]:
    """d in [0, ell) with T = d*gamma, gamma of order ell; baby-step giant-step."""
    if T.x is None:
        return 0
    m = math.isqrt(ell - 1) + 1
    baby = {}
    cur = gamma.curve.identity
    for i in range(m):
        baby.setdefault(cur.key(), i)
        cur = cur + gamma
    giant = -point_mul(gamma, m)
    cur = T
    for j in range(m + 1):
        i = baby.get(cur.key())
        if i is not None:
            d = j * m + i
            if d < ell:
                return d
        cur = cur + giant
    return None


def dlog_ell_group(T: CurvePoint, G: CurvePoint, ell: int, b: int) -> Optional[int]:
    """x mod ell^b with T = x*G for G of order ell^b, or None if T is outside <G>."""
    if b == 0:
        return 0 if T.x is None else None
    gamma = point_mul(G, ell ** (b - 1))
    x = 0
    for i in range(b):
        h = point_mul(T - point_mul(G, x), ell ** (b - 1 - i))
        d = _digit(h, gamma, ell)
        if d is None:
            return None
        x += d * ell**i
    return x if point_mul(G, x) == T else None


def _reduce_against(R: CurvePoint, G2: CurvePoint, ell: int, b: int) -> tuple[int, CurvePoint]:
    """(w, H): smallest w with ell^w R in <G2>, and H = R - u G2 of order ell^w."""
    T, w = R, 0
    while True:
        x = dlog_ell_group(T, G2, ell, b)
        if x is not None:
            u = x // ell**w
            return w, R - point_mul(G2, u)
        T = point_mul(T, ell)
        w += 1


def _sylow_generators(E: Curve, N: int, ell: int, v: int) -> tuple[CurvePoint, int, CurvePoint, int]:
    cof = N // ell**v
    seen: list[CurvePoint] = []
    G2, b = E.identity, 0
    G1, w = E.identity, 0
    for R in E.sample_points():
        R = point_mul(R, cof)
        if R.x is None:
            continue
        s = _ell_exponent(R, ell)
        seen.append(R)
        if s > b:
            G2, b = R, s
            G1, w = E.identity, 0
            for S in seen:
                if S is G2:
                    continue
                ws, H = _reduce_against(S, G2, ell, b)
                if ws > w:
                    G1, w = H, ws
        elif b + w < v:
            ws, H = _reduce_against(R, G2, ell, b)
            if ws > w:
                G1, w = H, ws
        if b + w == v:
            return G1, w, G2, b
    raise CurveError(f"could not generate the {ell}-Sylow subgroup of {E}")


@functools.lru_cache(maxsize=1024)
def group_structure(E: Curve) -> GroupStructure:
    N = count_points(E)
    P1, P2 = E.identity, E.identity
    a, ab = 1, 1
    for ell, v in sorted(factorint(N).items()):
        G1, w, G2, b = _sylow_generators(E, N, ell, v)
        P1, P2 = P1 + G1, P2 + G2
        a, ab = a * ell**w, ab * ell**b
    gs = GroupStructure(a, ab, (P1, P2))
    _check_structure(E, gs, N)
    return gs


def _check_structure(E: Curve, gs: GroupStructure, N: int) -> None:
    P1, P2 = gs.generators
    if gs.ab % gs.a or gs.a * gs.ab != N or (E.q - 1) % gs.a:
        raise CurveError(f"inconsistent structure {gs.invariants} for #E = {N}")
    if order_from_multiple(P1, gs.a) != gs.a or order_from_multiple(P2, gs.ab) != gs.ab:
        raise CurveError("generator orders do not match the structure")


# --- torsion ---------------------------------------------------------------

DEFAULT_MAX_TORSION_DEGREE = 24


def torsion_field_degree(E: Curve, n: int, max_degree: int = DEFAULT_MAX_TORSION_DEGREE,
                         max_field: Optional[int] = None) -> int:
    """Smallest k with E[n] contained in E(F_{q^k}).

    With max_field set, gives up (CurveError) once q^k exceeds it.
    """
    if n < 1:
        raise ValueError("level must be positive")
    if n % E.p == 0:
        raise CurveError(f"level {n} divisible by the characteristic {E.p}")
    if n == 1:
        return 1
    q, k0 = E.q, E.field.k
    t = frobenius_trace(E)
    for k in range(1, max_degree + 1):
        if (q**k - 1) % n:
            continue
        Nk = q**k + 1 - trace_over_extension(t, q, k)
        if Nk % (n * n):
            continue
        if k0 * k > 24 or (max_field is not None and q**k > max_field):
            break
        EK = E.over(GF(E.p, k0 * k))
        if group_structure(EK).a % n == 0:
            return k
    raise CurveError(f"E[{n}] not rational over any extension of degree <= {max_degree}")


@dataclass
class TorsionBasis:
    """Basis (P, Q) of E[n] over the field of the base-changed curve."""

    n: int
    curve: Curve
    P: CurvePoint
    Q: CurvePoint
    degree: int
    _table: dict = field(default=None, repr=False, compare=False)

    @property
    def field(self) -> ExtField:
        return self.curve.field

    def combos(self) -> dict:
        if self._table is None:
            table = {}
            row = self.curve.identity
            for i in range(self.n):
                cur = row
                for j in range(self.n):
                    table[cur.key()] = (i, j)
                    cur = cur + self.Q
                row = row + self.P
            self._table = table
        return self._table

    def coordinates(self, R: CurvePoint) -> tuple[int, int]:
        """(i, j) with R = iP + jQ."""
        if R.curve != self.curve:
            K = R.curve.field
            if K.k > self.field.k and R.x is not None:
                R = CurvePoint(self.curve, restrict(R.x, self.field), restrict(R.y, self.field))
            else:
                R = R.over(self.field)
        try:
            return self.combos()[R.key()]
        except KeyError:
            raise CurveError(f"{R} is not in E[{self.n}]") from None

    def elements(self) -> list[CurvePoint]:
        out = []
        row = self.curve.identity
        for _ in range(self.n):
            cur = row
            for _ in range(self.n):
                out.append(cur)
                cur = cur + self.Q
            row = row + self.P
        return out


def torsion_basis(E: Curve, n: int, max_degree: int = DEFAULT_MAX_TORSION_DEGREE) -> TorsionBasis:
    """Canonical basis of E[n]: P is the smallest point of exact order n, Q the
    smallest point pairing with P to a primitive n-th root of unity."""
    if n < 2:
        raise CurveError("torsion bases need level n >= 2")
    return _torsion_basis_cached(E, n, max_degree)


@functools.lru_cache(maxsize=512)
def _torsion_basis_cached(E: Curve, n: int, max_degree: int) -> TorsionBasis:
    from .weil_pairing import weil_pairing

    k = torsion_field_degree(E, n, max_degree)
    K = GF(E.p, E.field.k * k)
    EK = E.over(K)
    gs = group_structure(EK)
    P1, P2 = gs.generators
    raw = TorsionBasis(n, EK, point_mul(P1, gs.a // n), point_mul(P2, gs.ab // n), k)
    pts = sorted((R for R in raw.elements() if R.x is not None), key=CurvePoint.key)
    P = next(R for R in pts if order_from_multiple(R, n) == n)
    Q = next(R for R in pts if weil_pairing(EK, n, P, R).order == n)
    basis = TorsionBasis(n, EK, P, Q, k)
    if weil_pairing(EK, n, P, Q).order != n:
        raise CurveError("torsion basis failed the pairing certificate")
    return basis


@dataclass(frozen=True)
class TorsionMatrix:
    """Action on (P, Q): columns are the coordinates of the images of P and Q."""

    n: int
    entries: tuple[tuple[int, int], tuple[int, int]]

    @classmethod
    def from_images(cls, basis: TorsionBasis, imP: CurvePoint, imQ: CurvePoint) -> "TorsionMatrix":
        a, c = basis.coordinates(imP)
        b, d = basis.coordinates(imQ)
        return cls(basis.n, ((a, b), (c, d)))

    @classmethod
    def identity(cls, n: int) -> "TorsionMatrix":
        return cls(n, ((1, 0), (0, 1)))

    @classmethod
    def scalar(cls, n: int, s: int) -> "TorsionMatrix":
        return cls(n, ((s % n, 0), (0, s % n)))

    def __mul__(self, other):
        n = self.n
        if isinstance(other, int):
            return TorsionMatrix(n, tuple(tuple(v * other % n for v in row) for row in self.entries))
        (a, b), (c, d) = self.entries
        (e, f), (g, h) = other.entries
        return TorsionMatrix(n, (((a * e + b * g) % n, (a * f + b * h) % n),
                                 ((c * e + d * g) % n, (c * f + d * h) % n)))

    __rmul__ = __mul__

    def __add__(self, other: "TorsionMatrix") -> "TorsionMatrix":
        n = self.n
        return TorsionMatrix(n, tuple(tuple((x + y) % n for x, y in zip(r, s))
                                      for r, s in zip(self.entries, other.entries)))

    def __neg__(self) -> "TorsionMatrix":
        return self * (-1)

    def __sub__(self, other: "TorsionMatrix") -> "TorsionMatrix":
        return self + (-other)

    @property
    def trace(self) -> int:
        return (self.entries[0][0] + self.entries[1][1]) % self.n

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.entries
        return (a * d - b * c) % self.n

    def is_scalar(self) -> bool:
        (a, b), (c, d) = self.entries
        return b == 0 and c == 0 and a == d

    def __pow__(self, e: int) -> "TorsionMatrix":
        result, base = TorsionMatrix.identity(self.n), self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            base = base * base
        return result

    def apply(self, v: tuple[int, int]) -> tuple[int, int]:
        (a, b), (c, d) = self.entries
        return ((a * v[0] + b * v[1]) % self.n, (c * v[0] + d * v[1]) % self.n)

    def as_list(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def frobenius_matrix(E: Curve, n: int, basis: TorsionBasis, over: int = 1) -> TorsionMatrix:
    """Matrix of (x, y) -> (x^(p^j), y^(p^j)) on the basis, j = `over`."""
    if over < 1 or not E.is_defined_over(over):
        raise CurveError(f"{E} is not defined over F_(p^{over})")
    if basis.n != n:
        raise CurveError("basis level mismatch")
    return TorsionMatrix.from_images(basis, basis.P.frobenius(over), basis.Q.frobenius(over))


def subgroup_closure(gens: list[CurvePoint]) -> list[CurvePoint]:
    """All elements of the subgroup generated by finite-order points."""
    if not gens:
        return []
    E = gens[0].curve
    seen = {E.identity.key(): E.identity}
    frontier = [E.identity]
    while frontier:
        nxt = []
        for R in frontier:
            for g in gens:
                S = R + g
                if S.key() not in seen:
                    seen[S.key()] = S
                    nxt.append(S)
        frontier = nxt
    return sorted(seen.values(), key=CurvePoint.key)


__all__ = [
    "Curve", "CurvePoint", "CurveError", "GroupStructure", "TorsionBasis", "TorsionMatrix",
    "count_points", "count_points_over", "frobenius_trace", "trace_over_extension",
    "group_structure", "torsion_field_degree", "torsion_basis", "frobenius_matrix",
    "is_supersingular", "point_add", "point_mul", "order_from_multiple", "subgroup_closure",
    "hasse_ok",
]
