"""Separable isogenies as explicit rational maps.

An isogeny is stored as (x, y) -> (r(x), y * s(x)) with r, s reduced
fractions with monic denominators. Vélu's formulas build r from a finite
kernel; endomorphisms of y^2 = x^3 + x are built from integer recipes
a + b*i + c*j + d*ij through the symbolic group law.

Two tests decide whether a map is defined over F_{p^j}: a coefficient test
(the maps are fixed by the p^j-power Frobenius) and a commutation test
(f o pi = pi' o f, certified on generators of a group large enough that a
nonzero difference could not vanish on it).
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .elliptic_curves import (
    Curve,
    CurvePoint,
    count_points_over,
    group_structure,
    point_mul,
    subgroup_closure,
    torsion_basis,
)
from .finite_fields import ExtField, FieldElement, GF, embed, sqrt_in_field
from .polynomials import Poly, RationalFunction


class IsogenyError(ValueError):
    pass


class NotRationalError(IsogenyError):
    """Domain or codomain is not defined over the requested subfield."""


class OracleDisagreement(AssertionError):
    pass


def _common_field(a: ExtField, b: ExtField) -> ExtField:
    if a.p != b.p:
        raise IsogenyError("fields of different characteristic")
    return GF(a.p, a.k * b.k // math.gcd(a.k, b.k))


def _lift_point(P: CurvePoint, K: ExtField) -> CurvePoint:
    return P if P.curve.field == K else P.over(K)


class Isogeny:
    """(x, y) -> (xmap(x), y * ymap(x)) from domain to codomain.

    Maps may be supplied directly or produced on demand by `map_builder`;
    `evaluator`, when given, evaluates points without touching the maps.
    """

    def __init__(
        self,
        domain: Curve,
        codomain: Curve,
        degree: int,
        xmap: Optional[RationalFunction] = None,
        ymap: Optional[RationalFunction] = None,
        kernel: Sequence[CurvePoint] = (),
        label: str = "",
        evaluator: Optional[Callable[[CurvePoint], CurvePoint]] = None,
        map_builder: Optional[Callable[[], tuple[RationalFunction, RationalFunction]]] = None,
    ):
        if domain.field != codomain.field:
            raise IsogenyError("domain and codomain must share a field")
        if degree < 1:
            raise IsogenyError("isogenies have positive degree")
        self.domain = domain
        self.codomain = codomain
        self.degree = degree
        self._xmap = xmap
        self._ymap = ymap
        self.kernel = tuple(kernel)
        self.label = label
        self._evaluator = evaluator
        self._map_builder = map_builder
        self._embedded: dict = {}

    def __repr__(self) -> str:
        return f"Isogeny({self.label or 'deg ' + str(self.degree)}: {self.domain} -> {self.codomain})"

    @property
    def field(self) -> ExtField:
        return self.domain.field

    def _build(self) -> None:
        if self._xmap is None:
            if self._map_builder is None:
                raise IsogenyError("isogeny has no rational maps")
            self._xmap, self._ymap = self._map_builder()

    @property
    def xmap(self) -> RationalFunction:
        self._build()
        return self._xmap

    @property
    def ymap(self) -> RationalFunction:
        self._build()
        return self._ymap

    @property
    def has_maps(self) -> bool:
        return self._xmap is not None

    def maps_over(self, K: ExtField) -> tuple[RationalFunction, RationalFunction]:
        if K == self.field:
            return self.xmap, self.ymap
        if K not in self._embedded:
            self._embedded[K] = (self.xmap.over(K), self.ymap.over(K))
        return self._embedded[K]

    def evaluate(self, P: CurvePoint) -> CurvePoint:
        return evaluate(self, P)

    def __call__(self, P: CurvePoint) -> CurvePoint:
        return evaluate(self, P)

    def conjugate(self, j: int) -> "Isogeny":
        """sigma^j applied to every coefficient of the maps and curves."""
        return Isogeny(
            self.domain.frobenius_conjugate(j), self.codomain.frobenius_conjugate(j), self.degree,
            self.xmap.frobenius(j), self.ymap.frobenius(j),
            tuple(P.frobenius(j) for P in self.kernel), f"sigma^{j}({self.label})",
        )


def evaluate(f: Isogeny, P: CurvePoint) -> CurvePoint:
    """Image of P; P may live over any extension of f's field."""
    K = _common_field(f.field, P.curve.field)
    P = _lift_point(P, K)
    if P.curve != f.domain.over(K):
        raise IsogenyError(f"{P} is not on the domain of {f}")
    target = f.codomain.over(K)
    if f._evaluator is not None:
        return f._evaluator(P)
    if P.x is None:
        return target.identity
    xm, ym = f.maps_over(K)
    X = xm(P.x)
    if X is None:
        if f.kernel and all(_lift_point(Q, K) != P for Q in f.kernel):
            raise IsogenyError(f"map denominator vanishes at {P} outside the kernel")
        return target.identity
    s = ym(P.x)
    if s is None:
        raise IsogenyError(f"y-map has a pole at {P} where the x-map does not")
    return target(X, P.y * s)


# --- constructions ---------------------------------------------------------

def identity_isogeny(E: Curve) -> Isogeny:
    F = E.field
    return Isogeny(E, E, 1, RationalFunction.x(F), RationalFunction.const(F, F.one), (E.identity,), "id")


def isomorphism(E: Curve, u: FieldElement) -> Isogeny:
    """(x, y) -> (u^2 x, u^3 y) onto y^2 = x^3 + u^4 a x + u^6 b."""
    K = _common_field(E.field, u.field)
    EK = E.over(K)
    u = embed(u, K)
    if not u:
        raise IsogenyError("isomorphism scale must be nonzero")
    u2 = u * u
    target = Curve(K, EK.a * u2 * u2, EK.b * u2 * u2 * u2)
    xmap = RationalFunction(Poly(K, [K.zero, u2]), reduce=False)
    ymap = RationalFunction.const(K, u2 * u)
    return Isogeny(EK, target, 1, xmap, ymap, (EK.identity,), "iso")


def velu(E: Curve, kernel_gen) -> Isogeny:
    """Normalized isogeny with kernel generated by `kernel_gen` (a point or a list).

    Works over the smallest field containing E's coefficients and the kernel
    points; the domain is base-changed there.
    """
    gens = list(kernel_gen) if isinstance(kernel_gen, (list, tuple)) else [kernel_gen]
    if not gens:
        return identity_isogeny(E)
    K = E.field
    for g in gens:
        K = _common_field(K, g.curve.field)
    EK = E.over(K)
    gens = [_lift_point(g, K) for g in gens]
    for g in gens:
        if g.curve != EK:
            raise IsogenyError(f"{g} is not on {E}")
    if all(g.x is None for g in gens):
        return identity_isogeny(EK)
    group = subgroup_closure(gens)
    N = len(group)
    if N % E.p == 0:
        raise IsogenyError(f"kernel order {N} divisible by the characteristic")
    for g in gens:
        if point_mul(g, N).x is not None:
            raise IsogenyError("kernel generators do not span a finite group")
    two_torsion, reps, seen = [], [], set()
    for Q in group:
        if Q.x is None or Q.key() in seen:
            continue
        seen.add(Q.key())
        seen.add((-Q).key())
        if not Q.y:
            two_torsion.append(Q)
        else:
            reps.append(Q)
    x = RationalFunction.x(K)
    X = x
    v = K.zero
    w = K.zero
    terms = []
    for Q in two_torsion + reps:
        gx = Q.x * Q.x * 3 + EK.a
        vQ = gx if not Q.y else gx * 2
        uQ = Q.y * Q.y * 4
        v = v + vQ
        w = w + uQ + Q.x * vQ
        # vQ/(x - xQ) + uQ/(x - xQ)^2 = (vQ (x - xQ) + uQ) / (x - xQ)^2
        lin = Poly(K, [-Q.x, K.one])
        terms.append((Poly(K, [uQ - vQ * Q.x, vQ]), lin * lin))
    den = Poly(K, [K.one])
    for _, d in terms:
        den = den * d
    num = Poly(K)
    for n_, d in terms:
        num = num + n_ * (den // d)
    X = x + RationalFunction(num, den)
    codomain = Curve(K, EK.a - v * 5, EK.b - w * 7)
    return Isogeny(EK, codomain, N, X, X.derivative(), tuple(group), f"velu{N}")


def compose(g: Isogeny, f: Isogeny) -> Isogeny:
    """g o f."""
    K = _common_field(f.field, g.field)
    fd, fc, gd = f.domain.over(K), f.codomain.over(K), g.domain.over(K)
    if fc != gd:
        raise IsogenyError("codomain of the first map is not the domain of the second")
    kernel = ()
    evaluator = None
    if f._evaluator is not None or g._evaluator is not None or not (f.has_maps and g.has_maps):
        evaluator = lambda P: evaluate(g, evaluate(f, P))

    def build():
        fx, fy = f.maps_over(K)
        gx, gy = g.maps_over(K)
        return gx.compose(fx), fy * gy.compose(fx)

    if evaluator is None:
        xm, ym = build()
        return Isogeny(fd, g.codomain.over(K), f.degree * g.degree, xm, ym, kernel,
                       f"{g.label}o{f.label}")
    return Isogeny(fd, g.codomain.over(K), f.degree * g.degree, kernel=kernel,
                   label=f"{g.label}o{f.label}", evaluator=evaluator, map_builder=build)


def dual_isogeny(f: Isogeny) -> Isogeny:
    """Dual of a prime-degree Vélu isogeny: Vélu on the image of a
    complementary kernel point, followed by the isomorphism back to the domain."""
    ell = f.degree
    E = f.domain
    if ell == 1:
        return identity_isogeny(f.codomain)
    basis = torsion_basis(E, ell)
    ker = {_lift_point(P, basis.field).key() for P in f.kernel}
    comp = next(R for R in (basis.P, basis.Q, basis.P + basis.Q) if R.key() not in ker)
    image = evaluate(f, comp)
    g = velu(f.codomain, image)
    back = isomorphism(g.codomain, g.field(1) / ell)
    if back.codomain != E.over(back.field):
        raise IsogenyError("dual construction did not return to the domain")
    return compose(back, g)


# --- symbolic group law on maps (x, y) -> (r(x), y s(x)) --------------------

MapPair = Optional[tuple[RationalFunction, RationalFunction]]


def _rhs(E: Curve) -> RationalFunction:
    F = E.field
    return RationalFunction(Poly(F, [E.b, E.a, F.zero, F.one]), reduce=False)


def map_add(E: Curve, m1: MapPair, m2: MapPair) -> MapPair:
    if m1 is None:
        return m2
    if m2 is None:
        return m1
    r1, s1 = m1
    r2, s2 = m2
    f = _rhs(E)
    if r1 == r2:
        if s1 == -s2:
            return None
        L = (r1 * r1 * 3 + E.a) / (f * s1 * 2)
    else:
        L = (s2 - s1) / (r2 - r1)
    x3 = f * L * L - r1 - r2
    y3 = L * (r1 - x3) - s1
    return x3, y3


def map_neg(m: MapPair) -> MapPair:
    return None if m is None else (m[0], -m[1])


def map_compose(outer: MapPair, inner: MapPair) -> MapPair:
    """outer o inner."""
    if inner is None or outer is None:
        return None
    ro, so = outer
    ri, si = inner
    return ro.compose(ri), si * so.compose(ri)


@functools.lru_cache(maxsize=256)
def _division_polys(E: Curve, top: int) -> list[tuple[Poly, int]]:
    """psi_m = F_m(x) * y^e_m for m <= top, stored as (F_m, e_m), e_m in {0, 1}."""
    K = E.field
    a, b = E.a, E.b
    f = Poly(K, [b, a, K.zero, K.one])
    one = K.one
    psi: list[tuple[Poly, int]] = [
        (Poly(K), 0),
        (Poly(K, [one]), 0),
        (Poly(K, [K(2)]), 1),
        (Poly(K, [-(a * a), b * 12, a * 6, K.zero, K(3)]), 0),
        (Poly(K, [-(b * b) * 8 - a * a * a, -(a * b) * 4, -(a * a) * 5, b * 20, a * 5, K.zero, one]) * 4, 1),
    ]

    def mul(u, v):
        (pu, eu), (pv, ev) = u, v
        e = eu + ev
        prod = pu * pv
        if e >= 2:
            prod = prod * f
            e -= 2
        return prod, e

    def sub(u, v):
        if u[1] != v[1] and u[0] and v[0]:
            raise AssertionError("mismatched y-parity in division polynomial recurrence")
        e = u[1] if u[0] else v[1]
        return u[0] - v[0], e

    def cube(u):
        return mul(mul(u, u), u)

    for m in range(5, top + 1):
        k = m // 2
        if m % 2:
            t1 = mul(psi[k + 2], cube(psi[k]))
            t2 = mul(psi[k - 1], cube(psi[k + 1]))
            psi.append(sub(t1, t2))
        else:
            t1 = mul(psi[k + 2], mul(psi[k - 1], psi[k - 1]))
            t2 = mul(psi[k - 2], mul(psi[k + 1], psi[k + 1]))
            inner = mul(psi[k], sub(t1, t2))
            # divide by 2y
            poly, e = inner
            if e == 1:
                poly, e = poly * K(2).inverse(), 0
            else:
                poly, e = (poly // f) * K(2).inverse(), 1
            psi.append((poly, e))
    return psi


def scalar_maps(E: Curve, m: int) -> MapPair:
    """Maps of multiplication by m."""
    if m == 0:
        return None
    if m < 0:
        return map_neg(scalar_maps(E, -m))
    K = E.field
    if m == 1:
        return RationalFunction.x(K), RationalFunction.const(K, K.one)
    psi = _division_polys(E, 2 * m + 1)
    f = Poly(K, [E.b, E.a, K.zero, K.one])

    def sq(u):
        pu, eu = u
        return pu * pu * (f if eu else Poly(K, [K.one]))

    pm1, pp1 = psi[m - 1], psi[m + 1]
    prod = pm1[0] * pp1[0] * (f if pm1[1] + pp1[1] == 2 else Poly(K, [K.one]))
    den = sq(psi[m])
    x = Poly.x(K)
    xmap = RationalFunction(x * den - prod, den)
    # y-map: psi_{2m} / (2 psi_m^4), psi_{2m} = y * F_{2m}
    top = _division_polys(E, 2 * m + 2)[2 * m]
    ymap = RationalFunction(top[0], den * den * K(2))
    return xmap, ymap


# --- endomorphisms of y^2 = x^3 + x ---------------------------------------

def sqrt_minus_one(p: int) -> FieldElement:
    """The canonical square root s of -1 in F_{p^2}."""
    s = sqrt_in_field(GF(p, 2)(-1))
    if s is None:
        raise IsogenyError("no square root of -1")
    return s


def _check_1728(E: Curve) -> None:
    if E.field.k != 1 or E.a != 1 or E.b != 0:
        raise IsogenyError("recipes with i need y^2 = x^3 + x over a prime field")


def _apply_i(P: CurvePoint, s: FieldElement) -> CurvePoint:
    if P.x is None:
        return P
    return CurvePoint(P.curve, -P.x, embed(s, P.curve.field) * P.y)


def _working_field(P: CurvePoint) -> ExtField:
    k = P.curve.field.k
    return GF(P.curve.p, k if k % 2 == 0 else 2 * k)


@dataclass(frozen=True)
class Recipe:
    """a + b*i + c*j + d*ij with i: (x, y) -> (-x, s y), j = p-power Frobenius."""

    a: int = 0
    b: int = 0
    c: int = 0
    d: int = 0

    def norm(self, p: int) -> int:
        return self.a**2 + self.b**2 + p * (self.c**2 + self.d**2)

    @classmethod
    def parse(cls, text: str) -> "Recipe":
        """Parse strings such as '1 + 5i', 'j', '2 - 3ij'."""
        coeffs = {"": 0, "i": 0, "j": 0, "ij": 0}
        s = text.replace(" ", "").replace("*", "")
        if not s:
            raise ValueError("empty recipe")
        if s[0] not in "+-":
            s = "+" + s
        i = 0
        while i < len(s):
            sign = -1 if s[i] == "-" else 1
            i += 1
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            num = int(s[i:j]) if j > i else None
            k = j
            while k < len(s) and s[k] in "ij":
                k += 1
            unit = s[j:k]
            if unit not in coeffs or (num is None and unit == ""):
                raise ValueError(f"bad recipe term in {text!r}")
            coeffs[unit] += sign * (1 if num is None else num)
            i = k
        return cls(coeffs[""], coeffs["i"], coeffs["j"], coeffs["ij"])

    def __str__(self) -> str:
        parts = []
        for v, u in ((self.a, ""), (self.b, "i"), (self.c, "j"), (self.d, "ij")):
            if v:
                parts.append(f"{v}{u}" if not u or abs(v) != 1 else ("-" if v < 0 else "") + u)
        return " + ".join(parts).replace("+ -", "- ") or "0"


def evaluate_recipe(E: Curve, recipe: Recipe, P: CurvePoint) -> CurvePoint:
    p = E.p
    K = _working_field(P)
    P = _lift_point(P, K)
    s = sqrt_minus_one(p)
    out = point_mul(P, recipe.a)
    if recipe.b:
        out = out + point_mul(_apply_i(P, s), recipe.b)
    if recipe.c or recipe.d:
        jP = P.frobenius(1)
        if recipe.c:
            out = out + point_mul(jP, recipe.c)
        if recipe.d:
            out = out + point_mul(_apply_i(jP, s), recipe.d)
    return out


def recipe_maps(E: Curve, recipe: Recipe) -> MapPair:
    """Rational maps over F_{p^2} of the recipe endomorphism."""
    p = E.p
    K = GF(p, 2)
    EK = E.over(K)
    s = sqrt_minus_one(p)
    x = RationalFunction.x(K)
    one = RationalFunction.const(K, K.one)
    frob_y = RationalFunction(Poly(K, [K.one, K.zero, K.zero, K.one]) ** ((p - 1) // 2), reduce=False)
    xp = RationalFunction(Poly(K, [K.zero] * p + [K.one]), reduce=False)
    units = {
        "1": (x, one),
        "i": (-x, RationalFunction.const(K, s)),
        "j": (xp, frob_y),
        "ij": (-xp, frob_y * s),
    }
    total: MapPair = None
    for coef, unit in ((recipe.a, "1"), (recipe.b, "i"), (recipe.c, "j"), (recipe.d, "ij")):
        if coef:
            total = map_add(EK, total, map_compose(scalar_maps(EK, coef), units[unit]))
    return total


def endo_from_recipe(E: Curve, recipe) -> Isogeny:
    """Endomorphism a + b*i + c*j + d*ij of y^2 = x^3 + x over F_p, p = 3 mod 4.

    Points are evaluated through the group law; the rational maps over F_{p^2}
    are built only when asked for.
    """
    if isinstance(recipe, str):
        recipe = Recipe.parse(recipe)
    if recipe.b or recipe.d:
        _check_1728(E)
    if (recipe.c or recipe.d) and E.field.k != 1:
        raise IsogenyError("Frobenius recipes need a prime-field curve")
    if (recipe.b or recipe.d) and E.p % 4 != 3:
        raise IsogenyError("recipes with i are set up for p = 3 mod 4")
    deg = recipe.norm(E.p)
    if deg == 0:
        raise IsogenyError("the zero recipe is not an isogeny")
    K = GF(E.p, 2)
    EK = E.over(K)

    def build():
        maps = recipe_maps(E, recipe)
        if maps[0].degree() != deg:
            raise IsogenyError(f"map degree {maps[0].degree()} differs from the norm {deg}")
        return maps

    f = Isogeny(EK, EK, deg, label=str(recipe),
                evaluator=lambda P: evaluate_recipe(E, recipe, P), map_builder=build)
    f.recipe = recipe
    return f


# --- field of definition ----------------------------------------------------

def coeff_field_test(f: Isogeny, j: int) -> bool:
    """Maps fixed coefficientwise by the p^j-power Frobenius."""
    if j < 1:
        raise ValueError("subfield degree must be positive")
    return f.xmap.frobenius(j) == f.xmap and f.ymap.frobenius(j) == f.ymap


def certificate_degree(f: Isogeny, j: int) -> int:
    """Smallest multiple e of the map field degree with #E(F_{p^e}) > 4 deg(f) p^j.

    Any power of Frobenius preserves F_{p^e}, so e need not be a multiple of j.
    """
    k = f.field.k
    bound = 4 * f.degree * f.field.p**j
    e = k
    while count_points_over(f.domain, e // k) <= bound:
        e += k
    return e


def commutation_witness(f: Isogeny, j: int, n: Optional[int] = None) -> Optional[CurvePoint]:
    """A point where f o pi_j and pi_j o f differ, or None when they agree.

    The difference is an isogeny of degree at most 4 deg(f) p^j or zero, so
    agreement on all of E(F_{p^e}) with more points than that proves it is
    zero; agreement on the group's generators suffices.
    """
    if not f.domain.is_defined_over(j) or not f.codomain.is_defined_over(j):
        raise NotRationalError(f"{f} has domain or codomain not defined over F_(p^{j})")
    e = certificate_degree(f, j)
    K = GF(f.field.p, e)
    gens = list(group_structure(f.domain.over(K)).generators)
    if n is not None:
        if math.gcd(n, f.field.p * f.degree) != 1:
            raise IsogenyError(f"probe level {n} not coprime to p * deg f")
        B = torsion_basis(f.domain, n)
        gens += [B.P, B.Q]
    for P in gens:
        lhs = evaluate(f, P.frobenius(j))
        rhs = evaluate(f, P).frobenius(j)
        if lhs != rhs:
            return P
    return None


def commutation_test(f: Isogeny, j: int, n: Optional[int] = None) -> bool:
    return commutation_witness(f, j, n) is None


@dataclass
class FieldOfDefinitionReport:
    j: int
    coeff_test: bool
    commutation_test: bool
    witnesses: list = field(default_factory=list)
    note: str = ""

    @property
    def defined(self) -> bool:
        return self.coeff_test and self.commutation_test


def _coeff_witness(f: Isogeny, j: int) -> list:
    out = []
    for name, rf in (("x", f.xmap), ("y", f.ymap)):
        for part, poly in (("num", rf.num), ("den", rf.den)):
            for idx, c in enumerate(poly.coeffs):
                if c.frobenius(j) != c:
                    out.append(f"{name}-{part}[{idx}]={c}")
                    break
    return out


def field_of_definition(f: Isogeny, j: int, n: Optional[int] = None) -> FieldOfDefinitionReport:
    """Run both oracles; raise OracleDisagreement if they differ."""
    coeff = coeff_field_test(f, j)
    witnesses: list = []
    note = ""
    try:
        wit = commutation_witness(f, j, n)
        comm = wit is None
        if wit is not None:
            witnesses.append(repr(wit))
    except NotRationalError as exc:
        comm = False
        note = str(exc)
        witnesses.append("codomain-or-domain-not-rational")
    if not coeff:
        witnesses.extend(_coeff_witness(f, j))
    if coeff != comm:
        raise OracleDisagreement(
            f"coefficient test {coeff} vs commutation test {comm} for {f} at level {j}")
    return FieldOfDefinitionReport(j, coeff, comm, witnesses, note)


def defined_over_levels(f: Isogeny, levels: Sequence[int]) -> list[int]:
    return [j for j in levels if field_of_definition(f, j).defined]


# --- models over the prime field -------------------------------------------

def prime_field_models(E: Curve) -> list[tuple[Curve, FieldElement]]:
    """All (E0, u) with E0 over F_p and (x, y) -> (u^2 x, u^3 y) an isomorphism E -> E0 over E's field.

    One u per model (the canonically smallest); models in canonical (a, b) order.
    """
    K = E.field
    p = E.p
    Fp = GF(p)
    j = E.j_invariant()
    if j.frobenius(1) != j:
        return []
    out = []
    for A in range(p):
        for B in range(p):
            if (4 * A**3 + 27 * B**2) % p == 0:
                continue
            E0 = Curve(Fp, A, B)
            if E0.over(K).j_invariant() != j:
                continue
            u = _scale_between(E, E0.over(K))
            if u is not None:
                out.append((E0, u))
    return out


def _scale_between(E: Curve, T: Curve) -> Optional[FieldElement]:
    K = E.field
    if E.a and E.b:
        lam = (T.b * E.a) / (E.b * T.a)
        cands = Poly(K, [-lam, K.zero, K.one]).roots()
    elif E.b:
        cands = Poly(K, [-(T.b / E.b)] + [K.zero] * 5 + [K.one]).roots()
    else:
        cands = Poly(K, [-(T.a / E.a)] + [K.zero] * 3 + [K.one]).roots()
    for u in cands:
        u2 = u * u
        if E.a * u2 * u2 == T.a and E.b * u2 * u2 * u2 == T.b:
            return u
    return None


__all__ = [
    "Isogeny", "IsogenyError", "NotRationalError", "OracleDisagreement", "FieldOfDefinitionReport",
    "Recipe", "velu", "evaluate", "compose", "identity_isogeny", "isomorphism", "dual_isogeny",
    "endo_from_recipe", "evaluate_recipe", "recipe_maps", "coeff_field_test", "commutation_test",
    "commutation_witness", "field_of_definition", "defined_over_levels", "scalar_maps",
    "prime_field_models", "sqrt_minus_one", "map_add",
]
