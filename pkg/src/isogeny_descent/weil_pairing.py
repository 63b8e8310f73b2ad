"""Weil pairing on E[n] via Miller functions, plus isotropy tests.

e_n(P, Q) = [f_P(Q + S) / f_P(S)] / [f_Q(P - S) / f_Q(-S)] with
div(f_P) = n(P) - n(O). The auxiliary point S runs through the curve's points
in canonical order until every evaluation is finite and nonzero.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from sympy import divisors

from .elliptic_curves import Curve, CurveError, CurvePoint, TorsionBasis, point_mul, subgroup_closure
from .finite_fields import FieldElement, GF, restrict


class PairingError(ValueError):
    pass


@dataclass(frozen=True)
class RootOfUnity:
    value: FieldElement
    order: int

    def __eq__(self, other) -> bool:
        if isinstance(other, RootOfUnity):
            return self.value == other.value
        return self.value == other

    def __hash__(self) -> int:
        return hash(self.value)

    def __mul__(self, other: "RootOfUnity") -> "RootOfUnity":
        return root_of_unity(self.value * other.value)

    def __pow__(self, e: int) -> "RootOfUnity":
        return root_of_unity(self.value**e)

    def is_one(self) -> bool:
        return self.value == 1


def root_of_unity(value: FieldElement, n: Optional[int] = None) -> RootOfUnity:
    if n is None:
        return RootOfUnity(value, value.multiplicative_order())
    if value**n != 1:
        raise PairingError(f"{value} is not an {n}-th root of unity")
    for d in divisors(n):
        if value**d == 1:
            return RootOfUnity(value, d)
    raise AssertionError("unreachable")


def _miller(P: CurvePoint, n: int, R: CurvePoint) -> Optional[FieldElement]:
    """f_{n,P}(R), or None when a line or vertical vanishes at R."""
    E = P.curve
    xR, yR = R.x, R.y
    num = E.field.one
    den = E.field.one
    T = P
    for bit in bin(n)[3:]:
        # doubling step
        num = num * num
        den = den * den
        if T.x is None:
            # order of P is a proper divisor of n; g_{O,O} is constant
            line = E.field.one
            T2 = T
            vert = None
        elif not T.y:
            line = xR - T.x
            T2 = E.identity
            vert = None
        else:
            lam = (T.x * T.x * 3 + E.a) / (T.y * 2)
            line = yR - T.y - lam * (xR - T.x)
            T2 = T + T
            vert = xR - T2.x if T2.x is not None else None
        if not line:
            return None
        num = num * line
        if vert is not None:
            if not vert:
                return None
            den = den * vert
        T = T2
        if bit == "1":
            if T.x is None:
                T = P
                continue
            if T.x == P.x:
                if T.y == P.y:
                    lam = (T.x * T.x * 3 + E.a) / (T.y * 2)
                    line = yR - T.y - lam * (xR - T.x)
                else:
                    line = xR - T.x
            else:
                lam = (P.y - T.y) / (P.x - T.x)
                line = yR - T.y - lam * (xR - T.x)
            T3 = T + P
            if not line:
                return None
            num = num * line
            if T3.x is not None:
                vert = xR - T3.x
                if not vert:
                    return None
                den = den * vert
            T = T3
    if T.x is not None:
        raise PairingError(f"{P} is not {n}-torsion")
    return num / den


def _pair_with_aux(P: CurvePoint, Q: CurvePoint, n: int, candidates: Iterable[CurvePoint]) -> Optional[FieldElement]:
    for S in candidates:
        if S.x is None:
            continue
        pts = (Q + S, S, P - S, -S)
        if any(R.x is None for R in pts):
            continue
        a = _miller(P, n, pts[0])
        b = _miller(P, n, pts[1]) if a is not None else None
        c = _miller(Q, n, pts[2]) if b is not None else None
        d = _miller(Q, n, pts[3]) if c is not None else None
        if d is None or not a or not b or not c or not d:
            continue
        return (a / b) / (c / d)
    return None


def weil_pairing(E: Curve, n: int, P: CurvePoint, Q: CurvePoint) -> RootOfUnity:
    if n < 1:
        raise PairingError("level must be positive")
    if n % E.p == 0:
        raise PairingError(f"level {n} divisible by the characteristic")
    if P.curve != Q.curve:
        raise PairingError("points on different curves")
    for R in (P, Q):
        if point_mul(R, n).x is not None:
            raise PairingError(f"{R} is not {n}-torsion")
    one = P.curve.field.one
    if n == 1 or P.x is None or Q.x is None or P == Q:
        return RootOfUnity(one, 1)
    val = _pair_with_aux(P, Q, n, P.curve.points())
    if val is None:
        # too few points to dodge the supports; move to a quadratic extension
        K = GF(P.curve.p, P.curve.field.k * 2)
        PK, QK = P.over(K), Q.over(K)
        val = _pair_with_aux(PK, QK, n, PK.curve.points())
        if val is None:
            raise PairingError("no admissible auxiliary point")
        val = restrict(val, P.curve.field)
    return root_of_unity(val, n)


def is_maximal_isotropic(E: Curve, n: int, subgroup: list[CurvePoint]) -> bool:
    """Order-n subgroup on which e_n vanishes identically."""
    for g in subgroup:
        if point_mul(g, n).x is not None:
            raise PairingError(f"{g} is not {n}-torsion")
    if not subgroup:
        return n == 1
    if len(subgroup_closure(subgroup)) != n:
        return False
    C = subgroup[0].curve
    return all(weil_pairing(C, n, g, h).is_one()
               for i, g in enumerate(subgroup) for h in subgroup[i + 1:])


@dataclass
class PairingAxiomReport:
    n: int
    equivariance: bool
    compatibility: bool
    nondegenerate: bool
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.equivariance and self.compatibility and self.nondegenerate


def _sample_pairs(basis: TorsionBasis) -> list[tuple[CurvePoint, CurvePoint]]:
    P, Q = basis.P, basis.Q
    return [(P, Q), (Q, P), (P + Q, Q), (point_mul(P, 2), P + Q)]


def pairing_axiom_suite(E: Curve, n: int, basis: TorsionBasis, isogenies=()) -> PairingAxiomReport:
    """Galois equivariance, isogeny compatibility e(fP, fQ) = e(P, Q)^deg f,
    and nondegeneracy on the basis. Isogenies must have domain E."""
    C = basis.curve
    failures: list[str] = []
    j = E.coefficient_degree()
    equi = True
    for R, S in _sample_pairs(basis):
        lhs = weil_pairing(C, n, R, S).value.frobenius(j)
        rhs = weil_pairing(C, n, R.frobenius(j), S.frobenius(j)).value
        if lhs != rhs:
            equi = False
            failures.append(f"equivariance fails on {R}, {S}")
    compat = True
    for f in isogenies:
        for R, S in _sample_pairs(basis):
            fR, fS = f.evaluate(R), f.evaluate(S)
            lhs = weil_pairing(fR.curve, n, fR, fS)
            rhs = weil_pairing(C, n, R, S) ** f.degree
            if lhs != rhs:
                compat = False
                failures.append(f"compatibility fails for degree {f.degree} on {R}, {S}")
    nondeg = weil_pairing(C, n, basis.P, basis.Q).order == n
    if not nondeg:
        failures.append("basis pairing is not a primitive n-th root")
    return PairingAxiomReport(n, equi, compat, nondeg, failures)


__all__ = ["RootOfUnity", "PairingError", "weil_pairing", "is_maximal_isotropic",
           "pairing_axiom_suite", "PairingAxiomReport", "root_of_unity", "CurveError"]
