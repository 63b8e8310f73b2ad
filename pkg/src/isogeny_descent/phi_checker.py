"""Line-item evaluation of the level-n descent hypotheses on a curve instance.

Clauses:
  (a) A, B positive dimensional over F (always true for curves)
  (b) p does not divide n
  (c) f defined over the degree-m extension L (both oracles) with gcd(deg f, n) = 1
  (d) the polarization on B is canonical, hence F-rational
  (e) B~ is a Frobenius-stable subgroup of B[n] containing a maximal isotropic subgroup
  (f) A~ is a Frobenius-stable subgroup of A[n] and f maps it isomorphically and
      Frobenius-equivariantly onto B~
  (g) the pulled-back polarization deg(f) * canonical is F-rational
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .elliptic_curves import Curve, CurvePoint, order_from_multiple, point_mul, subgroup_closure
from .finite_fields import ExtField, GF
from .isogenies import Isogeny, Recipe, endo_from_recipe, evaluate, field_of_definition, velu
from .weil_pairing import is_maximal_isotropic

CLAUSES = ("a", "b", "c", "d", "e", "f", "g")


class PhiInstanceError(ValueError):
    pass


@dataclass
class PhiInstance:
    """A, B over F = F_p; f: A -> B over F_{p^m}; subgroup generators of A[n], B[n]."""

    A: Curve
    B: Curve
    m: int
    n: int
    f: Isogeny
    A_tilde: Sequence[CurvePoint]
    B_tilde: Sequence[CurvePoint]
    label: str = ""

    def __post_init__(self):
        if self.m < 1:
            raise PhiInstanceError("extension degree m must be >= 1")
        if self.n < 1:
            raise PhiInstanceError("level n must be >= 1")
        if self.A.field.k != 1 or self.B.field.k != 1:
            raise PhiInstanceError("A and B must be given over the prime field")
        K = self.f.field
        if self.f.domain != self.A.over(K) or self.f.codomain != self.B.over(K):
            raise PhiInstanceError("f does not map A to B")
        for P in self.A_tilde:
            if P.curve.a != _embed_coeff(self.A.a, P) or P.curve.b != _embed_coeff(self.A.b, P):
                raise PhiInstanceError(f"{P} is not on A")
        for P in self.B_tilde:
            if P.curve.a != _embed_coeff(self.B.a, P) or P.curve.b != _embed_coeff(self.B.b, P):
                raise PhiInstanceError(f"{P} is not on B")

    @property
    def p(self) -> int:
        return self.A.p


def _embed_coeff(c, P: CurvePoint):
    return P.curve.field(c.c[0])


@dataclass
class ClauseResult:
    ok: bool
    witness: str = ""


@dataclass
class PhiReport:
    clauses: dict[str, ClauseResult]
    degree: int
    details: dict = field(default_factory=dict)

    @property
    def overall(self) -> bool:
        return all(self.clauses[c].ok for c in CLAUSES)

    def failed(self) -> list[str]:
        return [c for c in CLAUSES if not self.clauses[c].ok]

    def as_dict(self) -> dict:
        return {
            "overall": self.overall,
            "degree": self.degree,
            "clauses": {c: {"ok": self.clauses[c].ok, "witness": self.clauses[c].witness} for c in CLAUSES},
            "details": self.details,
        }


def _common(points: Sequence[CurvePoint], base: ExtField) -> ExtField:
    k = base.k
    for P in points:
        k = k * P.curve.field.k // math.gcd(k, P.curve.field.k)
    return GF(base.p, k)


def _lift(P: CurvePoint, K: ExtField) -> CurvePoint:
    return P if P.curve.field == K else P.over(K)


def _stability(gens: Sequence[CurvePoint], K: ExtField) -> tuple[bool, str, bool, set]:
    """(stable, witness, pointwise rational, element keys) for <gens> over K."""
    gens = [_lift(P, K) for P in gens]
    elements = subgroup_closure(gens) if gens else []
    keys = {R.key() for R in elements}
    for P in gens:
        image = P.frobenius(1)
        if image.key() not in keys:
            return False, f"Frobenius image of {P} leaves the subgroup", False, keys
    rational = all(R.frobenius(1) == R for R in elements)
    return True, "", rational, keys


def _torsion_ok(gens: Sequence[CurvePoint], n: int) -> Optional[str]:
    for P in gens:
        if point_mul(P, n).x is not None:
            return f"{P} is not {n}-torsion"
    return None


def _find_isotropic(B: Curve, n: int, gens: Sequence[CurvePoint], K: ExtField) -> Optional[list[CurvePoint]]:
    """First order-n subgroup of <gens> that is maximal isotropic: cyclic ones first."""
    elements = subgroup_closure([_lift(P, K) for P in gens]) if gens else [B.over(K).identity]
    for R in elements:
        if R.x is not None and order_from_multiple(R, n) == n:
            return [R]
    if len(elements) <= 256:
        for a_idx, R in enumerate(elements):
            for S in elements[a_idx + 1:]:
                if R.x is None or S.x is None:
                    continue
                if len(subgroup_closure([R, S])) == n and is_maximal_isotropic(B.over(K), n, [R, S]):
                    return [R, S]
    return None


def check_phi(inst: PhiInstance) -> PhiReport:
    n, m, p, f = inst.n, inst.m, inst.p, inst.f
    res: dict[str, ClauseResult] = {}
    details: dict = {"m": m, "n": n, "p": p}

    res["a"] = ClauseResult(True, "elliptic curves have dimension 1")
    res["b"] = ClauseResult(n % p != 0, "" if n % p else f"p = {p} divides n = {n}")

    fod = field_of_definition(f, m)
    c_def = fod.defined
    c_wit = "; ".join(fod.witnesses)
    coprime = math.gcd(f.degree, n) == 1
    res["c"] = ClauseResult(c_def and coprime,
                            ("" if c_def else f"f not defined over F_(p^{m}): {c_wit}")
                            + ("" if coprime else f"gcd(deg f = {f.degree}, n) > 1"))
    res["d"] = ClauseResult(True, "canonical principal polarization on B")

    K = _common(list(inst.A_tilde) + list(inst.B_tilde), f.field)
    # (e)
    bad = _torsion_ok(inst.B_tilde, n)
    if bad:
        res["e"] = ClauseResult(False, bad)
        keys_B: set = set()
    else:
        stable, wit, rational, keys_B = _stability(inst.B_tilde, K)
        details["B_tilde_order"] = len(keys_B)
        details["B_tilde_pointwise_rational"] = rational
        if not stable:
            res["e"] = ClauseResult(False, wit)
        else:
            iso = _find_isotropic(inst.B, n, inst.B_tilde, K)
            res["e"] = ClauseResult(iso is not None,
                                    "" if iso else "no maximal isotropic subgroup inside B~")
            if iso:
                details["isotropic_generators"] = [repr(R) for R in iso]
    # (f)
    bad = _torsion_ok(inst.A_tilde, n)
    if bad:
        res["f"] = ClauseResult(False, bad)
    else:
        stable, wit, rational, keys_A = _stability(inst.A_tilde, K)
        details["A_tilde_order"] = len(keys_A)
        details["A_tilde_pointwise_rational"] = rational
        if not stable:
            res["f"] = ClauseResult(False, wit)
        else:
            elements = subgroup_closure([_lift(P, K) for P in inst.A_tilde]) if inst.A_tilde else []
            images = {evaluate(f, R).key() for R in elements}
            if len(images) != len(elements):
                res["f"] = ClauseResult(False, "f is not injective on A~")
            elif images != keys_B:
                res["f"] = ClauseResult(False, "f(A~) differs from B~")
            else:
                wit = ""
                for P in inst.A_tilde:
                    P = _lift(P, K)
                    if evaluate(f, P.frobenius(1)) != evaluate(f, P).frobenius(1):
                        wit = f"f does not commute with Frobenius at {P}"
                        break
                res["f"] = ClauseResult(not wit, wit)
    res["g"] = ClauseResult(True, f"pullback polarization is {f.degree} times the canonical one")
    return PhiReport(res, f.degree, details)


# --- JSON instances ---------------------------------------------------------

def _parse_point(E: Curve, data) -> CurvePoint:
    if data is None or data == "O":
        return E.identity
    k = data.get("k", 1)
    EK = E.over(GF(E.p, k))
    return EK(EK.field(data["x"]), EK.field(data["y"]))


def instance_from_json(data: dict) -> PhiInstance:
    """Instance document fields: p, A [a, b], B [a, b], m, n, f, A_tilde, B_tilde.

    f is {"recipe": "1 + 6i"} (endomorphism of A = B = y^2 = x^3 + x),
    {"velu": point} (kernel generator on A; B must be the codomain),
    or {"identity": true}. Points are {"x": coeffs, "y": coeffs, "k": degree}
    with coefficient lists low degree first.
    """
    if data.get("factors"):
        raise PhiInstanceError("product instances are not supported")
    p = int(data["p"])
    A = Curve.from_ints(p, *data["A"])
    B = Curve.from_ints(p, *data.get("B", data["A"]))
    fspec = data["f"]
    if "recipe" in fspec:
        f = endo_from_recipe(A, Recipe.parse(fspec["recipe"]))
    elif "velu" in fspec:
        f = velu(A, _parse_point(A, fspec["velu"]))
        if f.codomain != B.over(f.field):
            raise PhiInstanceError("B is not the Vélu codomain")
    elif fspec.get("identity"):
        from .isogenies import identity_isogeny
        f = identity_isogeny(A)
    else:
        raise PhiInstanceError(f"unknown isogeny description {fspec}")
    At = [_parse_point(A, P) for P in data.get("A_tilde", [])]
    Bt = [_parse_point(B, P) for P in data.get("B_tilde", [])]
    return PhiInstance(A, B, int(data["m"]), int(data["n"]), f, At, Bt, data.get("label", ""))


def load_instance(path: str) -> PhiInstance:
    with open(path) as fh:
        return instance_from_json(json.load(fh))


__all__ = ["PhiInstance", "PhiReport", "ClauseResult", "PhiInstanceError", "check_phi",
           "instance_from_json", "load_instance", "CLAUSES"]
