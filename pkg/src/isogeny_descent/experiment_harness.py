"""Deterministic sweeps over small fields, emitted as sorted JSON lines.

Each experiment returns ExperimentRecord objects. A record is fatal when two
oracles disagree or when every hypothesis of a statement holds while its
conclusion fails; emit_report sorts records by (experiment, key) so reruns
are byte-identical.
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import asdict, dataclass, field, fields
from functools import lru_cache
from typing import Iterable, Optional, Sequence

from .elliptic_curves import (
    Curve,
    CurveError,
    CurvePoint,
    TorsionMatrix,
    frobenius_matrix,
    frobenius_trace,
    group_structure,
    order_from_multiple,
    point_mul,
    subgroup_closure,
    torsion_basis,
    torsion_field_degree,
)
from .finite_fields import GF, is_prime
from .frobenius_algebra import (
    ProductVariety,
    center_data,
    is_coarsening,
    isotypic_partition,
    l_connected_components,
    linear_disjointness_check,
    tate_isogenous,
    zeta_embedding_check,
)
from .isogenies import (
    Isogeny,
    OracleDisagreement,
    Recipe,
    compose,
    endo_from_recipe,
    evaluate,
    evaluate_recipe,
    field_of_definition,
    identity_isogeny,
    isomorphism,
    prime_field_models,
    velu,
)
from .phi_checker import PhiInstance, check_phi
from .quaternions import QuadraticSubfield, Quaternion, conjugation_example_report, conjugation_map
from .weil_pairing import pairing_axiom_suite

EXPERIMENTS = ("lemma-defined", "equiv", "mink", "descent", "isotypic")


class ConfigError(ValueError):
    pass


@dataclass
class SweepConfig:
    p_min: int = 5
    p_max: int = 50
    primes: Optional[list[int]] = None
    curves_per_prime: int = 6
    ells: tuple[int, ...] = (2, 3, 5, 7)
    levels: tuple[int, ...] = (1, 2)
    ns: tuple[int, ...] = (5, 6, 7, 8, 9, 10, 11, 12, 13)
    ms: tuple[int, ...] = (2, 3)
    recipe_ns: tuple[int, ...] = (1, 2, 3)
    max_map_degree: int = 70
    pairing_levels: tuple[int, ...] = (3, 5, 7, 2, 4)
    aux_max_field: int = 10**7
    max_torsion_field: int = 10**6
    n_products: int = 200
    max_factors: int = 4
    product_levels: tuple[int, ...] = (1, 2, 3, 6)
    seed: int = 1

    def __post_init__(self):
        for name in ("ells", "levels", "ns", "ms", "recipe_ns", "pairing_levels", "product_levels"):
            setattr(self, name, tuple(int(v) for v in getattr(self, name)))
        self.validate()

    def validate(self) -> None:
        if self.p_min < 5:
            raise ConfigError("primes must be >= 5")
        if self.p_max > 200:
            raise ConfigError("p_max is capped at 200")
        if self.primes is not None:
            bad = [p for p in self.primes if not is_prime(p) or p < 5 or p > 200]
            if bad:
                raise ConfigError(f"invalid primes {bad}")
        if any(m < 1 or m > 3 for m in self.ms):
            raise ConfigError("extension degrees m must be in 1..3")
        if any(ell < 2 or ell > 13 for ell in self.ells):
            raise ConfigError("isogeny degrees must be in 2..13")
        if any(n < 2 or n > 13 for n in self.ns):
            raise ConfigError("levels n must be in 2..13")
        if self.max_factors < 1 or self.max_factors > 4:
            raise ConfigError("products have 1..4 factors")
        if self.p_max**max(self.levels + self.product_levels) > 10**12:
            raise ConfigError("level fields too large")

    @classmethod
    def from_dict(cls, data: dict) -> "SweepConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ConfigError(f"unknown config keys {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def from_json(cls, path: Optional[str]) -> "SweepConfig":
        if not path:
            return cls()
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def prime_list(self) -> list[int]:
        if self.primes is not None:
            return sorted(self.primes)
        return [p for p in range(self.p_min, self.p_max + 1) if is_prime(p)]


@dataclass
class ExperimentRecord:
    experiment: str
    key: str
    kind: str
    instance: dict
    hypotheses: dict = field(default_factory=dict)
    conclusion: Optional[bool] = None
    fatal: bool = False
    witness: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))


def emit_report(records: Iterable[ExperimentRecord], path: Optional[str], stream=None) -> dict:
    """Write sorted JSON lines to `path` and a summary table to `stream`."""
    recs = sorted(records, key=lambda r: (r.experiment, r.key, r.kind))
    if path:
        with open(path, "w") as fh:
            for r in recs:
                fh.write(r.to_json() + "\n")
    summary: dict = {}
    for r in recs:
        s = summary.setdefault(r.experiment, {"records": 0, "fatal": 0})
        s["records"] += 1
        s["fatal"] += int(r.fatal)
    if stream is not None:
        stream.write(f"{'experiment':<16}{'records':>10}{'fatal':>8}\n")
        for name in sorted(summary):
            s = summary[name]
            stream.write(f"{name:<16}{s['records']:>10}{s['fatal']:>8}\n")
        fatal = [name for name, s in sorted(summary.items()) if s["fatal"]]
        stream.write("fatal experiments: " + (", ".join(fatal) if fatal else "none") + "\n")
    return summary


def any_fatal(records: Iterable[ExperimentRecord]) -> bool:
    return any(r.fatal for r in records)


# --- shared helpers -----------------------------------------------------------

def _ck(E: Curve) -> str:
    return f"p{E.p:03d}a{E.a.c[0]:03d}b{E.b.c[0]:03d}"


def _pt(P: CurvePoint) -> list:
    return [] if P.x is None else [list(P.x.c), list(P.y.c)]


@lru_cache(maxsize=None)
def curve_family(p: int, count: int, seed: int) -> tuple[Curve, ...]:
    """y^2 = x^3 + x, y^2 = x^3 + 1, then `count` seeded random curves over F_p."""
    out = [Curve.from_ints(p, 1, 0), Curve.from_ints(p, 0, 1)]
    seen = {(1, 0), (0, 1)}
    rng = random.Random(seed * 1_000_003 + p)
    while len(out) < count + 2:
        a, b = rng.randrange(p), rng.randrange(p)
        if (a, b) in seen or (4 * a**3 + 27 * b**2) % p == 0:
            continue
        seen.add((a, b))
        out.append(Curve.from_ints(p, a, b))
    return tuple(out)


def order_subgroups(E: Curve, ell: int) -> list[CurvePoint]:
    """Canonical generators of all subgroups of prime order ell in E(F_q)."""
    gs = group_structure(E)
    P1, P2 = gs.generators
    if gs.ab % ell:
        return []
    T2 = point_mul(P2, gs.ab // ell)
    gens = [T2]
    if gs.a % ell == 0:
        T1 = point_mul(P1, gs.a // ell)
        gens = [T1] + [T2 + point_mul(T1, i) for i in range(ell)]
    out = []
    for g in gens:
        elems = [R for R in subgroup_closure([g]) if R.x is not None]
        out.append(min(elems, key=CurvePoint.key))
    return out


def cyclic_rational_subgroup(E: Curve, n: int) -> Optional[CurvePoint]:
    """Generator of a cyclic order-n subgroup of E(F_q), if the group has one."""
    gs = group_structure(E)
    if gs.ab % n:
        return None
    return point_mul(gs.generators[1], gs.ab // n)


def torsion_feasible(E: Curve, n: int, limit: int) -> bool:
    if n % E.p == 0 or n < 2:
        return False
    try:
        torsion_field_degree(E, n, max_degree=24, max_field=limit)
    except CurveError:
        return False
    return True


def _safe_fod(f: Isogeny, j: int) -> tuple[Optional[dict], Optional[str]]:
    try:
        r = field_of_definition(f, j)
    except OracleDisagreement as exc:
        return None, str(exc)
    return {"coeff": r.coeff_test, "commutation": r.commutation_test, "witnesses": r.witnesses[:3]}, None


# --- lemma-defined ---------------------------------------------------------------

def _pairing_level(f: Isogeny, cfg: SweepConfig) -> Optional[int]:
    # prefer a level prime to deg f, where compatibility is non-trivial
    ranked = sorted((n for n in cfg.pairing_levels if n % f.field.p), key=lambda n: math.gcd(n, f.degree) != 1)
    for n in ranked:
        if torsion_feasible(f.domain, n, cfg.max_torsion_field):
            return n
    return None


@lru_cache(maxsize=None)
def _basis_axioms(E: Curve, n: int) -> tuple[bool, list]:
    B = torsion_basis(E, n)
    rep = pairing_axiom_suite(E, n, B)
    return rep.ok, rep.failures


def pairing_record(f: Isogeny, cfg: SweepConfig, experiment: str, key: str) -> Optional[ExperimentRecord]:
    n = _pairing_level(f, cfg)
    if n is None:
        return None
    E = f.domain
    basis_ok, basis_fail = _basis_axioms(E, n)
    B = torsion_basis(E, n)
    rep = pairing_axiom_suite(E, n, B, [f])
    ok = basis_ok and rep.ok
    return ExperimentRecord(
        experiment, key, "pairing", {"level": n, "degree": f.degree},
        {"equivariance": rep.equivariance, "compatibility": rep.compatibility,
         "nondegenerate": rep.nondegenerate, "basis_suite": basis_ok},
        ok, not ok, {"failures": (basis_fail + rep.failures)[:3]} if not ok else {})


def _fod_records(f: Isogeny, cfg: SweepConfig, experiment: str, key: str, inst: dict,
                 expected: Optional[dict] = None) -> list[ExperimentRecord]:
    out = []
    for j in cfg.levels:
        res, err = _safe_fod(f, j)
        if err:
            out.append(ExperimentRecord(experiment, f"{key}/j{j}", "field-of-definition",
                                        dict(inst, j=j), {}, None, True, {"disagreement": err}))
            continue
        fatal = False
        wit: dict = {}
        if expected is not None and j in expected and expected[j] != res["coeff"]:
            fatal = True
            wit["expected"] = expected[j]
        if res["witnesses"]:
            wit["witnesses"] = res["witnesses"]
        out.append(ExperimentRecord(experiment, f"{key}/j{j}", "field-of-definition", dict(inst, j=j),
                                    {"coeff_test": res["coeff"], "commutation_test": res["commutation"]},
                                    res["coeff"] == res["commutation"], fatal, wit))
    return out


def run_lemma_defined_sweep(cfg: SweepConfig) -> list[ExperimentRecord]:
    recs: list[ExperimentRecord] = []
    name = "lemma-defined"
    for p in cfg.prime_list():
        for E in curve_family(p, cfg.curves_per_prime, cfg.seed):
            ck = _ck(E)
            f = identity_isogeny(E)
            recs += _fod_records(f, cfg, name, f"{ck}/id", {"curve": ck, "kind": "identity"},
                                 {j: True for j in cfg.levels})
            for ell in cfg.ells:
                if ell == p:
                    continue
                rational = order_subgroups(E, ell)
                rational_keys = set()
                for g in rational:
                    rational_keys.add(g.x.c)
                    f = velu(E, g)
                    key = f"{ck}/l{ell}/k1/{g.x.c}"
                    inst = {"curve": ck, "ell": ell, "kernel": _pt(g), "kernel_field": 1}
                    recs += _fod_records(f, cfg, name, key, inst, {j: True for j in cfg.levels})
                    pr = pairing_record(f, cfg, name, key)
                    if pr:
                        recs.append(pr)
                E2 = E.over(GF(p, 2))
                for g in order_subgroups(E2, ell):
                    if all(R.x is None or R.frobenius(1) == R for R in subgroup_closure([g])):
                        continue
                    f = velu(E, g)
                    key = f"{ck}/l{ell}/k2/{g.x.c}"
                    inst = {"curve": ck, "ell": ell, "kernel": _pt(g), "kernel_field": 2}
                    stable = all(R.frobenius(1) in set(subgroup_closure([g])) for R in [g])
                    recs += _fod_records(f, cfg, name, key, dict(inst, frobenius_stable=stable),
                                         {2: True})
                    pr = pairing_record(f, cfg, name, key)
                    if pr:
                        recs.append(pr)
            if E.a == 1 and E.b == 0 and p % 4 == 3:
                for n in cfg.recipe_ns:
                    rec = Recipe(1, n)
                    if rec.norm(p) > cfg.max_map_degree:
                        continue
                    f = endo_from_recipe(E, rec)
                    key = f"{ck}/endo/1+{n:02d}i"
                    recs += _fod_records(f, cfg, name, key, {"curve": ck, "recipe": str(rec)}, {1: False, 2: True})
                    pr = pairing_record(f, cfg, name, key)
                    if pr:
                        recs.append(pr)
    return recs


# --- equiv -------------------------------------------------------------------------

def _aux_commutation(A: Curve, f: Isogeny, cfg: SweepConfig) -> tuple[bool, list[int], bool]:
    """f o pi_A = pi_B o f on a basis of the full torsion A[a_k] inside A(F_{p^k}).

    k grows until a_k^2 exceeds 4 deg(f) p, which bounds the degree of
    f pi_A - pi_B f, so agreement there is a certificate. Returns
    (agree, [k, a_k], certified).
    """
    p = A.p
    bound = 4 * f.degree * p
    best = None
    k = 1
    while p**k <= cfg.aux_max_field:
        gs = group_structure(A.over(GF(p, k)))
        if best is None or gs.a > best[1].a:
            best = (k, gs)
        if gs.a * gs.a > bound:
            break
        k += 1
    k, gs = best
    P1, P2 = gs.generators
    basis = (P1, point_mul(P2, gs.b))
    agree = all(evaluate(f, P.frobenius(1)) == evaluate(f, P).frobenius(1) for P in basis)
    return agree, [k, gs.a], gs.a * gs.a > bound


def quaternion_conditions(p: int, recipe: Recipe) -> dict:
    """Conditions (b)-(f) for f = recipe on y^2 = x^3 + x, with Z_F = End_F = Q + Qj."""
    x = Quaternion.of(p, recipe.a, recipe.b, recipe.c, recipe.d)
    j = Quaternion.basis(p)[2]
    phi_j = conjugation_map(x, j)
    Z = QuadraticSubfield(j)
    phiZ = QuadraticSubfield(phi_j)
    e = Z.contains(phi_j)
    f_ = phiZ.contains(j)
    return {"b": phi_j == j, "c": Z == phiZ, "d": Z == phiZ, "e": e, "f": f_}


def _equiv_record(name: str, key: str, inst_data: dict, A: Curve, f: Isogeny, n: int, cfg: SweepConfig,
                  phi_ok: bool, recipe: Optional[Recipe] = None) -> ExperimentRecord:
    res, err = _safe_fod(f, 1)
    if err:
        return ExperimentRecord(name, key, "equiv", inst_data, {}, None, True, {"disagreement": err})
    a = res["coeff"]
    b, used, certified = _aux_commutation(A, f, cfg)
    conds = {"a": a, "b_torsion": b}
    hyp = {"phi": phi_ok, "n": n, "aux_torsion": used, "b_certified": certified}
    fatal = False
    conclusion = a == b
    if not conclusion and certified:
        fatal = True
    if recipe is not None:
        q = quaternion_conditions(f.domain.p, recipe)
        conds.update({k + "_quaternion": v for k, v in q.items()})
        six = [a] + [q[k] for k in "bcdef"]
        if len(set(six)) != 1:
            fatal = True
            conclusion = False
    if not phi_ok:
        fatal = False
    return ExperimentRecord(name, key, "equiv", inst_data, hyp, conclusion, fatal, {"conditions": conds})


def run_theorem_equiv_experiment(cfg: SweepConfig) -> list[ExperimentRecord]:
    recs: list[ExperimentRecord] = []
    name = "equiv"
    for p in cfg.prime_list():
        for E in curve_family(p, cfg.curves_per_prime, cfg.seed):
            ck = _ck(E)
            for n in cfg.ns:
                if n % p == 0:
                    continue
                T = cyclic_rational_subgroup(E, n)
                if T is None:
                    continue
                # F-rational Vélu isogenies of degree prime to n
                for ell in cfg.ells:
                    if ell == p or math.gcd(ell, n) != 1:
                        continue
                    for g in order_subgroups(E, ell)[:1]:
                        f = velu(E, g)
                        B = f.codomain
                        rep = check_phi(PhiInstance(E, B, 2, n, f, [T], [evaluate(f, T)]))
                        key = f"{ck}/n{n:02d}/velu{ell}"
                        recs.append(_equiv_record(name, key, {"curve": ck, "n": n, "ell": ell, "kind": "velu"},
                                                  E, f, n, cfg, rep.overall))
                # scalar 1 - n acts as the identity on n-torsion
                if (n - 1) ** 2 <= cfg.max_map_degree:
                    f = endo_from_recipe(E, Recipe(1 - n))
                    rep = check_phi(PhiInstance(E, E, 2, n, f, [T], [T]))
                    recipe = Recipe(1 - n) if (E.a == 1 and E.b == 0 and p % 4 == 3) else None
                    recs.append(_equiv_record(name, f"{ck}/n{n:02d}/scalar",
                                              {"curve": ck, "n": n, "kind": "scalar", "recipe": f"{1 - n}"},
                                              E, f, n, cfg, rep.overall, recipe))
                if E.a == 1 and E.b == 0 and p % 4 == 3:
                    rec = Recipe(1, n)
                    if rec.norm(p) <= cfg.max_map_degree:
                        f = endo_from_recipe(E, rec)
                        rep = check_phi(PhiInstance(E, E, 2, n, f, [T], [T]))
                        recs.append(_equiv_record(name, f"{ck}/n{n:02d}/one-plus-ni",
                                                  {"curve": ck, "n": n, "kind": "1+ni", "recipe": str(rec)},
                                                  E, f, n, cfg, rep.overall, rec))
        # n = 4 with a cyclic order-4 level subgroup
        E = Curve.from_ints(p, 1, 0)
        T = cyclic_rational_subgroup(E, 4)
        if p % 4 == 3 and T is not None and order_from_multiple(T, 4) == 4:
            for rec in (Recipe(1, 4), Recipe(-3)):
                f = endo_from_recipe(E, rec)
                rep = check_phi(PhiInstance(E, E, 2, 4, f, [T], [T]))
                r = _equiv_record(name, f"{_ck(E)}/n04/{'one-plus-4i' if rec.b else 'scalar'}",
                                  {"curve": _ck(E), "n": 4, "kind": "n4-cyclic", "recipe": str(rec),
                                   "level_structure": "Z/4"}, E, f, 4, cfg, rep.overall, rec)
                recs.append(r)
    return recs


# --- mink ------------------------------------------------------------------------

def automorphisms(E: Curve) -> list[tuple[str, object]]:
    """Nontrivial automorphisms as (name, unit u) acting by (x, y) -> (u^2 x, u^3 y).

    u ranges over mu_4 (j = 1728) or mu_6 (j = 0) inside F_{p^2}; -1 is always present.
    """
    K = GF(E.p, 2)
    if E.a == 1 and E.b == 0:
        order = 4
    elif E.a == 0 and E.b != 0:
        order = 6
    else:
        order = 2
    from .polynomials import Poly
    roots = Poly(K, [K(-1)] + [K.zero] * (order - 1) + [K.one]).roots()
    out = []
    for u in roots:
        if u == 1:
            continue
        k = next(d for d in range(1, order + 1) if u**d == 1)
        out.append((f"u{list(u.c)}-ord{k}", u))
    return out


def _apply_aut(P: CurvePoint, u) -> CurvePoint:
    if P.x is None:
        return P
    from .finite_fields import embed
    K = P.curve.field
    uu = embed(u, K)
    return CurvePoint(P.curve, uu * uu * P.x, uu * uu * uu * P.y)


def _companion_matrix(order: int, u_order: int, n: int) -> TorsionMatrix:
    """Abstract action of a primitive u-th root of unity in Z[zeta] on (Z[zeta]/n), basis (1, zeta)."""
    if u_order == 2:
        return TorsionMatrix.scalar(n, -1)
    if u_order == 4:
        return TorsionMatrix(n, ((0, n - 1), (1, 0)))            # x^2 + 1
    if u_order == 3:
        return TorsionMatrix(n, ((0, n - 1), (1, n - 1)))        # x^2 + x + 1
    if u_order == 6:
        return TorsionMatrix(n, ((0, n - 1), (1, 1)))            # x^2 - x + 1
    raise ValueError(f"unsupported automorphism order {u_order}")


def _aut_order_on_points(u) -> int:
    """Order of the automorphism (x, y) -> (u^2 x, u^3 y)."""
    d = 1
    while not (u ** (2 * d) == 1 and u ** (3 * d) == 1):
        d += 1
    return d


def mink_hypothesis_matrix(M: TorsionMatrix) -> bool:
    D = M - TorsionMatrix.identity(M.n)
    return (D * D) == TorsionMatrix(M.n, ((0, 0), (0, 0)))


def run_mink_rigidity_tests(cfg: SweepConfig) -> list[ExperimentRecord]:
    recs: list[ExperimentRecord] = []
    name = "mink"
    for p in cfg.prime_list():
        for E in (Curve.from_ints(p, 1, 0), Curve.from_ints(p, 0, 1)):
            ck = _ck(E)
            for aname, u in automorphisms(E):
                k_order = _aut_order_on_points(u)
                for n in cfg.ns:
                    if n < 5 or n % p == 0:
                        continue
                    key = f"{ck}/{aname}/n{n:02d}"
                    E2 = E.over(GF(p, 2))
                    if torsion_feasible(E2, n, cfg.max_torsion_field):
                        B = torsion_basis(E2, n)
                        M = TorsionMatrix.from_images(B, _apply_aut(B.P, u), _apply_aut(B.Q, u))
                        route = "curve"
                        # exhaustive: (alpha - 1) E[n] must be fixed pointwise by alpha
                        pts = B.elements()
                        image = {}
                        for R in pts:
                            D = _apply_aut(R, u) - R
                            image[D.key()] = D
                        scan = all(_apply_aut(D, u) == D for D in image.values())
                        cyclic_fixed = sum(1 for R in pts if R.x is not None and _apply_aut(R, u) == R)
                    else:
                        M = _companion_matrix(0, k_order, n)
                        route = "abstract"
                        scan = None
                        cyclic_fixed = None
                    hyp = mink_hypothesis_matrix(M)
                    agree = scan is None or scan == hyp
                    alpha_is_one = M == TorsionMatrix.identity(n)
                    fatal = (hyp and not alpha_is_one) or not agree
                    recs.append(ExperimentRecord(
                        name, key, "rigidity",
                        {"curve": ck, "automorphism": aname, "aut_order": k_order, "n": n, "route": route},
                        {"hypothesis_matrix": hyp, "hypothesis_scan": scan, "routes_agree": agree},
                        not hyp, fatal,
                        {"matrix": M.as_list(), "fixed_points": cyclic_fixed}))
        # sharpness at n = 4 with alpha = -1 and B~ = E[2]
        E = Curve.from_ints(p, 1, 0)
        if torsion_feasible(E, 4, cfg.max_torsion_field):
            B4 = torsion_basis(E, 4)
            E4 = B4.elements()
            minus_one_fixes_E2 = all(point_mul(R, 2).x is not None or (-R) == R for R in E4)
            image = {(-R - R).key() for R in E4}
            E2 = {R.key() for R in E4 if point_mul(R, 2).x is None}
            holds = image <= E2 and minus_one_fixes_E2
            e2_not_z4 = all(point_mul(R, 2).x is None for R in E4 if R.key() in E2)
            recs.append(ExperimentRecord(
                name, f"{_ck(E)}/sharpness/n04", "sharpness",
                {"curve": _ck(E), "n": 4, "alpha": -1, "B_tilde": "E[2]"},
                {"hypotheses_hold": holds, "alpha_is_one": False, "B_tilde_order": len(E2),
                 "B_tilde_exponent_2": e2_not_z4},
                holds and e2_not_z4, not (holds and e2_not_z4), {}))
    return recs


# --- descent ---------------------------------------------------------------------

def _descent_streams(A: Curve, B: Curve, m: int, n: int, phi: bool) -> tuple[dict, bool, bool]:
    """Hypothesis flags per statement, the conclusion, and whether any stream is violated."""
    counts_equal = True  # single curves: one isotypic component over F and over L
    conclusion = tate_isogenous(A, B, 1)
    base = phi and counts_equal
    hyp = {
        "phi": phi,
        "isotypic_counts_equal": counts_equal,
        "cor_m_le_3": base and n >= 5 and m <= 3,
        "zeta_embedding": base and n >= 5 and zeta_embedding_check(B, m, m),
        "prime_m_disjointness": base and n >= 5 and is_prime(m)
        and linear_disjointness_check(A, m, m) in ("contains", "disjoint"),
        "n_not_dividing_m_squared": phi and (m * m) % n != 0,
    }
    violated = any(hyp[s] for s in ("cor_m_le_3", "zeta_embedding", "prime_m_disjointness",
                                    "n_not_dividing_m_squared")) and not conclusion
    return hyp, conclusion, violated


def _descent_record(name: str, key: str, inst_data: dict, A: Curve, B: Curve, m: int, n: int,
                    f: Isogeny, At: list, Bt: list) -> ExperimentRecord:
    try:
        rep = check_phi(PhiInstance(A, B, m, n, f, At, Bt))
    except OracleDisagreement as exc:
        return ExperimentRecord(name, key, "descent", inst_data, {}, None, True, {"disagreement": str(exc)})
    hyp, conclusion, violated = _descent_streams(A, B, m, n, rep.overall)
    hyp["failed_clauses"] = rep.failed()
    wit = {"traces": [frobenius_trace(A), frobenius_trace(B)]}
    if not rep.overall:
        wit["rejection"] = {c: rep.clauses[c].witness for c in rep.failed()}
    return ExperimentRecord(name, key, "descent", inst_data, hyp, conclusion, violated, wit)


def _twist(E: Curve):
    """Quadratic twist by the smallest non-residue d and u = sqrt(d) in F_{p^2}."""
    p = E.p
    F = E.field
    d = next(v for v in range(2, p) if pow(v, (p - 1) // 2, p) == p - 1)
    T = Curve(F, E.a * d * d, E.b * d * d * d)
    u = GF(p, 2)(d).sqrt()
    return T, u


def run_descent_experiments(cfg: SweepConfig) -> list[ExperimentRecord]:
    recs: list[ExperimentRecord] = []
    name = "descent"
    for p in cfg.prime_list():
        for A in curve_family(p, cfg.curves_per_prime, cfg.seed):
            ck = _ck(A)
            for n in cfg.ns:
                if n % p == 0:
                    continue
                T = cyclic_rational_subgroup(A, n)
                if T is None:
                    continue
                for m in cfg.ms:
                    base = {"A": ck, "n": n, "m": m}
                    recs.append(_descent_record(name, f"{ck}/n{n:02d}/m{m}/id", dict(base, kind="identity", B=ck),
                                                A, A, m, n, identity_isogeny(A), [T], [T]))
                    for ell in cfg.ells:
                        if ell == p or math.gcd(ell, n) != 1:
                            continue
                        gens = order_subgroups(A, ell)
                        if not gens:
                            continue
                        f = velu(A, gens[0])
                        B = f.codomain
                        recs.append(_descent_record(
                            name, f"{ck}/n{n:02d}/m{m}/velu{ell}", dict(base, kind="velu", B=_ck(B), ell=ell),
                            A, B, m, n, f, [T], [evaluate(f, T)]))
                    if m == 2:
                        B, u = _twist(A)
                        f = isomorphism(A, u)
                        recs.append(_descent_record(
                            name, f"{ck}/n{n:02d}/m2/twist", dict(base, kind="twist", B=_ck(B)),
                            A, B, 2, n, f, [T], [evaluate(f, T)]))
                        if A.a == 1 and A.b == 0 and p % 4 == 3:
                            rec = Recipe(1, n)
                            if rec.norm(p) <= cfg.max_map_degree:
                                f = endo_from_recipe(A, rec)
                                recs.append(_descent_record(
                                    name, f"{ck}/n{n:02d}/m2/one-plus-ni", dict(base, kind="1+ni", B=ck),
                                    A, A, 2, n, f, [T], [T]))
            # isogenies over L from kernels that are not F-stable, moved to F_p-models
            for m in cfg.ms:
                if m == 1:
                    continue
                Em = A.over(GF(p, m))
                for ell in cfg.ells:
                    if ell == p:
                        continue
                    for g in order_subgroups(Em, ell):
                        closure = subgroup_closure([g])
                        keys = {R.key() for R in closure}
                        if g.frobenius(1).key() in keys:
                            continue
                        v = velu(A, g)
                        for B, u in prime_field_models(v.codomain):
                            f = compose(isomorphism(v.codomain, u), v)
                            for n in cfg.ns:
                                if n % p == 0 or math.gcd(n, ell) != 1:
                                    continue
                                T = cyclic_rational_subgroup(A, n)
                                if T is None:
                                    continue
                                recs.append(_descent_record(
                                    name, f"{ck}/n{n:02d}/m{m}/lvelu{ell}/{g.x.c}/{_ck(B)}",
                                    {"A": ck, "n": n, "m": m, "kind": "L-velu", "B": _ck(B), "ell": ell},
                                    A, B, m, n, f, [T], [evaluate(f, T)]))
    return recs


# --- isotypic --------------------------------------------------------------------

def _random_product(rng: random.Random, primes: list[int], max_factors: int) -> ProductVariety:
    p = rng.choice(primes)
    k = rng.randint(1, max_factors)
    d = next(v for v in range(2, p) if pow(v, (p - 1) // 2, p) == p - 1)
    factors = []
    for _ in range(k):
        mode = rng.random()
        if factors and mode < 0.25:
            factors.append(rng.choice(factors))
        elif factors and mode < 0.5:
            E = rng.choice(factors)
            factors.append(Curve(E.field, E.a * d * d, E.b * d * d * d))
        else:
            while True:
                a, b = rng.randrange(p), rng.randrange(p)
                if (4 * a**3 + 27 * b**2) % p:
                    break
            factors.append(Curve.from_ints(p, a, b))
    return ProductVariety(tuple(factors))


def _centralizer_records(name: str, p: int, n: int, rng: random.Random, samples: int) -> list[ExperimentRecord]:
    """On E[n] of y^2 = x^3 + x: beta commutes with the Frobenius matrix exactly when
    beta commutes with Frobenius pointwise, and the quaternion model predicts it."""
    E = Curve.from_ints(p, 1, 0)
    B = torsion_basis(E, n)
    Mpi = frobenius_matrix(E, n, B)
    out = []
    for s in range(samples):
        coeffs = [rng.randrange(-3, 4) for _ in range(4)]
        if s % 3 == 0:
            coeffs[1] = coeffs[3] = 0
        rec = Recipe(*coeffs)
        if rec.norm(p) == 0:
            continue
        imgs = [evaluate_recipe(E, rec, R) for R in (B.P, B.Q)]
        Mb = TorsionMatrix.from_images(B, *imgs)
        commute_matrix = Mb * Mpi == Mpi * Mb
        pointwise = all(evaluate_recipe(E, rec, R.frobenius(1)) == evaluate_recipe(E, rec, R).frobenius(1)
                        for R in (B.P, B.Q))
        predicted = rec.b % n == 0 and rec.d % n == 0
        ok = commute_matrix == pointwise == predicted
        out.append(ExperimentRecord(
            name, f"centralizer/p{p:03d}/n{n:02d}/{s:03d}", "centralizer",
            {"p": p, "n": n, "recipe": str(rec)},
            {"matrix_commutes": commute_matrix, "pointwise_commutes": pointwise,
             "quaternion_prediction": predicted}, ok, not ok, {}))
    return out


def run_isotypic_experiments(cfg: SweepConfig) -> list[ExperimentRecord]:
    recs: list[ExperimentRecord] = []
    name = "isotypic"
    rng = random.Random(cfg.seed * 7919 + 17)
    primes = cfg.prime_list()
    levels = cfg.product_levels
    for idx in range(cfg.n_products):
        V = _random_product(rng, primes, cfg.max_factors)
        parts = {j: isotypic_partition(V, j) for j in levels}
        failures = []
        for j1 in levels:
            for j2 in levels:
                if j2 % j1 or j1 == j2:
                    continue
                fine, coarse = parts[j1].blocks, parts[j2].blocks
                if not is_coarsening(fine, coarse):
                    failures.append(f"refinement {j1}->{j2}")
                if parts[j1].count == parts[j2].count and fine != coarse:
                    failures.append(f"count equality without partition equality {j1}->{j2}")
                try:
                    merged = l_connected_components(V, j1, j2)
                except AssertionError:
                    failures.append(f"l-connected merge {j1}->{j2}")
                    merged = None
                if merged is not None and merged != coarse:
                    failures.append(f"l-connected mismatch {j1}->{j2}")
        # any representative of a block has the same center
        for j in levels:
            for block in parts[j].blocks:
                discs = {center_data(V.factors[i], j).fundamental_disc for i in block}
                if len(discs) != 1:
                    failures.append(f"block centers differ at level {j}")
        factors = [[E.a.c[0], E.b.c[0]] for E in V.factors]
        recs.append(ExperimentRecord(
            name, f"product/{idx:04d}", "partition",
            {"p": V.p, "factors": factors},
            {"levels": list(levels)},
            not failures, bool(failures),
            {"partitions": {str(j): [list(b) for b in parts[j].blocks] for j in levels},
             "counts": [parts[j].count for j in levels], "failures": failures}))
    for p in primes:
        if p % 4 != 3:
            continue
        for n in (3, 5):
            if torsion_feasible(Curve.from_ints(p, 1, 0), n, cfg.max_torsion_field):
                recs += _centralizer_records(name, p, n, rng, 6)
    return recs


# --- golden quaternion file --------------------------------------------------------

def quat_golden_lines(primes: Sequence[int] = (11, 19, 23), ns: Sequence[int] = (5, 6, 7)) -> list[str]:
    return [json.dumps(conjugation_example_report(p, n), sort_keys=True, separators=(",", ":"))
            for p in primes for n in ns]


RUNNERS = {
    "lemma-defined": run_lemma_defined_sweep,
    "equiv": run_theorem_equiv_experiment,
    "mink": run_mink_rigidity_tests,
    "descent": run_descent_experiments,
    "isotypic": run_isotypic_experiments,
}


def run_experiment(name: str, cfg: SweepConfig) -> list[ExperimentRecord]:
    if name == "all":
        out: list[ExperimentRecord] = []
        for n in EXPERIMENTS:
            out += RUNNERS[n](cfg)
        return out
    if name not in RUNNERS:
        raise ConfigError(f"unknown experiment {name!r}")
    return RUNNERS[name](cfg)


__all__ = [
    "SweepConfig", "ExperimentRecord", "ConfigError", "emit_report", "any_fatal", "run_experiment",
    "run_lemma_defined_sweep", "run_theorem_equiv_experiment", "run_mink_rigidity_tests",
    "run_descent_experiments", "run_isotypic_experiments", "quat_golden_lines", "curve_family",
    "quaternion_conditions", "EXPERIMENTS",
]
