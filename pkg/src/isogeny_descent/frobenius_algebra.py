"""Frobenius centers, Tate's isogeny criterion and isotypic partitions.

For an elliptic curve over F_{p^j} the center Q[pi] is either Q (pi a
rational integer, t^2 = 4q) or the imaginary quadratic field of fundamental
discriminant D extracted from t^2 - 4q. Centers are compared by D alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from sympy import factorint, totient

from .elliptic_curves import Curve, CurveError, frobenius_trace, trace_over_extension
from .finite_fields import is_prime


def fundamental_discriminant(d: int) -> int:
    """Discriminant of Q(sqrt d) for a non-square integer d."""
    if d == 0:
        raise ValueError("zero has no fundamental discriminant")
    sign = -1 if d < 0 else 1
    core = 1
    for ell, e in factorint(abs(d)).items():
        if e % 2:
            core *= ell
    core *= sign
    if core == 1:
        raise ValueError(f"{d} is a perfect square")
    return core if core % 4 == 1 else 4 * core


def trace_at_level(E: Curve, j: int) -> int:
    """Trace of the p^j-power Frobenius of E, which must be defined over F_{p^j}."""
    if j < 1:
        raise ValueError("level must be positive")
    if not E.is_defined_over(j):
        raise CurveError(f"{E} is not defined over F_(p^{j})")
    d = E.coefficient_degree()
    base = E if d == E.field.k else E.descend(d)
    return trace_over_extension(frobenius_trace(base), base.q, j // d)


@dataclass(frozen=True)
class FrobeniusData:
    q: int
    t: int

    @property
    def charpoly(self) -> tuple[int, int, int]:
        """Coefficients of x^2 - t x + q, leading first."""
        return (1, -self.t, self.q)

    @property
    def disc(self) -> int:
        return self.t * self.t - 4 * self.q

    @property
    def is_rational(self) -> bool:
        return self.disc == 0

    @property
    def center_kind(self) -> str:
        return "rational" if self.is_rational else "imaginary-quadratic"

    @property
    def fundamental_disc(self) -> Optional[int]:
        return None if self.is_rational else fundamental_discriminant(self.disc)

    @property
    def rational_value(self) -> Optional[int]:
        return self.t // 2 if self.is_rational else None

    def as_dict(self) -> dict:
        return {"q": self.q, "t": self.t, "charpoly": list(self.charpoly), "disc": self.disc,
                "center_kind": self.center_kind, "fundamental_disc": self.fundamental_disc}


def center_data(E: Curve, j: int) -> FrobeniusData:
    return FrobeniusData(E.p**j, trace_at_level(E, j))


def tate_isogenous(E1: Curve, E2: Curve, j: int) -> bool:
    """Isogenous over F_{p^j} iff the traces there agree."""
    if E1.p != E2.p:
        return False
    return trace_at_level(E1, j) == trace_at_level(E2, j)


def center_inclusion_check(E: Curve, j_small: int, j_large: int) -> bool:
    """Q[pi_large] sits inside Q[pi_small]."""
    if j_large % j_small:
        raise ValueError(f"{j_small} does not divide {j_large}")
    small, large = center_data(E, j_small), center_data(E, j_large)
    if trace_over_extension(small.t, small.q, j_large // j_small) != large.t:
        return False
    if large.is_rational:
        return True
    return not small.is_rational and small.fundamental_disc == large.fundamental_disc


def zeta_embedding_check(E: Curve, j: int, m: int) -> bool:
    """Q(zeta_m) embeds in the center at level j."""
    return _zeta_embeds(center_data(E, j), m)


def _zeta_embeds(data: FrobeniusData, m: int) -> bool:
    if m < 1:
        raise ValueError("m must be positive")
    if m in (1, 2):
        return True
    if totient(m) > 2 or data.is_rational:
        return False
    want = -4 if m == 4 else -3
    return data.fundamental_disc == want


def linear_disjointness_check(E: Curve, j: int, m: int) -> str:
    """'contains', 'disjoint' or 'neither' for Q(zeta_m) against the center, m prime."""
    return _disjointness(center_data(E, j), m)


def _disjointness(data: FrobeniusData, m: int) -> str:
    if not is_prime(m):
        raise ValueError(f"{m} is not prime")
    if _zeta_embeds(data, m):
        return "contains"
    if data.is_rational:
        return "disjoint"
    m_star = m if m % 4 == 1 else -m
    return "neither" if data.fundamental_disc == m_star else "disjoint"


# --- products ----------------------------------------------------------------

@dataclass(frozen=True)
class ProductVariety:
    factors: tuple[Curve, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a product needs at least one factor")
        F = self.factors[0].field
        if any(E.field != F for E in self.factors):
            raise ValueError("factors must share a base field")

    @property
    def p(self) -> int:
        return self.factors[0].p


Partition = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class IsotypicPartition:
    degree: int
    blocks: Partition

    @property
    def count(self) -> int:
        return len(self.blocks)

    def representatives(self) -> tuple[int, ...]:
        return tuple(b[0] for b in self.blocks)


def _group_by(keys: Sequence) -> Partition:
    blocks: dict = {}
    for idx, key in enumerate(keys):
        blocks.setdefault(key, []).append(idx)
    return tuple(sorted((tuple(b) for b in blocks.values()), key=lambda b: b[0]))


def isotypic_partition(V: ProductVariety, j: int) -> IsotypicPartition:
    """Factor indices grouped by their trace over F_{p^j}."""
    return IsotypicPartition(j, _group_by([trace_at_level(E, j) for E in V.factors]))


def l_connected_components(V: ProductVariety, j_base: int, j_ext: int) -> Partition:
    """Merge base-level blocks whose representatives become isogenous at j_ext."""
    if j_ext % j_base:
        raise ValueError(f"{j_base} does not divide {j_ext}")
    base = isotypic_partition(V, j_base)
    keys = [trace_at_level(V.factors[b[0]], j_ext) for b in base.blocks]
    merged: dict = {}
    for key, block in zip(keys, base.blocks):
        merged.setdefault(key, []).extend(block)
    result = tuple(sorted((tuple(sorted(b)) for b in merged.values()), key=lambda b: b[0]))
    if result != isotypic_partition(V, j_ext).blocks:
        raise AssertionError("merged base blocks differ from the extension-level partition")
    return result


def is_coarsening(fine: Partition, coarse: Partition) -> bool:
    """Every block of `fine` lies inside a block of `coarse`."""
    where = {i: bi for bi, b in enumerate(coarse) for i in b}
    return all(len({where[i] for i in b}) == 1 for b in fine)


def block_center(V: ProductVariety, partition: IsotypicPartition, block: int, j: int) -> FrobeniusData:
    """Center of a block at level j, read off its lowest-index factor."""
    return center_data(V.factors[partition.blocks[block][0]], j)


__all__ = [
    "FrobeniusData", "ProductVariety", "IsotypicPartition", "fundamental_discriminant",
    "trace_at_level", "center_data", "tate_isogenous", "center_inclusion_check",
    "zeta_embedding_check", "linear_disjointness_check", "isotypic_partition",
    "l_connected_components", "is_coarsening", "block_center",
]
