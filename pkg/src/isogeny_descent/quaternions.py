"""Exact arithmetic in the rational quaternion algebra with i^2 = -1, j^2 = -p, ji = -ij.

On y^2 = x^3 + x over F_p (p = 3 mod 4) the algebra is realized by
i: (x, y) -> (-x, s y) with s^2 = -1 and j the p-power Frobenius, which lets
integral quaternions act on torsion points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .elliptic_curves import Curve, TorsionMatrix, torsion_basis
from .finite_fields import is_prime
from .isogenies import Recipe, evaluate_recipe

Number = Union[int, Fraction]


class QuaternionError(ValueError):
    pass


@dataclass(frozen=True)
class Quaternion:
    """a + b i + c j + d ij."""

    p: int
    coords: tuple[Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def of(cls, p: int, a: Number = 0, b: Number = 0, c: Number = 0, d: Number = 0) -> "Quaternion":
        return cls(p, (a, b, c, d))

    @classmethod
    def basis(cls, p: int) -> tuple["Quaternion", "Quaternion", "Quaternion", "Quaternion"]:
        return (cls.of(p, 1), cls.of(p, 0, 1), cls.of(p, 0, 0, 1), cls.of(p, 0, 0, 0, 1))

    def _check(self, other: "Quaternion") -> None:
        if other.p != self.p:
            raise QuaternionError("quaternions from different algebras")

    def _lift(self, other) -> "Quaternion":
        if isinstance(other, Quaternion):
            self._check(other)
            return other
        return Quaternion.of(self.p, other)

    def __add__(self, other) -> "Quaternion":
        o = self._lift(other)
        return Quaternion(self.p, tuple(x + y for x, y in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __neg__(self) -> "Quaternion":
        return Quaternion(self.p, tuple(-x for x in self.coords))

    def __sub__(self, other) -> "Quaternion":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Quaternion":
        return self._lift(other) - self

    def __mul__(self, other) -> "Quaternion":
        if not isinstance(other, Quaternion):
            s = Fraction(other)
            return Quaternion(self.p, tuple(x * s for x in self.coords))
        return quat_mul(self, other)

    def __rmul__(self, other) -> "Quaternion":
        return self * other

    def __truediv__(self, other) -> "Quaternion":
        if isinstance(other, Quaternion):
            return self * quat_inv(other)
        return self * (1 / Fraction(other))

    def __pow__(self, e: int) -> "Quaternion":
        if e < 0:
            return quat_inv(self) ** (-e)
        out = Quaternion.of(self.p, 1)
        for _ in range(e):
            out = out * self
        return out

    def norm(self) -> Fraction:
        a, b, c, d = self.coords
        return a * a + b * b + self.p * (c * c + d * d)

    def trace(self) -> Fraction:
        return 2 * self.coords[0]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def pure(self) -> tuple[Fraction, Fraction, Fraction]:
        return self.coords[1:]

    def __str__(self) -> str:
        parts = []
        for c, unit in zip(self.coords, ("", "i", "j", "ij")):
            if c:
                parts.append(f"({c}){unit}" if unit else f"({c})")
        return " + ".join(parts) or "0"

    def as_strings(self) -> list[str]:
        return [str(c) for c in self.coords]


def quat_mul(x: Quaternion, y: Quaternion) -> Quaternion:
    x._check(y)
    p = x.p
    a1, b1, c1, d1 = x.coords
    a2, b2, c2, d2 = y.coords
    return Quaternion(p, (
        a1 * a2 - b1 * b2 - p * c1 * c2 - p * d1 * d2,
        a1 * b2 + b1 * a2 + p * c1 * d2 - p * d1 * c2,
        a1 * c2 + c1 * a2 - b1 * d2 + d1 * b2,
        a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2,
    ))


def quat_conj(x: Quaternion) -> Quaternion:
    a, b, c, d = x.coords
    return Quaternion(x.p, (a, -b, -c, -d))


def quat_inv(x: Quaternion) -> Quaternion:
    n = x.norm()
    if n == 0:
        raise QuaternionError("zero quaternion has no inverse")
    return quat_conj(x) * (1 / n)


def conjugation_map(f: Quaternion, x: Quaternion) -> Quaternion:
    """f^{-1} x f."""
    return quat_mul(quat_mul(quat_inv(f), x), f)


@dataclass(frozen=True)
class QuadraticSubfield:
    """Q + Q g for a pure quaternion g with g^2 a negative rational."""

    generator: Quaternion

    def __post_init__(self):
        g = self.generator
        sq = g * g
        if g.coords[0] != 0 or g.is_zero() or not sq.is_rational() or sq.coords[0] >= 0:
            raise QuaternionError(f"{g} does not generate an imaginary quadratic subfield")

    def contains(self, x: Quaternion) -> bool:
        """x in Q + Q g, i.e. the pure part of x is a rational multiple of g's."""
        gp, xp = self.generator.pure(), x.pure()
        return all(gp[a] * xp[b] == gp[b] * xp[a] for a in range(3) for b in range(3))

    def __eq__(self, other) -> bool:
        return isinstance(other, QuadraticSubfield) and self.contains(other.generator) and other.contains(self.generator)

    def __hash__(self) -> int:
        return hash(self.generator.p)

    def square_class(self) -> Fraction:
        """g^2 as a rational number."""
        return (self.generator * self.generator).coords[0]


def phi_j_closed_form(p: int, n: int) -> Quaternion:
    """((1 - n^2) j - 2n ij) / (n^2 + 1)."""
    den = Fraction(n * n + 1)
    return Quaternion.of(p, 0, 0, (1 - n * n) / den, -2 * n / den)


def conjugation_example_report(p: int, n: int) -> dict:
    """Conjugating j by f = 1 + n i: closed form, square, and subfield comparison."""
    if not is_prime(p) or p % 4 != 3:
        raise QuaternionError(f"p = {p} must be a prime congruent to 3 mod 4")
    if n < 0:
        raise QuaternionError("n must be non-negative")
    one, i, j, ij = Quaternion.basis(p)
    f = one + i * n
    f_inv = quat_inv(f)
    phi_j = conjugation_map(f, j)
    closed = phi_j_closed_form(p, n)
    sq = phi_j * phi_j
    Zj, Zphi = QuadraticSubfield(j), QuadraticSubfield(phi_j)
    return {
        "p": p,
        "n": n,
        "f": f.as_strings(),
        "f_inverse": f_inv.as_strings(),
        "f_inverse_matches": f_inv == Quaternion.of(p, Fraction(1, n * n + 1), Fraction(-n, n * n + 1)),
        "phi_j": phi_j.as_strings(),
        "phi_j_matches_closed_form": phi_j == closed,
        "phi_j_squared": sq.as_strings(),
        "phi_j_squared_is_minus_p": sq == Quaternion.of(p, -p),
        "ij_coordinate": str(phi_j.coords[3]),
        "subfields_distinct": Zj != Zphi,
        "both_isomorphic_to_Q_sqrt_minus_p": Zj.square_class() == -p and Zphi.square_class() == -p,
    }


def torsion_representation(p: int, n_level: int, x: Quaternion) -> TorsionMatrix:
    """Matrix of the integral quaternion x acting on the canonical basis of E[n]
    for E: y^2 = x^3 + x over F_p."""
    if x.p != p:
        raise QuaternionError("quaternion parameter differs from p")
    if not x.is_integral():
        raise QuaternionError(f"{x} is not integral")
    if n_level < 2 or n_level % 2 == 0 or n_level % p == 0:
        raise QuaternionError(f"level {n_level} must be >= 2 and coprime to 2p")
    E = Curve.from_ints(p, 1, 0)
    basis = torsion_basis(E, n_level)
    recipe = Recipe(*(int(c) for c in x.coords))
    images = [evaluate_recipe(E, recipe, R) for R in (basis.P, basis.Q)]
    return TorsionMatrix.from_images(basis, *images)


__all__ = [
    "Quaternion", "QuaternionError", "QuadraticSubfield", "quat_mul", "quat_inv", "quat_conj",
    "conjugation_map", "phi_j_closed_form", "conjugation_example_report", "torsion_representation",
]
