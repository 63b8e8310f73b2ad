"""Independent brute-force references used to freeze expected values.

Nothing here imports the package: F_{p^2} arithmetic is done on pairs
(a, b) = a + b r with r^2 = nr for a fixed non-residue nr.
"""

from sympy import legendre_symbol
from sympy import Poly as SPoly
from sympy.abc import x as X


def count_prime_field(p, a, b):
    total = 1
    for x in range(p):
        v = (x**3 + a * x + b) % p
        total += 1 if v == 0 else 1 + legendre_symbol(v, p)
    return total


def irreducible_mod_p(coeffs_low_first, p):
    return SPoly(list(reversed(coeffs_low_first)), X, modulus=p).is_irreducible


class Fp2:
    """F_p(sqrt nr) with elements as pairs."""

    def __init__(self, p):
        self.p = p
        self.nr = next(v for v in range(2, p) if legendre_symbol(v, p) == -1)

    def mul(self, u, v):
        p, nr = self.p, self.nr
        return ((u[0] * v[0] + nr * u[1] * v[1]) % p, (u[0] * v[1] + u[1] * v[0]) % p)

    def add(self, u, v):
        return ((u[0] + v[0]) % self.p, (u[1] + v[1]) % self.p)

    def elements(self):
        return [(a, b) for a in range(self.p) for b in range(self.p)]

    def is_square(self, u):
        if u == (0, 0):
            return True
        e = (self.p**2 - 1) // 2
        r, base = (1, 0), u
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r == (1, 0)


def count_over_p2(p, a, b):
    """#E(F_{p^2}) by enumerating all x in F_{p^2}."""
    K = Fp2(p)
    total = 1
    for x in K.elements():
        x3 = K.mul(K.mul(x, x), x)
        v = K.add(K.add(x3, K.mul((a % p, 0), x)), (b % p, 0))
        if v == (0, 0):
            total += 1
        elif K.is_square(v):
            total += 2
    return total


def group_invariants_brute(p, a, b):
    """(a, ab) for E(F_p) from the census of point orders (affine arithmetic mod p)."""
    pts = [None] + [(x, y) for x in range(p) for y in range(p) if (y * y - x**3 - a * x - b) % p == 0]

    def add(P, Q):
        if P is None:
            return Q
        if Q is None:
            return P
        if P[0] == Q[0] and (P[1] + Q[1]) % p == 0:
            return None
        if P == Q:
            lam = (3 * P[0] ** 2 + a) * pow(2 * P[1], -1, p) % p
        else:
            lam = (Q[1] - P[1]) * pow(Q[0] - P[0], -1, p) % p
        x3 = (lam * lam - P[0] - Q[0]) % p
        return (x3, (lam * (P[0] - x3) - P[1]) % p)

    def order(P):
        k, R = 1, P
        while R is not None:
            R = add(R, P)
            k += 1
        return k

    N = len(pts)
    exponent = max(order(P) for P in pts)
    return N // exponent, exponent
