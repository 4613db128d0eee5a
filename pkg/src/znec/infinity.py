"""The points of E(Z/p^eZ) lying over (0 : 1 : 0), and their arithmetic.

Substituting Z = X^3 + A X Z^2 + B Z^3 into itself while discarding total
degree >= e (those monomials vanish when both arguments are divisible by
p) stabilizes on a single-variable polynomial f with f(X) = X^3 + A X^7 +
B X^9 + ... of degree < e.  The points over infinity are then exactly
(X : 1 : f(X)) for the p^(e-1) values X divisible by p, they form the
kernel of reduction mod p, and that kernel is cyclic generated by
(p : 1 : f(p)).  To first approximation the X-coordinate is additive:
X3 = X1 + X2 mod p^(5 min(vp X1, vp X2)).
"""

from __future__ import annotations

from .curve import Curve, CurvePoint
from .modring import RingElement, vp_int

_Poly = dict[tuple[int, int], int]


def _poly_mul(f: _Poly, g: _Poly, cap: int, pe: int) -> _Poly:
    out: _Poly = {}
    for (i1, j1), c1 in f.items():
        for (i2, j2), c2 in g.items():
            i, j = i1 + i2, j1 + j2
            if i + j > cap:
                continue
            c = (out.get((i, j), 0) + c1 * c2) % pe
            out[(i, j)] = c
    return {k: c for k, c in out.items() if c}


def _substitute_z(f: _Poly, f0: _Poly, cap: int, pe: int) -> _Poly:
    """f(x, z) -> f(x, f0(x, z)), truncated to total degree <= cap."""
    powers: dict[int, _Poly] = {0: {(0, 0): 1}}

    def f0_power(j: int) -> _Poly:
        if j not in powers:
            powers[j] = _poly_mul(f0_power(j - 1), f0, cap, pe)
        return powers[j]

    out: _Poly = {}
    for (i, j), c in f.items():
        for (i2, j2), c2 in f0_power(j).items():
            di, dj = i + i2, j2
            if di + dj > cap:
                continue
            v = (out.get((di, dj), 0) + c * c2) % pe
            out[(di, dj)] = v
    return {k: c for k, c in out.items() if c}


class InfinityPolynomial:
    """f in Z/p^eZ[x] of degree < e with E-infinity = {(X : 1 : f(X)) : p | X}."""

    __slots__ = ("curve", "p", "e", "coeffs")

    def __init__(self, curve: Curve, p: int, e: int, coeffs: tuple[int, ...]):
        self.curve = curve
        self.p = p
        self.e = e
        self.coeffs = coeffs  # coeffs[k] is the x^k coefficient, length e

    def evaluate_int(self, x: int) -> int:
        pe = self.curve.n
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % pe
        return acc

    def evaluate(self, x) -> RingElement:
        return self.curve.modulus.element(self.evaluate_int(int(x)))

    def coefficients(self) -> tuple[int, ...]:
        return self.coeffs

    def degree(self) -> int:
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k]:
                return k
        return -1

    def __repr__(self) -> str:
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c]
        body = " + ".join(terms) if terms else "0"
        return f"InfinityPolynomial({body} mod {self.curve.n})"


def compute_f(curve: Curve) -> InfinityPolynomial:
    """Iterate Z <- X^3 + A X Z^2 + B Z^3 to its stable truncation.

    Each substitution strictly raises the total degree of every monomial
    still containing z, so after finitely many rounds only pure-x terms
    of degree < e survive.  For e <= 3 everything truncates away and
    f = 0; for e = 10 the result is exactly x^3 + A x^7 + B x^9.
    """
    p, e = curve.modulus.as_prime_power()
    pe = curve.n
    cap = e - 1
    f0: _Poly = {}
    for key, c in (((3, 0), 1), ((1, 2), curve.a), ((0, 3), curve.b)):
        if sum(key) <= cap and c % pe:
            f0[key] = c % pe
    f = dict(f0)
    for _ in range(e + 1):
        if all(j == 0 for (_, j) in f):
            break
        f = _substitute_z(f, f0, cap, pe)
    else:
        raise RuntimeError("substitution failed to stabilize")  # unreachable
    coeffs = [0] * e
    for (i, _), c in f.items():
        coeffs[i] = c
    return InfinityPolynomial(curve, p, e, tuple(coeffs))


def infinity_point(curve: Curve, x: int, f: InfinityPolynomial | None = None) -> CurvePoint:
    """The point (X : 1 : f(X)) for p | X."""
    if f is None:
        f = compute_f(curve)
    x = int(x) % curve.n
    if x % f.p:
        raise ValueError(f"{x} is not divisible by {f.p}")
    return CurvePoint(curve, (x, 1, f.evaluate_int(x)))


def infinity_points(curve: Curve) -> list[CurvePoint]:
    """All p^(e-1) points over (0 : 1 : 0), in X order."""
    f = compute_f(curve)
    p, e = f.p, f.e
    return [infinity_point(curve, t * p, f) for t in range(p ** (e - 1))]


def kernel_generator(curve: Curve) -> CurvePoint:
    """(p : 1 : f(p)), a generator of ker(E(Z/p^eZ) -> E(F_p)) of order p^(e-1)."""
    f = compute_f(curve)
    if f.e == 1:
        return curve.identity()
    return infinity_point(curve, f.p, f)


def infinity_sum_check(curve: Curve, x1: int, x2: int) -> tuple[RingElement, int]:
    """Add two infinity points and compare X3 against X1 + X2.

    Returns (X3, valuation of the difference X3 - (X1 + X2)) and raises
    AssertionError if the congruence mod p^(5 min(vp X1, vp X2)) fails,
    which would mean the group law and the infinity parameterization
    disagree.
    """
    f = compute_f(curve)
    p, e = f.p, f.e
    pe = curve.n
    x1, x2 = int(x1) % pe, int(x2) % pe
    p1 = infinity_point(curve, x1, f)
    p2 = infinity_point(curve, x2, f)
    s = curve.add_xyz(p1.xyz, p2.xyz)
    if s[1] != 1:
        raise AssertionError(f"sum of infinity points left the infinity chart: {s}")
    x3 = s[0]
    bound = min(e, 5 * min(vp_int(x1, p, e), vp_int(x2, p, e)))
    val = vp_int(x3 - (x1 + x2), p, e)
    if val < bound:
        raise AssertionError(
            f"X3 = {x3} differs from X1 + X2 = {(x1 + x2) % pe} at valuation {val} < {bound}"
        )
    return curve.modulus.element(x3), val
