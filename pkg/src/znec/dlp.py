"""Discrete logs on anomalous curves by lifting away from the prime field.

An anomalous curve has |E(F_p)| = p, so E(F_p) is F_p in disguise; the
isomorphism only becomes computable after lifting the curve to Z/p^2Z.
If the lifted group is cyclic of order p^2, Theta(P) = X/p mod p (where
pP = (X : 1 : f(X))) is a surjective homomorphism with kernel exactly
the kernel of reduction, so N = Theta(Q^)/Theta(P^) solves Q = N P with
O(log p) curve additions.  A lift has one chance in p of being split
instead (Theta identically 0); perturbing a coefficient by p gives an
independent retry without changing anything mod p.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import Curve, CurvePoint, new_curve
from .errors import (
    LiftRetryExhausted,
    NotAnomalous,
    NotCyclic,
    PointNotOnCurve,
    ThetaZero,
)
from .modring import Modulus, RingElement, vp_int


def _as_triple(c: Curve, point) -> tuple[int, int, int]:
    if isinstance(point, CurvePoint):
        xyz = point.xyz
    else:
        xyz = point.triple() if hasattr(point, "triple") else tuple(int(v) % c.n for v in point)
    if not c.on_curve_triple(xyz):
        raise PointNotOnCurve(f"{xyz} does not satisfy {c!r}")
    return xyz


def lift_point(c: Curve, point, e: int, target: Curve | None = None) -> CurvePoint:
    """Hensel-lift a point of E(F_p) to the given target curve mod p^e.

    The X-coordinate stays put and Y is corrected by Newton iteration
    Y <- Y - (Y^2 - rhs(X)) / (2Y) at doubling precision; 2Y is a unit
    whenever Y is nonzero mod p.  For 2-torsion points (Y = 0) the roles
    swap and X is corrected instead, 3X^2 + A being a unit there on any
    nonsingular curve.  O lifts to O.  `target` may be any curve mod p^e
    reducing to c; by default the coefficients are reused verbatim.
    """
    p, k = c.modulus.as_prime_power()
    if k != 1:
        raise ValueError(f"lift source must be mod a prime, got {c.n}")
    if e < 1:
        raise ValueError(f"target exponent must be >= 1, got {e}")
    if target is None:
        target = new_curve(c.a, c.b, p**e, factorization=((p, e),)) if e > 1 else c
    else:
        tp, te = target.modulus.as_prime_power()
        if tp != p or te != e or (target.a - c.a) % p or (target.b - c.b) % p:
            raise ValueError(f"{target!r} is not a mod {p}^{e} lift of {c!r}")
    xyz = _as_triple(c, point)
    if xyz == (0, 1, 0):
        return target.identity()
    x, y = xyz[0], xyz[1]
    prec = 1
    if y % p == 0:
        # 2-torsion: solve X^3 + AX + B = Y^2 for X, Y pinned
        while prec < e:
            prec = min(2 * prec, e)
            m = p**prec
            fx = (x * x * x + target.a * x + target.b - y * y) % m
            x = (x - fx * pow(3 * x * x + target.a, -1, m)) % m
    else:
        rhs = lambda m: (x * x * x + target.a * x + target.b) % m
        while prec < e:
            prec = min(2 * prec, e)
            m = p**prec
            y = (y - (y * y - rhs(m)) * pow(2 * y, -1, m)) % m
    return target.point(x, y)


def theta(c: Curve, point) -> RingElement:
    """Theta(P) = X / p^(e-1) mod p, where p^(e-1) P = (X : 1 : f(X)).

    Defined on curves mod p^e (e >= 2) whose group is cyclic of order
    p^e; there it is a surjective homomorphism onto F_p with kernel
    <(p : 1 : f(p))>.  On a split anomalous curve the multiple is always
    O and Theta degenerates to 0.  If the multiple lands on an affine
    point (which means the curve was not anomalous at all), NotCyclic.
    """
    p, e = c.modulus.as_prime_power()
    if e < 2:
        raise ValueError(f"theta needs e >= 2, got modulus {c.n}")
    xyz = _as_triple(c, point)
    mult = c.scalar_xyz(p ** (e - 1), xyz)
    if mult[1] != 1 or mult[0] % p or mult[2] % p:
        # points over infinity canonicalize to (X : 1 : f(X)), p | X, p | f(X)
        raise NotCyclic(f"{p}^{e - 1} * {xyz} = {mult} is not over infinity")
    x = mult[0]
    if vp_int(x, p, e) < e - 1:
        raise NotCyclic(f"vp({x}) < {e - 1} in {p}^{e - 1} * {xyz} = {mult}")
    return Modulus(p).element(x // p ** (e - 1))


@dataclass(frozen=True)
class DlpInstance:
    """Q = N*P on an anomalous curve mod p; recover N."""

    curve: Curve
    base: CurvePoint
    target: CurvePoint

    def __post_init__(self):
        c = self.curve
        p, e = c.modulus.as_prime_power()
        if e != 1:
            raise ValueError(f"instance curve must be mod a prime, got {c.n}")
        base = _as_triple(c, self.base)
        tgt = _as_triple(c, self.target)
        if base == (0, 1, 0):
            raise ThetaZero("base point is the identity; its log is undefined")
        if tgt == (0, 1, 0):
            raise ValueError("target point is the identity")
        if not _certified_anomalous(c, base):
            raise NotAnomalous(f"{c!r} does not have exactly {p} points")

    @property
    def p(self) -> int:
        return self.curve.modulus.as_prime_power()[0]


def _certified_anomalous(c: Curve, base_xyz: tuple[int, int, int]) -> bool:
    """|E(F_p)| = p, without counting when an order certificate suffices.

    For p >= 7 the Hasse interval lies inside (0, 2p), so a point of
    order p certifies the count; conversely on an anomalous curve every
    point satisfies pP = O.  At p = 5 the interval reaches 2p and the
    certificate is ambiguous (|E| = 10 has order-5 points), so count.
    """
    from .structure import count_points_fp

    p = c.modulus.as_prime_power()[0]
    if p >= 7:
        return c.scalar_xyz(p, base_xyz) == (0, 1, 0)
    return count_points_fp(c) == p


def solve_anomalous_dlp(instance: DlpInstance) -> int:
    """Recover N with Q = N*P via the lifted Theta homomorphism.

    Lifts the curve and both points to Z/p^2Z.  Theta(P^) = 0 reveals a
    split lift; the curve is then re-lifted with B+p, then with A+p
    (same reduction, independent chance of a cyclic group).  The result
    is verified against the original instance before being returned, so
    a returned value is unconditionally correct.
    """
    c = instance.curve
    p = instance.p
    base = instance.base.xyz
    tgt = instance.target.xyz
    a, b = c.a, c.b
    for a2, b2 in ((a, b), (a, b + p), (a + p, b)):
        lifted = new_curve(a2, b2, p * p, factorization=((p, 2),))
        theta_p = theta(lifted, lift_point(c, base, 2, target=lifted))
        if theta_p.value == 0:
            continue  # split lift: Theta vanishes identically
        theta_q = theta(lifted, lift_point(c, tgt, 2, target=lifted))
        n = (theta_q / theta_p).value
        if c.scalar_xyz(n, base) != tgt:
            raise RuntimeError(f"verification failed: {n} * {base} != {tgt} on {c!r}")
        return n
    raise LiftRetryExhausted(f"all three lifts of {c!r} to mod {p}^2 were split")
