"""Independent reference implementations used to cross-check the package.

Everything here is deliberately naive and self-contained (plain ints,
no znec imports) so test expectations cannot inherit the package's own
bugs.  The affine chord-tangent law is only total over a field; over
Z/NZ it raises on non-invertible denominators and the tests route
around those pairs via CRT instead.
"""

import math
from itertools import product

# identity of the affine law is None


def affine_add(a, b, n, P, Q):
    """Chord-tangent addition with the explicit case split."""
    if P is None:
        return Q
    if Q is None:
        return P
    x1, y1 = P
    x2, y2 = Q
    if (x1 - x2) % n == 0 and (y1 + y2) % n == 0:
        return None
    if (x1 - x2) % n == 0:
        num, den = 3 * x1 * x1 + a, 2 * y1
    else:
        num, den = y2 - y1, x2 - x1
    if math.gcd(den % n, n) != 1:
        raise ValueError(f"denominator {den % n} not invertible mod {n}")
    lam = num * pow(den, -1, n) % n
    x3 = (lam * lam - x1 - x2) % n
    return (x3, (lam * (x1 - x3) - y1) % n)


def affine_scalar(a, b, n, k, P):
    acc = None
    for _ in range(k):
        acc = affine_add(a, b, n, acc, P)
    return acc


def field_points(a, b, p):
    """All points of E(F_p) as affine pairs plus None, by full scan."""
    pts = [None]
    for x in range(p):
        for y in range(p):
            if (y * y - x * x * x - a * x - b) % p == 0:
                pts.append((x, y))
    return pts


def count_fp(a, b, p):
    return len(field_points(a, b, p))


def projective_points(a, b, n):
    """All points of E(Z/nZ): scan every triple, quotient by units.

    Each class is represented by its lexicographically smallest member.
    O(n^3) per curve; keep n tiny.
    """
    units = [u for u in range(1, n) if math.gcd(u, n) == 1]
    seen = set()
    reps = []
    for x, y, z in product(range(n), repeat=3):
        if math.gcd(math.gcd(x, y), math.gcd(z, n)) != 1:
            continue
        if (y * y * z - x * x * x - a * x * z * z - b * z * z * z) % n:
            continue
        if (x, y, z) in seen:
            continue
        orbit = {(u * x % n, u * y % n, u * z % n) for u in units}
        seen |= orbit
        reps.append(min(orbit))
    return sorted(reps)


def element_order(add, zero, g, bound):
    """Order of g by repeated addition, never exceeding bound steps."""
    acc = g
    for k in range(1, bound + 1):
        if acc == zero:
            return k
        acc = add(acc, g)
    raise AssertionError(f"order of {g} exceeds {bound}")


def _vl(x, l):
    v = 0
    while x % l == 0:
        x //= l
        v += 1
    return v


def invariant_factors_from_orders(orders):
    """Invariant factors of a finite abelian group from its order multiset.

    #\\{g : l^k g = 0\\} counts l^(sum_i min(k, e_i)) elements when the
    l-part is + Z/l^(e_i), so the exponent partition per prime is the
    conjugate of the log-count increments.
    """
    n = len(orders)
    per_prime = {}
    m, l = n, 2
    while l * l <= m:
        if m % l == 0:
            per_prime[l] = []
            while m % l == 0:
                m //= l
        l += 1
    if m > 1:
        per_prime[m] = []
    for l in per_prime:
        a = _vl(n, l)
        logs = [0]
        for k in range(1, a + 1):
            count = sum(1 for o in orders if _vl(o, l) <= k)
            logs.append(_vl(count, l))
        s = [logs[k] - logs[k - 1] for k in range(1, a + 1)]  # #{i: e_i >= k}
        for i in range(s[0] if s else 0):
            per_prime[l].append(sum(1 for sk in s if sk > i))
    for exps in per_prime.values():
        exps.sort(reverse=True)
    depth = max((len(v) for v in per_prime.values()), default=0)
    chain = []
    for j in range(depth):
        d = 1
        for l, exps in per_prime.items():
            if j < len(exps):
                d *= l ** exps[j]
        chain.append(d)
    return tuple(reversed(chain))


def field_group_invariants(a, b, p):
    """Invariant factors of E(F_p) from scratch: scan, add, count orders."""
    pts = field_points(a, b, p)
    bound = len(pts)
    add = lambda P, Q: affine_add(a, b, p, P, Q)
    orders = [element_order(add, None, g, bound) for g in pts]
    return invariant_factors_from_orders(orders)


def crt_pairs(pairs):
    """CRT for [(residue, modulus), ...] with pairwise coprime moduli."""
    x, m = 0, 1
    for r, n in pairs:
        g = math.gcd(m, n)
        assert g == 1, f"moduli {m}, {n} not coprime"
        x += m * ((r - x) * pow(m, -1, n) % n)
        m *= n
    return x % m, m
