"""The hidden structure above the identity: points over (0 : 1 : 0).

Mod p^e the identity of E(F_p) blows up into p^(e-1) points
(X : 1 : f(X)) with p | X, where f is a polynomial the module computes
exactly.  Their first coordinates add almost linearly, which is what
the discrete-log attack exploits.  Run with:
python demos/points_at_infinity.py
"""

from znec import compute_f, infinity_points, kernel_generator, new_curve, point_order


def main() -> None:
    curve = new_curve(2, 3, 7**4, factorization=((7, 4),))
    f = compute_f(curve)
    print(f"curve: E_{{2,3}}(Z/7^4), f = {f!r}")

    pts = infinity_points(curve)
    print(f"{len(pts)} points over infinity (expected 7^3 = 343); first five:")
    for pt in pts[:5]:
        print(f"    {pt!r}")

    gen = kernel_generator(curve)
    print(f"kernel generator {gen!r} has order {point_order(gen, 7**3)}")

    P, Q = pts[3], pts[10]
    s = P + Q
    x1, x2, x3 = P.xyz[0], Q.xyz[0], s.xyz[0]
    print(f"X({P.xyz[0]}) + X({Q.xyz[0]}) = {x1 + x2}, sum point has X = {x3}")
    print(f"difference {x3 - x1 - x2} is divisible by 7^{min(4, 5)} = {7**4}: "
          f"{(x3 - x1 - x2) % 7**4 == 0}")


if __name__ == "__main__":
    main()
