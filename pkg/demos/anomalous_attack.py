"""Recover a 160-bit discrete log on an anomalous curve in milliseconds.

The curve has exactly p points over F_p, so lifting to Z/p^2Z and
applying the Theta map turns the curve's group into plain addition
mod p.  Run with: python demos/anomalous_attack.py
"""

import time

from znec import ADDITIONS, DlpInstance, new_curve, solve_anomalous_dlp
from znec.reference import (
    DLP160_A,
    DLP160_B,
    DLP160_BASE,
    DLP160_LOG,
    DLP160_P,
    DLP160_TARGET,
)


def main() -> None:
    p = DLP160_P
    curve = new_curve(DLP160_A, DLP160_B, p, factorization=((p, 1),))
    base = curve.point(*DLP160_BASE)
    target = curve.point(*DLP160_TARGET)

    print(f"p      = {p}  ({p.bit_length()} bits)")
    print(f"base   = ({base.xyz[0]}, {base.xyz[1]})")
    print(f"target = ({target.xyz[0]}, {target.xyz[1]})")

    ADDITIONS.reset()
    start = time.perf_counter()
    n = solve_anomalous_dlp(DlpInstance(curve, base, target))
    elapsed = time.perf_counter() - start

    print(f"log    = {n}")
    print(f"solved in {elapsed * 1000:.1f} ms with {ADDITIONS.value} curve additions")
    assert n == DLP160_LOG
    assert (n * base).xyz == target.xyz
    print("verified: n * base = target")


if __name__ == "__main__":
    main()
