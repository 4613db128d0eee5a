"""Rank bounds for p-group curves and the gluings that attain them.

For each small prime p, print the Hasse-window primes, the bound
H_p + chi_p + 1, and a CRT-glued curve whose group is (Z/p)^rank.
Primes 2 and 3 can never divide N, so for p = 5 and p = 7 part of the
window is out of reach and the bound stays open.
Run with: python demos/rank_records.py
"""

from znec import construct_max_rank_curve, rank_bound


def main() -> None:
    for p in (5, 7, 11, 13):
        report = rank_bound(p)
        print(f"p = {p}: Hasse primes {report.hasse_primes}, "
              f"H_p = {report.h_p}, chi_p = {report.chi_p}, bound = {report.bound}")
        if report.chi_witness:
            q, a, b = report.chi_witness
            print(f"    chi witness: E_{{{a},{b}}}(F_{q}) with full {p}-torsion")
        built = construct_max_rank_curve(p)
        tag = "sharp" if built.sharp else f"best reachable (skipped q in {built.skipped})"
        print(f"    E_{{{built.a},{built.b}}}(Z/{built.n}) = {built.structure.describe()}  [{tag}]")
        for modulus, a, b, role in built.pieces:
            print(f"        mod {modulus:10}: ({a}, {b})  {role}")
        print()


if __name__ == "__main__":
    main()
