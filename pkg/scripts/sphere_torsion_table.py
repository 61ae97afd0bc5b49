"""Tabulate p-torsion verdicts for H_1(C_k(S^2)) next to the known groups.

    python scripts/sphere_torsion_table.py --p 3 --kmax 12
"""
import argparse

from confstab import catalog, torsion_stability
from confstab.audit import fv_h1
from confstab.plocal import p_part


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--p", type=int, default=2)
    ap.add_argument("--kmax", type=int, default=10)
    args = ap.parse_args()

    S2 = catalog("sphere(2)")
    ks = range(2, args.kmax + 1)
    print(f"p = {args.p}; G = guaranteed, . = not covered, * = p-parts differ")
    print("k\\j " + "".join(f"{j:>4}" for j in ks))
    for k in ks:
        row = []
        for j in ks:
            if j == k:
                row.append("   =")
                continue
            v = torsion_stability(S2, k, j, 1, args.p)
            differ = p_part(fv_h1(k), args.p) != p_part(fv_h1(j), args.p)
            row.append(f"{('G' if v.guaranteed else '.') + ('*' if differ else ' '):>4}")
        print(f"{k:>3} " + "".join(row))
    print("groups: " + ", ".join(f"k={k}: {fv_h1(k)}" for k in ks))


if __name__ == "__main__":
    main()
