"""Compare C_2 homology of a triangulation with that of its subdivisions.

    python scripts/oracle_subdivision_check.py tetrahedron-boundary --levels 2
"""
import argparse
import time

from confstab.oracle import config2_homology, load_complex


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("complex", nargs="?", default="tetrahedron-boundary")
    ap.add_argument("--levels", type=int, default=1)
    ap.add_argument("--ordered", action="store_true")
    args = ap.parse_args()

    X = load_complex(args.complex)
    base = None
    for s in range(args.levels + 1):
        t = time.perf_counter()
        res = config2_homology(X, ordered=args.ordered, subdivisions=s)
        groups = [str(g) for g in res.groups]
        while len(groups) > 1 and groups[-1] == "0":
            groups.pop()
        base = base or groups
        status = "agrees" if groups == base else "DIFFERS"
        print(f"level {s}: cells {sum(res.cell_counts):>7}  H = ({', '.join(groups)})  "
              f"{status}  {time.perf_counter() - t:.2f}s")


if __name__ == "__main__":
    main()
