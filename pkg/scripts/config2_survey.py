"""Ordered and unordered C_2 homology of every built-in triangulation.

    python scripts/config2_survey.py
"""
from confstab.oracle import BUILTINS, builtin, config2_homology


def main():
    for name in BUILTINS:
        X = builtin(name)
        for ordered in (True, False):
            res = config2_homology(X, ordered=ordered)
            label = "F_2" if ordered else "C_2"
            print(f"{name:<22} {label}  f={X.f_vector}  H = ({', '.join(map(str, res.groups))})")


if __name__ == "__main__":
    main()
