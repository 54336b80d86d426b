"""Count extremal digraphs and extremal set systems for small n.

Family members on n labelled vertices are transitive closures of rooted
forests, so both counts should equal (n+1)^(n-1).
"""

import sys

from idcodes import enumerate_digraphs, is_extremal_direct, recognize_family
from idcodes.harness import systems


def main(max_n=5):
    print(f"{'n':>2} {'family digraphs':>16} {'extremal systems':>17} {'(n+1)^(n-1)':>12}")
    for n in range(1, max_n + 1):
        digraphs = sum(recognize_family(D) is not None for D in enumerate_digraphs(n, "oriented"))
        extremal = sum(is_extremal_direct(s).extremal for s in systems(n, nonempty=True))
        print(f"{n:>2} {digraphs:>16} {extremal:>17} {(n + 1) ** (n - 1):>12}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 5)
