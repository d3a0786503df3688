"""Tour of the natural-to-sequency map and the sequency-ordered matrix.

Run: python3 demos/sequency_tour.py
"""

import numpy as np

from walshdsp import (
    sequency_matrix,
    sequency_of,
    sequency_recursion_trace,
    zero_crossings_bruteforce,
)


def main() -> None:
    n = 3
    size = 1 << n

    print(f"natural index s -> sequency g = Z_{n}(s), checked against sign counting")
    print("s  g  zero-crossings of row s")
    for s in range(size):
        g = sequency_of(s, n)
        brute = zero_crossings_bruteforce(s, n)
        marker = "ok" if g == brute else "MISMATCH"
        print(f"{s}  {g}  {brute}  {marker}")

    s = 5
    trace = sequency_recursion_trace(s, n)
    print(f"\ndoubling recursion for s={s}: prefixes of the bit string feed forward")
    for m, z in enumerate(trace, start=1):
        print(f"  Z_{m} = {z}")

    print(f"\nsign pattern of the sequency-ordered matrix, n={n} (rows sorted by crossings):")
    signs = np.sign(sequency_matrix(n) * np.sqrt(size)).astype(int)
    for row in signs:
        print("  " + " ".join(f"{v:+d}" for v in row))
    crossings = (np.abs(np.diff(signs, axis=1)).sum(axis=1) // 2).tolist()
    print(f"row crossing counts: {crossings} (strictly increasing)")


if __name__ == "__main__":
    main()
