#!/usr/bin/env python3
"""Write b-files for A039755 and A039758 from closed-form expressions.

The tool never touches the network, so the fixtures are generated here
instead of downloaded:

  A039755  S_B(n,k) = (1/(2^k k!)) sum_j (-1)^(k-j) C(k,j) (2j+1)^n
  A039758  c_B(n,k) = coefficient of x^k in (x+1)(x+3)...(x+2n-1)

Both triangles are flattened row by row starting from index 0.
"""

import argparse
from math import comb, factorial
from pathlib import Path


def stirling2_b(n, k):
    total = sum((-1) ** (k - j) * comb(k, j) * (2 * j + 1) ** n for j in range(k + 1))
    return total // (2**k * factorial(k))


def rising_b_row(n):
    poly = [1]
    for i in range(1, n + 1):
        c = 2 * i - 1
        nxt = [0] * (len(poly) + 1)
        for d, a in enumerate(poly):
            nxt[d] += a * c
            nxt[d + 1] += a
        poly = nxt
    return poly


def write(path, title, rows):
    lines = [f"# {title}", "# Generated locally by tools/make_bfiles.py; rows 0.." + str(len(rows) - 1)]
    index = 0
    for row in rows:
        for v in row:
            lines.append(f"{index} {v}")
            index += 1
    path.write_text("\n".join(lines) + "\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--rows", type=int, default=25)
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data" / "oeis")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    write(args.out / "b039755.txt", "A039755: type-B Stirling numbers of the second kind",
          [[stirling2_b(n, k) for k in range(n + 1)] for n in range(args.rows)])
    write(args.out / "b039758.txt", "A039758: signless type-B Stirling numbers of the first kind",
          [rising_b_row(n) for n in range(args.rows)])


if __name__ == "__main__":
    main()
