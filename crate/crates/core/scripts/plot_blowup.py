"""Log-log plot of blow-up ratios.

Accepts either `schurpat blowup` CSV (size,ratio,exponent) or the output of
`cargo run --example diagonal_blowup` (p,size,ratio,expected).

    schurpat blowup --p 1/2 --sizes 2,4,8,16,32,64 > blowup.csv
    python3 plot_blowup.py blowup.csv [out.png]
"""

import csv
import sys
from collections import defaultdict

import matplotlib.pyplot as plt


def main(path, out=None):
    series = defaultdict(list)
    with open(path, newline="") as f:
        for row in csv.DictReader(f):
            series[row.get("p", "p")].append((int(row["size"]), float(row["ratio"])))

    fig, ax = plt.subplots()
    for label, points in sorted(series.items()):
        sizes, ratios = zip(*sorted(points))
        ax.loglog(sizes, ratios, "o-", base=2, label=f"p = {label}")
    ax.set_xlabel("n")
    ax.set_ylabel("multiplier ratio")
    ax.legend()
    if out:
        fig.savefig(out, dpi=150)
    else:
        plt.show()


if __name__ == "__main__":
    main(*sys.argv[1:3])
