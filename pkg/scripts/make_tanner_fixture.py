"""Write the (155,64) quasi-cyclic Tanner code graph as an alist file.

The parity-check matrix is a 3x5 array of 31x31 circulant permutation
matrices; block (i, j) is the identity shifted by 5**i * 2**j mod 31.
"""
import sys
from pathlib import Path

from tannercycles import build_graph, write_graph

P = 31


def tanner_155_64():
    edges = []
    for i in range(3):
        for j in range(5):
            s = pow(5, i, P) * pow(2, j, P) % P
            edges.extend((j * P + (r + s) % P, i * P + r) for r in range(P))
    return build_graph(5 * P, 3 * P, edges)


if __name__ == "__main__":
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "tests/data/tanner_155_64.alist")
    write_graph(tanner_155_64(), out)
    print(f"wrote {out}")
