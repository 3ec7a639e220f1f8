# Cycle-free closed walks on the infinite (x,y) tree.
#
# Every closed walk that never closes a cycle lives on a tree, and in a
# bi-regular graph of large girth the neighbourhood of a node looks exactly
# like the alternating tree with branching x at the root, then y-1, x-1, ...
import numpy as np

from tannercycles import s_closed_form, s_tree_dp
from tannercycles.walks import q_closed_form

# the DP on tree levels against the full matrix of a small explicit tree
x, y, i = 2, 3, 8
parents, frontier = [-1], [0]
for level in range(i // 2):
    branch = x if level == 0 else (y - 1 if level % 2 else x - 1)
    nxt = []
    for v in frontier:
        for _ in range(branch):
            parents.append(v)
            nxt.append(len(parents) - 1)
    frontier = nxt
a = np.zeros((len(parents),) * 2, dtype=np.int64)
for v, p in enumerate(parents[1:], start=1):
    a[v, p] = a[p, v] = 1
print(f"explicit tree with {len(parents)} nodes: (A^{i})[root,root] =",
      np.linalg.matrix_power(a, i)[0, 0], " tree DP:", s_tree_dp(x, y, i).s_value)

# S splits into first-return excursions Q; the polynomials cover i <= 10
print("\n  x y |  Q_2  Q_4  Q_6   Q_8   Q_10 |   S_10 (closed)  S_10 (DP)")
for x, y in [(3, 5), (5, 3), (3, 6), (6, 3), (4, 4)]:
    qs = [q_closed_form(x, y, k) for k in (2, 4, 6, 8, 10)]
    print(f"  {x} {y} | " + " ".join(f"{q:>4}" for q in qs[:3]) + f" {qs[3]:>5} {qs[4]:>6} |"
          f" {s_closed_form(x, y, 10).s_value:>14} {s_tree_dp(x, y, 10).s_value:>10}")

# beyond 10 only the DP is available; a slice of the i = 12 values
print("\nS(x, y, 12):")
print("      " + "".join(f"x={x:<8}" for x in range(2, 7)))
for y in range(2, 7):
    print(f"y={y}   " + "".join(f"{s_tree_dp(x, y, 12).s_value:<10}" for x in range(2, 7)))

