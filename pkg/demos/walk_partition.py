# Every closed walk is a cycle, a cycle-free walk, or a walk that contains a
# cycle without being one.  Listing them all on tiny graphs shows where each
# term of tr = Omega + Psi + 2i N comes from.
import tannercycles as tc
from tannercycles import psi_g2, psi_g4

fano_lines = [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)]
heawood = tc.build_graph(7, 7, [(p, k) for k, line in enumerate(fano_lines) for p in line])

for name, g in (("K_2,2", tc.complete_bipartite(2, 2)), ("Heawood", heawood)):
    _, cls = tc.classify(g)
    girth = tc.girth(g)
    cycles = tc.backtrack_cycle_count(g, 2 * girth - 2)
    traces = tc.exact_traces(g, 2 * girth - 2)
    print(f"{name}: {cls}, girth {girth}, cycles {cycles}")
    print("   i     total   cycles  cycle-free      CWWC     Omega       Psi")
    for i in range(2, 2 * girth - 1, 2):
        c = tc.classify_closed_walks(g, i)
        omega = tc.omega_biregular(g.n, g.m, cls.d_v, cls.d_c, i).omega
        if i <= girth:
            psi = 0
        elif i == girth + 2:
            psi = psi_g2(girth, cls.d_v, cls.d_c, cycles[girth]).psi
        else:
            psi = psi_g4(girth, cls.d_v, cls.d_c, cycles[girth], cycles[girth + 2]).psi
        assert c.total_closed_walks == traces[i]
        print(f"  {i:>2} {c.total_closed_walks:>9} {c.cycle_walks:>8} {c.cycle_free_walks:>11}"
              f" {c.cwwc_walks:>9} {omega:>9} {psi:>9}")
    print()

# up to length 2g-2 every CWWC holds exactly one cycle and crosses some edge once
c = tc.classify_closed_walks(heawood, 10)
print("Heawood, i=10: CWWCs", c.cwwc_walks, " unicyclic", c.cwwc_unicyclic,
      " with a once-used edge", c.cwwc_single_edge)
# at 2g both fail: some CWWCs hold two cycles, some walk a hexagon twice
c = tc.classify_closed_walks(heawood, 12)
print("Heawood, i=12: CWWCs", c.cwwc_walks, " unicyclic", c.cwwc_unicyclic,
      " with a once-used edge", c.cwwc_single_edge)
