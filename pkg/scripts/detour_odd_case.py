"""Per-class detour values for odd n: closed forms against the longest-path oracle.

At n = 3 the non-central closed forms do not hold; from n = 5 on they do.
usage: python3 scripts/detour_odd_case.py [n ...]
"""

import sys

from sdgraph import commuting_graph, sd8n_construct
from sdgraph.formulas import predict_detour_profile
from sdgraph.invariants import detour_profile
from sdgraph.report import sd_vertex_classes


def show(n):
    g = sd8n_construct(n)
    prof = detour_profile(commuting_graph(g), None)
    pred = predict_detour_profile(n)
    print(f"n={n}: rad_D {pred.radius} vs {prof.drad}, diam_D {pred.diameter} vs {prof.ddiam}")
    for cls, members in sd_vertex_classes(g).items():
        v = members[0]
        print(f"  {cls:<10} ecc_D {pred.ecc[cls]:>3} vs {prof.decc[v]:>3}   d_D {pred.degree[cls]:>3} vs {prof.detour_degree[v]:>3}")
    print(f"  D_av {pred.average_degree} vs {prof.average_detour_degree}")


if __name__ == "__main__":
    for n in [int(a) for a in sys.argv[1:]] or [3, 5]:
        show(n)
