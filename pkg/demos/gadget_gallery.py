"""The instance generators on their worked examples.

Generates each gadget family, reports the target weight k, brute-forces the
small instances, and round-trips certificates through lift/project.
Run as: python demos/gadget_gallery.py
"""

from connmatch import VertexWeightedGraph, brute_mwcm, brute_wcs, classify, diameter
from connmatch.reductions import (
    Cnf,
    SetCoverInstance,
    SteinerInstance,
    gen_bip4,
    gen_crosscomp,
    gen_planar_bipartite,
    gen_planar_subcubic,
    gen_setcover_to_wcs,
    gen_starlike,
    gen_wcs_to_wcm,
    lift_certificate,
    project_certificate,
    steiner_parameters,
)

formula = Cnf.build(5, [(1, -2, -4), (1, -3, 5), (-1, -2, 4), (2, 3, 5)])
print("3SAT formula:", formula.clauses)

inst = gen_starlike(formula)
print(f"\nstarlike gadget: n={inst.graph.n} m={inst.graph.m} k={inst.k}")
print("  chordal:", classify(inst.graph).chordal_peo is not None)
m = lift_certificate(inst, (False, True, False, False, True))
print("  lifting assignment (F,T,F,F,T):", m.weight)
print("  oracle optimum:", brute_mwcm(inst.graph, edge_limit=100).optimum)

inst = gen_bip4(formula)
print(f"\nbounded-diameter bipartite gadget: k={inst.k} diameter={diameter(inst.graph)}")
res = brute_mwcm(inst.graph, edge_limit=100)
print("  oracle optimum:", res.optimum, "-> assignment", project_certificate(inst, res.witness))

monotone = Cnf.build(5, [(1, 2, 5), (2, 3, 4), (-2, -4, -5)])
inst = gen_planar_bipartite(monotone)
res = brute_mwcm(inst.graph, edge_limit=100)
print(f"\nplanar-bipartite gadget: k={inst.k} optimum={res.optimum}")
print("  projected assignment:", project_certificate(inst, res.witness))

steiner = SteinerInstance.build(3, [(0, 1), (1, 2), (0, 2)], [0, 1], 1)
q, p, r, k = steiner_parameters(steiner)
inst = gen_planar_subcubic(steiner)
print(f"\nsteiner gadget: (q,p,r)=({q},{p},{r}) k={k} n={inst.graph.n} max degree={inst.graph.max_degree()}")
res = brute_mwcm(inst.graph, edge_limit=100)
verts, edges = project_certificate(inst, res.witness)
print(f"  oracle optimum: {res.optimum} -> tree on {sorted(verts)} with edges {edges}")

f1 = Cnf.build(2, [(1, 1, 1), (-1, -1, -1)])  # unsatisfiable
f2 = Cnf.build(2, [(1, 2, 2)])
inst = gen_crosscomp([f1, f2])
res = brute_mwcm(inst.graph, edge_limit=60)
assignment, which = project_certificate(inst, res.witness)
print(f"\ncross-composition of two instances: k={inst.k} optimum={res.optimum}")
print(f"  satisfied instance: #{which} via {assignment}")

cover = SetCoverInstance.build(7, [{0, 1, 4}, {0, 1, 2, 3}, {2, 5}, {4, 5, 6}, {3}], 2)
inst = gen_setcover_to_wcs(cover)
res = brute_wcs(inst.graph)
print(f"\nset cover -> weighted connected subgraph: k={inst.k} optimum={res.optimum}")
print("  chosen sets:", sorted(project_certificate(inst, res.witness)))

gvw = VertexWeightedGraph(
    8, [(0, 1), (1, 2), (2, 3), (3, 4), (5, 0), (6, 5), (7, 6)], [6, 2, -1, 6, 4, -2, -3, 5]
)
inst = gen_wcs_to_wcm(gvw, 17)
res = brute_mwcm(inst.graph, edge_limit=30)
print(f"\nweighted connected subgraph -> connected matching: k={inst.k} optimum={res.optimum}")
print("  selected source vertices:", sorted(project_certificate(inst, res.witness)))
