#!/usr/bin/env python3
"""Independent reference values for the test suite.

Builds the twelve graphs from networkx generators, LCF codes or the Fano
plane (never from this repository's fixtures), measures their invariants with
plain Python and networkx, and writes tests/data/oracle.json. The C++ tests
read that file; rerun this script only to refresh it.
"""
import itertools
import json
import math
import sys
from collections import defaultdict
from pathlib import Path

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

FANO = [{1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 7}, {5, 6, 1}, {6, 7, 2}, {7, 1, 3}]

BIGGS_SMITH_LCF = [
    16, 24, -38, 17, 34, 48, -19, 41, -35, 47, -20, 34, -36, 21, 14, 48, -16, -36, -43, 28, -17, 21, 29, -43,
    46, -24, 28, -38, -14, -50, -45, 21, 8, 27, -21, 20, -37, 39, -34, -44, -8, 38, -21, 25, 15, -34, 18, -28,
    -41, 36, 8, -29, -21, -48, -28, -20, -47, 14, -8, -15, -27, 38, 24, -48, -18, 25, 38, 31, -25, 24, -46,
    -14, 28, 11, 21, 35, -39, 43, 36, -38, 14, 50, 43, 36, -11, -36, -24, 45, 8, 19, -25, 38, 20, -24, -14,
    -21, -8, 44, -31, -38, -28, 37,
]


def coxeter():
    triples = [frozenset(s) for s in itertools.combinations(range(1, 8), 3) if set(s) not in FANO]
    g = nx.Graph()
    g.add_edges_from((a, b) for a, b in itertools.combinations(triples, 2) if not a & b)
    return nx.convert_node_labels_to_integers(g)


def graphs():
    return {
        "k4": nx.complete_graph(4),
        "k33": nx.complete_bipartite_graph(3, 3),
        "q3": nx.hypercube_graph(3),
        "petersen": nx.petersen_graph(),
        "heawood": nx.heawood_graph(),
        "pappus": nx.pappus_graph(),
        "dodecahedral": nx.dodecahedral_graph(),
        "desargues": nx.desargues_graph(),
        "coxeter": coxeter(),
        "tutte": nx.LCF_graph(30, [-13, -9, 7, -7, 9, 13], 5),
        "foster": nx.LCF_graph(90, [17, -9, 37, -37, 9, -17], 15),
        "biggs-smith": nx.LCF_graph(102, BIGGS_SMITH_LCF, 1),
    }


def canon_cycle(c):
    c = list(c)
    i = c.index(min(c))
    c = c[i:] + c[:i]
    if c[1] > c[-1]:
        c = [c[0]] + c[1:][::-1]
    return tuple(c)


def canon_path(p):
    p = tuple(p)
    return min(p, p[::-1])


def girth_cycles(g, length):
    return sorted({canon_cycle(c) for c in nx.simple_cycles(g, length_bound=length) if len(c) == length})


def subpaths(cycle, m):
    n = len(cycle)
    return [tuple(cycle[(i + j) % n] for j in range(m)) for i in range(n)]


def automorphisms(g):
    return [dict(m) for m in GraphMatcher(g, g).isomorphisms_iter()]


def s_arcs(g, s):
    arcs = [[v] for v in g]
    for _ in range(s):
        arcs = [a + [w] for a in arcs for w in g[a[-1]] if len(a) < 2 or w != a[-2]]
    return arcs


def arc_transitivity(g, auts):
    s = 0
    while True:
        arcs = s_arcs(g, s + 1)
        first = tuple(arcs[0])
        orbit = {tuple(a[v] for v in first) for a in auts}
        if len(orbit) != len(arcs):
            return s
        s += 1


def balance(cycles, k):
    """Parity union-find over the constraint graph; returns (balanced, components, solution)."""
    where = defaultdict(list)
    for ci, c in enumerate(cycles):
        for p in subpaths(c, k):
            where[canon_path(p)].append((ci, p))
    parent = list(range(len(cycles)))
    parity = [0] * len(cycles)

    def find(x):
        if parent[x] == x:
            return x, 0
        r, p = find(parent[x])
        parent[x] = r
        parity[x] ^= p
        return r, parity[x]

    ok = True
    for key, occ in where.items():
        if len(occ) != 2:
            continue
        (a, pa), (b, pb) = occ
        same = pa == pb  # both canonical traversals run the same way along the path
        need = 1 if same else 0
        ra, xa = find(a)
        rb, xb = find(b)
        if ra == rb:
            ok = ok and (xa ^ xb) == need
        else:
            parent[ra] = rb
            parity[ra] = xa ^ xb ^ need
    comps = len({find(x)[0] for x in range(len(cycles))})
    return ok, comps


def census(g, cycles, k):
    mus = []
    for m in range(k, 1, -1):
        counts = defaultdict(int)
        for c in cycles:
            for p in subpaths(c, m):
                counts[canon_path(p)] += 1
        paths = {canon_path(p) for p in all_paths(g, m)}
        values = {counts.get(p, 0) for p in paths}
        mus.append(sorted(values))
    return mus


def all_paths(g, m):
    out = []
    def extend(p):
        if len(p) == m:
            out.append(tuple(p))
            return
        for w in g[p[-1]]:
            if w not in p:
                extend(p + [w])
    for v in g:
        extend([v])
    return out


def zip_k3(cycles, merge_by_vertex):
    """Glue the squares of the girth cycles along shared 3-vertex paths.

    Occurrence (cycle, position) of u in one cycle is glued to the occurrence
    of u in the other cycle through the same path. Orientation plays no role.
    """
    occ = {}
    for ci, c in enumerate(cycles):
        for i in range(len(c)):
            occ[(ci, i)] = len(occ)
    uf = list(range(len(occ)))

    def find(x):
        while uf[x] != x:
            uf[x] = uf[uf[x]]
            x = uf[x]
        return x

    def union(a, b):
        uf[find(a)] = find(b)

    where = defaultdict(list)
    for ci, c in enumerate(cycles):
        n = len(c)
        for i in range(n):
            p = (c[i], c[(i + 1) % n], c[(i + 2) % n])
            where[canon_path(p)].append({c[i]: (ci, i), c[(i + 2) % n]: (ci, (i + 2) % n)})
    edges = []
    for key, ends in where.items():
        assert len(ends) == 2
        a, b = ends
        for v in (key[0], key[2]):
            union(occ[a[v]], occ[b[v]])
        edges.append((a[key[0]], a[key[2]]))
    if merge_by_vertex:
        first = {}
        for (ci, i), oid in occ.items():
            v = cycles[ci][i]
            if v in first:
                union(first[v], oid)
            else:
                first[v] = oid
    y = nx.MultiGraph()
    roots = {find(o) for o in occ.values()}
    y.add_nodes_from(roots)
    for a, b in edges:
        y.add_edge(find(occ[a]), find(occ[b]))
    faces = []
    for ci, c in enumerate(cycles):
        n = len(c)
        faces.append([find(occ[(ci, i)]) for i in range(n)])
    return y, faces


def chromatic_number(g):
    order = sorted(g, key=lambda v: -g.degree(v))
    for colours in range(1, len(g) + 1):
        col = {}
        def rec(i):
            if i == len(order):
                return True
            v = order[i]
            for c in range(colours):
                if all(col.get(w) != c for w in g[v]):
                    col[v] = c
                    if rec(i + 1):
                        return True
                    del col[v]
            return False
        if rec(0):
            return colours


def zip_summary(y):
    parts = [y.subgraph(c) for c in nx.connected_components(y)]
    return {
        "vertices": y.number_of_nodes(),
        "edges": y.number_of_edges(),
        "component_orders": sorted(p.number_of_nodes() for p in parts),
    }


def main():
    out = {}
    for name, g in graphs().items():
        sys.stderr.write(f"{name}\n")
        g = nx.convert_node_labels_to_integers(g)
        girth = nx.girth(g)
        cycles = girth_cycles(g, girth)
        auts = automorphisms(g)
        k = arc_transitivity(g, auts)
        balanced, comps = balance(cycles, k)
        planar, _ = nx.check_planarity(g)
        if not balanced:
            kappa = 0
        elif planar:
            kappa = 1
        elif girth == 2 * (k - 1):
            kappa = 2
        else:
            kappa = 3
        rec = {
            "n": g.number_of_nodes(),
            "m": g.number_of_edges(),
            "d": nx.diameter(g),
            "g": girth,
            "b": nx.is_bipartite(g),
            "eta": len(cycles),
            "a": len(auts),
            "k": k,
            "planar": planar,
            "balanced": balanced,
            "kappa": kappa,
            "paths": {str(m): len({canon_path(p) for p in all_paths(g, m)}) for m in range(2, k + 1)},
            "mu": census(g, cycles, k),
            "clique_number": max(len(c) for c in nx.find_cliques(g)),
        }
        if balanced:
            rec["constraint_components"] = comps
        if k == 3 and name in ("k33", "pappus", "desargues", "coxeter"):
            for merge in (False, True):
                y, faces = zip_k3(cycles, merge)
                rec["zip_merged" if merge else "zip"] = zip_summary(y)
            if name == "coxeter":
                y, faces = zip_k3(cycles, False)
                dual = nx.Graph()
                dual.add_nodes_from(range(len(faces)))
                edge_sets = []
                for f in faces:
                    edge_sets.append({frozenset((f[i], f[(i + 2) % len(f)])) for i in range(len(f))})
                for a, b in itertools.combinations(range(len(faces)), 2):
                    if edge_sets[a] & edge_sets[b]:
                        dual.add_edge(a, b)
                rec["dual"] = {
                    "vertices": dual.number_of_nodes(),
                    "degrees": sorted(set(d for _, d in dual.degree())),
                    "chromatic_number": chromatic_number(dual),
                }
        out[name] = rec
    path = Path(__file__).resolve().parent.parent / "tests" / "data" / "oracle.json"
    path.write_text(json.dumps(out, indent=1, sort_keys=True) + "\n")
    sys.stderr.write(f"wrote {path}\n")


if __name__ == "__main__":
    main()
