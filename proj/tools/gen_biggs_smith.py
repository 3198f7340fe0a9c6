#!/usr/bin/env python3
"""Regenerates data/fixtures/biggs_smith.edges.

Builds the cubic coset graph Cos(G, H, HtH) with G = PSL(2,17), H = S4 (the
normaliser of a Klein four-group) and t in N_G(D8) \\ D8 for a Sylow
2-subgroup D8 of H. The resulting 102-vertex graph is relabelled in
breadth-first order from vertex 0 and written as one edge per line.
"""
import itertools
import sys
from collections import deque

P = 17


def norm(m):
    a, b, c, d = (x % P for x in m)
    neg = tuple((-x) % P for x in (a, b, c, d))
    return min((a, b, c, d), neg)


def mul(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return norm((a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h))


def inv(x):
    a, b, c, d = x
    return norm((d, -b, -c, a))


ident = norm((1, 0, 0, 1))
group = sorted({norm(m) for m in itertools.product(range(P), repeat=4)
                if (m[0] * m[3] - m[1] * m[2]) % P == 1})
assert len(group) == 2448


def order(x):
    k, y = 1, x
    while y != ident:
        y, k = mul(y, x), k + 1
    return k


def normaliser(subset, within):
    s = set(subset)
    return [g for g in within if {mul(mul(g, h), inv(g)) for h in s} == s]


involutions = [g for g in group if order(g) == 2]
a = involutions[0]
b = next(g for g in involutions if g != a and mul(a, g) == mul(g, a))
klein = {ident, a, b, mul(a, b)}
stab = normaliser(klein, group)
assert len(stab) == 24
r = next(g for g in stab if order(g) == 4)
cyc = {ident, r, mul(r, r), mul(mul(r, r), r)}
d8 = normaliser(cyc, stab)
assert len(d8) == 8
d16 = normaliser(d8, group)
assert len(d16) == 16
t = next(g for g in d16 if g not in set(d8))

coset_of = {}
reps = []
for g in group:
    if g in coset_of:
        continue
    idx = len(reps)
    reps.append(g)
    for h in stab:
        coset_of[mul(h, g)] = idx
assert len(reps) == 102

edges = set()
for i, x in enumerate(reps):
    for h in stab:
        j = coset_of[mul(mul(t, h), x)]
        edges.add((min(i, j), max(i, j)))
adj = [[] for _ in reps]
for u, v in edges:
    adj[u].append(v)
    adj[v].append(u)
assert all(len(n) == 3 for n in adj) and len(edges) == 153

label = {0: 0}
queue = deque([0])
while queue:
    u = queue.popleft()
    for v in sorted(adj[u]):
        if v not in label:
            label[v] = len(label)
            queue.append(v)
assert len(label) == 102
out = sorted((min(label[u], label[v]), max(label[u], label[v])) for u, v in edges)
sys.stdout.write("# Biggs-Smith graph: 102 vertices, 153 edges, one edge per line\n")
for u, v in out:
    sys.stdout.write(f"{u} {v}\n")
