#!/usr/bin/env python3
"""Derive the explicit permutation generators bundled in the Table 1 catalog.

Three actions have no convenient matrix description and ship as literal
cycle strings in crates/core/src/designs/catalog.rs:

  * PSL(2,11) on 11 points: the automorphism group of the Paley biplane
    on Z_11 (base block = nonzero squares mod 11).
  * M11 on 12 points: the automorphism group of the 3-(12,6,2) design
    obtained by extending the Paley biplane with a point "inf" (blocks
    B + {inf} and the complements of B in Z_11).
  * Alt7 on 15 points: Alt7 acting on one of its two orbits on the 30 Fano
    plane structures on 7 letters.

Automorphism groups are found by plain backtracking. Two generators are then
chosen deterministically (first pair, in enumeration order, generating a
group of the expected order). Output is 1-based cycle notation.

Run: python3 scripts/derive_generators.py
"""
from itertools import combinations, permutations


def closure_order(gens, degree):
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = tuple(s[g[i]] for i in range(degree))
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return len(seen)


def automorphisms(degree, blocks):
    blockset = {frozenset(b) for b in blocks}
    incident = [[b for b in blockset if x in b] for x in range(degree)]
    found = []
    img = [None] * degree
    used = [False] * degree

    def consistent(upto):
        assigned = set(range(upto + 1))
        for b in blockset:
            if b <= assigned:
                if frozenset(img[x] for x in b) not in blockset:
                    return False
        return True

    def rec(i):
        if i == degree:
            found.append(tuple(img))
            return
        for y in range(degree):
            if used[y]:
                continue
            img[i] = y
            used[y] = True
            if consistent(i):
                rec(i + 1)
            used[y] = False
        img[i] = None

    rec(0)
    return found


def pick_generators(elements, degree, order):
    elems = sorted(elements)
    for a in elems:
        if closure_order([a], degree) == 1:
            continue
        for b in elems:
            if closure_order([a, b], degree) == order:
                return [a, b]
    raise SystemExit("no generating pair")


def cycles(perm):
    seen = set()
    out = []
    for i in range(len(perm)):
        if i in seen or perm[i] == i:
            continue
        cyc = []
        j = i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = perm[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def paley_blocks():
    squares = sorted({(x * x) % 11 for x in range(1, 11)})
    return [sorted((s + t) % 11 for s in squares) for t in range(11)]


def psl2_11():
    auts = automorphisms(11, paley_blocks())
    assert len(auts) == 660, len(auts)
    return pick_generators(auts, 11, 660)


def m11_on_12():
    inf = 11
    blocks = []
    for b in paley_blocks():
        blocks.append(b + [inf])
        blocks.append(sorted(set(range(11)) - set(b)))
    auts = automorphisms(12, blocks)
    assert len(auts) == 7920, len(auts)
    return pick_generators(auts, 12, 7920)


def alt7_on_15():
    pts = range(7)
    triples = list(combinations(pts, 3))
    planes = set()
    base = frozenset(frozenset(t) for t in
                     [(0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5)])
    # all 30 Fano structures are images of one under S7
    for p in permutations(pts):
        planes.add(frozenset(frozenset(p[x] for x in t) for t in base))
    assert len(planes) == 30
    g1 = (1, 2, 3, 4, 5, 6, 0)
    g2 = (1, 2, 0, 3, 4, 5, 6)

    def act(g, plane):
        return frozenset(frozenset(g[x] for x in t) for t in plane)

    orbit = [base]
    seen = {base}
    i = 0
    while i < len(orbit):
        for g in (g1, g2):
            im = act(g, orbit[i])
            if im not in seen:
                seen.add(im)
                orbit.append(im)
        i += 1
    assert len(orbit) == 15
    orbit.sort(key=lambda pl: sorted(sorted(t) for t in pl))
    index = {pl: j for j, pl in enumerate(orbit)}
    gens = [tuple(index[act(g, pl)] for pl in orbit) for g in (g1, g2)]
    assert closure_order(gens, 15) == 2520
    return gens


if __name__ == "__main__":
    for name, gens in [("PSL(2,11) on 11 points", psl2_11()),
                       ("M11 on 12 points", m11_on_12()),
                       ("Alt7 on 15 points", alt7_on_15())]:
        print(name)
        for g in gens:
            print("   ", cycles(g))
