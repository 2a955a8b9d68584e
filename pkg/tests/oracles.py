"""Brute-force references, kept independent of the code paths they check."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction

import sympy

from plumbkit.graph import PlumbingGraph
from plumbkit.lattice import Cycle, Lattice
from plumbkit.errors import SingularMatrix


def sympy_matrix(lat):
    return sympy.Matrix(lat.B)


def sympy_inverse(lat):
    inv = sympy_matrix(lat).inv()
    return [[Fraction(int(x.p), int(x.q)) for x in inv.row(i)] for i in range(inv.rows)]


def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = 1
        for i in range(n):
            prod *= m[i][perm[i]]
        total += sign * prod
    return total


def pair_sum(lat, x, y):
    """x^T B y written out entry by entry."""
    s = lat.s
    return sum(Fraction(x[i]) * lat.B[i][j] * Fraction(y[j]) for i in range(s) for j in range(s))


def box(upper):
    return (Cycle(c) for c in itertools.product(*(range(u + 1) for u in upper)))


def brute_laufer_minimum(lat, lprime, bound):
    """All effective integral l <= bound with l' - l nef, and their minimal ones."""
    ok = [l for l in box(bound) if all(v >= 0 for v in _pairings(lat, lprime - l))]
    minimal = [l for l in ok if not any(m <= l and m != l for m in ok)]
    return ok, minimal


def brute_anti_nef_minimum(lat, member, bound):
    """Anti-nef cycles ``frac(member) + l`` with integral 0 <= l <= bound."""
    base = Cycle(c - (c.numerator // c.denominator) for c in member)
    ok = [base + l for l in box(bound)]
    ok = [x for x in ok if all(v <= 0 for v in _pairings(lat, x))]
    minimal = [x for x in ok if not any(m <= x and m != x for m in ok)]
    return ok, minimal


def all_reduction_outcomes(lat, lprime):
    """Every terminal cycle reachable by any choice sequence of the Laufer rule."""
    start = tuple([0] * lat.s)
    seen = {start}
    stack = [start]
    ends = set()
    while stack:
        x = stack.pop()
        p = _pairings(lat, lprime - Cycle(x))
        bad = [j for j, v in enumerate(p) if v < 0]
        if not bad:
            ends.add(x)
        for j in bad:
            y = list(x)
            y[j] += 1
            y = tuple(y)
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return ends


def artin_min_chi(lat, bound):
    """min chi(l) over integral 0 < l <= bound, chi computed from the definition."""
    K = _solve_canonical(lat)
    best = None
    for l in box(bound):
        if l.is_zero():
            continue
        c = -(pair_sum(lat, l, l) + pair_sum(lat, l, K)) / 2
        best = c if best is None else min(best, c)
    return best


def _solve_canonical(lat):
    inv = sympy_inverse(lat)
    rhs = [-e - 2 for e in lat.graph.eulers]
    return Cycle(sum(inv[i][j] * rhs[j] for j in range(lat.s)) for i in range(lat.s))


def _pairings(lat, x):
    return [sum(lat.B[j][i] * x[i] for i in range(lat.s)) for j in range(lat.s)]


def random_tree(rng, n, weights=(-1, -2, -3, -4, -5)):
    eulers = [rng.choice(weights) for _ in range(n)]
    edges = [(rng.randrange(i), i) for i in range(1, n)]
    perm = list(range(n))
    rng.shuffle(perm)
    return PlumbingGraph(tuple(eulers[perm[i]] for i in range(n)), tuple((perm[a], perm[b]) for a, b in edges))


def random_negdef_graph(rng, max_vertices, max_det=None, rational=None, weights=(-1, -2, -3, -4, -5)):
    from plumbkit.invariants import is_rational_graph

    while True:
        g = random_tree(rng, rng.randint(1, max_vertices), weights)
        try:
            lat = Lattice(g)
        except SingularMatrix:
            continue
        if not lat.negdef:
            continue
        if max_det is not None and abs(lat.det) > max_det:
            continue
        if rational is not None and is_rational_graph(lat).is_rational != rational:
            continue
        return g, lat


def seeded_graphs(seed, count, **kw):
    rng = random.Random(seed)
    return [random_negdef_graph(rng, **kw) for _ in range(count)]
