"""Brute-force oracles that share no code with the simplex or the enumerator."""

import itertools
from fractions import Fraction as F


def gauss_solve(mat, rhs):
    # plain Gauss-Jordan over Fractions; None when singular
    n = len(mat)
    rows = [list(map(F, r)) + [F(b)] for r, b in zip(mat, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if rows[i][col] != 0), None)
        if piv is None:
            return None
        rows[col], rows[piv] = rows[piv], rows[col]
        p = rows[col][col]
        rows[col] = [x / p for x in rows[col]]
        for i in range(n):
            if i != col and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
    return tuple(r[n] for r in rows)


def vertex_lp(objective, ineqs, eqs=()):
    """max <objective, x> over {A x <= b, E x = e} by trying every basic solution.

    ``ineqs`` and ``eqs`` are (normal, bound) pairs.  Only valid when the
    feasible region is bounded (then an optimum sits at a vertex).  Returns
    (value, point) or None if infeasible.
    """
    d = len(objective)
    need = d - len(eqs)
    best = None
    for subset in itertools.combinations(range(len(ineqs)), need):
        mat = [e[0] for e in eqs] + [ineqs[i][0] for i in subset]
        rhs = [e[1] for e in eqs] + [ineqs[i][1] for i in subset]
        x = gauss_solve(mat, rhs)
        if x is None:
            continue
        if all(sum(F(a) * xi for a, xi in zip(n, x)) <= b for n, b in ineqs):
            val = sum(F(c) * xi for c, xi in zip(objective, x))
            if best is None or val > best[0]:
                best = (val, x)
    return best


def margin_oracle(target, others):
    """Max t with <beta,target> = 1, |<beta,c>| <= 1 - t, 0 <= t <= 1, via vertex_lp.

    ``beta`` is boxed by a large bound so the region is a polytope; the
    caller picks inputs where the box is inactive.
    """
    m = len(target)
    ineqs = []
    for c in others:
        ineqs.append((tuple(c) + (1,), 1))
        ineqs.append((tuple(-x for x in c) + (1,), 1))
    ineqs.append(((0,) * m + (-1,), 0))
    ineqs.append(((0,) * m + (1,), 1))
    big = 1000
    for k in range(m):
        e = [0] * (m + 1)
        e[k] = 1
        ineqs.append((tuple(e), big))
        e[k] = -1
        ineqs.append((tuple(e), big))
    res = vertex_lp((0,) * m + (1,), ineqs, [(tuple(target) + (0,), 1)])
    return None if res is None else res[0]


def ball_vertices(reps):
    """Vertices of {|<beta, r>| <= 1}: solve every m-subset of the 2k constraints."""
    m = len(reps[0])
    cons = [(tuple(r), 1) for r in reps] + [(tuple(-x for x in r), 1) for r in reps]
    out = set()
    for subset in itertools.combinations(cons, m):
        x = gauss_solve([c[0] for c in subset], [c[1] for c in subset])
        if x is None:
            continue
        if all(abs(sum(F(a) * xi for a, xi in zip(r, x))) <= 1 for r in reps):
            out.add(x)
    return out
