"""Counting extreme contractions from X into l_inf^n.

An operator into l_inf^n is n functionals stacked, so the unit ball of
L(X, l_inf^n) is an l_inf sum of n copies of one ball W.  Both counts
follow from W alone.
"""

from polyball import analyze_operator_space

cases = {
    "hexagon": [(1, 0), (0, 1), (1, 1)],
    "hexagonal prism": [(1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)],
    "l_1^3": [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
}
for name, ext in cases.items():
    for n in (1, 2, 3):
        rep = analyze_operator_space(ext, n)
        mark = " (checked against the explicit sum)" if rep.cross_checked else ""
        print(f"{name:16} n={n}: {rep.extreme_contractions:5} extreme contractions "
              f"[{rep.extreme_formula}], {rep.facet_count:3} facets [{rep.facet_formula}]{mark}")
