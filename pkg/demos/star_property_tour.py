"""Which coordinates of a subspace of l_inf^n actually carry its norm?

Run with ``python3 demos/star_property_tour.py``.
"""

from fractions import Fraction as F

from polyball import analyze_space, embed_into_linf, star_satisfiers, weak_star_satisfiers


def show(title, basis):
    print(f"\n== {title}")
    strict = star_satisfiers(basis)
    weak = weak_star_satisfiers(basis)
    for cls, v, w in zip(strict.classes, strict.verdicts, weak.verdicts):
        rep = ", ".join(str(x) for x in cls.representative)
        print(f"  component ({rep}) at {list(cls.members)}: strict={v} weak={w}")
    verdict = analyze_space(basis)
    print(f"  r = {verdict.strict_count}, facets = {verdict.facet_count}, "
          f"isometric to l_inf^{verdict.m}: {verdict.iso_to_linf_m}")
    return verdict


# The middle coordinate averages the outer two, so it never wins outright.
show("averaged plane", [[3, F(5, 2), 2], [2, F(5, 2), 3]])
emb = embed_into_linf([[3, F(5, 2), 2], [2, F(5, 2), 3]])
print("  drop it and keep the norm:", [list(map(str, r)) for r in emb.image_basis.vectors])

# Three directions in the plane, none in the hull of the others: a hexagon.
show("hexagonal plane", [[3, 0, 2], [0, 3, 2]])

# (1,0) ties with (1,1) and (1,-1) at beta=(1,0) but can never beat both.
show("tie without a win", [[1, 1, 1], [0, 1, -1]])
