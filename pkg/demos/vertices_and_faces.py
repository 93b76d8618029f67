"""Extreme points of a subspace ball are the coefficient vectors whose
tight components span.  Here we list them and poke at a few boundary points.
"""

from polyball import enumerate_vertices, is_maximal_star_constant, minimal_face, unit_ball_hrep

basis = [[1, 0, 1, 0], [0, 1, 1, 0], [0, 0, 0, 1]]
P = unit_ball_hrep(basis)
verts = enumerate_vertices(P)
print(f"{len(verts)} vertices")
for v, face in zip(verts.vertices, verts.faces):
    print("  ", tuple(map(str, v)), "tight at", face.tight_set, "signs", face.signs)

for beta in [(1, -1, 1), (1, 0, 0), (0, 1, 0)]:
    face = minimal_face(P, beta)
    print(f"beta={beta}: tight {face.tight_set}, face dimension {face.dim_estimate}, "
          f"maximal by LP: {is_maximal_star_constant(P, beta)}")
