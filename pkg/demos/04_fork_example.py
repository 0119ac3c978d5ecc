"""
More intersecting hyperplanes than N(W)
=======================================

The rank-4 group with s1 -6- s2 and s3, s4 each attached to s2 has N(W) = 6,
realised by both W(G2) and W(A3).  Seven hyperplanes still meet pairwise.
"""
from heckebound import systems
from heckebound.bounds import max_intersecting_clique, n_unweighted
from heckebound.incidence import hyperplane, is_intersecting_set

W = systems.g2_a3_fork()
print("N(W) =", n_unweighted(W))

a = [W.simple_root(i) for i in range(4)]
F = W.field


def root(*idx):
    return tuple(sum((a[i][k] for i in idx), F.zero) for k in range(4))


# positive roots of the A3 parabolic on s2, s3, s4
betas = [root(2), root(1), root(3), root(2, 1), root(1, 3), root(2, 1, 3)]
for i, beta in enumerate(betas, start=1):
    b = W.bilinear_form(a[0], beta)
    print(f"B(alpha_1, beta_{i}) = {float(b):+.6f}  exact zero: {b.is_zero()}")

seven = [hyperplane(W, a[0])] + [hyperplane(W, beta) for beta in betas]
print("the seven are pairwise intersecting:", is_intersecting_set(seven))

for depth in range(4):
    res = max_intersecting_clique(W, depth)
    print(f"depth {depth}: {res.vertices} hyperplanes, largest intersecting set {res.size}")
