"""
Upper and lower bounds for the largest intersecting set
=======================================================

Finite parabolic subgroups give N(W); the palette Col and a Ramsey bound give
an upper estimate; an exact clique search on bounded-depth roots gives a
lower one.
"""
from fractions import Fraction

from heckebound import systems
from heckebound.bounds import (bound_report, col_set, equal_gram_rank, finite_parabolics,
                               max_intersecting_clique, ramsey_upper)

for name in ("A3", "H3", "affine-A2", "affine-B2", "triangle-334"):
    W = systems.named_system(name)
    rep = bound_report(W, depth=4)
    print(f"{name:>13}: N(W) = {rep.n_unweighted}, |Col| = {len(rep.col)}, "
          f"N' <= {rep.n_prime.value} ({rep.n_prime.method}), clique >= {rep.clique_lower}")

# the finite parabolics of affine B2
for p in finite_parabolics(systems.affine_b2()):
    print(f"  W_I for I = {p.subset}: order {p.order}, longest length {p.length}")

# Col grows with depth for a hyperbolic triangle group
T = systems.triangle(3, 3, 4)
for d in range(5):
    c = col_set(T, d)
    print(f"depth {d}: {len(c)} values {[round(float(v), 4) for v in c.values]}")

print("R(3;2) <=", ramsey_upper(3, 2), "  R(4;3) <=", ramsey_upper(4, 3))

# equal off-diagonal Gram matrices drop rank exactly at a = -1/(k-1)
for k in (3, 4, 5):
    print(k, [equal_gram_rank(k, a).rank for a in (0, Fraction(1, 2), Fraction(-1, 2), Fraction(-1, k - 1))])

res = max_intersecting_clique(systems.affine_a2(), 6)
print("affine A2 clique at depth 6:", res.size, "exhausted" if res.exhausted else "budget hit")
