"""
Hecke products in the standard basis
====================================

Multiply T_x T_y in a few Coxeter groups, compare the two ways of computing
the product, and watch the top degree of the structure constants.
"""
import itertools

from heckebound import systems
from heckebound.bounds import n_weighted
from heckebound.hecke import aggregate_expansion, enumerate_expansion, max_f_degree, structure_constants

# the symmetric group S3 = W(A2); generators are 0-based in the library
W = systems.type_a(2)
w0 = W.element([0, 1, 0])
for z, f in structure_constants(w0, w0).sorted_items():
    print(f"  T_{z.word}: {f}")

# the same product from the deletion expansion, term by term
terms = enumerate_expansion(w0, w0.word)
for t in terms:
    print(f"  delete {t.indices}: z = {t.z.word}, xi = {t.xi}")
print("expansion agrees:", aggregate_expansion(terms) == structure_constants(w0, w0))

# top degree over all pairs against N(W)
for name in ("A2", "B2", "G2"):
    G = systems.named_system(name)
    elems = G.elements(100)
    top = max(max_f_degree(x, y).degree for x, y in itertools.product(elems, elems))
    print(f"{name}: max degree {top}, N(W) = {n_weighted(G)}")

# unequal parameters in B2: L(s1) = 2, L(s2) = 1
B = systems.type_b(2, weights=[2, 1])
w = B.element([0, 1, 0, 1])
r = max_f_degree(w, w)
print(f"B2 with weights (2, 1): deg {r.degree} at z = {r.witness.word}, N_L = {n_weighted(B)}")

# an infinite group: affine A2, lengths up to 4
A = systems.affine_a2()
elems = A.elements(4)
top = max(max_f_degree(x, y).degree for x, y in itertools.product(elems, elems))
print(f"affine A2 (lengths <= 4): max degree {top}, N(W) = {n_weighted(A)}")
