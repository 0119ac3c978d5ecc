"""
Building intersecting hyperplane sets from deletion sequences
=============================================================

Every admissible deletion sequence of length p yields p hyperplanes that
pairwise meet inside the Tits cone.  Here the chain is built step by step.
"""
from heckebound import systems
from heckebound.construction import build_context, construct_chain, enumerate_valid_sequences

W = systems.affine_a2()
x = W.element([0, 1, 0])
y_word = [0, 1, 0]

sequences = list(enumerate_valid_sequences(x, y_word))
print("admissible sequences:", sequences)

longest = max(sequences, key=len)
ctx = build_context(x, y_word, longest)
for n, (H, sigma) in enumerate(zip(ctx.H, ctx.sigma), start=1):
    print(f"n={n}: H_n = {H!r}, sigma_n has length {sigma.length}")

for step in construct_chain(ctx):
    print(f"step {step.n}: cascade sizes {[len(a) for a in step.cascade]}, |B| = {len(step.B)}")
    print(f"   Q_{step.n} = {step.Q}")
    print("   checks:", step.checks)

# count how many chains were checked for short elements
total = 0
for u in W.elements(3):
    for v in W.elements(3):
        for I in enumerate_valid_sequences(u, v.word):
            if I:
                construct_chain(build_context(u, v.word, I))
                total += 1
print(f"{total} chains built, no invariant failed")
