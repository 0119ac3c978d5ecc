import itertools
import pytest

from heckebound import systems
from heckebound.construction import (build_context, construct_chain, enumerate_valid_sequences,
                                     max_sequence_length, validate_sequence)
from heckebound.errors import IndexOutOfRange, IndicesNotIncreasing, SequenceInvalid
from heckebound.hecke import enumerate_expansion
from heckebound.incidence import hyperplane, intersects_interior, is_intersecting_set, separates


def brute_sequences(x, y_word):
    """Oracle: test every increasing subset directly against the deletion rule."""
    W = x.system
    out = []
    k = len(y_word)
    for p in range(k + 1):
        for I in itertools.combinations(range(k), p):
            ok, kept = True, []
            for j in I:
                u = W.element(list(x.word) + [y_word[i] for i in range(j) if i not in I])
                if not W.right_descent(u, y_word[j]):
                    ok = False
                    break
            if ok:
                out.append(I)
    return sorted(out)


def test_validate_examples(A2):
    s = A2.element([0])
    assert validate_sequence(s, [0], [0])
    assert not validate_sequence(A2.identity, [0], [0])
    with pytest.raises(IndicesNotIncreasing):
        validate_sequence(s, [0, 1], [1, 1])
    with pytest.raises(IndexOutOfRange):
        validate_sequence(s, [0], [3])


def test_affine_a2_maximum(affine_A2):
    x = affine_A2.element([0, 1, 0])
    y = [0, 1, 0]
    p = max(len(I) for I in enumerate_valid_sequences(x, y))
    assert p == 3
    assert p == max(len(t.indices) for t in enumerate_expansion(x, y))


def test_context_examples(A2):
    s = A2.element([0])
    ctx = build_context(s, [0], [0])
    assert ctx.H[0] == hyperplane(A2, A2.simple_root(0))
    assert ctx.sigma[0] == s and ctx.e[1] == s
    with pytest.raises(SequenceInvalid):
        build_context(A2.identity, [0], [0])
    x = A2.element([1, 0])
    ctx = build_context(x, [0, 1], [1])
    assert ctx.H[0] == hyperplane(A2, A2.act(ctx.x_n[0], A2.simple_root(1)))
    assert ctx.e[1] == ctx.sigma[0]


def test_chain_p1(A2):
    x = A2.element([0, 1, 0])
    steps = construct_chain(build_context(x, [0], [0]))
    assert len(steps) == 1 and steps[0].Q == [hyperplane(A2, A2.act(x, A2.simple_root(0)))]
    assert all(steps[0].checks.values())


def check_chain(ctx, steps):
    """Oracle: re-evaluate the final properties from scratch."""
    x1 = ctx.x_n[0]
    for n, step in enumerate(steps, start=1):
        Q = step.Q
        assert len(set(Q)) == n
        assert is_intersecting_set(Q)
        assert ctx.H[n - 1] in Q
        after = ctx.x.system.mul_generator(ctx.x_n[n - 1], ctx.y_word[ctx.indices[n - 1]])
        assert all(separates(P, x1, after) for P in Q)
        assert not any(separates(P, x1, ctx.e[n]) for P in Q)
        assert not set(step.A) & set(step.b_sigma)
        assert set(step.A) | set(step.B) == set(steps[n - 2].Q) if n > 1 else True


def test_exhaustive_a2(A2):
    elems = A2.elements(10)
    count = 0
    for x in elems:
        for y in elems:
            seqs = list(enumerate_valid_sequences(x, y.word))
            assert sorted(seqs) == brute_sequences(x, y.word)
            for I in seqs:
                if not I:
                    continue
                ctx = build_context(x, y.word, I)
                steps = construct_chain(ctx)
                check_chain(ctx, steps)
                count += 1
                if len(I) == 2:
                    assert len(steps[1].Q) == 2
    assert count > 0


def test_sampled_affine_a2_p3(affine_A2):
    elems = affine_A2.elements(5)
    found = 0
    for x in elems:
        y = x.inverse()
        for I in enumerate_valid_sequences(x, y.word):
            if len(I) == 3:
                ctx = build_context(x, y.word, I)
                steps = construct_chain(ctx)
                check_chain(ctx, steps)
                Q = steps[-1].Q
                assert len(Q) == 3
                assert all(intersects_interior(P, R) for P in Q for R in Q)
                found += 1
    assert found > 20


def test_identity_gives_only_empty(A2, affine_A2):
    for W in (A2, affine_A2):
        for y in W.elements(4):
            assert list(enumerate_valid_sequences(W.identity, y.word)) == [()]
    s = A2.element([0])
    assert list(enumerate_valid_sequences(s, [0])) == [(), (0,)]


def test_max_p_in_a2(A2):
    elems = A2.elements(6)
    best = max(max_sequence_length(x, y.word) for x in elems for y in elems)
    assert best == 3


@pytest.mark.parametrize("name", ["B2", "affine-A2", "triangle-334"])
def test_cross_module_p_max(name):
    W = systems.named_system(name)
    elems = W.elements(4)
    for x in elems[::2]:
        for y in elems[::3]:
            assert max_sequence_length(x, y.word) == \
                max(len(t.indices) for t in enumerate_expansion(x, y.word))


def test_p_max_below_clique(affine_A2):
    from heckebound.bounds import max_intersecting_clique
    elems = affine_A2.elements(4)
    best = max(max_sequence_length(x, y.word) for x in elems for y in elems)
    assert best <= max_intersecting_clique(affine_A2, 4).size


def test_chain_json_and_determinism(affine_A2):
    x = affine_A2.element([0, 1, 0])
    ctx = build_context(x, [0, 1, 0], (0, 1, 2))
    a = [s.to_json() for s in construct_chain(ctx)]
    b = [s.to_json() for s in construct_chain(build_context(x, [0, 1, 0], (0, 1, 2)))]
    assert a == b and len(a) == 3


def test_sequence_budget(affine_A2):
    from heckebound.errors import BudgetExceeded
    x = affine_A2.element([0, 1, 0])
    y = x
    with pytest.raises(BudgetExceeded):
        list(enumerate_valid_sequences(x, y.word, budget=2))
