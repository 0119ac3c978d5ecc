"""Inductive construction of intersecting sets from admissible deletion sequences.

For ``x``, a reduced word ``s_1 ... s_k`` of ``y`` and admissible positions
``i_1 < ... < i_p``, :func:`construct_chain` builds hyperplane sets
``Q_1, ..., Q_p`` with ``|Q_n| = n``, each intersecting, and checks every
invariant of the construction as it goes.  Positions are 0-based.
"""
from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from .core import CoxeterSystem, GroupElement
from .errors import (BudgetExceeded, IndexOutOfRange, IndicesNotIncreasing, InvariantViolation,
                     SequenceInvalid)
from .incidence import (Hyperplane, hyperplane, intersects_interior, is_intersecting_set,
                        reflect_hyperplane, separates, sorted_hyperplanes)

__all__ = [
    "validate_sequence",
    "PathContext",
    "build_context",
    "ConstructionStep",
    "construct_chain",
    "enumerate_valid_sequences",
    "max_sequence_length",
]


def _check_indices(y_word, indices):
    for a, b in zip(indices, indices[1:]):
        if not a < b:
            raise IndicesNotIncreasing(f"indices {list(indices)} are not strictly increasing")
    for i in indices:
        if not 0 <= i < len(y_word):
            raise IndexOutOfRange(f"index {i} outside word of length {len(y_word)}")


def validate_sequence(x: GroupElement, y_word: Sequence[int], indices: Sequence[int]) -> bool:
    """Whether deleting ``indices`` from ``y_word`` obeys the descent condition at each step."""
    indices = tuple(indices)
    _check_indices(y_word, indices)
    system = x.system
    u, pos = x, 0
    for j in indices:
        for s in y_word[pos:j]:
            u = system.mul_generator(u, s)
        if y_word[j] not in u.right_descents:
            return False
        pos = j + 1
    return True


@dataclass(frozen=True)
class PathContext:
    """The walk from ``xC`` to ``xyC`` and the data attached to each deleted position.

    All per-step lists are indexed by ``n - 1`` for ``n = 1..p``, except
    ``e`` which holds ``e_0 = identity`` at index 0.
    """

    x: GroupElement
    y_word: tuple
    indices: tuple
    x_n: tuple        # x s_1 ... s_{i_n - 1}
    sigma: tuple      # reflections x_n s_{i_n} x_n^-1
    H: tuple          # hyperplanes of the sigma_n
    e: tuple          # e_n = sigma_n ... sigma_1

    @property
    def system(self) -> CoxeterSystem:
        return self.x.system

    @property
    def p(self) -> int:
        return len(self.indices)

    def after_crossing(self, n: int) -> GroupElement:
        """``x_n s_{i_n}``."""
        return self.system.mul_generator(self.x_n[n - 1], self.y_word[self.indices[n - 1]])

    def witness(self, **extra) -> dict:
        out = {
            "coxeter_matrix": [[m if m != float("inf") else 0 for m in row]
                               for row in self.system.coxeter_matrix],
            "x": list(self.x.word),
            "y_word": list(self.y_word),
            "indices": list(self.indices),
        }
        out.update(extra)
        return out


def build_context(x: GroupElement, y_word: Sequence[int], indices: Sequence[int]) -> PathContext:
    y_word, indices = tuple(y_word), tuple(indices)
    if not validate_sequence(x, y_word, indices):
        raise SequenceInvalid(f"indices {list(indices)} violate the descent condition")
    system = x.system
    prefixes = [x]
    for s in y_word:
        prefixes.append(system.mul_generator(prefixes[-1], s))
    x_n, sigma, H = [], [], []
    e = [system.identity]
    for j in indices:
        xn = prefixes[j]
        s = y_word[j]
        sig = xn * system.generators[s] * xn.inverse()
        Hn = hyperplane(system, system.act(xn, system.simple_root(s)))
        x_n.append(xn)
        sigma.append(sig)
        H.append(Hn)
        e.append(sig * e[-1])
    ctx = PathContext(x, y_word, indices, tuple(x_n), tuple(sigma), tuple(H), tuple(e))

    x1 = ctx.x_n[0] if ctx.p else None
    for n in range(1, ctx.p + 1):
        Hn = ctx.H[n - 1]
        if ctx.sigma[n - 1] != Hn.reflection():
            raise InvariantViolation(n, "sigma_matches_hyperplane", ctx.witness(n=n))
        if not separates(Hn, x1, ctx.e[n - 1]):
            raise InvariantViolation(n, "H_n_separates_x1_e_prev", ctx.witness(n=n))
        if separates(Hn, x1, ctx.e[n]):
            raise InvariantViolation(n, "x1_e_n_same_side_of_H_n", ctx.witness(n=n))
    return ctx


@dataclass
class ConstructionStep:
    n: int
    cascade: list          # A_0, ..., A_{l-1}
    B: list
    Q: list
    b_sigma: list
    checks: dict = field(default_factory=dict)

    @property
    def A(self) -> list:
        return [P for level in self.cascade for P in level]

    def to_json(self) -> dict:
        def js(planes):
            return [P.to_json() for P in planes]

        return {
            "n": self.n,
            "cascade": [js(level) for level in self.cascade],
            "B": js(self.B),
            "B_sigma": js(self.b_sigma),
            "Q": js(self.Q),
            "checks": dict(self.checks),
        }


def _fail(ctx, n, prop, **witness):
    raise InvariantViolation(n, prop, ctx.witness(n=n, **{
        k: (repr(v) if isinstance(v, (Hyperplane, list)) else v) for k, v in witness.items()}))


def _final_checks(ctx: PathContext, n: int, Q: list, step: ConstructionStep):
    x1 = ctx.x_n[0]
    Hn = ctx.H[n - 1]
    after = ctx.after_crossing(n)
    checks = step.checks
    checks["C"] = len(set(Q)) == n == len(Q)
    if not checks["C"]:
        _fail(ctx, n, "C", size=len(set(Q)))
    checks["I"] = is_intersecting_set(Q)
    if not checks["I"]:
        bad = next([P, R] for i, P in enumerate(Q) for R in Q[i + 1:]
                   if not intersects_interior(P, R))
        _fail(ctx, n, "I", pair=bad)
    checks["H"] = Hn in Q
    if not checks["H"]:
        _fail(ctx, n, "H", H_n=Hn)
    for P in Q:
        if not separates(P, x1, after):
            checks["S"] = False
            _fail(ctx, n, "S", hyperplane=P)
    checks["S"] = True
    for P in Q:
        if separates(P, x1, ctx.e[n]):
            checks["U"] = False
            _fail(ctx, n, "U", hyperplane=P)
    checks["U"] = True


def construct_chain(ctx: PathContext) -> list[ConstructionStep]:
    """Build ``Q_1 .. Q_p`` and verify C, I, H, S, U plus the auxiliary step facts.

    Raises :class:`InvariantViolation` on the first failed check.
    """
    if ctx.p == 0:
        return []
    x1 = ctx.x_n[0]
    Q1 = [ctx.H[0]]
    step = ConstructionStep(1, [], [], Q1, [])
    _final_checks(ctx, 1, Q1, step)
    steps = [step]
    prev = Q1
    for n in range(2, ctx.p + 1):
        sigma, Hn, en = ctx.sigma[n - 1], ctx.H[n - 1], ctx.e[n]
        prev_set = set(prev)
        reflected = {P: reflect_hyperplane(sigma, P) for P in prev}

        A0 = [P for P in prev if separates(P, x1, en)]
        cascade = []
        used = set()
        level = A0
        while level:
            cascade.append(level)
            used.update(level)
            images = [reflected[R] for R in level]
            level = [P for P in prev if P not in used
                     and any(not intersects_interior(P, img) for img in images)]
        A = [P for lv in cascade for P in lv]
        A_set = set(A)
        B = [P for P in prev if P not in A_set]
        b_sigma = [P for P in prev if separates(reflected[P], x1, en)]
        sigma_A = [reflected[P] for P in A]
        Q = sorted_hyperplanes(sigma_A + B + [Hn])
        step = ConstructionStep(n, cascade, B, Q, b_sigma)
        checks = step.checks

        checks["H_n_not_in_previous"] = Hn not in prev_set
        if not checks["H_n_not_in_previous"]:
            _fail(ctx, n, "H_n_not_in_previous", H_n=Hn)
        checks["H_n_meets_previous"] = all(intersects_interior(Hn, P) for P in prev)
        if not checks["H_n_meets_previous"]:
            _fail(ctx, n, "H_n_meets_previous", H_n=Hn)
        clash = [P for P in sigma_A if P in prev_set]
        checks["reflected_A_disjoint_previous"] = not clash
        if clash:
            _fail(ctx, n, "reflected_A_disjoint_previous", hyperplane=clash[0])
        overlap = [P for P in b_sigma if P in A_set]
        checks["A_disjoint_B_sigma"] = not overlap
        if overlap:
            _fail(ctx, n, "A_disjoint_B_sigma", hyperplane=overlap[0])
        _final_checks(ctx, n, Q, step)
        steps.append(step)
        prev = Q
    return steps


def enumerate_valid_sequences(x: GroupElement, y_word: Sequence[int], max_p: int | None = None,
                              budget: int | None = None) -> Iterator[tuple]:
    """Depth-first, lexicographic enumeration of admissible deletion sequences.

    Includes the empty sequence.  Raises :class:`BudgetExceeded` after
    ``budget`` sequences.
    """
    system = x.system
    word = tuple(y_word)
    k = len(word)
    count = 0

    def walk(i, u, chosen):
        nonlocal count
        # chosen is admissible; extend with any later admissible position
        count += 1
        if budget is not None and count > budget:
            raise BudgetExceeded(f"sequence budget {budget} exceeded")
        yield chosen
        if max_p is not None and len(chosen) >= max_p:
            return
        v = u
        for j in range(i, k):
            s = word[j]
            if s in v.right_descents:
                yield from walk(j + 1, v, chosen + (j,))
            v = system.mul_generator(v, s)

    yield from walk(0, x, ())


def max_sequence_length(x: GroupElement, y_word: Sequence[int]) -> int:
    return max(len(seq) for seq in enumerate_valid_sequences(x, y_word))
