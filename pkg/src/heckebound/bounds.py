"""Bounds for the degrees of Hecke structure constants.

``N_L(W)`` comes from the finite standard parabolic subgroups.  The
maximal size ``N'(W)`` of an intersecting set of hyperplanes is bracketed
from below by an exact clique search on the roots up to a given depth, and
from above by a Ramsey argument over the finite palette of form values.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from functools import lru_cache

from .core import CoxeterSystem, GroupElement, RootVector, root_key
from .errors import BudgetExceeded, NonConstantOffDiagonal
from .field import QQ, CyclotomicField, ExactReal
from .incidence import Hyperplane, hyperplane, is_intersecting_set

__all__ = [
    "OVERFLOW",
    "Parabolic",
    "leading_principal_minors",
    "is_positive_definite",
    "is_finite_parabolic",
    "finite_parabolics",
    "n_weighted",
    "n_unweighted",
    "ColSet",
    "col_set",
    "ramsey_upper",
    "ramsey_two_color",
    "NPrimeBound",
    "n_prime_upper",
    "CliqueResult",
    "max_clique",
    "max_intersecting_clique",
    "matrix_rank",
    "gram_matrix",
    "gram_rank_check",
    "equal_gram_rank",
    "expected_equal_gram_rank",
    "BoundReport",
    "bound_report",
]


class _Overflow:
    """Sentinel for a bound that exceeds the configured magnitude."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "OVERFLOW"

    def __reduce__(self):
        return (_Overflow, ())


OVERFLOW = _Overflow()

DEFAULT_RAMSEY_LIMIT = 10 ** 100


# -- finite parabolic subgroups ------------------------------------------

def leading_principal_minors(matrix) -> list:
    """Leading principal minors by elimination without pivoting.

    Stops after the first zero minor (later minors cannot be read off the
    pivots); the returned list is then shorter than the matrix.
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    minors = []
    det = None
    for k in range(n):
        pivot = rows[k][k]
        det = pivot if det is None else det * pivot
        minors.append(det)
        if pivot.is_zero():
            break
        inv = pivot.inverse()
        for i in range(k + 1, n):
            f = rows[i][k]
            if f.is_zero():
                continue
            f = f * inv
            rows[i] = [a - f * b for a, b in zip(rows[i], rows[k])]
    return minors


def is_positive_definite(matrix) -> bool:
    minors = leading_principal_minors(matrix)
    return len(minors) == len(matrix) and all(m.sign() > 0 for m in minors)


def _sub_gram(system: CoxeterSystem, subset) -> list:
    return [[system.form[s][t] for t in subset] for s in subset]


def is_finite_parabolic(system: CoxeterSystem, subset) -> bool:
    """``W_I`` is finite iff the Gram matrix of ``I`` is positive definite."""
    subset = tuple(sorted(subset))
    return not subset or is_positive_definite(_sub_gram(system, subset))


@dataclass(frozen=True)
class Parabolic:
    subset: tuple
    order: int
    longest: GroupElement
    length: int
    weight: int
    positive_roots: int


def finite_parabolics(system: CoxeterSystem, budget: int = 200_000) -> list[Parabolic]:
    """Every finite standard parabolic subgroup with its longest element.

    Finiteness comes from the Gram matrix and is then confirmed by a
    breadth-first enumeration of the subgroup, which must terminate within
    ``budget`` elements.
    """
    out = []
    for size in range(system.rank + 1):
        for subset in itertools.combinations(range(system.rank), size):
            if not is_finite_parabolic(system, subset):
                continue
            # |W_I| is finite, so no element is longer than the number of its roots
            roots = system.positive_roots_by_depth(10 ** 9, budget=budget, generators=subset)
            n_roots = len(roots.roots) if subset else 0
            try:
                elements = system.elements(n_roots, budget=budget, generators=subset)
            except BudgetExceeded as exc:
                raise BudgetExceeded(
                    f"parabolic {subset} judged finite but enumeration exceeded {budget}",
                    partial=exc.partial) from exc
            longest = max(elements, key=lambda w: w.length)
            if longest.length != n_roots or not set(subset) <= longest.right_descents:
                raise BudgetExceeded(
                    f"parabolic {subset}: longest element length {longest.length} "
                    f"differs from root count {n_roots}")
            out.append(Parabolic(subset, len(elements), longest, longest.length,
                                 system.weight(longest), n_roots))
    return out


def n_weighted(system: CoxeterSystem, parabolics=None) -> int:
    """``N_L(W)``: the largest ``L(w_I)`` over finite parabolic subgroups."""
    parabolics = finite_parabolics(system) if parabolics is None else parabolics
    return max(p.weight for p in parabolics)


def n_unweighted(system: CoxeterSystem, parabolics=None) -> int:
    """``N(W)``: the largest ``l(w_I)`` over finite parabolic subgroups."""
    parabolics = finite_parabolics(system) if parabolics is None else parabolics
    return max(p.length for p in parabolics)


# -- the palette of form values -------------------------------------------

@dataclass
class ColSet:
    values: list               # sorted by real value
    last_new_depth: int | None  # deepest level that contributed a new value
    max_depth: int
    complete: bool             # root system exhausted, so the set is exact

    @property
    def stabilized(self) -> bool:
        """Exact, or no new value during the last three levels (a heuristic only)."""
        if self.complete:
            return True
        last = -1 if self.last_new_depth is None else self.last_new_depth
        return self.max_depth - last >= 3

    @property
    def stabilized_at(self) -> int | None:
        return self.last_new_depth if self.stabilized else None

    def __len__(self):
        return len(self.values)


def col_set(system: CoxeterSystem, max_depth: int, budget: int | None = None) -> ColSet:
    """Values of ``B(alpha, beta)`` in ``(-1, 1)`` over positive roots up to ``max_depth``.

    Depth 0 is the simple roots.  Unless the root system is finite the result
    is a lower approximation of the true (finite) set.
    """
    enum = system.positive_roots_by_depth(max_depth, budget=budget)
    seen: dict = {}
    last_new = None
    older: list = []
    for depth, level in enumerate(enum.levels):
        for i, beta in enumerate(level):
            for alpha in itertools.chain(older, level[:i]):
                b = system.bilinear_form(alpha, beta)
                if b in seen:
                    continue
                if -1 < b < 1:
                    seen[b] = b
                    last_new = depth
        older.extend(level)
    values = sorted(seen, key=float)
    return ColSet(values, last_new, max_depth, enum.complete)


# -- Ramsey bound ------------------------------------------------------------

@lru_cache(maxsize=None)
def _two_color_recurrence(a: int, b: int) -> int:
    if a <= 1 or b <= 1:
        return 1
    return _two_color_recurrence(a - 1, b) + _two_color_recurrence(a, b - 1)


def ramsey_two_color(a: int, b: int) -> int:
    """Erdos-Szekeres bound ``R(a, b) <= R(a-1, b) + R(a, b-1)``, i.e. ``C(a+b-2, a-1)``."""
    if a <= 1 or b <= 1:
        return 1
    if a + b <= 60:
        return _two_color_recurrence(a, b)
    return math.comb(a + b - 2, a - 1)


def ramsey_upper(l: int, m: int, limit: int = DEFAULT_RAMSEY_LIMIT):
    """Upper bound for the ``m``-color Ramsey number ``R(l; m)``.

    Colors are merged one at a time: ``R(l; m) <= R(l, R(l; m-1))`` with
    ``R(l; 1) = l``.  Returns :data:`OVERFLOW` once the bound exceeds ``limit``.
    An empty palette is treated as a single color.
    """
    if l < 1:
        raise ValueError("clique size l must be >= 1")
    m = max(m, 1)
    bound = l
    for _ in range(m - 1):
        if bound > limit:
            return OVERFLOW
        if l > 2 and math.lgamma(l + bound - 1) - math.lgamma(l) - math.lgamma(bound) > math.log(limit) + 1:
            return OVERFLOW
        bound = ramsey_two_color(l, bound)
    return OVERFLOW if bound > limit else bound


@dataclass(frozen=True)
class NPrimeBound:
    value: object          # int or OVERFLOW: upper bound for N'(W)
    weighted: object       # value * L_m
    colors: int
    provisional: bool
    method: str            # "ramsey" or "finite_root_system"

    def to_json(self) -> dict:
        def js(x):
            return "overflow" if x is OVERFLOW else x

        return {"value": js(self.value), "weighted": js(self.weighted), "colors": self.colors,
                "provisional": self.provisional, "method": self.method}


def n_prime_upper(system: CoxeterSystem, col_depth: int, limit: int = DEFAULT_RAMSEY_LIMIT,
                  col: ColSet | None = None) -> NPrimeBound:
    """``R(|S| + 2; |Col|) - 1`` bounds ``N'(W)``; for finite ``W`` the root count is used if smaller.

    Provisional unless the palette was certified or stabilized.
    """
    col = col_set(system, col_depth) if col is None else col
    r = ramsey_upper(system.rank + 2, len(col), limit)
    value = OVERFLOW if r is OVERFLOW else r - 1
    method = "ramsey"
    enum = system.positive_roots_by_depth(col_depth)
    if enum.complete:
        n_roots = len(enum.roots)
        if value is OVERFLOW or n_roots < value:
            value, method = n_roots, "finite_root_system"
    weighted = OVERFLOW if value is OVERFLOW else value * system.max_weight
    return NPrimeBound(value, weighted, len(col), not col.stabilized, method)


# -- clique search -------------------------------------------------------------

@dataclass
class CliqueResult:
    size: int
    witness: list
    exhausted: bool
    nodes: int
    vertices: int = 0

    def to_json(self) -> dict:
        return {"size": self.size, "exhausted": self.exhausted, "nodes": self.nodes,
                "vertices": self.vertices,
                "witness": [P.to_json() for P in self.witness]}


def _greedy_color(candidates: int, adj: list, order: list):
    """Sequential coloring of the candidate set; returns vertices with non-decreasing colors."""
    verts, colors = [], []
    uncolored = candidates
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        for v in order:
            bit = 1 << v
            if avail & bit:
                verts.append(v)
                colors.append(color)
                uncolored &= ~bit
                avail &= ~adj[v] & ~bit
    return verts, colors


def max_clique(adj: list, budget: int | None = None, required=()) -> tuple[list, bool, int]:
    """Exact maximum clique by branch and bound with greedy-coloring bounds.

    ``adj`` holds neighbour bitmasks.  Returns ``(clique, exhausted, nodes)``;
    when the node budget runs out the best clique so far is returned with
    ``exhausted = False``.
    """
    n = len(adj)
    order = sorted(range(n), key=lambda v: (-bin(adj[v]).count("1"), v))
    best: list = []
    nodes = 0
    exhausted = True

    start = (1 << n) - 1
    for v in required:
        start &= adj[v]
    current = list(required)
    if len(current) > len(best):
        best = list(current)

    def expand(cand):
        nonlocal best, nodes, exhausted
        nodes += 1
        if budget is not None and nodes > budget:
            exhausted = False
            return
        verts, colors = _greedy_color(cand, adj, order)
        for v, c in zip(reversed(verts), reversed(colors)):
            if len(current) + c <= len(best) or not exhausted:
                return
            current.append(v)
            sub = cand & adj[v]
            if sub:
                expand(sub)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            cand &= ~(1 << v)

    if start:
        expand(start)
    return best, exhausted, nodes


def max_intersecting_clique(system: CoxeterSystem, max_depth: int, budget: int | None = None,
                            containing=()) -> CliqueResult:
    """Largest intersecting set among hyperplanes of positive roots up to ``max_depth``.

    With ``exhausted`` true the size is the exact maximum on this vertex set,
    hence a certified lower bound for ``N'(W)``.  ``containing`` forces given
    hyperplanes into the clique.
    """
    roots = sorted(system.positive_roots(max_depth), key=root_key)
    planes = [Hyperplane(system, r) for r in roots]
    index = {P: i for i, P in enumerate(planes)}
    required = []
    for P in containing:
        if P not in index:
            raise ValueError(f"required hyperplane {P!r} lies beyond depth {max_depth}")
        required.append(index[P])
    adj = [0] * len(planes)
    for i in range(len(planes)):
        for j in range(i + 1, len(planes)):
            b = system.bilinear_form(planes[i].alpha, planes[j].alpha)
            if -1 < b < 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    for a, b in itertools.combinations(required, 2):
        if not adj[a] >> b & 1:
            raise ValueError("required hyperplanes are not pairwise intersecting")
    clique, exhausted, nodes = max_clique(adj, budget, required)
    witness = sorted((planes[v] for v in clique), key=Hyperplane.sort_key)
    return CliqueResult(len(witness), witness, exhausted, nodes, len(planes))


# -- Gram matrices ---------------------------------------------------------------

def matrix_rank(matrix) -> int:
    """Exact rank by Gaussian elimination over the field of the entries."""
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    rank = 0
    ncols = len(rows[0])
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if not rows[r][c].is_zero()), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][c].inverse()
        for r in range(len(rows)):
            if r != rank and not rows[r][c].is_zero():
                f = rows[r][c] * inv
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def gram_matrix(system: CoxeterSystem, roots) -> list:
    return [[system.bilinear_form(a, b) for b in roots] for a in roots]


def expected_equal_gram_rank(k: int, a) -> int:
    """Rank of the ``k x k`` matrix with unit diagonal and constant off-diagonal ``a != 1``."""
    if k >= 2 and a * (k - 1) == -1:
        return k - 1
    return k


@dataclass(frozen=True)
class GramRank:
    rank: int
    expected_rank: int
    off_diagonal: object
    vector_rank: int | None = None

    @property
    def agrees(self) -> bool:
        return self.rank == self.expected_rank


def gram_rank_check(system: CoxeterSystem, roots) -> GramRank:
    """Rank of the Gram matrix of roots with a common off-diagonal value, vs. the closed form.

    Also reports the rank of the roots themselves, which bounds the Gram rank from above.
    """
    roots = list(roots)
    G = gram_matrix(system, roots)
    k = len(roots)
    offdiag = {G[i][j] for i in range(k) for j in range(k) if i != j}
    if len(offdiag) > 1:
        raise NonConstantOffDiagonal(f"{len(offdiag)} distinct off-diagonal values")
    a = next(iter(offdiag)) if offdiag else system.field.zero
    return GramRank(matrix_rank(G), expected_equal_gram_rank(k, a), a, matrix_rank(roots))


def equal_gram_rank(k: int, a, field: CyclotomicField = QQ) -> GramRank:
    """Synthetic check on the ``k x k`` matrix with ones on the diagonal and ``a`` elsewhere."""
    a = field.coerce(a)
    one = field.one
    G = [[one if i == j else a for j in range(k)] for i in range(k)]
    return GramRank(matrix_rank(G), expected_equal_gram_rank(k, a), a)


# -- combined report -----------------------------------------------------------

@dataclass
class BoundReport:
    n_weighted: int
    n_unweighted: int
    parabolics: list
    col: ColSet
    ramsey_upper: object
    n_prime: NPrimeBound
    clique: CliqueResult
    max_parabolic_roots_in_depth: int
    checks: dict = field(default_factory=dict)

    @property
    def clique_lower(self) -> int:
        return self.clique.size

    def to_json(self) -> dict:
        return {
            "n_weighted": self.n_weighted,
            "n_unweighted": self.n_unweighted,
            "parabolics": [{"subset": list(p.subset), "order": p.order, "longest": list(p.longest.word),
                            "length": p.length, "weight": p.weight} for p in self.parabolics],
            "col": {
                "values": [v.to_json() for v in self.col.values],
                "size": len(self.col),
                "last_new_depth": self.col.last_new_depth,
                "stabilized_at": self.col.stabilized_at,
                "complete": self.col.complete,
            },
            "ramsey_upper": "overflow" if self.ramsey_upper is OVERFLOW else self.ramsey_upper,
            "n_prime_upper": self.n_prime.to_json(),
            "clique_lower": self.clique_lower,
            "clique": self.clique.to_json(),
            "max_parabolic_roots_in_depth": self.max_parabolic_roots_in_depth,
            "checks": dict(self.checks),
        }


def bound_report(system: CoxeterSystem, depth: int, budget: int | None = None,
                 col_depth: int | None = None) -> BoundReport:
    """Everything at once, with the sandwich ``clique_lower <= N'(W) <= upper`` checked."""
    col_depth = depth if col_depth is None else col_depth
    paras = finite_parabolics(system)
    col = col_set(system, col_depth)
    r = ramsey_upper(system.rank + 2, len(col))
    npu = n_prime_upper(system, col_depth, col=col)
    clique = max_intersecting_clique(system, depth, budget)
    in_depth = set(system.positive_roots(depth))
    best_para = 0
    for p in paras:
        if p.subset:
            count = sum(1 for r_ in system.positive_roots(10 ** 9, generators=p.subset)
                        if r_ in in_depth)
            best_para = max(best_para, count)
    report = BoundReport(n_weighted(system, paras), n_unweighted(system, paras), paras, col, r,
                         npu, clique, best_para)
    report.checks["clique_is_intersecting"] = is_intersecting_set(clique.witness)
    report.checks["clique_covers_parabolic_roots"] = clique.size >= best_para if clique.exhausted else None
    if npu.value is not OVERFLOW:
        report.checks["lower_le_upper"] = clique.size <= npu.value
    else:
        report.checks["lower_le_upper"] = True
    return report
