"""Coxeter systems, their geometric representation, roots and descents.

Generators are indexed ``0 .. rank-1``.  Vectors in ``V`` are tuples of
:class:`~heckebound.field.ExactReal` coordinates in the basis of simple
roots; a group element is stored as the matrix of its action together with
the inverse matrix, and two elements are equal iff their matrices are.
"""
from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction

from .errors import BudgetExceeded, InvalidSystemError, MixedSignError
from .field import ExactReal, cyclotomic_field

__all__ = [
    "INF",
    "CoxeterSystem",
    "GroupElement",
    "RootVector",
    "RootLevels",
    "root_sign",
    "positive_representative",
    "root_key",
]

INF = math.inf

RootVector = tuple  # tuple[ExactReal, ...]


def root_sign(v: RootVector) -> int:
    """Return ``1`` for a positive root and ``-1`` for a negative one.

    Raises :class:`MixedSignError` when ``v`` has coordinates of both signs
    or is zero, which never happens for an actual root.
    """
    pos = neg = False
    for c in v:
        s = c.sign()
        if s > 0:
            pos = True
        elif s < 0:
            neg = True
    if pos and not neg:
        return 1
    if neg and not pos:
        return -1
    raise MixedSignError(f"vector {tuple(str(c) for c in v)} is not a root")


def positive_representative(v: RootVector) -> RootVector:
    return v if root_sign(v) > 0 else tuple(-c for c in v)


def root_key(v: RootVector):
    """Deterministic exact key: float height first, then exact coefficients."""
    return (round(sum(float(c) for c in v), 9), tuple(c.key() for c in v))


def _order(m) -> float:
    if m == INF:
        return INF
    if isinstance(m, float) and m.is_integer():
        m = int(m)
    if not isinstance(m, int) or isinstance(m, bool):
        raise InvalidSystemError(f"Coxeter matrix entry {m!r} is not an integer or inf")
    return m


class CoxeterSystem:
    """A Coxeter system ``(W, S)`` of finite rank with a positive weight function.

    Parameters
    ----------
    matrix : sequence of sequences
        Symmetric Coxeter matrix, ``1`` on the diagonal, entries ``>= 2`` or
        :data:`INF` off the diagonal.
    weights : sequence of int, optional
        ``L(s)`` per generator; defaults to the length function.
    name : str, optional
        Label used in reports.
    """

    def __init__(self, matrix: Sequence[Sequence], weights: Sequence[int] | None = None,
                 name: str | None = None):
        rows = [tuple(_order(m) for m in row) for row in matrix]
        n = len(rows)
        if n < 1:
            raise InvalidSystemError("rank must be positive")
        for row in rows:
            if len(row) != n:
                raise InvalidSystemError("Coxeter matrix must be square")
        for s in range(n):
            if rows[s][s] != 1:
                raise InvalidSystemError(f"diagonal entry m[{s}][{s}] must be 1")
            for t in range(n):
                if rows[s][t] != rows[t][s]:
                    raise InvalidSystemError("Coxeter matrix must be symmetric")
                if s != t and rows[s][t] < 2:
                    raise InvalidSystemError(f"off-diagonal entry m[{s}][{t}] must be >= 2")
        if weights is None:
            weights = [1] * n
        weights = tuple(weights)
        if len(weights) != n:
            raise InvalidSystemError("one weight per generator required")
        for w in weights:
            if not isinstance(w, int) or isinstance(w, bool) or w < 1:
                raise InvalidSystemError(f"weight {w!r} must be a positive integer")
        for s in range(n):
            for t in range(s + 1, n):
                m = rows[s][t]
                # s and t are conjugate when m is odd
                if m != INF and m % 2 == 1 and weights[s] != weights[t]:
                    raise InvalidSystemError(
                        f"weights of generators {s} and {t} must agree (m = {m} is odd)")

        self.rank = n
        self.coxeter_matrix = tuple(rows)
        self.weights = weights
        self.name = name

        order = 2
        for s in range(n):
            for t in range(n):
                if s != t and rows[s][t] != INF:
                    order = math.lcm(order, 2 * rows[s][t])
        self.field = F = cyclotomic_field(order)

        def two_b(m):
            return F.rational(-2) if m == INF else F.cos_pi_over(m) * (-2)

        self.two_form = tuple(tuple(two_b(rows[s][t]) for t in range(n)) for s in range(n))
        self.form = tuple(tuple(c * Fraction(1, 2) for c in row) for row in self.two_form)
        self._nonzero_two_form = tuple(
            tuple((t, c) for t, c in enumerate(row) if not c.is_zero()) for row in self.two_form)

        zero, one = F.zero, F.one
        ident = tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))
        self._elements: dict = {}
        self._right_mul: dict = {}
        self.identity = self._intern(ident, ident)
        self.identity._word = ()
        self.generators = tuple(self._generator(s) for s in range(n))

    def __repr__(self):
        label = f"{self.name}, " if self.name else ""
        return f"CoxeterSystem({label}rank={self.rank})"

    @property
    def max_weight(self) -> int:
        return max(self.weights)

    def is_equal_parameter(self) -> bool:
        return len(set(self.weights)) == 1

    def with_weights(self, weights) -> "CoxeterSystem":
        return CoxeterSystem(self.coxeter_matrix, weights, name=self.name)

    # -- vectors -------------------------------------------------------
    def simple_root(self, s: int) -> RootVector:
        F = self.field
        return tuple(F.one if t == s else F.zero for t in range(self.rank))

    def _check_dim(self, *vecs):
        for v in vecs:
            if len(v) != self.rank:
                raise ValueError(f"dimension mismatch: expected {self.rank}, got {len(v)}")

    def bilinear_form(self, u: RootVector, v: RootVector) -> ExactReal:
        """The invariant form ``B(u, v)``."""
        self._check_dim(u, v)
        total = self.field.zero
        for s in range(self.rank):
            if u[s].is_zero():
                continue
            for t, c in self._nonzero_two_form[s]:
                if not v[t].is_zero():
                    total = total + u[s] * c * v[t]
        return total * Fraction(1, 2)

    def reflect(self, alpha: RootVector, v: RootVector) -> RootVector:
        """Apply the reflection ``v - 2 B(alpha, v) alpha`` for a unit vector ``alpha``."""
        self._check_dim(alpha, v)
        c = self.bilinear_form(alpha, v) * 2
        if c.is_zero():
            return tuple(v)
        return tuple(vi - c * ai for vi, ai in zip(v, alpha))

    def reflect_simple(self, s: int, v: RootVector) -> RootVector:
        c = self.field.zero
        for t, b in self._nonzero_two_form[s]:
            if not v[t].is_zero():
                c = c + b * v[t]
        if c.is_zero():
            return tuple(v)
        out = list(v)
        out[s] = v[s] - c
        return tuple(out)

    def act(self, w: "GroupElement", v: RootVector) -> RootVector:
        """Apply ``w`` to ``v``."""
        self._check_dim(v)
        return _mat_vec(w.matrix, v, self.field.zero)

    # -- group elements ------------------------------------------------
    def _intern(self, matrix, inverse) -> "GroupElement":
        el = self._elements.get(matrix)
        if el is None:
            el = GroupElement(self, matrix, inverse)
            self._elements[matrix] = el
        return el

    def _generator(self, s: int) -> "GroupElement":
        n = self.rank
        F = self.field
        rows = []
        for i in range(n):
            if i == s:
                rows.append(tuple((F.one if t == s else F.zero) - self.two_form[s][t]
                                  for t in range(n)))
            else:
                rows.append(tuple(F.one if t == i else F.zero for t in range(n)))
        mat = tuple(rows)
        el = self._intern(mat, mat)
        el._word = (s,)
        return el

    def mul_generator(self, x: "GroupElement", s: int) -> "GroupElement":
        """``x * s`` with memoization; updates columns of ``x`` and row ``s`` of its inverse."""
        key = (x, s)
        hit = self._right_mul.get(key)
        if hit is not None:
            return hit
        terms = self._nonzero_two_form[s]
        mat = tuple(
            tuple(row[t] - c * row[s] if c is not None else row[t]
                  for t, c in _dense(terms, self.rank))
            for row in x.matrix)
        inv_rows = list(x.inverse_matrix)
        new_row = list(inv_rows[s])
        for t, c in terms:
            src = x.inverse_matrix[t]
            for j in range(self.rank):
                if not src[j].is_zero():
                    new_row[j] = new_row[j] - c * src[j]
        inv_rows[s] = tuple(new_row)
        y = self._intern(mat, tuple(inv_rows))
        self._right_mul[key] = y
        return y

    def element(self, word: Sequence[int]) -> "GroupElement":
        """The element represented by a (possibly non-reduced) word."""
        x = self.identity
        for s in word:
            self._check_generator(s)
            x = self.mul_generator(x, s)
        return x

    def _check_generator(self, s):
        if not isinstance(s, int) or not 0 <= s < self.rank:
            raise ValueError(f"generator index {s!r} out of range for rank {self.rank}")

    def multiply(self, x: "GroupElement", y: "GroupElement") -> "GroupElement":
        zero = self.field.zero
        return self._intern(_mat_mul(x.matrix, y.matrix, zero),
                            _mat_mul(y.inverse_matrix, x.inverse_matrix, zero))

    def reflection(self, alpha: RootVector) -> "GroupElement":
        """The reflection ``sigma_alpha`` as a group element (its own inverse)."""
        self._check_dim(alpha)
        cols = [self.reflect(alpha, self.simple_root(j)) for j in range(self.rank)]
        mat = tuple(tuple(cols[j][i] for j in range(self.rank)) for i in range(self.rank))
        return self._intern(mat, mat)

    def right_descent(self, x: "GroupElement", s: int) -> bool:
        """``xs < x``, i.e. ``x alpha_s`` is a negative root."""
        return s in x.right_descents

    def left_descent(self, x: "GroupElement", s: int) -> bool:
        return s in x.left_descents

    def reduced_words(self, x: "GroupElement") -> list[tuple]:
        """All reduced words of ``x``, lexicographically sorted."""
        memo: dict = {self.identity: [()]}

        def words(w):
            hit = memo.get(w)
            if hit is None:
                hit = sorted(u + (s,) for s in w.right_descents
                             for u in words(self.mul_generator(w, s)))
                memo[w] = hit
            return hit

        return words(x)

    def length(self, x: "GroupElement") -> int:
        return len(x.word)

    def weight(self, x: "GroupElement") -> int:
        return sum(self.weights[s] for s in x.word)

    def word_weight(self, word: Sequence[int]) -> int:
        return sum(self.weights[s] for s in word)

    # -- enumeration ---------------------------------------------------
    def enumerate_elements(self, max_len: int, budget: int | None = None,
                           generators: Sequence[int] | None = None) -> Iterator["GroupElement"]:
        """Breadth-first enumeration of elements with ``length <= max_len``.

        ``generators`` restricts to a standard parabolic subgroup.  Raises
        :class:`BudgetExceeded` once more than ``budget`` elements were produced.
        """
        if max_len < 0:
            raise ValueError("max_len must be >= 0")
        gens = tuple(range(self.rank)) if generators is None else tuple(sorted(generators))
        level = [self.identity]
        seen = {self.identity}
        count = 0
        for ell in range(max_len + 1):
            nxt = []
            for w in level:
                count += 1
                if budget is not None and count > budget:
                    raise BudgetExceeded(f"element budget {budget} exceeded at length {ell}",
                                         partial=list(seen))
                yield w
                if ell == max_len:
                    continue
                for s in gens:
                    if s in w.right_descents:
                        continue
                    ws = self.mul_generator(w, s)
                    if ws not in seen:
                        seen.add(ws)
                        nxt.append(ws)
            if not nxt:
                return
            level = nxt

    def elements(self, max_len: int, budget: int | None = None, generators=None) -> list:
        return list(self.enumerate_elements(max_len, budget, generators))

    def positive_roots_by_depth(self, max_depth: int, budget: int | None = None,
                                generators: Sequence[int] | None = None) -> "RootLevels":
        """Positive roots grouped by depth.

        Depth 0 holds the simple roots; depth ``d`` holds the positive roots
        first reached by ``d`` simple reflections.
        """
        if max_depth < 0:
            raise ValueError("max_depth must be >= 0")
        gens = tuple(range(self.rank)) if generators is None else tuple(sorted(generators))
        level = [self.simple_root(s) for s in gens]
        seen = set(level)
        levels = [level]
        for _ in range(max_depth):
            nxt = []
            for beta in level:
                for s in gens:
                    gamma = self.reflect_simple(s, beta)
                    if gamma in seen or root_sign(gamma) < 0:
                        continue
                    seen.add(gamma)
                    nxt.append(gamma)
                    if budget is not None and len(seen) > budget:
                        raise BudgetExceeded(f"root budget {budget} exceeded",
                                             partial=[r for lv in levels for r in lv] + nxt)
            if not nxt:
                return RootLevels(levels, complete=True)
            levels.append(nxt)
            level = nxt
        # a further level might still be empty
        for beta in level:
            for s in gens:
                gamma = self.reflect_simple(s, beta)
                if gamma not in seen and root_sign(gamma) > 0:
                    return RootLevels(levels, complete=False)
        return RootLevels(levels, complete=True)

    def positive_roots(self, max_depth: int, budget: int | None = None,
                       generators=None) -> list:
        return self.positive_roots_by_depth(max_depth, budget, generators).roots


@dataclass(frozen=True)
class RootLevels:
    levels: list
    complete: bool  # True when no positive root lies beyond the last level

    @property
    def roots(self) -> list:
        return [r for lv in self.levels for r in lv]

    def depth_of(self) -> dict:
        return {r: d for d, lv in enumerate(self.levels) for r in lv}


class GroupElement:
    """An element of ``W`` given by its matrix on ``V`` (plus cached inverse and word).

    Instances are interned per system, so identity comparison usually
    suffices, but equality is defined by the matrix.
    """

    __slots__ = ("system", "matrix", "inverse_matrix", "_word", "_rdes", "_ldes", "_hash",
                 "__weakref__")

    def __init__(self, system: CoxeterSystem, matrix, inverse_matrix):
        self.system = system
        self.matrix = matrix
        self.inverse_matrix = inverse_matrix
        self._word = None
        self._rdes = None
        self._ldes = None
        self._hash = hash(matrix)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.system is other.system and self.matrix == other.matrix

    def __hash__(self):
        return self._hash

    def __mul__(self, other):
        if isinstance(other, GroupElement):
            return self.system.multiply(self, other)
        return NotImplemented

    def inverse(self) -> "GroupElement":
        return self.system._intern(self.inverse_matrix, self.matrix)

    @property
    def right_descents(self) -> frozenset:
        if self._rdes is None:
            n = self.system.rank
            self._rdes = frozenset(
                s for s in range(n)
                if root_sign(tuple(self.matrix[i][s] for i in range(n))) < 0)
        return self._rdes

    @property
    def left_descents(self) -> frozenset:
        if self._ldes is None:
            n = self.system.rank
            self._ldes = frozenset(
                s for s in range(n)
                if root_sign(tuple(self.inverse_matrix[i][s] for i in range(n))) < 0)
        return self._ldes

    @property
    def word(self) -> tuple:
        """Canonical reduced word: repeatedly strip the smallest right descent."""
        if self._word is None:
            letters = []
            x = self
            while x._word is None:
                des = x.right_descents
                if not des:
                    break  # identity
                s = min(des)
                letters.append(s)
                x = self.system.mul_generator(x, s)
            prefix = x._word if x._word is not None else ()
            self._word = tuple(prefix) + tuple(reversed(letters))
        return self._word

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return self is self.system.identity or self == self.system.identity

    def __repr__(self):
        return f"<w {list(self.word)}>"


def _dense(terms, n):
    coeffs = [None] * n
    for t, c in terms:
        coeffs[t] = c
    return list(enumerate(coeffs))


def _mat_vec(mat, v, zero):
    out = []
    for row in mat:
        acc = zero
        for a, b in zip(row, v):
            if not a.is_zero() and not b.is_zero():
                acc = acc + a * b
        out.append(acc)
    return tuple(out)


def _mat_mul(a, b, zero):
    n = len(a)
    cols = [tuple(b[k][j] for k in range(n)) for j in range(n)]
    return tuple(tuple(_dot(row, col, zero) for col in cols) for row in a)


def _dot(u, v, zero):
    acc = zero
    for x, y in zip(u, v):
        if not x.is_zero() and not y.is_zero():
            acc = acc + x * y
    return acc
