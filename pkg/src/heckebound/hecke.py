"""Iwahori-Hecke algebra in the standard basis.

Products ``T_x T_y`` are computed two ways: by folding the generators of a
reduced word of ``y`` into ``T_x`` (:func:`structure_constants`), and by
enumerating the admissible deletion sequences of that word
(:func:`enumerate_expansion`).  The two must agree term by term.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .core import CoxeterSystem, GroupElement
from .errors import BudgetExceeded

__all__ = [
    "LaurentPoly",
    "HeckeElement",
    "ExpansionTerm",
    "quadratic_coefficient",
    "mult_by_generator",
    "structure_constants",
    "enumerate_expansion",
    "aggregate_expansion",
    "max_f_degree",
    "DegreeReport",
    "verify_bound",
    "BoundCheck",
]


class LaurentPoly:
    """Integer Laurent polynomial in ``v``, stored sparsely as ``{exponent: coeff}``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {0: terms}
        self.terms = {e: c for e, c in dict(terms).items() if c}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.terms.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        result = LaurentPoly(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def deg(self) -> int | None:
        """Top degree, or ``None`` for the zero polynomial."""
        return max(self.terms) if self.terms else None

    def valuation(self) -> int | None:
        return min(self.terms) if self.terms else None

    def eval_at_one(self) -> int:
        return sum(self.terms.values())

    def to_json(self) -> dict:
        return {str(e): c for e, c in sorted(self.terms.items())}

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "" if e == 0 else ("v" if e == 1 else f"v^{e}")
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def quadratic_coefficient(weight: int) -> LaurentPoly:
    """``v^L - v^-L``."""
    return LaurentPoly({weight: 1, -weight: -1})


class HeckeElement(dict):
    """Sparse map ``GroupElement -> LaurentPoly``; zero coefficients are dropped."""

    def add_term(self, w: GroupElement, coeff: LaurentPoly):
        total = self[w] + coeff if w in self else coeff
        if total.is_zero():
            self.pop(w, None)
        else:
            self[w] = total

    @classmethod
    def basis(cls, w: GroupElement) -> "HeckeElement":
        return cls({w: LaurentPoly(1)})

    def sorted_items(self):
        return sorted(self.items(), key=lambda kv: (len(kv[0].word), kv[0].word))

    def to_json(self) -> list:
        return [{"z": list(w.word), "f": str(c), "coeffs": c.to_json()}
                for w, c in self.sorted_items()]


def mult_by_generator(h: HeckeElement, s: int) -> HeckeElement:
    """Right multiplication by ``T_s``."""
    out = HeckeElement()
    if not h:
        return out
    system = next(iter(h)).system
    q = quadratic_coefficient(system.weights[s])
    for w, c in h.items():
        ws = system.mul_generator(w, s)
        if s in w.right_descents:
            out.add_term(w, c * q)
        out.add_term(ws, c)
    return out


def structure_constants(x: GroupElement, y: GroupElement | Sequence[int]) -> HeckeElement:
    """``T_x T_y`` as ``{z: f_{x,y,z}}``; ``y`` may be given as a reduced word."""
    word = y.word if isinstance(y, GroupElement) else tuple(y)
    h = HeckeElement.basis(x)
    for s in word:
        h = mult_by_generator(h, s)
    return h


@dataclass(frozen=True)
class ExpansionTerm:
    indices: tuple  # 0-based positions deleted from the word of y
    z: GroupElement
    xi: LaurentPoly


def enumerate_expansion(x: GroupElement, y_word: Sequence[int],
                        budget: int | None = None) -> list[ExpansionTerm]:
    """All terms ``xi_I T_{z_I}`` of ``T_x T_y`` indexed by admissible deletion sets.

    Position ``i`` may be deleted only when the current prefix element
    ``u`` (earlier deletions applied) satisfies ``u s_i < u``.  Terms are
    listed in depth-first order, deleting before keeping.
    """
    system = x.system
    word = tuple(y_word)
    k = len(word)
    terms: list[ExpansionTerm] = []
    stack = [(0, x, (), LaurentPoly(1))]
    while stack:
        i, u, chosen, xi = stack.pop()
        if i == k:
            terms.append(ExpansionTerm(chosen, u, xi))
            if budget is not None and len(terms) > budget:
                raise BudgetExceeded(f"expansion budget {budget} exceeded", partial=terms)
            continue
        s = word[i]
        stack.append((i + 1, system.mul_generator(u, s), chosen, xi))
        if s in u.right_descents:
            stack.append((i + 1, u, chosen + (i,),
                          xi * quadratic_coefficient(system.weights[s])))
    return terms


def aggregate_expansion(terms: Iterable[ExpansionTerm]) -> HeckeElement:
    h = HeckeElement()
    for t in terms:
        h.add_term(t.z, t.xi)
    return h


@dataclass(frozen=True)
class DegreeReport:
    degree: int
    witness: GroupElement
    p_max: int
    max_weight: int

    @property
    def within_sequence_bound(self) -> bool:
        """``degree <= p_max * L_m``, always true."""
        return self.degree <= self.p_max * self.max_weight


def max_f_degree(x: GroupElement, y: GroupElement | Sequence[int]) -> DegreeReport:
    """Top degree of ``f_{x,y,z}`` over ``z``, a witness ``z``, and the longest deletion set."""
    word = y.word if isinstance(y, GroupElement) else tuple(y)
    h = structure_constants(x, word)
    witness, degree = None, None
    for z, f in h.sorted_items():
        d = f.deg()
        if degree is None or d > degree:
            degree, witness = d, z
    p_max = max(len(t.indices) for t in enumerate_expansion(x, word))
    return DegreeReport(degree, witness, p_max, x.system.max_weight)


@dataclass
class BoundCheck:
    bound: int
    pairs_checked: int = 0
    max_degree: int | None = None
    max_witness: tuple | None = None
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "bound": self.bound,
            "pairs_checked": self.pairs_checked,
            "max_degree": self.max_degree,
            "max_witness": self.max_witness,
            "passed": self.passed,
            "violations": self.violations,
        }


def verify_bound(system: CoxeterSystem, bound: int,
                 pairs: Iterable[tuple[GroupElement, GroupElement]]) -> BoundCheck:
    """Check ``deg f_{x,y,z} <= bound`` on every supplied pair."""
    report = BoundCheck(bound)
    for x, y in pairs:
        h = structure_constants(x, y)
        report.pairs_checked += 1
        for z, f in h.sorted_items():
            d = f.deg()
            if report.max_degree is None or d > report.max_degree:
                report.max_degree = d
                report.max_witness = (list(x.word), list(y.word), list(z.word))
            if d > bound:
                report.violations.append({"x": list(x.word), "y": list(y.word),
                                          "z": list(z.word), "degree": d})
    return report
