"""Noncommutative polynomials over the central ring and a rewriting engine.

A term key is ``(mono, word)``: ``mono`` is a tuple of central exponents and
``word`` a tuple of generator indices.  Central symbols commute with
everything, so they live in the coefficient monomial rather than the word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from ..errors import StepCapExceeded
from ..exactmath import ONE, ZERO, Scalar, as_scalar
from .central import CentralDescriptor

__all__ = [
    "NCPoly",
    "TensorPoly",
    "RewriteRule",
    "RewriteSystem",
    "STEP_CAP",
    "is_subword",
]

STEP_CAP = 1_000_000

Word = tuple  # tuple[int, ...]
Key = tuple  # (mono, word)


def _clean(terms: Mapping) -> dict:
    return {k: c for k, c in terms.items() if not c.is_zero()}


class NCPoly:
    """Finite sum of ``coefficient * mono * word``; the empty word is the unit."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, Scalar] | None = None):
        self.terms = _clean(terms or {})

    @classmethod
    def word(cls, desc: CentralDescriptor, w: Iterable[int], c=ONE, mono=None) -> NCPoly:
        return cls({(desc.one if mono is None else mono, tuple(w)): as_scalar(c)})

    @classmethod
    def scalar(cls, desc: CentralDescriptor, c) -> NCPoly:
        return cls({(desc.one, ()): as_scalar(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: NCPoly) -> NCPoly:
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return NCPoly(out)

    def __neg__(self) -> NCPoly:
        return NCPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other: NCPoly) -> NCPoly:
        return self + (-other)

    def scale(self, c) -> NCPoly:
        c = as_scalar(c)
        return NCPoly({k: c * v for k, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, NCPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"NCPoly({len(self.terms)} terms)"


class TensorPoly:
    """Element of the tensor square: keys are ``(key_left, key_right)``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[Key, Key], Scalar] | None = None):
        self.terms = _clean(terms or {})

    def __add__(self, other: TensorPoly) -> TensorPoly:
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, ZERO) + c
        return TensorPoly(out)

    def __neg__(self):
        return TensorPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> TensorPoly:
        c = as_scalar(c)
        return TensorPoly({k: c * v for k, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))


@dataclass(frozen=True)
class RewriteRule:
    lhs: Word
    rhs: NCPoly
    line: int | None = None


def is_subword(small: Word, big: Word) -> bool:
    n = len(small)
    return any(big[i : i + n] == small for i in range(len(big) - n + 1))


class RewriteSystem:
    """Leftmost-longest rewriting with a memo of reduced words.

    The memo is a pure cache keyed by input word; results do not depend on
    call order.  Each top-level call is bounded by ``step_cap`` rule
    applications.
    """

    def __init__(self, desc: CentralDescriptor, rules: Iterable[RewriteRule], step_cap: int = STEP_CAP):
        self.desc = desc
        self.rules = tuple(rules)
        self.step_cap = step_cap
        index: dict[int, list[RewriteRule]] = {}
        for r in self.rules:
            index.setdefault(r.lhs[0], []).append(r)
        for v in index.values():
            v.sort(key=lambda r: -len(r.lhs))
        self._index = index
        self._memo: dict[Word, dict[Key, Scalar]] = {}

    # -- matching -----------------------------------------------------
    def find_match(self, w: Word) -> tuple[int, RewriteRule] | None:
        idx = self._index
        for i, a in enumerate(w):
            for r in idx.get(a, ()):
                n = len(r.lhs)
                if w[i : i + n] == r.lhs:
                    return i, r
        return None

    # -- algebra ------------------------------------------------------
    def product(self, a: NCPoly, b: NCPoly) -> NCPoly:
        """Concatenation product, not normalized."""
        out: dict = {}
        mul = self.desc.mul
        for (m1, w1), c1 in a.terms.items():
            for (m2, w2), c2 in b.terms.items():
                k = (mul(m1, m2), w1 + w2)
                out[k] = out.get(k, ZERO) + c1 * c2
        return NCPoly(out)

    def _word_nf(self, w: Word, budget: list[int]) -> dict[Key, Scalar]:
        memo = self._memo
        if w in memo:
            return memo[w]
        one = self.desc.one
        mul = self.desc.mul
        stack = [w]
        while stack:
            cur = stack[-1]
            if cur in memo:
                stack.pop()
                continue
            m = self.find_match(cur)
            if m is None:
                memo[cur] = {(one, cur): ONE}
                stack.pop()
                continue
            i, rule = m
            pre, post = cur[:i], cur[i + len(rule.lhs) :]
            children = [(mono, pre + rw + post, c) for (mono, rw), c in rule.rhs.terms.items()]
            pending = [cw for _, cw, _ in children if cw not in memo]
            if pending:
                budget[0] += 1
                if budget[0] > self.step_cap:
                    raise StepCapExceeded(
                        f"rewriting exceeded {self.step_cap} steps; check rule orientation"
                    )
                stack.extend(pending)
                continue
            out: dict[Key, Scalar] = {}
            for mono, cw, c in children:
                for (m2, w2), c2 in memo[cw].items():
                    k = (mul(mono, m2), w2)
                    out[k] = out.get(k, ZERO) + c * c2
            memo[cur] = _clean(out)
            stack.pop()
        return memo[w]

    def normal_form(self, p: NCPoly) -> NCPoly:
        budget = [0]
        out: dict[Key, Scalar] = {}
        mul = self.desc.mul
        for (mono, w), c in p.terms.items():
            for (m2, w2), c2 in self._word_nf(w, budget).items():
                k = (mul(mono, m2), w2)
                out[k] = out.get(k, ZERO) + c * c2
        return NCPoly(out)

    def word_nf(self, w: Word) -> NCPoly:
        return NCPoly(self._word_nf(tuple(w), [0]))

    def tensor_normal_form(self, t: TensorPoly) -> TensorPoly:
        budget = [0]
        out: dict = {}
        mul = self.desc.mul
        for ((m1, w1), (m2, w2)), c in t.terms.items():
            left = self._word_nf(w1, budget)
            right = self._word_nf(w2, budget)
            for (a1, v1), c1 in left.items():
                k1 = (mul(m1, a1), v1)
                for (a2, v2), c2 in right.items():
                    k = (k1, (mul(m2, a2), v2))
                    out[k] = out.get(k, ZERO) + c * c1 * c2
        return TensorPoly(out)

    def tensor_product(self, a: TensorPoly, b: TensorPoly) -> TensorPoly:
        out: dict = {}
        mul = self.desc.mul
        for ((m1, w1), (m2, w2)), c in a.terms.items():
            for ((n1, v1), (n2, v2)), d in b.terms.items():
                k = ((mul(m1, n1), w1 + v1), (mul(m2, n2), w2 + v2))
                out[k] = out.get(k, ZERO) + c * d
        return TensorPoly(out)

    # -- confluence ---------------------------------------------------
    def critical_pairs(self, max_overlap_len: int | None = None) -> list[dict]:
        """Overlaps of left-hand sides whose two reductions do not join."""
        report = []
        for r1 in self.rules:
            for r2 in self.rules:
                a, b = r1.lhs, r2.lhs
                candidates = []
                # proper overlaps: suffix of a equals prefix of b
                for k in range(1, min(len(a), len(b))):
                    if a[-k:] == b[:k]:
                        candidates.append((a + b[k:], (0, r1), (len(a) - k, r2)))
                # inclusion: b inside a
                if r1 is not r2 and len(b) <= len(a):
                    for i in range(len(a) - len(b) + 1):
                        if a[i : i + len(b)] == b:
                            candidates.append((a, (0, r1), (i, r2)))
                for word, (i1, q1), (i2, q2) in candidates:
                    if max_overlap_len is not None and len(word) > max_overlap_len:
                        continue
                    one_step = []
                    for i, q in ((i1, q1), (i2, q2)):
                        pre, post = word[:i], word[i + len(q.lhs) :]
                        one_step.append(
                            NCPoly({(mono, pre + rw + post): c for (mono, rw), c in q.rhs.terms.items()})
                        )
                    left = self.normal_form(one_step[0])
                    right = self.normal_form(one_step[1])
                    if left != right:
                        report.append(
                            {
                                "word": word,
                                "rules": (q1.lhs, q2.lhs),
                                "left": left,
                                "right": right,
                            }
                        )
        return report
