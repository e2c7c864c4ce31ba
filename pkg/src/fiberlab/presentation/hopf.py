"""Hopf presentations: validation, normal forms and fiber algebras."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ..errors import (
    BasisNotClosed,
    HopfMapInconsistent,
    PresentationSyntaxError,
    UnsupportedCentralShape,
)
from ..exactmath import ONE, ZERO, Matrix, Scalar
from ..findim.algebra import Coalgebra, StructureConstAlgebra
from .central import (
    PRIMITIVE,
    CentralCharacter,
    CentralDescriptor,
    CharacterSpace,
    CElem,
)
from .words import NCPoly, RewriteRule, RewriteSystem, TensorPoly, is_subword

__all__ = ["HopfPresentation", "build_fiber", "characters_of_C", "normal_form", "total_algebra"]

Word = tuple


@dataclass(eq=False)
class HopfPresentation:
    generators: tuple[str, ...]
    central: CentralDescriptor
    rules: tuple[RewriteRule, ...]
    coproduct: dict[int, TensorPoly]
    counit: dict[int, Scalar]
    antipode: dict[int, NCPoly]
    fiber_basis: tuple[Word, ...]
    expect: dict[str, str] = field(default_factory=dict)
    name: str = ""
    source: str = ""
    lines: dict = field(default_factory=dict)

    @classmethod
    def from_parts(cls, parts: dict, name: str = "", source: str = "") -> HopfPresentation:
        return cls(
            generators=parts["generators"],
            central=parts["central"],
            rules=parts["rules"],
            coproduct=parts["coproduct"],
            counit=parts["counit"],
            antipode=parts["antipode"],
            fiber_basis=parts["basis"],
            expect=parts.get("expect", {}),
            name=name,
            source=source,
            lines=parts.get("lines", {}),
        )

    # -- basic helpers ------------------------------------------------
    @cached_property
    def system(self) -> RewriteSystem:
        return RewriteSystem(self.central, self.rules)

    @cached_property
    def basis_index(self) -> dict[Word, int]:
        return {w: i for i, w in enumerate(self.fiber_basis)}

    @property
    def dim(self) -> int:
        return len(self.fiber_basis)

    def gen(self, name: str) -> int:
        return self.generators.index(name)

    def word(self, text: str) -> Word:
        """Word from space-separated generator names (``1`` for the unit)."""
        text = text.strip()
        if text in ("", "1"):
            return ()
        out = []
        for part in text.split():
            base, _, e = part.partition("^")
            out.extend([self.gen(base)] * (int(e) if e else 1))
        return tuple(out)

    def format_word(self, w: Word) -> str:
        if not w:
            return "1"
        parts: list[str] = []
        i = 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            name = self.generators[w[i]]
            parts.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return " ".join(parts)

    def format_poly(self, p: NCPoly) -> str:
        if p.is_zero():
            return "0"
        parts = []
        for (m, w), c in sorted(p.terms.items(), key=lambda kv: (len(kv[0][1]), kv[0][1], kv[0][0])):
            body = " ".join(x for x in (self.central.format_mono(m), "" if not w else self.format_word(w)) if x)
            cs = str(c) if c.is_rational() else f"({c})"
            if not body:
                parts.append(cs)
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append("-" + body)
            else:
                parts.append(f"{cs} * {body}")
        out = parts[0]
        for p_ in parts[1:]:
            out += " - " + p_[1:] if p_.startswith("-") else " + " + p_
        return out

    @property
    def basis_labels(self) -> tuple[str, ...]:
        return tuple(self.format_word(w) for w in self.fiber_basis)

    def character_space(self, samples=None) -> CharacterSpace:
        return CharacterSpace(self.central, samples)

    def identity_character(self) -> CentralCharacter:
        return CharacterSpace(self.central).identity()

    # -- Hopf maps on polynomials ---------------------------------------
    def normal_form(self, p: NCPoly, chi: CentralCharacter | None = None) -> NCPoly:
        nf = self.system.normal_form(p)
        if chi is None:
            return nf
        out: dict = {}
        one = self.central.one
        for (m, w), c in nf.terms.items():
            k = (one, w)
            out[k] = out.get(k, ZERO) + c * chi.evaluate(m)
        return NCPoly(out)

    def mul(self, a: NCPoly, b: NCPoly) -> NCPoly:
        return self.system.normal_form(self.system.product(a, b))

    def coproduct_of(self, p: NCPoly) -> TensorPoly:
        """Coproduct of an arbitrary element (legs not normalized)."""
        out = TensorPoly()
        sysm = self.system
        for (mono, w), c in p.terms.items():
            t = TensorPoly({((m1, ()), (m2, ())): c * d for d, m1, m2 in self.central.coproduct(mono)})
            for g in w:
                t = sysm.tensor_product(t, self.coproduct[g])
            out = out + t
        return out

    def counit_of(self, p: NCPoly) -> Scalar:
        acc = ZERO
        for (mono, w), c in p.terms.items():
            v = c * self.central.counit(mono)
            for g in w:
                if v.is_zero():
                    break
                v = v * self.counit[g]
            acc = acc + v
        return acc

    def antipode_of(self, p: NCPoly) -> NCPoly:
        """Antipode as an anti-homomorphism (result not normalized)."""
        out = NCPoly()
        sysm = self.system
        for (mono, w), c in p.terms.items():
            s, m2 = self.central.antipode(mono)
            t = NCPoly({(m2, ()): c * s})
            for g in reversed(w):
                t = sysm.product(t, self.antipode[g])
            out = out + t
        return out

    def poly(self, w: Word, c=ONE, mono=None) -> NCPoly:
        return NCPoly.word(self.central, w, c, mono)

    # -- coordinates over C -------------------------------------------
    def coords(self, p: NCPoly, context: str = "") -> dict[int, dict]:
        """Basis index -> {mono: coefficient} of a normalized element."""
        out: dict[int, dict] = {}
        idx = self.basis_index
        for (m, w), c in p.terms.items():
            if w not in idx:
                raise BasisNotClosed(
                    f"word {self.format_word(w)!r} is not a basis word" + (f" ({context})" if context else "")
                )
            d = out.setdefault(idx[w], {})
            d[m] = d.get(m, ZERO) + c
        return {i: {m: c for m, c in d.items() if not c.is_zero()} for i, d in out.items()}

    @cached_property
    def sc_over_C(self) -> list[list[dict[int, dict]]]:
        """``sc_over_C[i][j][k]`` is the C-coefficient of ``b_k`` in ``b_i b_j``."""
        out = []
        for u in self.fiber_basis:
            row = []
            for v in self.fiber_basis:
                nf = self.system.word_nf(u + v)
                row.append(
                    self.coords(nf, f"product {self.format_word(u)} * {self.format_word(v)}")
                )
            out.append(row)
        return out

    @cached_property
    def unit_index(self) -> int:
        if () not in self.basis_index:
            raise BasisNotClosed("the basis must contain the unit word 1")
        return self.basis_index[()]

    def celem(self, d: dict) -> CElem:
        return CElem(self.central, d)

    # -- validation ---------------------------------------------------
    def validate(self) -> None:
        self._check_rules()
        self._check_basis()
        self._check_central()
        self._check_hopf_maps()
        self._check_associativity()
        fib = self.identity_fiber()
        problems = fib.hopf_violations()
        if problems:
            raise HopfMapInconsistent("identity fiber: " + problems[0])

    def _check_rules(self) -> None:
        for r in self.rules:
            for (_, w) in r.rhs.terms:
                if is_subword(r.lhs, w):
                    raise PresentationSyntaxError(
                        f"rule {self.format_word(r.lhs)!r} reappears on its right-hand side",
                        r.line,
                    )

    def _check_basis(self) -> None:
        _ = self.unit_index
        lines = self.lines.get("basis", [])
        for i, w in enumerate(self.fiber_basis):
            nf = self.system.word_nf(w)
            if nf != self.poly(w):
                raise BasisNotClosed(
                    f"basis word {self.format_word(w)!r} is not in normal form",
                    lines[i] if i < len(lines) else None,
                )
        # closure under products of basis words and under generators
        _ = self.sc_over_C
        for g in range(len(self.generators)):
            for w in self.fiber_basis:
                self.coords(self.system.word_nf((g,) + w), f"product {self.generators[g]} * {self.format_word(w)}")
                self.coords(self.system.word_nf(w + (g,)), f"product {self.format_word(w)} * {self.generators[g]}")

    def _check_central(self) -> None:
        desc = self.central
        for i, s in enumerate(desc.symbols):
            mono = desc.unit_mono(i)
            target = NCPoly({(mono, ()): ONE})
            w = s.word
            if self.system.word_nf(w) != target:
                raise HopfMapInconsistent(
                    f"defining word {self.format_word(w)!r} of {s.name!r} does not reduce to {s.name}"
                )
            for g in range(len(self.generators)):
                if self.system.word_nf((g,) + w) != self.system.word_nf(w + (g,)):
                    raise HopfMapInconsistent(f"central symbol {s.name!r} does not commute with {self.generators[g]!r}")
            wp = self.poly(w)
            delta = self.system.tensor_normal_form(self.coproduct_of(wp))
            expected = TensorPoly(
                {((m1, ()), (m2, ())): c for c, m1, m2 in desc.coproduct(mono)}
            )
            if delta != expected:
                raise HopfMapInconsistent(f"coproduct of {s.name!r} does not match its declared kind {s.kind}")
            eps = self.counit_of(wp)
            if eps != (ZERO if s.kind == PRIMITIVE else ONE):
                raise HopfMapInconsistent(f"counit of {s.name!r} does not match its declared kind")
            sgn, m2 = desc.antipode(mono)
            if self.normal_form(self.antipode_of(wp)) != NCPoly({(m2, ()): sgn}):
                raise HopfMapInconsistent(f"antipode of {s.name!r} does not match its declared kind")

    def _check_hopf_maps(self) -> None:
        nf = self.system.normal_form
        tnf = self.system.tensor_normal_form
        for r in self.rules:
            lhs = self.poly(r.lhs)
            where = f"rule {self.format_word(r.lhs)} -> {self.format_poly(r.rhs)}"
            if self.counit_of(lhs) != self.counit_of(r.rhs):
                raise HopfMapInconsistent(f"counit does not respect {where}", r.line)
            if tnf(self.coproduct_of(lhs)) != tnf(self.coproduct_of(r.rhs)):
                raise HopfMapInconsistent(f"coproduct does not respect {where}", r.line)
            if nf(self.antipode_of(lhs)) != nf(self.antipode_of(r.rhs)):
                raise HopfMapInconsistent(f"antipode does not respect {where}", r.line)
        for g, name in enumerate(self.generators):
            delta = self.coproduct[g]
            line = self.lines.get("coproduct", {}).get(g)
            left = NCPoly()
            right = NCPoly()
            for (k1, k2), c in delta.terms.items():
                a, b = NCPoly({k1: c}), NCPoly({k2: ONE})
                left = left + self.system.product(self.antipode_of(a), b)
                right = right + self.system.product(a, self.antipode_of(b))
            target = NCPoly.scalar(self.central, self.counit[g])
            if nf(left) != target or nf(right) != target:
                raise HopfMapInconsistent(f"antipode axiom fails on generator {name!r}", line)
            # counit axiom on generators
            l_eps = NCPoly()
            r_eps = NCPoly()
            for (k1, k2), c in delta.terms.items():
                l_eps = l_eps + NCPoly({k2: c * self.counit_of(NCPoly({k1: ONE}))})
                r_eps = r_eps + NCPoly({k1: c * self.counit_of(NCPoly({k2: ONE}))})
            gp = self.poly((g,))
            if nf(l_eps) != nf(gp) or nf(r_eps) != nf(gp):
                raise HopfMapInconsistent(f"counit axiom fails on generator {name!r}", line)

    def _check_associativity(self) -> None:
        bad = self.associativity_violations()
        if bad:
            i, j, k = bad[0]
            lab = self.basis_labels
            raise BasisNotClosed(
                f"normal forms are not associative on ({lab[i]}, {lab[j]}, {lab[k]}); rules are not confluent"
            )

    def associativity_violations(self) -> list[tuple[int, int, int]]:
        """Triples of basis words with (uv)w != u(vw) over C."""
        sc = self.sc_over_C
        n = self.dim
        mul = self.central.mul
        bad = []

        def times(vec: dict[int, dict], j: int, left: bool) -> dict:
            out: dict = {}
            for i, ci in vec.items():
                prod = sc[i][j] if left else sc[j][i]
                for k, ck in prod.items():
                    d = out.setdefault(k, {})
                    for m1, a in ci.items():
                        for m2, b in ck.items():
                            m = mul(m1, m2)
                            d[m] = d.get(m, ZERO) + a * b
            return {k: {m: c for m, c in d.items() if not c.is_zero()} for k, d in out.items()}

        def clean(v):
            return {k: d for k, d in v.items() if d}

        for i in range(n):
            for j in range(n):
                uv = sc[i][j]
                for k in range(n):
                    left = clean(times(uv, k, True))
                    right = clean(times(sc[j][k], i, False))
                    if left != right:
                        bad.append((i, j, k))
        return bad

    # -- fibers ---------------------------------------------------------
    def specialize(self, d: dict, chi: CentralCharacter) -> Scalar:
        acc = ZERO
        for m, c in d.items():
            acc = acc + c * chi.evaluate(m)
        return acc

    def vector_at(self, p: NCPoly, chi: CentralCharacter) -> tuple[Scalar, ...]:
        co = self.coords(self.system.normal_form(p))
        return tuple(self.specialize(co.get(k, {}), chi) for k in range(self.dim))

    def build_fiber(self, chi: CentralCharacter, with_coalgebra: bool | None = None) -> StructureConstAlgebra:
        """Fiber at ``chi``; memoized so analysis caches on the result are reused."""
        if with_coalgebra is None:
            with_coalgebra = chi == self.identity_character()
        memo = self.__dict__.setdefault("_fibers", {})
        key = (chi, with_coalgebra)
        if key not in memo:
            memo[key] = self._build_fiber(chi, with_coalgebra)
        return memo[key]

    def _build_fiber(self, chi: CentralCharacter, with_coalgebra: bool) -> StructureConstAlgebra:
        n = self.dim
        sc = tuple(
            tuple(tuple(self.specialize(self.sc_over_C[i][j].get(k, {}), chi) for k in range(n)) for j in range(n))
            for i in range(n)
        )
        unit = tuple(ONE if k == self.unit_index else ZERO for k in range(n))
        gens = {name: self.vector_at(self.poly((g,)), chi) for g, name in enumerate(self.generators)}
        co = self._identity_coalgebra() if with_coalgebra else None
        return StructureConstAlgebra(n, self.basis_labels, sc, unit, co, gens, chi.label())

    def identity_fiber(self) -> StructureConstAlgebra:
        return self.build_fiber(self.identity_character(), with_coalgebra=True)

    def _identity_coalgebra(self) -> Coalgebra:
        chi = self.identity_character()
        n = self.dim
        cols = []
        eps = []
        s_cols = []
        for w in self.fiber_basis:
            p = self.poly(w)
            t = self.system.tensor_normal_form(self.coproduct_of(p))
            col = [ZERO] * (n * n)
            for ((m1, w1), (m2, w2)), c in t.terms.items():
                i1 = self.basis_index.get(w1)
                i2 = self.basis_index.get(w2)
                if i1 is None or i2 is None:
                    raise BasisNotClosed(f"coproduct of {self.format_word(w)!r} leaves the basis")
                col[i1 * n + i2] += c * chi.evaluate(m1) * chi.evaluate(m2)
            cols.append(col)
            eps.append(self.counit_of(p))
            s_cols.append(self.vector_at(self.antipode_of(p), chi))
        return Coalgebra(Matrix.from_columns(cols), tuple(eps), Matrix.from_columns(s_cols))


def normal_form(e: NCPoly, pres: HopfPresentation, spec: CentralCharacter | None = None) -> NCPoly:
    return pres.normal_form(e, spec)


def build_fiber(pres: HopfPresentation, chi: CentralCharacter) -> StructureConstAlgebra:
    return pres.build_fiber(chi)


def characters_of_C(pres: HopfPresentation, samples=None) -> CharacterSpace:
    return pres.character_space(samples)


def total_algebra(pres: HopfPresentation) -> StructureConstAlgebra:
    """The whole Hopf algebra over the base field when the central ring is finite."""
    desc = pres.central
    if desc.shape not in ("finite", "field"):
        raise UnsupportedCentralShape("the total algebra is finite-dimensional only for a finite central ring")
    monos = desc.torsion_monos()
    pairs = [(m, w) for m in monos for w in pres.fiber_basis]
    index = {p: i for i, p in enumerate(pairs)}
    n = len(pairs)
    sysm = pres.system

    def vec(p: NCPoly) -> list[Scalar]:
        out = [ZERO] * n
        for key, c in p.terms.items():
            if key not in index:
                raise BasisNotClosed(f"word {pres.format_word(key[1])!r} is not a basis word")
            out[index[key]] += c
        return out

    labels = []
    for m, w in pairs:
        ms = desc.format_mono(m)
        ws = pres.format_word(w)
        labels.append(ws if not ms else (ms if ws == "1" else f"{ms} {ws}"))
    sc = tuple(
        tuple(tuple(vec(pres.normal_form(NCPoly({(desc.mul(m1, m2), w1 + w2): ONE})))) for (m2, w2) in pairs)
        for (m1, w1) in pairs
    )
    unit = tuple(ONE if (m, w) == (desc.one, ()) else ZERO for (m, w) in pairs)
    cols, eps, s_cols = [], [], []
    for m, w in pairs:
        p = NCPoly({(m, w): ONE})
        t = sysm.tensor_normal_form(pres.coproduct_of(p))
        col = [ZERO] * (n * n)
        for (k1, k2), c in t.terms.items():
            col[index[k1] * n + index[k2]] += c
        cols.append(col)
        eps.append(pres.counit_of(p))
        s_cols.append(vec(pres.normal_form(pres.antipode_of(p))))
    co = Coalgebra(Matrix.from_columns(cols), tuple(eps), Matrix.from_columns(s_cols))
    gens = {name: tuple(vec(pres.normal_form(pres.poly((g,))))) for g, name in enumerate(pres.generators)}
    return StructureConstAlgebra(n, tuple(labels), sc, unit, co, gens, "total")

