"""Reader for the line-oriented ``.hopf`` presentation format.

Sections are introduced by ``[name]`` headers, optionally with content on the
same line.  Entries inside ``[rules]``, ``[coproduct]``, ``[counit]`` and
``[antipode]`` may be separated by newlines or ``;``.  Basis words are
separated by commas or newlines; ``1`` is the empty word.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from ..errors import HopfMapInconsistent, PresentationSyntaxError, UnknownSymbol
from ..exactmath import ONE, Scalar, as_scalar, root_of_unity
from .central import KINDS, TORSION, CentralDescriptor, CentralSymbol
from .words import NCPoly, RewriteRule, TensorPoly

__all__ = ["parse_presentation", "ParsedSource", "tokenize"]

SECTIONS = ("generators", "rules", "central", "coproduct", "counit", "antipode", "basis", "expect")
REQUIRED = ("generators", "rules", "coproduct", "counit", "antipode", "basis")

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<zeta>zeta\(\s*\d+\s*,\s*-?\d+\s*\))
  | (?P<tensor>\(x\))
  | (?P<arrow>->)
  | (?P<num>\d+(?:/\d+)?)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
  | (?P<op>[-+*^;,=])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int


def tokenize(text: str, line: int, col0: int = 1) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PresentationSyntaxError(f"unexpected character {text[pos]!r}", line, col0 + pos)
        kind = m.lastgroup
        if kind != "ws":
            tk = m.group(kind)
            out.append(Token(kind if kind != "op" else tk, tk, line, col0 + pos))
        pos = m.end()
    return out


@dataclass
class ParsedSource:
    """Raw per-section token lines, before semantic checks."""

    sections: dict[str, list[tuple[int, int, str]]]  # name -> (line, col, text)


def _split_sections(text: str) -> ParsedSource:
    sections: dict[str, list[tuple[int, int, str]]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        col = len(line) - len(line.lstrip()) + 1
        m = re.match(r"\s*\[([A-Za-z_]+)\]", line)
        if m:
            name = m.group(1).lower()
            if name not in SECTIONS:
                raise PresentationSyntaxError(f"unknown section [{name}]", lineno, col)
            if name in sections:
                raise PresentationSyntaxError(f"duplicate section [{name}]", lineno, col)
            sections[name] = []
            current = name
            rest = line[m.end():]
            if rest.strip():
                sections[name].append((lineno, m.end() + 1, rest))
            continue
        if current is None:
            raise PresentationSyntaxError("content before the first section header", lineno, col)
        sections[current].append((lineno, 1, line))
    return ParsedSource(sections)


def _entries(lines: list[tuple[int, int, str]], sep: str = ";") -> list[list[Token]]:
    """Tokenize lines and split on ``sep`` into entries."""
    out = []
    for lineno, col, text in lines:
        toks = tokenize(text, lineno, col)
        cur: list[Token] = []
        for t in toks:
            if t.kind == sep:
                if cur:
                    out.append(cur)
                cur = []
            else:
                cur.append(t)
        if cur:
            out.append(cur)
    return out


class _Symbols:
    def __init__(self, generators: list[str], central: CentralDescriptor):
        self.gen_index = {g: i for i, g in enumerate(generators)}
        self.central = central
        self.central_index = {n: i for i, n in enumerate(central.names)}


def _scalar_of(tok: Token) -> Scalar:
    if tok.kind == "num":
        return as_scalar(Fraction(tok.text))
    inner = tok.text[tok.text.index("(") + 1 : -1]
    n, k = (int(x) for x in inner.split(","))
    if n < 1:
        raise PresentationSyntaxError("zeta order must be positive", tok.line, tok.col)
    return root_of_unity(n, k)


class _TermParser:
    """Recursive-descent parser for signed sums of monomial terms."""

    def __init__(self, toks: list[Token], syms: _Symbols, allow_tensor: bool, where: Token):
        self.toks = toks
        self.pos = 0
        self.syms = syms
        self.allow_tensor = allow_tensor
        self.where = where

    def peek(self) -> Token | None:
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self) -> Token:
        t = self.peek()
        if t is None:
            last = self.toks[-1] if self.toks else self.where
            raise PresentationSyntaxError("unexpected end of expression", last.line, last.col + len(last.text))
        self.pos += 1
        return t

    def _exponent(self) -> int:
        t = self.peek()
        if t is not None and t.kind == "^":
            self.next()
            e = self.next()
            if e.kind != "num" or "/" in e.text:
                raise PresentationSyntaxError("exponent must be a nonnegative integer", e.line, e.col)
            return int(e.text)
        return 1

    def leg(self):
        """Coefficient, central exponents and word of one product of factors."""
        desc = self.syms.central
        coeff: Scalar = ONE
        mono = [0] * len(desc)
        word: list[int] = []
        seen = False
        star = None  # pending '*' awaiting its right operand
        while True:
            t = self.peek()
            if t is None or t.kind in ("+", "-", "tensor"):
                break
            if t.kind == "*":
                if not seen or star is not None:
                    raise PresentationSyntaxError("'*' without a left operand", t.line, t.col)
                star = t
                self.next()
                continue
            self.next()
            seen = True
            star = None
            if t.kind in ("num", "zeta"):
                base = _scalar_of(t)
                coeff = coeff * base ** self._exponent()
            elif t.kind == "ident":
                e = self._exponent()
                if t.text in self.syms.gen_index:
                    word.extend([self.syms.gen_index[t.text]] * e)
                elif t.text in self.syms.central_index:
                    mono[self.syms.central_index[t.text]] += e
                else:
                    raise UnknownSymbol(f"unknown symbol {t.text!r}", t.line, t.col)
            else:
                raise PresentationSyntaxError(f"unexpected token {t.text!r}", t.line, t.col)
        if not seen:
            t = self.peek() or self.where
            raise PresentationSyntaxError("empty term", t.line, t.col)
        if star is not None:
            raise PresentationSyntaxError("'*' without a right operand", star.line, star.col)
        return coeff, desc.reduce(mono), tuple(word)

    def parse_sum(self):
        terms = []
        first = True
        while self.peek() is not None:
            sign = ONE
            t = self.peek()
            if t.kind in ("+", "-"):
                self.next()
                sign = -ONE if t.kind == "-" else ONE
            elif not first:
                raise PresentationSyntaxError(f"expected '+' or '-', found {t.text!r}", t.line, t.col)
            first = False
            c1, m1, w1 = self.leg()
            if self.allow_tensor:
                t = self.next()
                if t.kind != "tensor":
                    raise PresentationSyntaxError("expected '(x)' between tensor legs", t.line, t.col)
                c2, m2, w2 = self.leg()
                terms.append((sign * c1 * c2, (m1, w1), (m2, w2)))
            else:
                t = self.peek()
                if t is not None and t.kind == "tensor":
                    raise PresentationSyntaxError("'(x)' not allowed here", t.line, t.col)
                terms.append((sign * c1, m1, w1))
        if first:
            raise PresentationSyntaxError("empty expression", self.where.line, self.where.col)
        return terms


def _ncpoly(toks, syms, where) -> NCPoly:
    out = NCPoly()
    for c, m, w in _TermParser(toks, syms, False, where).parse_sum():
        out = out + NCPoly({(m, w): c})
    return out


def _tensorpoly(toks, syms, where) -> TensorPoly:
    out = TensorPoly()
    for c, k1, k2 in _TermParser(toks, syms, True, where).parse_sum():
        out = out + TensorPoly({(k1, k2): c})
    return out


def _split_arrow(entry: list[Token]) -> tuple[list[Token], list[Token], Token]:
    for i, t in enumerate(entry):
        if t.kind == "arrow":
            return entry[:i], entry[i + 1 :], t
    raise PresentationSyntaxError("expected '->'", entry[0].line, entry[0].col)


def _single_generator(lhs: list[Token], syms: _Symbols, section: str) -> int:
    if len(lhs) != 1 or lhs[0].kind != "ident":
        t = lhs[0] if lhs else None
        raise PresentationSyntaxError(
            f"[{section}] entries must start with a single generator",
            t.line if t else None,
            t.col if t else None,
        )
    name = lhs[0].text
    if name not in syms.gen_index:
        raise UnknownSymbol(f"unknown generator {name!r} in [{section}]", lhs[0].line, lhs[0].col)
    return syms.gen_index[name]


def parse_sections(text: str):
    """Parse text into raw presentation components without validation."""
    src = _split_sections(text).sections
    missing = [s for s in REQUIRED if s not in src]
    if "generators" in missing or "rules" in missing or "basis" in missing:
        name = next(s for s in missing if s in ("generators", "rules", "basis"))
        raise PresentationSyntaxError(f"missing required section [{name}]")
    if missing:
        raise HopfMapInconsistent(f"missing Hopf structure section [{missing[0]}]")

    # generators
    generators: list[str] = []
    for lineno, col, line in src["generators"]:
        for t in tokenize(line, lineno, col):
            if t.kind != "ident":
                raise PresentationSyntaxError(f"bad generator name {t.text!r}", t.line, t.col)
            if t.text in generators or t.text == "zeta":
                raise PresentationSyntaxError(f"duplicate or reserved generator {t.text!r}", t.line, t.col)
            generators.append(t.text)
    if not generators:
        raise PresentationSyntaxError("no generators declared")
    gen_index = {g: i for i, g in enumerate(generators)}

    # central symbols (defining words resolved after the rules are read)
    central_raw = []
    for entry in _entries(src.get("central", []), sep=";"):
        head = entry[0]
        if head.kind != "ident":
            raise PresentationSyntaxError("expected a central symbol name", head.line, head.col)
        if head.text in gen_index:
            raise PresentationSyntaxError(f"{head.text!r} is already a generator", head.line, head.col)
        if len(entry) < 2:
            raise PresentationSyntaxError("missing central symbol kind", head.line, head.col)
        # the kind is written with dashes; reassemble it from ident/'-' tokens
        j = 1
        kind_parts = []
        while j < len(entry) and entry[j].kind in ("ident", "-"):
            kind_parts.append(entry[j].text)
            j += 1
        kind = "".join(kind_parts)
        if kind not in KINDS:
            raise PresentationSyntaxError(f"unknown central kind {kind!r}", entry[1].line, entry[1].col)
        order = None
        if kind == TORSION:
            if j >= len(entry) or entry[j].kind != "num" or "/" in entry[j].text:
                raise PresentationSyntaxError("torsion symbols need an integer order", head.line, head.col)
            order = int(entry[j].text)
            if order < 1:
                raise PresentationSyntaxError("torsion order must be positive", entry[j].line, entry[j].col)
            j += 1
        word = None
        if j < len(entry):
            if entry[j].kind != "=":
                raise PresentationSyntaxError(f"unexpected token {entry[j].text!r}", entry[j].line, entry[j].col)
            word = []
            for t in _word_tokens(entry[j + 1 :], gen_index, allow_one=False):
                word.append(t)
            word = tuple(word)
        central_raw.append((head, kind, order, word))
    names = [h.text for h, *_ in central_raw]
    if len(set(names)) != len(names):
        raise PresentationSyntaxError("duplicate central symbol")
    desc0 = CentralDescriptor(tuple(CentralSymbol(h.text, k, o, w) for h, k, o, w in central_raw))
    syms = _Symbols(generators, desc0)

    # rules
    rules: list[RewriteRule] = []
    for entry in _entries(src["rules"]):
        lhs, rhs, arrow = _split_arrow(entry)
        if not lhs:
            raise PresentationSyntaxError("empty rule left-hand side", arrow.line, arrow.col)
        lhs_word = tuple(_word_tokens(lhs, gen_index, allow_one=False))
        if not rhs:
            raise PresentationSyntaxError("empty rule right-hand side", arrow.line, arrow.col)
        rules.append(RewriteRule(lhs_word, _ncpoly(rhs, syms, arrow), arrow.line))

    # infer defining words from rules of the form word -> symbol
    symbols = []
    for h, kind, order, word in central_raw:
        if word is None:
            idx = syms.central_index[h.text]
            target = NCPoly({(desc0.unit_mono(idx), ()): ONE})
            hits = [r.lhs for r in rules if r.rhs == target]
            if not hits:
                raise HopfMapInconsistent(
                    f"central symbol {h.text!r} has no defining word (add '= word' or a rule 'word -> {h.text}')",
                    h.line,
                    h.col,
                )
            word = hits[0]
        symbols.append(CentralSymbol(h.text, kind, order, word))
    desc = CentralDescriptor(tuple(symbols))
    syms = _Symbols(generators, desc)

    coproduct: dict[int, TensorPoly] = {}
    coproduct_lines: dict[int, int] = {}
    for entry in _entries(src["coproduct"]):
        lhs, rhs, arrow = _split_arrow(entry)
        g = _single_generator(lhs, syms, "coproduct")
        if g in coproduct:
            raise PresentationSyntaxError(f"duplicate coproduct for {generators[g]!r}", arrow.line, arrow.col)
        coproduct[g] = _tensorpoly(rhs, syms, arrow)
        coproduct_lines[g] = arrow.line

    counit: dict[int, Scalar] = {}
    counit_lines: dict[int, int] = {}
    for entry in _entries(src["counit"]):
        lhs, rhs, arrow = _split_arrow(entry)
        g = _single_generator(lhs, syms, "counit")
        poly = _ncpoly(rhs, syms, arrow)
        if any(w or any(m) for (m, w) in poly.terms):
            raise PresentationSyntaxError("counit values must be scalars", arrow.line, arrow.col)
        counit[g] = sum(poly.terms.values(), as_scalar(0))
        counit_lines[g] = arrow.line

    antipode: dict[int, NCPoly] = {}
    antipode_lines: dict[int, int] = {}
    for entry in _entries(src["antipode"]):
        lhs, rhs, arrow = _split_arrow(entry)
        g = _single_generator(lhs, syms, "antipode")
        antipode[g] = _ncpoly(rhs, syms, arrow)
        antipode_lines[g] = arrow.line

    for table, name in ((coproduct, "coproduct"), (counit, "counit"), (antipode, "antipode")):
        for g, gname in enumerate(generators):
            if g not in table:
                raise HopfMapInconsistent(f"no {name} given for generator {gname!r}")

    basis: list[tuple[int, ...]] = []
    basis_lines: list[int] = []
    for entry in _entries(src["basis"], sep=","):
        w = tuple(_word_tokens(entry, gen_index, allow_one=True))
        if w in basis:
            raise PresentationSyntaxError("duplicate basis word", entry[0].line, entry[0].col)
        basis.append(w)
        basis_lines.append(entry[0].line)
    if not basis:
        raise PresentationSyntaxError("empty basis")

    expect: dict[str, str] = {}
    for lineno, col, line in src.get("expect", []):
        if "=" not in line:
            raise PresentationSyntaxError("expected 'key = value'", lineno, col)
        k, v = line.split("=", 1)
        expect[k.strip()] = v.strip()

    return {
        "generators": tuple(generators),
        "central": desc,
        "rules": tuple(rules),
        "coproduct": coproduct,
        "counit": counit,
        "antipode": antipode,
        "basis": tuple(basis),
        "expect": expect,
        "lines": {
            "coproduct": coproduct_lines,
            "counit": counit_lines,
            "antipode": antipode_lines,
            "basis": basis_lines,
        },
    }


def _word_tokens(toks: list[Token], gen_index: dict[str, int], allow_one: bool):
    if allow_one and len(toks) == 1 and toks[0].kind == "num" and toks[0].text == "1":
        return
    i = 0
    if not toks:
        raise PresentationSyntaxError("empty word")
    while i < len(toks):
        t = toks[i]
        if t.kind != "ident":
            raise PresentationSyntaxError(f"expected a generator, found {t.text!r}", t.line, t.col)
        if t.text not in gen_index:
            raise UnknownSymbol(f"unknown generator {t.text!r}", t.line, t.col)
        e = 1
        if i + 1 < len(toks) and toks[i + 1].kind == "^":
            if i + 2 >= len(toks) or toks[i + 2].kind != "num" or "/" in toks[i + 2].text:
                raise PresentationSyntaxError("exponent must be a nonnegative integer", t.line, t.col)
            e = int(toks[i + 2].text)
            i += 2
        for _ in range(e):
            yield gen_index[t.text]
        i += 1


def parse_presentation(text: str, name: str = "", validate: bool = True):
    """Parse and (by default) validate a presentation."""
    from .hopf import HopfPresentation

    parts = parse_sections(text)
    pres = HopfPresentation.from_parts(parts, name=name, source=text)
    if validate:
        pres.validate()
    return pres
