"""Terms and formulas of the arithmetic language, with parser and printers.

Two textual forms exist for every formula:

* the canonical *word* over the fixed alphabet (variables spelled
  ``x``, ``x′``, ``x′′``, …; numerals as successor chains), which is what
  gets Godel-coded, and
* a *surface* form for humans and data files (variables ``x0``, ``x1``, …
  with aliases ``x``/``y``; numerals may be written as decimal literals).

One parser accepts both. Successor chains are stored run-length compressed
(``Succ(base, count)``) so numerals with thousands of applications stay
cheap to build, compare and substitute into.
"""

from __future__ import annotations

from dataclasses import dataclass

from .alphabet import (ALPHABET, AND, EQUALS, EXISTS, FORALL, IMPLIES,
                       LPAREN, NOT, OR, PLUS, PRIME, RPAREN, SUCC, TIMES,
                       VAR_BASE, ZERO)
from .errors import ParseError


# ---------------------------------------------------------------------------
# AST
# ---------------------------------------------------------------------------

class Term:
    __slots__ = ()


@dataclass(frozen=True)
class Zero(Term):
    pass


@dataclass(frozen=True)
class Var(Term):
    index: int

    def __post_init__(self):
        if self.index < 0:
            raise ValueError("variable index must be >= 0")


@dataclass(frozen=True)
class Succ(Term):
    """``count`` successor applications over ``base``; base is never a Succ."""

    base: Term
    count: int

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("Succ.count must be >= 1")
        if isinstance(self.base, Succ):
            raise ValueError("Succ.base must not itself be a Succ")


@dataclass(frozen=True)
class Add(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Mul(Term):
    left: Term
    right: Term


class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class Eq(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: int
    body: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: int
    body: Formula


O = Zero()


def succ(base: Term, count: int = 1) -> Term:
    """Apply ``count`` successors, collapsing nested chains."""
    if count == 0:
        return base
    if isinstance(base, Succ):
        return Succ(base.base, base.count + count)
    return Succ(base, count)


def numeral(n: int) -> Term:
    """The closed term with exactly n successor applications over O."""
    if n < 0:
        raise ValueError("numerals exist for naturals only")
    return O if n == 0 else Succ(O, n)


def numeral_value(t: Term) -> int | None:
    """n if t is the numeral for n, else None."""
    if isinstance(t, Zero):
        return 0
    if isinstance(t, Succ) and isinstance(t.base, Zero):
        return t.count
    return None


# ---------------------------------------------------------------------------
# Free variables and substitution
# ---------------------------------------------------------------------------

def term_vars(t: Term) -> frozenset[int]:
    if isinstance(t, Var):
        return frozenset((t.index,))
    if isinstance(t, Succ):
        return term_vars(t.base)
    if isinstance(t, (Add, Mul)):
        return term_vars(t.left) | term_vars(t.right)
    return frozenset()


def free_vars(f: Formula) -> frozenset[int]:
    if isinstance(f, Eq):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, Not):
        return free_vars(f.body)
    if isinstance(f, (Imp, And, Or)):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, (Forall, Exists)):
        return free_vars(f.body) - {f.var}
    raise TypeError(f"not a formula: {f!r}")


def max_var_index(f) -> int:
    """Largest variable index occurring anywhere (bound or free); -1 if none."""
    if isinstance(f, Term):
        if isinstance(f, Var):
            return f.index
        if isinstance(f, Succ):
            return max_var_index(f.base)
        if isinstance(f, (Add, Mul)):
            return max(max_var_index(f.left), max_var_index(f.right))
        return -1
    if isinstance(f, Eq):
        return max(max_var_index(f.left), max_var_index(f.right))
    if isinstance(f, Not):
        return max_var_index(f.body)
    if isinstance(f, (Imp, And, Or)):
        return max(max_var_index(f.left), max_var_index(f.right))
    if isinstance(f, (Forall, Exists)):
        return max(f.var, max_var_index(f.body))
    raise TypeError(f"not a term or formula: {f!r}")


def subst_term(t: Term, var: int, repl: Term) -> Term:
    if isinstance(t, Var):
        return repl if t.index == var else t
    if isinstance(t, Succ):
        return succ(subst_term(t.base, var, repl), t.count)
    if isinstance(t, Add):
        return Add(subst_term(t.left, var, repl), subst_term(t.right, var, repl))
    if isinstance(t, Mul):
        return Mul(subst_term(t.left, var, repl), subst_term(t.right, var, repl))
    return t


def rename_bound(f: Formula, old: int, new: int) -> Formula:
    """Rename one binder's variable; caller guarantees `new` is fresh."""
    return _subst(f, old, Var(new), _fresh_base=new + 1)


def substitute(f: Formula, var: int, repl: Term) -> Formula:
    """Capture-avoiding substitution of ``repl`` for free ``var`` in ``f``.

    Binders whose variable occurs free in ``repl`` are renamed to fresh
    indices, so the result is an alpha-variant when capture threatens.
    """
    fresh_base = max(max_var_index(f), max((max_var_index(repl),), default=-1)) + 1
    return _subst(f, var, repl, fresh_base)


def _subst(f: Formula, var: int, repl: Term, _fresh_base: int) -> Formula:
    if isinstance(f, Eq):
        return Eq(subst_term(f.left, var, repl), subst_term(f.right, var, repl))
    if isinstance(f, Not):
        return Not(_subst(f.body, var, repl, _fresh_base))
    if isinstance(f, Imp):
        return Imp(_subst(f.left, var, repl, _fresh_base),
                   _subst(f.right, var, repl, _fresh_base))
    if isinstance(f, And):
        return And(_subst(f.left, var, repl, _fresh_base),
                   _subst(f.right, var, repl, _fresh_base))
    if isinstance(f, Or):
        return Or(_subst(f.left, var, repl, _fresh_base),
                  _subst(f.right, var, repl, _fresh_base))
    if isinstance(f, (Forall, Exists)):
        kind = type(f)
        if f.var == var:
            return f
        if var not in free_vars(f):
            return f
        if f.var in term_vars(repl):
            fresh = _fresh_base
            body = _subst(f.body, f.var, Var(fresh), _fresh_base + 1)
            return kind(fresh, _subst(body, var, repl, _fresh_base + 1))
        return kind(f.var, _subst(f.body, var, repl, _fresh_base))
    raise TypeError(f"not a formula: {f!r}")


def replace_term(node, target: Term, repl: Term):
    """Replace every occurrence of the subterm ``target`` by ``repl``.

    Successor chains are peeled: S^k t contains S^j t' whenever the chain
    suffixes match, so numeral targets are found inside longer numerals.
    """
    if isinstance(node, Term):
        return _replace_in_term(node, target, repl)
    if isinstance(node, Eq):
        return Eq(_replace_in_term(node.left, target, repl),
                  _replace_in_term(node.right, target, repl))
    if isinstance(node, Not):
        return Not(replace_term(node.body, target, repl))
    if isinstance(node, (Imp, And, Or)):
        return type(node)(replace_term(node.left, target, repl),
                          replace_term(node.right, target, repl))
    if isinstance(node, (Forall, Exists)):
        return type(node)(node.var, replace_term(node.body, target, repl))
    raise TypeError(f"not a term or formula: {node!r}")


def _replace_in_term(t: Term, target: Term, repl: Term) -> Term:
    if t == target:
        return repl
    if isinstance(t, Succ):
        if isinstance(target, Succ) and t.base == target.base and t.count > target.count:
            return succ(repl, t.count - target.count)
        return succ(_replace_in_term(t.base, target, repl), t.count)
    if isinstance(t, (Add, Mul)):
        return type(t)(_replace_in_term(t.left, target, repl),
                       _replace_in_term(t.right, target, repl))
    return t


def contains_term(node, target: Term) -> bool:
    marker = Var(max(max_var_index(node), max_var_index(target)) + 1)
    return replace_term(node, target, marker) != node


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _var_word(index: int) -> str:
    return VAR_BASE + PRIME * index


def term_word(t: Term) -> str:
    if isinstance(t, Zero):
        return ZERO
    if isinstance(t, Var):
        return _var_word(t.index)
    if isinstance(t, Succ):
        return SUCC * t.count + term_word(t.base)
    if isinstance(t, Add):
        return LPAREN + term_word(t.left) + PLUS + term_word(t.right) + RPAREN
    if isinstance(t, Mul):
        return LPAREN + term_word(t.left) + TIMES + term_word(t.right) + RPAREN
    raise TypeError(f"not a term: {t!r}")


def word_of(f) -> str:
    """Canonical word over the alphabet; this is what gets coded."""
    if isinstance(f, Term):
        return term_word(f)
    if isinstance(f, Eq):
        return term_word(f.left) + EQUALS + term_word(f.right)
    if isinstance(f, Not):
        return NOT + word_of(f.body)
    if isinstance(f, Imp):
        return LPAREN + word_of(f.left) + IMPLIES + word_of(f.right) + RPAREN
    if isinstance(f, And):
        return LPAREN + word_of(f.left) + AND + word_of(f.right) + RPAREN
    if isinstance(f, Or):
        return LPAREN + word_of(f.left) + OR + word_of(f.right) + RPAREN
    if isinstance(f, Forall):
        return FORALL + _var_word(f.var) + word_of(f.body)
    if isinstance(f, Exists):
        return EXISTS + _var_word(f.var) + word_of(f.body)
    raise TypeError(f"not a term or formula: {f!r}")


def word_length(f) -> int:
    """Glyph count of the canonical word, without building huge strings."""
    if isinstance(f, Term):
        if isinstance(f, Zero):
            return 1
        if isinstance(f, Var):
            return 1 + f.index
        if isinstance(f, Succ):
            return f.count + word_length(f.base)
        return word_length(f.left) + word_length(f.right) + 3
    if isinstance(f, Eq):
        return word_length(f.left) + word_length(f.right) + 1
    if isinstance(f, Not):
        return 1 + word_length(f.body)
    if isinstance(f, (Imp, And, Or)):
        return word_length(f.left) + word_length(f.right) + 3
    if isinstance(f, (Forall, Exists)):
        return 2 + f.var + word_length(f.body)
    raise TypeError(f"not a term or formula: {f!r}")


def _surface_term(t: Term) -> str:
    if isinstance(t, Zero):
        return "O"
    if isinstance(t, Var):
        return f"x{t.index}"
    if isinstance(t, Succ):
        n = numeral_value(t)
        if n is not None:
            return str(n)
        return "S" * t.count + _surface_term(t.base)
    if isinstance(t, Add):
        return f"({_surface_term(t.left)} + {_surface_term(t.right)})"
    if isinstance(t, Mul):
        return f"({_surface_term(t.left)} · {_surface_term(t.right)})"
    raise TypeError(f"not a term: {t!r}")


def surface_of(f) -> str:
    """Readable rendering; reparses to an equal tree."""
    if isinstance(f, Term):
        return _surface_term(f)
    if isinstance(f, Eq):
        return f"{_surface_term(f.left)} = {_surface_term(f.right)}"
    if isinstance(f, Not):
        return "¬" + _wrap_atomic(f.body)
    if isinstance(f, Imp):
        return f"({surface_of(f.left)} → {surface_of(f.right)})"
    if isinstance(f, And):
        return f"({surface_of(f.left)} ∧ {surface_of(f.right)})"
    if isinstance(f, Or):
        return f"({surface_of(f.left)} ∨ {surface_of(f.right)})"
    if isinstance(f, Forall):
        return f"∀x{f.var} {_wrap_atomic(f.body)}"
    if isinstance(f, Exists):
        return f"∃x{f.var} {_wrap_atomic(f.body)}"
    raise TypeError(f"not a term or formula: {f!r}")


def _wrap_atomic(f: Formula) -> str:
    # Eq needs no parens after a prefix operator: '=' parses greedily.
    return surface_of(f)


# ---------------------------------------------------------------------------
# Parsing (one tokenizer/grammar for word and surface forms)
# ---------------------------------------------------------------------------

_ASCII_ALIASES = {
    "~": NOT, "!": NOT, "*": TIMES, "&": AND, "|": OR,
}


@dataclass(frozen=True)
class _Tok:
    kind: str  # one of: glyph kinds below, VAR, NUM, END
    value: object
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        start = i
        if ch == "-" and i + 1 < n and text[i + 1] == ">":
            toks.append(_Tok(IMPLIES, IMPLIES, start))
            i += 2
            continue
        if ch in _ASCII_ALIASES:
            glyph = _ASCII_ALIASES[ch]
            toks.append(_Tok(glyph, glyph, start))
            i += 1
            continue
        if ch == "y":
            toks.append(_Tok("VAR", 1, start))
            i += 1
            continue
        if ch == VAR_BASE:
            i += 1
            if i < n and text[i].isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                toks.append(_Tok("VAR", int(text[i:j]), start))
                i = j
            else:
                count = 0
                while i < n and text[i] == PRIME:
                    count += 1
                    i += 1
                toks.append(_Tok("VAR", count, start))
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Tok("NUM", int(text[i:j]), start))
            i = j
            continue
        if ch in (ZERO, SUCC, PLUS, TIMES, EQUALS, LPAREN, RPAREN, NOT,
                  IMPLIES, AND, OR, FORALL, EXISTS):
            toks.append(_Tok(ch, ch, start))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", start)
    toks.append(_Tok("END", None, n))
    return toks


class _Parser:
    def __init__(self, text: str, strict: bool = False):
        self.toks = _tokenize(text)
        self.i = 0
        self.strict = strict

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> _Tok:
        tok = self.take()
        if tok.kind != kind:
            raise ParseError(f"expected {kind!r}, found {tok.kind!r}", tok.pos)
        return tok

    # -- terms --------------------------------------------------------

    def term(self) -> Term:
        count = 0
        while self.peek().kind == SUCC:
            self.take()
            count += 1
        base = self.term_base()
        return succ(base, count)

    def term_base(self) -> Term:
        tok = self.peek()
        if tok.kind == ZERO:
            self.take()
            return O
        if tok.kind == "VAR":
            self.take()
            return Var(tok.value)
        if tok.kind == "NUM":
            self.take()
            return numeral(tok.value)
        if tok.kind == LPAREN:
            self.take()
            left = self.term()
            op = self.take()
            if op.kind == PLUS:
                node = Add(left, self.term())
            elif op.kind == TIMES:
                node = Mul(left, self.term())
            else:
                raise ParseError(
                    f"expected + or {TIMES!r} in term, found {op.kind!r}", op.pos
                )
            self.expect(RPAREN)
            return node
        raise ParseError(f"expected a term, found {tok.kind!r}", tok.pos)

    # -- formulas -----------------------------------------------------

    def formula(self) -> Formula:
        tok = self.peek()
        if tok.kind == NOT:
            self.take()
            return Not(self.formula())
        if tok.kind in (FORALL, EXISTS):
            self.take()
            var = self.expect("VAR")
            body = self.formula()
            return (Forall if tok.kind == FORALL else Exists)(var.value, body)
        if tok.kind == LPAREN:
            # '(' opens either a binary formula or the left term of an
            # atom, e.g. "(x0 + x1) = O". Try the term reading first;
            # it commits only when an '=' follows.
            mark = self.i
            try:
                left_t = self.term()
                if self.peek().kind == EQUALS:
                    self.take()
                    return Eq(left_t, self.term())
            except ParseError:
                pass
            self.i = mark
            self.expect(LPAREN)
            left = self.formula()
            op = self.take()
            if op.kind == IMPLIES:
                node = Imp(left, self.formula())
            elif op.kind == AND:
                node = And(left, self.formula())
            elif op.kind == OR:
                node = Or(left, self.formula())
            elif op.kind == RPAREN and not self.strict:
                # Redundant parentheses, tolerated in surface text only;
                # canonical words never carry them.
                return left
            else:
                raise ParseError(
                    f"expected a binary connective, found {op.kind!r}", op.pos
                )
            self.expect(RPAREN)
            return node
        # atom: term = term
        left = self.term()
        self.expect(EQUALS)
        right = self.term()
        return Eq(left, right)


def parse_formula(text: str, strict: bool = False) -> Formula:
    """Parse surface or canonical word text into a Formula.

    strict=True enforces the canonical word grammar (no redundant
    parentheses); use it when parsing decoded words.
    """
    p = _Parser(text, strict)
    f = p.formula()
    tok = p.peek()
    if tok.kind != "END":
        raise ParseError(f"trailing input {tok.kind!r}", tok.pos)
    return f


def parse_term(text: str) -> Term:
    p = _Parser(text)
    t = p.term()
    tok = p.peek()
    if tok.kind != "END":
        raise ParseError(f"trailing input {tok.kind!r}", tok.pos)
    return t


def validate_word(word: str) -> None:
    """Raise if any character lies outside the alphabet."""
    ALPHABET.validate_word(word)
