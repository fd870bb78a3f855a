"""Axiom profiles: PA-core (schema-based) and Mini (four concrete axioms).

PA-core is a full Hilbert-style presentation of first-order arithmetic:
propositional schemas, quantifier schemas, equality schemas, the six
arithmetic axioms and the induction schema. Mini is a deliberately tiny
profile whose axioms are concrete formulas, so the space of its proofs of
bounded size is small enough to enumerate exhaustively; its fourth axiom
is itself an inconsistency sentence, making Mini an inconsistent toy
theory with short refutation proofs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

from .godel import encode
from .syntax import (And, Eq, Exists, Forall, Formula, Imp, Mul, Not, Or,
                     Succ, Term, Var, Zero, Add, O, free_vars, numeral,
                     substitute, succ, term_vars)

# The coded contradiction: the word of the formula "0 = 1".
ZERO_EQ_ONE_WORD = "O=SO"
ZERO_EQ_ONE_CODE = encode(ZERO_EQ_ONE_WORD)

Matcher = Callable[[Formula], bool]


@dataclass(frozen=True)
class AxiomProfile:
    name: str
    concrete_axioms: tuple[tuple[str, Formula], ...]
    schemas: tuple[tuple[str, Matcher], ...]

    @property
    def enumerable(self) -> bool:
        """Profiles without schemas admit exhaustive proof enumeration."""
        return not self.schemas

    def axiom_formulas(self) -> tuple[Formula, ...]:
        return tuple(f for _, f in self.concrete_axioms)

    def match_axiom(self, f: Formula, counter=None) -> Optional[str]:
        for name, axiom in self.concrete_axioms:
            if counter:
                counter.tick()
            if f == axiom:
                return name
        for name, matcher in self.schemas:
            if counter:
                counter.tick()
            if matcher(f):
                return name
        return None


# ---------------------------------------------------------------------------
# Instance inference for quantifier schemas
# ---------------------------------------------------------------------------

class _Mismatch(Exception):
    pass


def _infer_term(a: Term, c: Term, var: int, shadowed: bool,
                found: list) -> None:
    if isinstance(a, Var) and a.index == var and not shadowed:
        found.append(c)
        return
    if isinstance(a, Succ):
        if isinstance(a.base, Var) and a.base.index == var and not shadowed:
            # S^ca var against c: c must end in >= ca successors
            if isinstance(c, Succ) and c.count >= a.count:
                found.append(succ(c.base, c.count - a.count))
                return
            raise _Mismatch
        if not (isinstance(c, Succ) and c.count == a.count):
            raise _Mismatch
        _infer_term(a.base, c.base, var, shadowed, found)
        return
    if type(a) is not type(c):
        raise _Mismatch
    if isinstance(a, (Zero,)):
        return
    if isinstance(a, Var):
        if a.index != c.index:
            raise _Mismatch
        return
    if isinstance(a, (Add, Mul)):
        _infer_term(a.left, c.left, var, shadowed, found)
        _infer_term(a.right, c.right, var, shadowed, found)
        return
    raise _Mismatch


def _infer_formula(a: Formula, c: Formula, var: int, shadowed: bool,
                   found: list) -> None:
    if type(a) is not type(c):
        raise _Mismatch
    if isinstance(a, Eq):
        _infer_term(a.left, c.left, var, shadowed, found)
        _infer_term(a.right, c.right, var, shadowed, found)
        return
    if isinstance(a, Not):
        _infer_formula(a.body, c.body, var, shadowed, found)
        return
    if isinstance(a, (Imp, And, Or)):
        _infer_formula(a.left, c.left, var, shadowed, found)
        _infer_formula(a.right, c.right, var, shadowed, found)
        return
    if isinstance(a, (Forall, Exists)):
        if a.var != c.var:
            raise _Mismatch
        _infer_formula(a.body, c.body, var, shadowed or a.var == var, found)
        return
    raise _Mismatch


def infer_instance(body: Formula, var: int, candidate: Formula) -> Optional[Term]:
    """A term t with body[var:=t] == candidate, or None.

    Literal matching: alpha-variants do not count, so instances that would
    need capture-avoiding renaming are rejected, as the schema requires.
    """
    found: list[Term] = []
    try:
        _infer_formula(body, candidate, var, False, found)
    except _Mismatch:
        return None
    if not found:
        # var not free in body: any term instantiates; pick O.
        return O if candidate == body else None
    t = found[0]
    if any(other != t for other in found[1:]):
        return None
    if substitute(body, var, t) != candidate:
        return None
    return t


# ---------------------------------------------------------------------------
# Logical schema matchers
# ---------------------------------------------------------------------------

def _is_p1(f: Formula) -> bool:
    return (isinstance(f, Imp) and isinstance(f.right, Imp)
            and f.right.right == f.left)


def _is_p2(f: Formula) -> bool:
    if not (isinstance(f, Imp) and isinstance(f.left, Imp)
            and isinstance(f.left.right, Imp) and isinstance(f.right, Imp)
            and isinstance(f.right.left, Imp) and isinstance(f.right.right, Imp)):
        return False
    a, bc = f.left.left, f.left.right
    b, c = bc.left, bc.right
    ab, ac = f.right.left, f.right.right
    return (ab.left == a and ab.right == b
            and ac.left == a and ac.right == c)


def _is_p3(f: Formula) -> bool:
    if not (isinstance(f, Imp) and isinstance(f.left, Imp)
            and isinstance(f.left.left, Not) and isinstance(f.left.right, Not)
            and isinstance(f.right, Imp)):
        return False
    na, nb = f.left.left, f.left.right
    return f.right.left == nb.body and f.right.right == na.body


def _is_and_elim_left(f: Formula) -> bool:
    return (isinstance(f, Imp) and isinstance(f.left, And)
            and f.left.left == f.right)


def _is_and_elim_right(f: Formula) -> bool:
    return (isinstance(f, Imp) and isinstance(f.left, And)
            and f.left.right == f.right)


def _is_and_intro(f: Formula) -> bool:
    return (isinstance(f, Imp) and isinstance(f.right, Imp)
            and isinstance(f.right.right, And)
            and f.right.right.left == f.left
            and f.right.right.right == f.right.left)


def _is_or_intro_left(f: Formula) -> bool:
    return (isinstance(f, Imp) and isinstance(f.right, Or)
            and f.right.left == f.left)


def _is_or_intro_right(f: Formula) -> bool:
    return (isinstance(f, Imp) and isinstance(f.right, Or)
            and f.right.right == f.left)


def _is_or_elim(f: Formula) -> bool:
    if not (isinstance(f, Imp) and isinstance(f.left, Imp)
            and isinstance(f.right, Imp) and isinstance(f.right.left, Imp)
            and isinstance(f.right.right, Imp)
            and isinstance(f.right.right.left, Or)):
        return False
    a, c = f.left.left, f.left.right
    b, c2 = f.right.left.left, f.right.left.right
    disj, c3 = f.right.right.left, f.right.right.right
    return (c2 == c and c3 == c and disj.left == a and disj.right == b)


def _is_forall_inst(f: Formula) -> bool:
    if not (isinstance(f, Imp) and isinstance(f.left, Forall)):
        return False
    return infer_instance(f.left.body, f.left.var, f.right) is not None


def _is_forall_dist(f: Formula) -> bool:
    if not (isinstance(f, Imp) and isinstance(f.left, Forall)
            and isinstance(f.left.body, Imp) and isinstance(f.right, Imp)
            and isinstance(f.right.right, Forall)):
        return False
    v = f.left.var
    a, b = f.left.body.left, f.left.body.right
    return (f.right.left == a and f.right.right.var == v
            and f.right.right.body == b and v not in free_vars(a))


def _is_exists_intro(f: Formula) -> bool:
    if not (isinstance(f, Imp) and isinstance(f.right, Exists)):
        return False
    return infer_instance(f.right.body, f.right.var, f.left) is not None


def _is_exists_elim(f: Formula) -> bool:
    if not (isinstance(f, Imp) and isinstance(f.left, Forall)
            and isinstance(f.left.body, Imp) and isinstance(f.right, Imp)
            and isinstance(f.right.left, Exists)):
        return False
    v = f.left.var
    a, b = f.left.body.left, f.left.body.right
    return (f.right.left.var == v and f.right.left.body == a
            and f.right.right == b and v not in free_vars(b))


def _is_eq_refl(f: Formula) -> bool:
    return isinstance(f, Eq) and f.left == f.right


def _is_eq_symm(f: Formula) -> bool:
    return (isinstance(f, Imp) and isinstance(f.left, Eq)
            and isinstance(f.right, Eq)
            and f.right.left == f.left.right and f.right.right == f.left.left)


def _is_eq_trans(f: Formula) -> bool:
    if not (isinstance(f, Imp) and isinstance(f.left, Eq)
            and isinstance(f.right, Imp) and isinstance(f.right.left, Eq)
            and isinstance(f.right.right, Eq)):
        return False
    st, tu, su = f.left, f.right.left, f.right.right
    return (st.right == tu.left and su.left == st.left
            and su.right == tu.right)


def _is_eq_succ(f: Formula) -> bool:
    if not (isinstance(f, Imp) and isinstance(f.left, Eq)
            and isinstance(f.right, Eq)):
        return False
    s, t = f.left.left, f.left.right
    return f.right.left == succ(s, 1) and f.right.right == succ(t, 1)


def _eq_cong(op, side: str) -> Matcher:
    def match(f: Formula) -> bool:
        if not (isinstance(f, Imp) and isinstance(f.left, Eq)
                and isinstance(f.right, Eq)):
            return False
        s, t = f.left.left, f.left.right
        lhs, rhs = f.right.left, f.right.right
        if not (isinstance(lhs, op) and isinstance(rhs, op)):
            return False
        if side == "left":
            return (lhs.left == s and rhs.left == t
                    and lhs.right == rhs.right)
        return (lhs.right == s and rhs.right == t and lhs.left == rhs.left)
    return match


def _is_induction(f: Formula) -> bool:
    if not (isinstance(f, Imp) and isinstance(f.left, And)
            and isinstance(f.right, Forall)):
        return False
    v, body = f.right.var, f.right.body
    base, step = f.left.left, f.left.right
    if base != substitute(body, v, O):
        return False
    if not (isinstance(step, Forall) and step.var == v
            and isinstance(step.body, Imp) and step.body.left == body):
        return False
    return step.body.right == substitute(body, v, succ(Var(v), 1))


_LOGICAL_SCHEMAS: tuple[tuple[str, Matcher], ...] = (
    ("K", _is_p1),
    ("S", _is_p2),
    ("contrapositive", _is_p3),
    ("and-elim-l", _is_and_elim_left),
    ("and-elim-r", _is_and_elim_right),
    ("and-intro", _is_and_intro),
    ("or-intro-l", _is_or_intro_left),
    ("or-intro-r", _is_or_intro_right),
    ("or-elim", _is_or_elim),
    ("forall-inst", _is_forall_inst),
    ("forall-dist", _is_forall_dist),
    ("exists-intro", _is_exists_intro),
    ("exists-elim", _is_exists_elim),
    ("eq-refl", _is_eq_refl),
    ("eq-symm", _is_eq_symm),
    ("eq-trans", _is_eq_trans),
    ("eq-succ", _is_eq_succ),
    ("eq-add-l", _eq_cong(Add, "left")),
    ("eq-add-r", _eq_cong(Add, "right")),
    ("eq-mul-l", _eq_cong(Mul, "left")),
    ("eq-mul-r", _eq_cong(Mul, "right")),
)


def _pa_axioms() -> tuple[tuple[str, Formula], ...]:
    x0, x1 = Var(0), Var(1)
    return (
        ("succ-nonzero", Forall(0, Not(Eq(succ(x0, 1), O)))),
        ("succ-injective", Forall(0, Forall(1, Imp(
            Eq(succ(x0, 1), succ(x1, 1)), Eq(x0, x1))))),
        ("add-zero", Forall(0, Eq(Add(x0, O), x0))),
        ("add-succ", Forall(0, Forall(1, Eq(
            Add(x0, succ(x1, 1)), succ(Add(x0, x1), 1))))),
        ("mul-zero", Forall(0, Eq(Mul(x0, O), O))),
        ("mul-succ", Forall(0, Forall(1, Eq(
            Mul(x0, succ(x1, 1)), Add(Mul(x0, x1), x0))))),
    )


# ---------------------------------------------------------------------------
# The two shipped profiles
# ---------------------------------------------------------------------------

# The Mini theory formula with free variables x0 (coded formula) and
# x1 (witness).
MINI_THEORY_FORMULA = Not(Not(Eq(Var(1), Var(0))))


def mini_inconsistency_sentence() -> Formula:
    """The sentence asserting the contradiction is derivable in the Mini
    theory: x0 replaced by the numeral of the coded contradiction, x1
    closed existentially."""
    closed = substitute(MINI_THEORY_FORMULA, 0, numeral(ZERO_EQ_ONE_CODE))
    return Exists(1, closed)


@lru_cache(maxsize=None)
def mini_profile() -> AxiomProfile:
    target = mini_inconsistency_sentence()
    m1 = Eq(O, O)
    m2 = Forall(0, Not(Eq(succ(Var(0), 1), O)))
    m3 = Imp(m1, target)
    return AxiomProfile(
        name="mini",
        concrete_axioms=(
            ("refl-zero", m1),
            ("succ-nonzero", m2),
            ("lift", m3),
            ("collapse", target),
        ),
        schemas=(),
    )


@lru_cache(maxsize=None)
def pa_core_profile() -> AxiomProfile:
    return AxiomProfile(
        name="pa-core",
        concrete_axioms=_pa_axioms(),
        schemas=_LOGICAL_SCHEMAS + (("induction", _is_induction),),
    )


def get_profile(name: str) -> AxiomProfile:
    if name == "mini":
        return mini_profile()
    if name in ("pa-core", "pa_core", "pa"):
        return pa_core_profile()
    raise KeyError(f"unknown profile {name!r}")
