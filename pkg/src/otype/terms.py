"""Term algebra over well partial orders and evaluation of maximal order types.

A term denotes a wpo built from finite posets and ordinals (an ordinal is
the wpo given by its own linear order) using disjoint union, lexicographic
sum (everything on the left below everything on the right), and
lexicographic product (the right factor is the index: its coordinate is
compared first).

Evaluation is compositional and never materializes an infinite order:

    o(finite poset)  = element count
    o(ordinal a)     = a
    o(Union(l, r))   = o(l) (+) o(r)          natural sum
    o(Sum(low, hi))  = o(low) + o(hi)         ordinary sum
    o(Prod(p, q))    = o(p)*(d + (m - k)) + o(p) (x) k

where o(q) = d + m with d the limit part and m the finite tail, and k is
the number of maximal elements of q. When k = 0 the product rule collapses
to the plain ordinal product o(p)*o(q).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ParseError
from .ordinal import ZERO, Ordinal
from .ordinal import parse as parse_ordinal
from .poset import (
    FinitePoset,
    antichain,
    chain,
    disjoint_union,
    lex_product,
    lex_sum,
    split_first_maximal,
    split_maximal_layer,
)


class WpoTerm:
    """Base class for term nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Fin(WpoTerm):
    poset: FinitePoset


@dataclass(frozen=True)
class Ord(WpoTerm):
    value: Ordinal


@dataclass(frozen=True)
class Union(WpoTerm):
    left: WpoTerm
    right: WpoTerm


@dataclass(frozen=True)
class Sum(WpoTerm):
    low: WpoTerm
    high: WpoTerm


@dataclass(frozen=True)
class Prod(WpoTerm):
    base: WpoTerm
    index: WpoTerm


@dataclass(frozen=True)
class Decomposition:
    """Shape data of an index wpo: the limit part and finite tail of its
    maximal order type, plus its number of maximal elements.

    Valid records satisfy ``finite_part >= max_count`` and
    ``max_count == 0 iff finite_part == 0``.
    """

    limit_part: Ordinal
    finite_part: int
    max_count: int

    def __post_init__(self) -> None:
        if self.limit_part.finite_part != 0:
            raise DomainError("limit_part must be 0 or a limit ordinal")
        if self.max_count < 0 or self.finite_part < self.max_count:
            raise DomainError("finite tail must be at least the maximal-element count")
        if (self.max_count == 0) != (self.finite_part == 0):
            raise DomainError("maximal-element count is 0 exactly when the finite tail is 0")

    @property
    def order_type(self) -> Ordinal:
        return self.limit_part + self.finite_part


def max_order_type(term: WpoTerm) -> Ordinal:
    """The largest order type of any linearisation of the denoted wpo."""
    if isinstance(term, Fin):
        return Ordinal.from_int(term.poset.size)
    if isinstance(term, Ord):
        return term.value
    if isinstance(term, Union):
        return max_order_type(term.left).nat_sum(max_order_type(term.right))
    if isinstance(term, Sum):
        return max_order_type(term.low) + max_order_type(term.high)
    if isinstance(term, Prod):
        return product_type(max_order_type(term.base), decompose(term.index))
    raise DomainError(f"not a term: {term!r}")


def max_count(term: WpoTerm) -> int:
    """Number of maximal elements of the denoted wpo (always finite)."""
    if isinstance(term, Fin):
        return len(term.poset.maximal_elements())
    if isinstance(term, Ord):
        # a chain has a top exactly when its order type has a finite tail
        return 1 if term.value.finite_part > 0 else 0
    if isinstance(term, Union):
        return max_count(term.left) + max_count(term.right)
    if isinstance(term, Sum):
        # the high part shadows the low one unless it is empty
        if not max_order_type(term.high).is_zero:
            return max_count(term.high)
        return max_count(term.low)
    if isinstance(term, Prod):
        return max_count(term.base) * max_count(term.index)
    raise DomainError(f"not a term: {term!r}")


def decompose(term: WpoTerm) -> Decomposition:
    """Limit part / finite tail / maximal-element count of a term.

    The record invariants are consequences of the evaluation rules; a
    failure here is a bug in the evaluator, not a user error.
    """
    o = max_order_type(term)
    k = max_count(term)
    m = o.finite_part
    assert m >= k, f"finite tail {m} below maximal count {k} for {term!r}"
    assert (k == 0) == (m == 0), f"maximal count {k} vs finite tail {m} for {term!r}"
    return Decomposition(o.limit_part, m, k)


def product_type(base: Ordinal, index: Decomposition) -> Ordinal:
    """Maximal order type of a lexicographic product, from the base's type
    and the index's decomposition:

        base * (d + (m - k)) + base (x) k

    For k = 0 this is the plain ordinal product base * (d + m); for an
    empty base or index it is 0.
    """
    span = index.limit_part + (index.finite_part - index.max_count)
    return base * span + base.nat_prod(index.max_count)


def product_type_expanded(base: Ordinal, index: Decomposition) -> Ordinal:
    """Same value as :func:`product_type`, computed from the CNF split
    ``base = w^e*c + tail`` as

        base * d + w^e*c * m + tail (x) k

    Kept as an independent algebraic route for differential testing.
    """
    if base.is_zero:
        return ZERO
    lead = Ordinal.omega_power(base.leading_exponent, base.leading_coefficient)
    return (base * index.limit_part
            + lead * index.finite_part
            + base.tail().nat_prod(index.max_count))


@dataclass(frozen=True)
class TraceNode:
    """One step of the cut-splitting recursion over a finite index poset."""

    elements: tuple[int, ...]
    maximal: int
    rule: str
    children: tuple["TraceNode", ...]
    value: Ordinal

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        members = " ".join(str(x) for x in self.elements) or "-"
        lines = [f"{pad}[{members}] k={self.maximal} {self.rule} -> {self.value}"]
        for child in self.children:
            lines.append(child.render(indent + 1))
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "maximal": self.maximal,
            "rule": self.rule,
            "value": str(self.value),
            "children": [child.to_json() for child in self.children],
        }


def _by_cuts(base: Ordinal, q: FinitePoset, labels: tuple[int, ...]) -> TraceNode:
    if q.size == 0:
        return TraceNode(labels, 0, "empty index, value 0", (), ZERO)
    k = len(q.maximal_elements())
    if k == 1:
        split = split_maximal_layer(q)
        child = _by_cuts(base, split.lower, tuple(labels[i] for i in split.lower_labels))
        value = child.value + base
        return TraceNode(labels, 1,
                         "single maximal element: strip it, add the base type (ordinary sum)",
                         (child,), value)
    first = split_first_maximal(q)
    left = _by_cuts(base, first.lower, tuple(labels[i] for i in first.lower_labels))
    right = _by_cuts(base, first.upper, tuple(labels[i] for i in first.upper_labels))
    value = left.value.nat_sum(right.value)
    return TraceNode(labels, k,
                     "several maximal elements: split off the first, combine by natural sum",
                     (left, right), value)


def product_type_by_cuts(base: Ordinal, q: FinitePoset) -> Ordinal:
    """Maximal order type of ``base . q`` for a finite index poset, computed
    by recursive cut splitting instead of the closed formula.

    This follows an induction over ``q``: with one maximal element the
    maximal antichain layer is a final segment and contributes an ordinary
    sum; with several, the index splits into two cut parts combined by
    natural sum. Agrees exactly with :func:`product_type`.
    """
    return trace_product_type(base, q).value


def trace_product_type(base: Ordinal, q: FinitePoset) -> TraceNode:
    """Like :func:`product_type_by_cuts` but returns the recursion tree."""
    return _by_cuts(base, q, tuple(range(q.size)))


def expand_finite(term: WpoTerm) -> FinitePoset:
    """Materialize a term denoting a finite wpo as an explicit poset.

    Ordinal leaves must be finite (they become chains); anything infinite
    is a domain error.
    """
    if isinstance(term, Fin):
        return term.poset
    if isinstance(term, Ord):
        if not term.value.is_finite:
            raise DomainError(f"cannot expand infinite ordinal {term.value}")
        return chain(int(term.value))
    if isinstance(term, Union):
        return disjoint_union(expand_finite(term.left), expand_finite(term.right))[0]
    if isinstance(term, Sum):
        return lex_sum(expand_finite(term.low), expand_finite(term.high))[0]
    if isinstance(term, Prod):
        return lex_product(expand_finite(term.base), expand_finite(term.index))[0]
    raise DomainError(f"not a term: {term!r}")


# expression syntax
#
#   expr    := product (("+" | "(+)") product)*      + lex sum, (+) disjoint union
#   product := atom ("." atom)*                      right operand is the index
#   atom    := "ord(" ordinal ")" | "poset(" n [";" edges] ")"
#            | "chain(" n ")" | "antichain(" n ")" | "(" expr ")"
#
# "." binds tighter than "+" and "(+)"; both levels associate left.


class _TermParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, position: int | None = None) -> ParseError:
        return ParseError(message, self.pos if position is None else position)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def at_union_op(self) -> bool:
        self.skip_ws()
        return self.text[self.pos:self.pos + 3] == "(+)"

    def take(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def keyword(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        return self.text[start:self.pos], start

    def balanced(self) -> tuple[str, int]:
        """Consume '(' ... matching ')'; return the inside and its offset."""
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != "(":
            raise self.error("expected '('")
        depth = 0
        start = self.pos + 1
        for i in range(self.pos, len(self.text)):
            if self.text[i] == "(":
                depth += 1
            elif self.text[i] == ")":
                depth -= 1
                if depth == 0:
                    self.pos = i + 1
                    return self.text[start:i], start
        raise self.error("unbalanced parentheses", start - 1)

    def _nat(self, text: str, offset: int) -> int:
        stripped = text.strip()
        if not stripped.isdigit():
            raise self.error(f"expected a natural number, found {stripped!r}", offset)
        return int(stripped)

    def atom(self) -> WpoTerm:
        if self.peek() == "(":
            self.pos += 1
            node = self.expr()
            if not self.take(")"):
                raise self.error("expected ')'")
            return node
        word, start = self.keyword()
        if word == "ord":
            inside, offset = self.balanced()
            return Ord(parse_ordinal(inside, offset=offset))
        if word == "chain":
            inside, offset = self.balanced()
            return Fin(chain(self._nat(inside, offset)))
        if word == "antichain":
            inside, offset = self.balanced()
            return Fin(antichain(self._nat(inside, offset)))
        if word == "poset":
            inside, offset = self.balanced()
            return Fin(self._poset_literal(inside, offset))
        found = word or self.peek() or "end of input"
        raise self.error(f"expected a term, found {found!r}", start)

    def _poset_literal(self, inside: str, offset: int) -> FinitePoset:
        head, _, rest = inside.partition(";")
        size = self._nat(head, offset)
        edges = []
        if rest.strip():
            for piece in rest.split(","):
                a, sep, b = piece.partition("<")
                if not sep:
                    raise self.error(f"expected 'a<b', found {piece.strip()!r}", offset)
                edges.append((self._nat(a, offset), self._nat(b, offset)))
        try:
            return FinitePoset.from_edges(size, edges)
        except DomainError as exc:
            raise self.error(f"bad poset literal: {exc}", offset) from exc

    def product(self) -> WpoTerm:
        node = self.atom()
        while self.take("."):
            node = Prod(node, self.atom())
        return node

    def expr(self) -> WpoTerm:
        node = self.product()
        while True:
            if self.at_union_op():
                self.pos += 3
                node = Union(node, self.product())
            elif self.take("+"):
                node = Sum(node, self.product())
            else:
                return node

    def parse(self) -> WpoTerm:
        node = self.expr()
        self.skip_ws()
        if self.pos < len(self.text):
            raise self.error(f"unexpected input {self.text[self.pos]!r}")
        return node


def parse_term(text: str) -> WpoTerm:
    """Parse a wpo term expression such as ``ord(w+1) . antichain(2)``."""
    return _TermParser(text).parse()


def to_literal(term: WpoTerm) -> str:
    """Expression-syntax text for a term; parses back to an equal term."""
    if isinstance(term, Fin):
        return term.poset.to_literal()
    if isinstance(term, Ord):
        return f"ord({term.value})"
    if isinstance(term, Union):
        return f"({to_literal(term.left)} (+) {to_literal(term.right)})"
    if isinstance(term, Sum):
        return f"({to_literal(term.low)} + {to_literal(term.high)})"
    if isinstance(term, Prod):
        return f"({to_literal(term.base)} . {to_literal(term.index)})"
    raise DomainError(f"not a term: {term!r}")
