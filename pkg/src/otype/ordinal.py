"""Exact ordinal arithmetic below epsilon_0 in Cantor normal form.

An ordinal is a finite sum ``w^e0*c0 + w^e1*c1 + ... + w^en*cn`` with
strictly decreasing ordinal exponents and positive integer coefficients.
The representation is kept canonical at all times, so structural equality
is ordinal equality. Both the ordinary (non-commutative) operations and
the natural (Hessenberg, polynomial-style) operations are provided.

Values are immutable; every operation is a pure function, so ordinals can
be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import total_ordering

from .errors import DomainError, ParseError, ResourceLimitError

_depth_limit = 64


def set_depth_limit(limit: int) -> int:
    """Set the CNF nesting-depth cap and return the previous value.

    Exceeding the cap raises :class:`ResourceLimitError` at construction
    time; it exists to stop runaway recursion, not as a tuning knob.
    """
    global _depth_limit
    if limit < 1:
        raise DomainError("depth limit must be at least 1")
    previous = _depth_limit
    _depth_limit = limit
    return previous


@total_ordering
@dataclass(frozen=True, eq=False, repr=False)
class Ordinal:
    """An ordinal below epsilon_0, as a canonical CNF term list.

    ``terms`` is a tuple of ``(exponent, coefficient)`` pairs with the
    exponents (themselves ordinals) strictly decreasing and every
    coefficient >= 1. The empty tuple is 0.
    """

    terms: tuple[tuple["Ordinal", int], ...] = ()
    depth: int = field(init=False, compare=False, repr=False, default=0)

    def __post_init__(self) -> None:
        terms = tuple((e, c) for e, c in self.terms)
        object.__setattr__(self, "terms", terms)
        depth = 0
        previous: Ordinal | None = None
        for exponent, coefficient in terms:
            if not isinstance(exponent, Ordinal):
                raise DomainError("exponents must be Ordinal values")
            if not isinstance(coefficient, int) or coefficient < 1:
                raise DomainError(f"coefficients must be positive integers, got {coefficient!r}")
            if previous is not None and compare(previous, exponent) <= 0:
                raise DomainError("CNF exponents must be strictly decreasing")
            previous = exponent
            depth = max(depth, exponent.depth + 1)
        if depth > _depth_limit:
            raise ResourceLimitError(f"CNF nesting depth {depth} exceeds the limit {_depth_limit}")
        object.__setattr__(self, "depth", depth)

    # constructors

    @classmethod
    def from_int(cls, value: int) -> Ordinal:
        if value < 0:
            raise DomainError("ordinals are nonnegative")
        if value == 0:
            return ZERO
        return cls(((ZERO, value),))

    @classmethod
    def omega_power(cls, exponent: Ordinal | int, coefficient: int = 1) -> Ordinal:
        """The ordinal ``w^exponent * coefficient``."""
        if coefficient < 1:
            raise DomainError("coefficient must be at least 1")
        exponent = _coerce(exponent)
        return cls(((exponent, coefficient),))

    # structure queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return not self.terms or self.terms[0][0].is_zero

    @property
    def is_limit(self) -> bool:
        """True for nonzero ordinals with no finite tail."""
        return bool(self.terms) and not self.terms[-1][0].is_zero

    @property
    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero

    @property
    def finite_part(self) -> int:
        """Coefficient of the exponent-0 term (0 when absent)."""
        if self.terms and self.terms[-1][0].is_zero:
            return self.terms[-1][1]
        return 0

    @property
    def limit_part(self) -> Ordinal:
        """The ordinal with the exponent-0 term stripped; limit or 0.

        ``a.limit_part + a.finite_part == a`` always holds.
        """
        if self.terms and self.terms[-1][0].is_zero:
            return Ordinal(self.terms[:-1])
        return self

    @property
    def leading_exponent(self) -> Ordinal:
        if not self.terms:
            raise DomainError("0 has no leading exponent")
        return self.terms[0][0]

    @property
    def trailing_exponent(self) -> Ordinal:
        if not self.terms:
            raise DomainError("0 has no trailing exponent")
        return self.terms[-1][0]

    @property
    def leading_coefficient(self) -> int:
        if not self.terms:
            raise DomainError("0 has no leading coefficient")
        return self.terms[0][1]

    def tail(self) -> Ordinal:
        """Everything after the leading CNF term; strictly below
        ``w^leading_exponent``."""
        if not self.terms:
            raise DomainError("0 has no tail")
        return Ordinal(self.terms[1:])

    def __int__(self) -> int:
        if not self.is_finite:
            raise DomainError(f"{self} is not a finite ordinal")
        return self.finite_part

    def __bool__(self) -> bool:
        return bool(self.terms)

    # comparisons

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self.is_finite and self.finite_part == other
        if isinstance(other, Ordinal):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        # finite ordinals hash like their int value so eq/hash stay consistent
        if self.is_finite:
            return hash(self.finite_part)
        return hash(self.terms)

    def __lt__(self, other: Ordinal | int) -> bool:
        if not isinstance(other, (Ordinal, int)):
            return NotImplemented
        return compare(self, _coerce(other)) < 0

    # ordinary (non-commutative) arithmetic

    def __add__(self, other: Ordinal | int) -> Ordinal:
        """Ordinary ordinal sum; terms of self below other's leading
        exponent are absorbed."""
        other = _coerce(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        cut = other.terms[0][0]
        keep = 0
        while keep < len(self.terms) and compare(self.terms[keep][0], cut) > 0:
            keep += 1
        prefix = self.terms[:keep]
        if keep < len(self.terms) and self.terms[keep][0] == cut:
            merged = ((cut, self.terms[keep][1] + other.terms[0][1]),) + other.terms[1:]
            return Ordinal(prefix + merged)
        return Ordinal(prefix + other.terms)

    def __radd__(self, other: int) -> Ordinal:
        return _coerce(other) + self

    def __mul__(self, other: Ordinal | int) -> Ordinal:
        """Ordinary ordinal product (left-distributes over ordinary sum)."""
        other = _coerce(other)
        if not self.terms or not other.terms:
            return ZERO
        lead_exp, lead_coeff = self.terms[0]
        result = ZERO
        for exponent, coefficient in other.terms:
            if exponent.is_zero:
                part = Ordinal(((lead_exp, lead_coeff * coefficient),) + self.terms[1:])
            else:
                part = Ordinal(((lead_exp + exponent, coefficient),))
            result = result + part
        return result

    def __rmul__(self, other: int) -> Ordinal:
        return _coerce(other) * self

    # natural (Hessenberg) arithmetic

    def nat_sum(self, other: Ordinal | int) -> Ordinal:
        """Natural sum: CNF term lists added like polynomials."""
        other = _coerce(other)
        merged: list[tuple[Ordinal, int]] = []
        i = j = 0
        a, b = self.terms, other.terms
        while i < len(a) and j < len(b):
            order = compare(a[i][0], b[j][0])
            if order > 0:
                merged.append(a[i])
                i += 1
            elif order < 0:
                merged.append(b[j])
                j += 1
            else:
                merged.append((a[i][0], a[i][1] + b[j][1]))
                i += 1
                j += 1
        merged.extend(a[i:])
        merged.extend(b[j:])
        return Ordinal(tuple(merged))

    def nat_prod(self, other: Ordinal | int) -> Ordinal:
        """Natural product: CNF term lists multiplied like polynomials,
        with exponents combined by natural sum."""
        other = _coerce(other)
        if not self.terms or not other.terms:
            return ZERO
        monomials: dict[Ordinal, int] = {}
        for exp_a, coeff_a in self.terms:
            for exp_b, coeff_b in other.terms:
                exponent = exp_a.nat_sum(exp_b)
                monomials[exponent] = monomials.get(exponent, 0) + coeff_a * coeff_b
        ordered = sorted(monomials.items(), key=lambda item: item[0], reverse=True)
        return Ordinal(tuple(ordered))

    def __repr__(self) -> str:
        return f"Ordinal({render(self)!r})"

    def __str__(self) -> str:
        return render(self)


def _coerce(value: Ordinal | int) -> Ordinal:
    if isinstance(value, Ordinal):
        return value
    if isinstance(value, int):
        return Ordinal.from_int(value)
    raise DomainError(f"expected an Ordinal or int, got {type(value).__name__}")


def compare(a: Ordinal, b: Ordinal) -> int:
    """Three-way comparison: -1, 0, or 1. Equality iff identical CNF."""
    if a is b:
        return 0
    for (exp_a, coeff_a), (exp_b, coeff_b) in zip(a.terms, b.terms):
        order = compare(exp_a, exp_b)
        if order != 0:
            return order
        if coeff_a != coeff_b:
            return -1 if coeff_a < coeff_b else 1
    if len(a.terms) != len(b.terms):
        return -1 if len(a.terms) < len(b.terms) else 1
    return 0


ZERO = Ordinal()
ONE = Ordinal.from_int(1)
OMEGA = Ordinal.omega_power(1)


# text form
#
#   ordinal := term ("+" term)*
#   term    := "0" | nat | "w" ("^" "(" ordinal ")" | "^" simple)? ("*" nat)?
#   simple  := "w" | nat
#
# "+" is the ordinary sum, so any term sequence normalizes; render emits
# the canonical CNF back (omitting *1 and ^1), and parse(render(a)) == a.


class _Scanner:
    def __init__(self, text: str, offset: int = 0):
        self.text = text
        self.pos = 0
        self.offset = offset

    def error(self, message: str) -> ParseError:
        return ParseError(message, self.offset + self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        if self.pos >= len(self.text):
            return ""
        return self.text[self.pos]

    def take(self, char: str) -> bool:
        if self.peek() == char:
            self.pos += 1
            return True
        return False

    def expect(self, char: str) -> None:
        if not self.take(char):
            found = self.peek() or "end of input"
            raise self.error(f"expected {char!r}, found {found!r}")

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("expected a natural number")
        return int(self.text[start:self.pos])

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)


def _parse_term(sc: _Scanner) -> Ordinal:
    ch = sc.peek()
    if ch.isdigit():
        return Ordinal.from_int(sc.nat())
    if ch != "w":
        found = ch or "end of input"
        raise sc.error(f"expected a term, found {found!r}")
    sc.pos += 1
    exponent = ONE
    if sc.take("^"):
        if sc.take("("):
            exponent = _parse_sum(sc)
            sc.expect(")")
        elif sc.peek() == "w":
            sc.pos += 1
            exponent = OMEGA
        else:
            exponent = Ordinal.from_int(sc.nat())
    coefficient = 1
    if sc.take("*"):
        where = sc.offset + sc.pos
        coefficient = sc.nat()
        if coefficient == 0:
            raise ParseError("coefficient must be positive", where)
    if exponent.is_zero:
        return Ordinal.from_int(coefficient)
    return Ordinal.omega_power(exponent, coefficient)


def _parse_sum(sc: _Scanner) -> Ordinal:
    value = _parse_term(sc)
    while sc.take("+"):
        value = value + _parse_term(sc)
    return value


def parse(text: str, *, offset: int = 0) -> Ordinal:
    """Parse an ordinal literal such as ``w^2*3 + w + 4``.

    ``offset`` shifts reported error positions when the literal is embedded
    in a larger expression.
    """
    sc = _Scanner(text, offset)
    if sc.at_end():
        raise sc.error("empty ordinal literal")
    value = _parse_sum(sc)
    if not sc.at_end():
        raise sc.error(f"unexpected input {sc.peek()!r}")
    return value


def _render_exponent(exponent: Ordinal) -> str:
    if exponent == ONE:
        return "w"
    if exponent.is_finite:
        return f"w^{exponent.finite_part}"
    if exponent == OMEGA:
        return "w^w"
    return f"w^({render(exponent)})"


def render(a: Ordinal) -> str:
    """Canonical compact text form; inverse of :func:`parse`."""
    if not a.terms:
        return "0"
    parts = []
    for exponent, coefficient in a.terms:
        if exponent.is_zero:
            parts.append(str(coefficient))
            continue
        text = _render_exponent(exponent)
        if coefficient > 1:
            text += f"*{coefficient}"
        parts.append(text)
    return "+".join(parts)
