"""Finite strict partial orders on integer labels 0..n-1.

The relation is stored transitively closed, so every query runs on the
closed relation. Posets are immutable; constructions that build new posets
out of old ones (products, sums, splits) return embedding information
mapping the new dense labels back to the operands' labels.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, InvalidOrderError, ResourceLimitError

EXTENSION_CAP = 10
COUNT_CAP = 20
CUT_CAP = 16


@dataclass(frozen=True)
class Cut:
    """A partition of a poset's elements into a lower and an upper set."""

    lower: frozenset[int]
    upper: frozenset[int]


@dataclass(frozen=True, repr=False)
class FinitePoset:
    size: int
    relation: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        object.__setattr__(self, "relation", frozenset(self.relation))
        if self.size < 0:
            raise DomainError("poset size must be nonnegative")
        succ: dict[int, set[int]] = {}
        for x, y in self.relation:
            if not (0 <= x < self.size and 0 <= y < self.size):
                raise DomainError(f"pair ({x},{y}) out of range for size {self.size}")
            if x == y:
                raise InvalidOrderError(f"reflexive pair ({x},{x})")
            if (y, x) in self.relation:
                raise InvalidOrderError(f"antisymmetry violated on {x},{y}")
            succ.setdefault(x, set()).add(y)
        for x, y in self.relation:
            for z in succ.get(y, ()):
                if (x, z) not in self.relation:
                    raise InvalidOrderError(f"relation not transitively closed: ({x},{y}),({y},{z})")

    @classmethod
    def from_edges(cls, size: int, edges) -> FinitePoset:
        """Build from any acyclic set of strict pairs; takes the transitive
        closure. Cycles raise :class:`InvalidOrderError`."""
        succ: dict[int, set[int]] = {x: set() for x in range(size)}
        for x, y in edges:
            if not (0 <= x < size and 0 <= y < size):
                raise DomainError(f"edge ({x},{y}) out of range for size {size}")
            succ[x].add(y)
        closed: set[tuple[int, int]] = set()
        for start in range(size):
            seen: set[int] = set()
            stack = list(succ[start])
            while stack:
                node = stack.pop()
                if node in seen:
                    continue
                seen.add(node)
                stack.extend(succ[node])
            if start in seen:
                raise InvalidOrderError(f"cycle through element {start}")
            closed.update((start, node) for node in seen)
        return cls(size, frozenset(closed))

    def __repr__(self) -> str:
        pairs = ", ".join(f"{x}<{y}" for x, y in sorted(self.relation))
        return f"FinitePoset({self.size}; {pairs})"

    def less(self, x: int, y: int) -> bool:
        return (x, y) in self.relation

    def maximal_elements(self) -> frozenset[int]:
        below_something = {x for x, _ in self.relation}
        return frozenset(x for x in range(self.size) if x not in below_something)

    def minimal_elements(self) -> frozenset[int]:
        above_something = {y for _, y in self.relation}
        return frozenset(x for x in range(self.size) if x not in above_something)

    def _predecessor_masks(self) -> list[int]:
        masks = [0] * self.size
        for x, y in self.relation:
            masks[y] |= 1 << x
        return masks

    def iter_linear_extensions(self):
        """Yield every linear extension as a tuple, in lexicographic order
        of labels. No size guard; callers own the cost."""
        preds = self._predecessor_masks()
        size = self.size
        acc: list[int] = []

        def walk(placed: int):
            if len(acc) == size:
                yield tuple(acc)
                return
            for v in range(size):
                bit = 1 << v
                if placed & bit or preds[v] & ~placed:
                    continue
                acc.append(v)
                yield from walk(placed | bit)
                acc.pop()

        yield from walk(0)

    def linear_extensions(self, cap: int = EXTENSION_CAP) -> list[tuple[int, ...]]:
        """All linear extensions, materialized. Posets larger than ``cap``
        elements are refused; use :meth:`count_linear_extensions` instead."""
        if self.size > cap:
            raise ResourceLimitError(
                f"enumeration limited to {cap} elements, poset has {self.size}")
        return list(self.iter_linear_extensions())

    def count_linear_extensions(self) -> int:
        """Number of linear extensions via dynamic programming over
        down-sets (no materialization)."""
        if self.size > COUNT_CAP:
            raise ResourceLimitError(
                f"extension counting limited to {COUNT_CAP} elements, poset has {self.size}")
        preds = self._predecessor_masks()
        full = (1 << self.size) - 1
        memo: dict[int, int] = {full: 1}

        def count(placed: int) -> int:
            cached = memo.get(placed)
            if cached is not None:
                return cached
            total = 0
            for v in range(self.size):
                bit = 1 << v
                if placed & bit or preds[v] & ~placed:
                    continue
                total += count(placed | bit)
            memo[placed] = total
            return total

        return count(0)

    def is_cut(self, cut: Cut) -> bool:
        """True iff no upper element lies strictly below a lower element.

        The pair must partition the elements; anything else is a domain
        error, not a negative answer.
        """
        lower, upper = frozenset(cut.lower), frozenset(cut.upper)
        if lower & upper or lower | upper != frozenset(range(self.size)):
            raise DomainError("cut sides must partition the elements")
        return not any(x in upper and y in lower for x, y in self.relation)

    def cuts(self):
        """Yield every cut, lower-set bitmask ascending."""
        if self.size > CUT_CAP:
            raise ResourceLimitError(f"cut enumeration limited to {CUT_CAP} elements")
        elements = range(self.size)
        for mask in range(1 << self.size):
            lower = frozenset(x for x in elements if mask >> x & 1)
            candidate = Cut(lower, frozenset(elements) - lower)
            if self.is_cut(candidate):
                yield candidate

    def restrict(self, elements) -> tuple[FinitePoset, tuple[int, ...]]:
        """Induced sub-order on ``elements``; returns the poset and the
        label map (new label -> original label)."""
        labels = tuple(sorted(set(elements)))
        for x in labels:
            if not 0 <= x < self.size:
                raise DomainError(f"element {x} out of range")
        index = {old: new for new, old in enumerate(labels)}
        relation = frozenset(
            (index[x], index[y]) for x, y in self.relation if x in index and y in index)
        return FinitePoset(len(labels), relation), labels

    def cover_relation(self) -> frozenset[tuple[int, int]]:
        """Covering pairs (the Hasse diagram edges)."""
        return frozenset(
            (x, y) for x, y in self.relation
            if not any((x, z) in self.relation and (z, y) in self.relation
                       for z in range(self.size)))

    def to_literal(self) -> str:
        """Expression-syntax literal that parses back to this poset."""
        if not self.relation:
            return f"antichain({self.size})"
        covers = sorted(self.cover_relation())
        if covers == [(i, i + 1) for i in range(self.size - 1)]:
            return f"chain({self.size})"
        edges = ", ".join(f"{x}<{y}" for x, y in covers)
        return f"poset({self.size}; {edges})"


def chain(n: int) -> FinitePoset:
    return FinitePoset(n, frozenset((i, j) for i in range(n) for j in range(i + 1, n)))


def antichain(n: int) -> FinitePoset:
    return FinitePoset(n, frozenset())


def lex_product(p: FinitePoset, q: FinitePoset) -> tuple[FinitePoset, tuple[tuple[int, int], ...]]:
    """Product ordered by the q coordinate first, then p on ties.

    Returns the poset plus the label map: label ``pi + qi*p.size`` is the
    pair ``(pi, qi)``.
    """
    np_, nq = p.size, q.size
    relation: set[tuple[int, int]] = set()
    for q0, q1 in q.relation:
        for p0 in range(np_):
            for p1 in range(np_):
                relation.add((p0 + q0 * np_, p1 + q1 * np_))
    for q0 in range(nq):
        for p0, p1 in p.relation:
            relation.add((p0 + q0 * np_, p1 + q0 * np_))
    labels = tuple((i % np_, i // np_) for i in range(np_ * nq))
    return FinitePoset(np_ * nq, frozenset(relation)), labels


def disjoint_union(p: FinitePoset, q: FinitePoset) -> tuple[FinitePoset, tuple[tuple[int, int], ...]]:
    """Side-by-side union, no cross relations. Labels are ``(side, original)``
    with side 0 for ``p`` (labels first) and 1 for ``q``."""
    relation = set(p.relation)
    relation.update((x + p.size, y + p.size) for x, y in q.relation)
    labels = tuple((0, x) for x in range(p.size)) + tuple((1, y) for y in range(q.size))
    return FinitePoset(p.size + q.size, frozenset(relation)), labels


def lex_sum(p: FinitePoset, q: FinitePoset) -> tuple[FinitePoset, tuple[tuple[int, int], ...]]:
    """Every element of ``p`` below every element of ``q``."""
    base, labels = disjoint_union(p, q)
    relation = set(base.relation)
    relation.update((x, y + p.size) for x in range(p.size) for y in range(q.size))
    return FinitePoset(base.size, frozenset(relation)), labels


@dataclass(frozen=True)
class SplitCut:
    """Two induced sub-posets forming a cut of the parent, with label maps
    back to the parent's elements."""

    lower: FinitePoset
    upper: FinitePoset
    lower_labels: tuple[int, ...]
    upper_labels: tuple[int, ...]

    def as_cut(self) -> Cut:
        return Cut(frozenset(self.lower_labels), frozenset(self.upper_labels))


def split_maximal_layer(q: FinitePoset) -> SplitCut:
    """Split off the antichain of all maximal elements (the upper part)."""
    maxima = q.maximal_elements()
    rest = frozenset(range(q.size)) - maxima
    lower, lower_labels = q.restrict(rest)
    upper, upper_labels = q.restrict(maxima)
    split = SplitCut(lower, upper, lower_labels, upper_labels)
    assert q.size == 0 or q.is_cut(split.as_cut())
    return split


def split_first_maximal(q: FinitePoset) -> SplitCut:
    """Split off the first maximal element (lowest label) together with the
    elements strictly below it and below no other maximal element.

    The upper part has exactly 1 maximal element, the lower part one fewer
    than ``q``. Requires at least 2 maximal elements.
    """
    maxima = sorted(q.maximal_elements())
    if len(maxima) < 2:
        raise DomainError("split_first_maximal needs at least 2 maximal elements")
    first = maxima[0]
    others = maxima[1:]
    upper_set = {first}
    for x in range(q.size):
        if q.less(x, first) and not any(q.less(x, m) for m in others):
            upper_set.add(x)
    # in a finite poset every element sits below (or is) some maximal element
    assert all(x in maxima or any(q.less(x, m) for m in maxima) for x in range(q.size))
    lower_set = frozenset(range(q.size)) - upper_set
    lower, lower_labels = q.restrict(lower_set)
    upper, upper_labels = q.restrict(upper_set)
    split = SplitCut(lower, upper, lower_labels, upper_labels)
    assert q.is_cut(split.as_cut())
    assert len(upper.maximal_elements()) == 1
    assert len(lower.maximal_elements()) == len(maxima) - 1
    return split


def enumerate_posets(size: int):
    """Yield every strict partial order on ``size`` labeled elements, in a
    deterministic order. Exhaustive, so capped at 4 elements."""
    if size > 4:
        raise ResourceLimitError("exhaustive poset enumeration limited to 4 elements")
    pairs = [(x, y) for x in range(size) for y in range(size) if x != y]
    for mask in range(1 << len(pairs)):
        relation = frozenset(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        try:
            yield FinitePoset(size, relation)
        except InvalidOrderError:
            continue


def poset_catalog(max_size: int = 3):
    """All labeled posets of every size up to ``max_size``."""
    return [p for n in range(max_size + 1) for p in enumerate_posets(n)]
