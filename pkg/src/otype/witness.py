"""Explicit linearizations with machine-checked order preservation.

A witness lays out a wpo as a sequence of ordinal-typed blocks, each block
drawn from one source component in that component's own order. A witness
that validates certifies a lower bound: the wpo has a linearisation of the
claimed order type. Upper bounds are not finitely checkable (they quantify
over all linearisations), so tightness comes from the product formula, not
from the witness.

Supported term shapes for validation: a product of an ordinal base with a
finite antichain index (the components are the antichain's copies of the
base chain), a lexicographic sum of supported shapes, and fully finite
terms (the components are single elements).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .errors import DomainError
from .ordinal import ZERO, Ordinal
from .terms import Fin, Ord, Prod, Sum, WpoTerm, expand_finite

DEFAULT_RANK_CAP = 16


@dataclass(frozen=True)
class Segment:
    """``block`` consecutive elements taken from component ``source``."""

    source: tuple
    block: Ordinal


@dataclass(frozen=True)
class Witness:
    segments: tuple[Segment, ...]
    claimed_type: Ordinal


def block_sum(segments) -> Ordinal:
    """Ordinary ordinal sum of the blocks, in segment order."""
    total = ZERO
    for segment in segments:
        total = total + segment.block
    return total


def product_antichain_witness(alpha: Ordinal, copies: int) -> Witness:
    """Witness for the product of the chain ``alpha`` with an antichain.

    The wpo is ``copies`` disjoint copies of the chain ``alpha``; the
    witness interleaves the CNF blocks of ``alpha`` copy by copy (copy 1
    first within each block class, a fixed but arbitrary tie-break), which
    makes the blocks' ordinary sum equal the natural product
    ``alpha (x) copies``.
    """
    if copies < 1:
        raise DomainError("need at least one copy")
    if alpha.is_zero:
        raise DomainError("the base chain must be nonempty")
    segments = []
    for exponent, coefficient in alpha.terms:
        block = Ordinal.omega_power(exponent, coefficient)
        for copy in range(1, copies + 1):
            segments.append(Segment(("copy", copy), block))
    segments = tuple(segments)
    return Witness(segments, block_sum(segments))


def lex_sum_witness(low: Witness, high: Witness) -> Witness:
    """Concatenate a witness of the low part with one of the high part;
    the claimed type is the ordinary sum (earlier blocks may be absorbed)."""
    segments = tuple(Segment(("low",) + s.source, s.block) for s in low.segments)
    segments += tuple(Segment(("high",) + s.source, s.block) for s in high.segments)
    return Witness(segments, low.claimed_type + high.claimed_type)


def extension_witness(poset, extension) -> Witness:
    """Witness reading off a linear extension of a finite poset."""
    order = tuple(extension)
    if sorted(order) != list(range(poset.size)):
        raise DomainError("extension must be a permutation of the elements")
    segments = tuple(Segment(("elem", x), Ordinal.from_int(1)) for x in order)
    return Witness(segments, Ordinal.from_int(poset.size))


@dataclass(frozen=True)
class _Model:
    chains: dict
    less: Callable[[tuple, Ordinal, tuple, Ordinal], bool]


def _build_model(term: WpoTerm) -> _Model:
    if isinstance(term, Sum):
        lo = _build_model(term.low)
        hi = _build_model(term.high)
        chains = {("low",) + tag: a for tag, a in lo.chains.items()}
        chains.update({("high",) + tag: a for tag, a in hi.chains.items()})

        def less(tag_a, pos_a, tag_b, pos_b):
            if tag_a[0] == tag_b[0]:
                side = lo if tag_a[0] == "low" else hi
                return side.less(tag_a[1:], pos_a, tag_b[1:], pos_b)
            return tag_a[0] == "low" and tag_b[0] == "high"

        return _Model(chains, less)

    if (isinstance(term, Prod) and isinstance(term.base, Ord)
            and isinstance(term.index, Fin) and not term.index.poset.relation):
        alpha = term.base.value
        copies = term.index.poset.size
        chains = {("copy", i): alpha for i in range(1, copies + 1)}

        def less(tag_a, pos_a, tag_b, pos_b):
            return tag_a == tag_b and pos_a < pos_b

        return _Model(chains, less)

    try:
        poset = expand_finite(term)
    except DomainError as exc:
        raise DomainError(f"unsupported term shape for witness validation: {exc}") from exc
    chains = {("elem", x): Ordinal.from_int(1) for x in range(poset.size)}
    relation = poset.relation

    def less(tag_a, pos_a, tag_b, pos_b):
        return (tag_a[1], tag_b[1]) in relation

    return _Model(chains, less)


def _sample_positions(block: Ordinal, rank_cap: int) -> list[Ordinal]:
    """Representative positions inside ``[0, block)``: a finite prefix, the
    partial-sum boundaries of the block's CNF, and the top element when the
    block is a successor."""
    positions = set()
    count = 0
    value = ZERO
    while count < rank_cap and value < block:
        positions.add(value)
        value = value + 1
        count += 1
    running = ZERO
    for exponent, coefficient in block.terms:
        step = Ordinal.omega_power(exponent)
        for _ in range(coefficient):
            running = running + step
            if running < block:
                positions.add(running)
    if block.finite_part >= 1:
        positions.add(block.limit_part + (block.finite_part - 1))
    return sorted(positions)


@dataclass(frozen=True)
class WitnessReport:
    passed: bool
    claimed_type: Ordinal
    element_count: int
    pairs_checked: int
    problems: tuple[str, ...]
    witness: Witness

    def render_text(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        lines = [
            f"witness validation: {status} (claimed {self.claimed_type}, "
            f"{self.element_count} elements, {self.pairs_checked} pairs checked)"
        ]
        for i, segment in enumerate(self.witness.segments, start=1):
            source = " ".join(str(part) for part in segment.source)
            lines.append(f"  {i}. block {segment.block} from {source}")
        lines.extend(f"  problem: {p}" for p in self.problems)
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "passed": self.passed,
            "claimed_type": str(self.claimed_type),
            "element_count": self.element_count,
            "pairs_checked": self.pairs_checked,
            "problems": list(self.problems),
            "segments": [
                {"source": list(s.source), "block": str(s.block)}
                for s in self.witness.segments
            ],
        }


def validate_witness(witness: Witness, term: WpoTerm,
                     rank_cap: int = DEFAULT_RANK_CAP) -> WitnessReport:
    """Check a witness against the wpo a term denotes.

    Three checks, all necessary:
      * the claimed type is the ordinary sum of the blocks;
      * per component, the blocks tile the whole component in its own
        order (consecutive intervals whose ordinary sum is the component's
        chain type);
      * on a materialized sample (``rank_cap`` leading elements per block
        plus every block-boundary element), the witness order extends the
        term's order on all pairs.

    A passing report certifies ``max_order_type(term) >= claimed_type``.
    """
    if rank_cap < 1:
        raise DomainError("rank_cap must be at least 1")
    model = _build_model(term)
    problems: list[str] = []

    if witness.claimed_type != block_sum(witness.segments):
        problems.append(
            f"claimed type {witness.claimed_type} is not the ordinary sum "
            f"of the blocks ({block_sum(witness.segments)})")

    offsets: list[Ordinal] = []
    covered: dict = {tag: ZERO for tag in model.chains}
    for i, segment in enumerate(witness.segments):
        if segment.source not in model.chains:
            problems.append(f"segment {i + 1} names unknown component {segment.source}")
            continue
        if segment.block.is_zero:
            problems.append(f"segment {i + 1} has an empty block")
        offsets.append(covered[segment.source])
        covered[segment.source] = covered[segment.source] + segment.block
    for tag, chain_type in model.chains.items():
        if covered.get(tag, ZERO) != chain_type:
            problems.append(
                f"blocks for component {tag} sum to {covered.get(tag, ZERO)}, "
                f"expected {chain_type}")

    if problems:
        return WitnessReport(False, witness.claimed_type, 0, 0, tuple(problems), witness)

    elements: list[tuple[tuple, Ordinal]] = []
    for segment, offset in zip(witness.segments, offsets):
        for position in _sample_positions(segment.block, rank_cap):
            elements.append((segment.source, offset + position))

    pairs = 0
    for i in range(len(elements)):
        tag_a, pos_a = elements[i]
        for j in range(i + 1, len(elements)):
            tag_b, pos_b = elements[j]
            pairs += 1
            if model.less(tag_b, pos_b, tag_a, pos_a):
                problems.append(
                    f"order violation: {tag_b} at {pos_b} precedes {tag_a} at {pos_a} "
                    "in the term order but follows it in the witness")
                return WitnessReport(False, witness.claimed_type, len(elements),
                                     pairs, tuple(problems), witness)

    return WitnessReport(True, witness.claimed_type, len(elements), pairs, (), witness)
