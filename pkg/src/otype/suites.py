"""Seeded verification suites.

Each suite is a deterministic function of its seed (and case count) and
returns a SuiteResult; the CLI ``check`` command and the acceptance tests
both run these. Failures carry parse-able input literals so a failing case
can be replayed with ``eval``/``decompose``, and the shortest failing case
is reported first as the minimized counterexample.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from random import Random

from .errors import DomainError
from .ordinal import OMEGA, ZERO, Ordinal
from .poset import FinitePoset, antichain, poset_catalog, split_first_maximal, split_maximal_layer
from .terms import (
    Decomposition,
    Fin,
    Ord,
    Prod,
    Sum,
    Union,
    WpoTerm,
    decompose,
    expand_finite,
    max_count,
    max_order_type,
    product_type,
    product_type_by_cuts,
    product_type_expanded,
    to_literal,
)
from .witness import Witness, product_antichain_witness, validate_witness

DEFAULT_WITNESS_CAP = 16
COUNTEREXAMPLE_CAP = 20


@dataclass(frozen=True)
class SuiteResult:
    name: str
    seed: int
    cases: int
    failures: int
    examples: tuple[str, ...]
    duration: float

    @property
    def passed(self) -> bool:
        return self.failures == 0


class _Run:
    """Collects case results; keeps the shortest failures as examples."""

    def __init__(self, name: str, seed: int):
        self.name = name
        self.seed = seed
        self.cases = 0
        self.messages: list[str] = []
        self.started = time.perf_counter()

    def case(self, ok: bool, message: str) -> None:
        self.cases += 1
        if not ok:
            self.messages.append(message)

    def result(self) -> SuiteResult:
        examples = tuple(sorted(self.messages, key=len)[:3])
        return SuiteResult(self.name, self.seed, self.cases, len(self.messages),
                           examples, time.perf_counter() - self.started)


# seeded generators (shared with the test suite)

def random_ordinal(rng: Random, max_depth: int = 2, max_terms: int = 3,
                   max_coeff: int = 5, allow_zero: bool = True) -> Ordinal:
    if max_depth <= 0 or (allow_zero and rng.random() < 0.15):
        return ZERO
    exponents = set()
    for _ in range(rng.randint(1, max_terms)):
        exponents.add(random_ordinal(rng, max_depth - 1, max_terms, max_coeff))
    ordered = sorted(exponents, reverse=True)
    terms = tuple((e, rng.randint(1, max_coeff)) for e in ordered)
    return Ordinal(terms)


def random_limit_ordinal(rng: Random, allow_zero: bool = True) -> Ordinal:
    value = random_ordinal(rng, max_depth=2).limit_part
    if value.is_zero and not allow_zero:
        return OMEGA * rng.randint(1, 3)
    return value


def random_poset(rng: Random, max_size: int = 6, min_size: int = 0) -> FinitePoset:
    size = rng.randint(min_size, max_size)
    edges = [(i, j) for i in range(size) for j in range(i + 1, size) if rng.random() < 0.35]
    return FinitePoset.from_edges(size, edges)


def random_term(rng: Random, max_depth: int = 4) -> WpoTerm:
    if max_depth <= 0 or rng.random() < 0.35:
        if rng.random() < 0.5:
            return Fin(random_poset(rng, max_size=6))
        return Ord(random_ordinal(rng, max_depth=2, max_coeff=5))
    kind = rng.randrange(3)
    left = random_term(rng, max_depth - 1)
    right = random_term(rng, max_depth - 1)
    if kind == 0:
        return Union(left, right)
    if kind == 1:
        return Sum(left, right)
    return Prod(left, right)


def random_decomposition(rng: Random) -> Decomposition:
    roll = rng.random()
    if roll < 0.1:
        return Decomposition(ZERO, 0, 0)
    if roll < 0.35:
        return Decomposition(random_limit_ordinal(rng, allow_zero=False), 0, 0)
    k = rng.randint(1, 4)
    m = k + rng.randint(0, 4)
    limit = ZERO if rng.random() < 0.4 else random_limit_ordinal(rng, allow_zero=False)
    return Decomposition(limit, m, k)


# suites

def counterexample_suite(seed: int = 0, cases: int | None = None,
                         rank_cap: int | None = None) -> SuiteResult:
    """The naive product of order types undercounts: the index antichain
    allows an interleaving worth the natural product. Case set is fixed;
    ``cases`` is ignored."""
    cap = COUNTEREXAMPLE_CAP if rank_cap is None else rank_cap
    run = _Run("counterexample", seed)
    base = OMEGA + 1
    term = Prod(Ord(base), Fin(antichain(2)))
    value = max_order_type(term)
    naive = base * 2
    run.case(value == OMEGA * 2 + 2, f"product type evaluated to {value}, expected w*2+2")
    run.case(naive == OMEGA * 2 + 1, f"naive product evaluated to {naive}, expected w*2+1")
    run.case(naive < value, f"expected {naive} < {value}")
    witness = product_antichain_witness(base, 2)
    run.case(witness.claimed_type == value,
             f"witness claims {witness.claimed_type}, product formula gives {value}")
    report = validate_witness(witness, term, rank_cap=cap)
    run.case(report.passed, "witness failed validation: " + "; ".join(report.problems))
    return run.result()


def limit_index_suite(seed: int = 0, cases: int | None = None,
                      rank_cap: int | None = None) -> SuiteResult:
    """With no maximal elements in the index, the product type is the plain
    ordinal product of the two order types."""
    run = _Run("limit-index", seed)
    rng = Random(seed)
    for _ in range(1000 if cases is None else cases):
        base = random_ordinal(rng, max_depth=2)
        variant = rng.randrange(3)
        if variant == 0:
            index: WpoTerm = Ord(random_limit_ordinal(rng))
        elif variant == 1:
            index = Union(Ord(random_limit_ordinal(rng)), Ord(random_limit_ordinal(rng)))
        else:
            index = Sum(Fin(random_poset(rng, max_size=3)),
                        Ord(random_limit_ordinal(rng, allow_zero=False)))
        term = Prod(Ord(base), index)
        got = max_order_type(term)
        want = base * max_order_type(index)
        ok = got == want and max_count(index) == 0
        run.case(ok, f"eval \"{to_literal(term)}\" gave {got}, plain product is {want}")
    return run.result()


def cut_recursion_suite(seed: int = 0, cases: int | None = None,
                        rank_cap: int | None = None) -> SuiteResult:
    """The cut-splitting recursion over a finite index poset agrees exactly
    with the closed product formula."""
    run = _Run("cut-recursion", seed)
    rng = Random(seed)
    for _ in range(500 if cases is None else cases):
        base = random_ordinal(rng, max_depth=2)
        q = random_poset(rng, max_size=8)
        got = product_type_by_cuts(base, q)
        want = product_type(base, decompose(Fin(q)))
        run.case(got == want,
                 f"base {base}, index {q.to_literal()}: recursion {got}, formula {want}")
    return run.result()


def brute_force_suite(seed: int = 0, cases: int | None = None,
                      rank_cap: int | None = None) -> SuiteResult:
    """Exhaustive check on all labeled posets with up to 3 elements: the
    expanded product's linear extensions all have full length, enumeration
    agrees with the down-set counting, the evaluator agrees with the element
    count, and the split constructions produce genuine cuts. Case set is
    fixed; ``cases`` is ignored."""
    run = _Run("brute-force", seed)
    catalog = poset_catalog(3)
    for q in catalog:
        if q.size >= 1:
            split = split_maximal_layer(q)
            run.case(q.is_cut(split.as_cut()),
                     f"maximal-layer split of {q.to_literal()} is not a cut")
        if len(q.maximal_elements()) >= 2:
            split = split_first_maximal(q)
            run.case(q.is_cut(split.as_cut()),
                     f"first-maximal split of {q.to_literal()} is not a cut")
    for p, q in itertools.product(catalog, catalog):
        term = Prod(Fin(p), Fin(q))
        product = expand_finite(term)
        size = p.size * q.size
        literal = f"{p.to_literal()} . {q.to_literal()}"
        evaluated = max_order_type(term)
        run.case(evaluated == size, f"{literal}: evaluator gave {evaluated}, size is {size}")
        enumerated = 0
        bad_length = 0
        relation = product.relation
        for extension in product.iter_linear_extensions():
            if len(extension) != size:
                bad_length += 1
            if enumerated < 50:
                rank = {x: i for i, x in enumerate(extension)}
                if any(rank[x] >= rank[y] for x, y in relation):
                    bad_length += 1
            enumerated += 1
        run.case(bad_length == 0, f"{literal}: {bad_length} defective extensions")
        counted = product.count_linear_extensions()
        run.case(enumerated == counted,
                 f"{literal}: enumerated {enumerated} extensions, counter says {counted}")
    return run.result()


def decomposition_suite(seed: int = 0, cases: int | None = None,
                        rank_cap: int | None = None) -> SuiteResult:
    """Structural invariants of the limit/finite/maximal decomposition on
    random terms: the finite tail dominates the maximal count, both vanish
    together, no maxima means a limit type, and maxima force a successor."""
    run = _Run("decomposition", seed)
    rng = Random(seed)
    for _ in range(1000 if cases is None else cases):
        term = random_term(rng)
        literal = to_literal(term)
        try:
            d = decompose(term)
        except (AssertionError, DomainError) as exc:
            run.case(False, f"decompose \"{literal}\" raised: {exc}")
            continue
        o = max_order_type(term)
        ok = d.finite_part >= d.max_count and (d.max_count == 0) == (d.finite_part == 0)
        if d.max_count == 0 and not o.is_zero:
            ok = ok and o.is_limit
        if d.max_count >= 1:
            ok = ok and o.finite_part >= 1
        run.case(ok, f"decompose \"{literal}\" gave delta={d.limit_part} m={d.finite_part} "
                     f"k={d.max_count} for type {o}")
    return run.result()


def absorption_suite(seed: int = 0, cases: int | None = None,
                     rank_cap: int | None = None) -> SuiteResult:
    """When the left summand's trailing exponent dominates the right's
    leading exponent, the ordinary and natural sums coincide exactly."""
    run = _Run("absorption", seed)
    rng = Random(seed)
    for _ in range(1000 if cases is None else cases):
        b = random_ordinal(rng, max_depth=2, allow_zero=False)
        floor = b.leading_exponent
        exponents = sorted({floor + random_ordinal(rng, max_depth=2) for _ in range(rng.randint(1, 3))},
                           reverse=True)
        a = Ordinal(tuple((e, rng.randint(1, 5)) for e in exponents))
        assert a.trailing_exponent >= b.leading_exponent
        run.case(a + b == a.nat_sum(b),
                 f"{a} + {b} = {a + b} but natural sum is {a.nat_sum(b)}")
    return run.result()


def expansion_suite(seed: int = 0, cases: int | None = None,
                    rank_cap: int | None = None) -> SuiteResult:
    """The closed product formula equals its CNF-expanded form, and right
    multiplication by a natural number rewrites the leading term only."""
    run = _Run("expansion", seed)
    rng = Random(seed)
    for _ in range(1000 if cases is None else cases):
        base = random_ordinal(rng, max_depth=rng.choice((2, 2, 3)))
        d = random_decomposition(rng)
        got = product_type(base, d)
        want = product_type_expanded(base, d)
        ok = got == want
        message = (f"base {base}, delta={d.limit_part} m={d.finite_part} k={d.max_count}: "
                   f"formula {got}, expanded {want}")
        if ok and not base.is_zero:
            lead = Ordinal.omega_power(base.leading_exponent, base.leading_coefficient)
            for n in range(1, 11):
                if base * n != lead * n + base.tail():
                    ok = False
                    message = (f"{base} * {n} = {base * n}, "
                               f"leading-term form is {lead * n + base.tail()}")
                    break
        run.case(ok, message)
    return run.result()


def monotonic_suite(seed: int = 0, cases: int | None = None,
                    rank_cap: int | None = None) -> SuiteResult:
    """For a fixed nonzero base, the product formula is strictly increasing
    in the index's order type, whatever its maximal-element count."""
    run = _Run("monotonic", seed)
    rng = Random(seed)
    for _ in range(500 if cases is None else cases):
        base = random_ordinal(rng, max_depth=2, allow_zero=False)
        d1 = random_decomposition(rng)
        d2 = random_decomposition(rng)
        while d1.order_type == d2.order_type:
            d2 = random_decomposition(rng)
        if d2.order_type < d1.order_type:
            d1, d2 = d2, d1
        low = product_type(base, d1)
        high = product_type(base, d2)
        run.case(low < high,
                 f"base {base}: index types {d1.order_type} < {d2.order_type} "
                 f"(k {d1.max_count}, {d2.max_count}) but values {low} >= {high}")
    return run.result()


def _witness_family():
    """Nonzero CNF ordinals with exponents in {2,1,0} and coefficients 1..3."""
    exponents = [Ordinal.from_int(2), Ordinal.from_int(1), ZERO]
    for r in range(1, len(exponents) + 1):
        for chosen in itertools.combinations(exponents, r):
            for coeffs in itertools.product((1, 2, 3), repeat=r):
                yield Ordinal(tuple(zip(chosen, coeffs)))


def witness_suite(seed: int = 0, cases: int | None = None,
                  rank_cap: int | None = None) -> SuiteResult:
    """Every product-with-antichain witness claims exactly the natural
    product, validates, and every same-component block transposition is
    caught. Case set is fixed; ``cases`` is ignored."""
    cap = DEFAULT_WITNESS_CAP if rank_cap is None else rank_cap
    run = _Run("witness", seed)
    for alpha in _witness_family():
        for copies in range(1, 5):
            witness = product_antichain_witness(alpha, copies)
            term = Prod(Ord(alpha), Fin(antichain(copies)))
            label = f"ord({alpha}) . antichain({copies})"
            run.case(witness.claimed_type == alpha.nat_prod(copies),
                     f"{label}: claimed {witness.claimed_type}, natural product "
                     f"{alpha.nat_prod(copies)}")
            run.case(witness.claimed_type == max_order_type(term),
                     f"{label}: claimed {witness.claimed_type} is not the product type")
            report = validate_witness(witness, term, rank_cap=cap)
            run.case(report.passed, f"{label}: witness failed: " + "; ".join(report.problems))
            segments = witness.segments
            for i in range(len(segments)):
                for j in range(i + 1, len(segments)):
                    if segments[i].source != segments[j].source:
                        continue
                    mutated = list(segments)
                    mutated[i], mutated[j] = mutated[j], mutated[i]
                    mutant = Witness(tuple(mutated), witness.claimed_type)
                    verdict = validate_witness(mutant, term, rank_cap=cap)
                    run.case(not verdict.passed,
                             f"{label}: swapping blocks {i + 1} and {j + 1} went undetected")
    return run.result()


SUITES = {
    "counterexample": counterexample_suite,
    "limit-index": limit_index_suite,
    "cut-recursion": cut_recursion_suite,
    "brute-force": brute_force_suite,
    "decomposition": decomposition_suite,
    "absorption": absorption_suite,
    "expansion": expansion_suite,
    "monotonic": monotonic_suite,
    "witness": witness_suite,
}


def run_suite(name: str, seed: int = 0, cases: int | None = None,
              rank_cap: int | None = None) -> SuiteResult:
    try:
        suite = SUITES[name]
    except KeyError:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return suite(seed=seed, cases=cases, rank_cap=rank_cap)


def run_all(seed: int = 0, cases: int | None = None,
            rank_cap: int | None = None) -> list[SuiteResult]:
    return [suite(seed=seed, cases=cases, rank_cap=rank_cap) for suite in SUITES.values()]
