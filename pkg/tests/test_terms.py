from random import Random

import pytest

from otype import (
    OMEGA,
    ZERO,
    Decomposition,
    DomainError,
    Fin,
    FinitePoset,
    Ord,
    ParseError,
    Prod,
    Sum,
    Union,
    antichain,
    chain,
    decompose,
    expand_finite,
    lex_product,
    max_count,
    max_order_type,
    parse_ordinal,
    parse_term,
    product_type,
    product_type_by_cuts,
    product_type_expanded,
    to_literal,
    trace_product_type,
)
from otype.suites import random_ordinal, random_poset, random_term

w = OMEGA


def o(text):
    return parse_ordinal(text)


class TestMaxOrderType:
    def test_ordinal_leaf(self):
        assert max_order_type(Ord(w)) == w

    def test_union_is_natural_sum(self):
        assert max_order_type(Union(Ord(w), Fin(chain(1)))) == o("w+1")

    def test_sum_is_ordinary_sum(self):
        assert max_order_type(Sum(Fin(chain(2)), Ord(w))) == w
        assert max_order_type(Sum(Ord(w), Fin(chain(2)))) == o("w+2")

    def test_product_with_antichain(self):
        term = Prod(Ord(w + 1), Fin(antichain(2)))
        assert max_order_type(term) == o("w*2+2")

    def test_empty_terms(self):
        assert max_order_type(Fin(antichain(0))).is_zero
        assert max_order_type(Prod(Ord(w), Fin(antichain(0)))).is_zero
        assert max_order_type(Prod(Fin(antichain(0)), Ord(w))).is_zero


class TestMaxCount:
    def test_finite_antichain(self):
        assert max_count(Fin(antichain(3))) == 3

    def test_limit_chain_has_no_top(self):
        assert max_count(Ord(w)) == 0

    def test_successor_chain_has_one_top(self):
        assert max_count(Ord(o("w*3+5"))) == 1
        assert max_count(Ord(o("4"))) == 1

    def test_product_multiplies(self):
        term = Prod(Fin(antichain(2)), Fin(antichain(2)))
        assert max_count(term) == 4
        # agrees with a brute-force scan of the expanded product
        assert len(expand_finite(term).maximal_elements()) == 4

    def test_sum_high_part_shadows(self):
        assert max_count(Sum(Fin(antichain(3)), Fin(chain(2)))) == 1
        assert max_count(Sum(Fin(antichain(3)), Fin(chain(0)))) == 3

    def test_chain_tops_match_ordinal_rule(self):
        for n in range(5):
            assert max_count(Fin(chain(n))) == max_count(Ord(o(str(n))))


class TestDecompose:
    def test_finite_antichain(self):
        d = decompose(Fin(antichain(2)))
        assert (d.limit_part, d.finite_part, d.max_count) == (ZERO, 2, 2)

    def test_limit(self):
        d = decompose(Ord(w))
        assert (d.limit_part, d.finite_part, d.max_count) == (w, 0, 0)

    def test_sum(self):
        d = decompose(Sum(Ord(w), Fin(chain(3))))
        assert (d.limit_part, d.finite_part, d.max_count) == (w, 3, 1)

    def test_record_invariants_enforced(self):
        with pytest.raises(DomainError):
            Decomposition(ZERO, 1, 2)  # finite tail below maximal count
        with pytest.raises(DomainError):
            Decomposition(ZERO, 3, 0)  # tail without maxima
        with pytest.raises(DomainError):
            Decomposition(o("w+1"), 0, 0)  # limit part is a successor

    def test_order_type_property(self):
        assert Decomposition(o("w*2"), 3, 2).order_type == o("w*2+3")


class TestProductType:
    def test_limit_index_collapses_to_ordinary_product(self):
        assert product_type(w, Decomposition(w, 0, 0)) == o("w^2")

    def test_all_maximal(self):
        assert product_type(w + 1, Decomposition(ZERO, 2, 2)) == o("w*2+2")

    def test_finite(self):
        assert product_type(o("3"), Decomposition(ZERO, 2, 1)) == 6

    def test_zero_base(self):
        assert product_type(ZERO, Decomposition(w, 4, 2)).is_zero

    def test_contrast_with_ordinary_product(self):
        assert (w + 1) * 2 == o("w*2+1")
        assert product_type(w + 1, Decomposition(ZERO, 2, 2)) == o("w*2+2")


class TestProductTypeExpanded:
    def test_matches_example(self):
        assert product_type_expanded(w + 1, Decomposition(ZERO, 2, 2)) == o("w*2+2")

    def test_infinite_case(self):
        got = product_type_expanded(o("w^2*2+w"), Decomposition(w, 1, 1))
        assert got == o("w^3+w^2*2+w")

    def test_finite_collapse(self):
        assert product_type_expanded(o("5"), Decomposition(ZERO, 3, 2)) == 15

    def test_agrees_with_closed_form(self):
        rng = Random(0)
        from otype.suites import random_decomposition
        for _ in range(300):
            base = random_ordinal(rng, max_depth=2)
            d = random_decomposition(rng)
            assert product_type(base, d) == product_type_expanded(base, d)


class TestProductTypeByCuts:
    def test_chain_index_is_iterated_sum(self):
        for m in range(6):
            assert product_type_by_cuts(w + 1, chain(m)) == (w + 1) * m

    def test_antichain_pair(self):
        assert product_type_by_cuts(w + 1, antichain(2)) == o("w*2+2")

    def test_empty_index(self):
        assert product_type_by_cuts(o("w^2+3"), antichain(0)).is_zero

    def test_agrees_with_formula(self):
        rng = Random(1)
        for _ in range(150):
            base = random_ordinal(rng, max_depth=2)
            q = random_poset(rng, max_size=8)
            assert product_type_by_cuts(base, q) == product_type(base, decompose(Fin(q)))

    def test_trace_tree(self):
        node = trace_product_type(w + 1, FinitePoset.from_edges(3, [(0, 2), (1, 2)]))
        assert node.value == o("w*3+1")
        text = node.render()
        assert "k=1" in text and "k=2" in text
        payload = node.to_json()
        assert payload["value"] == "w*3+1"
        assert len(payload["children"]) == 1


class TestLimitIndexLaw:
    def test_omega_squared(self):
        assert max_order_type(parse_term("ord(w) . ord(w)")) == o("w^2")

    def test_random_limit_indices(self):
        rng = Random(2)
        from otype.suites import random_limit_ordinal
        for _ in range(200):
            base = random_ordinal(rng, max_depth=2)
            index = Ord(random_limit_ordinal(rng))
            term = Prod(Ord(base), index)
            assert decompose(index).max_count == 0
            assert max_order_type(term) == base * max_order_type(index)


class TestExpandFinite:
    def test_product_of_chains(self):
        assert expand_finite(Prod(Fin(chain(2)), Fin(chain(2)))) == chain(4)

    def test_stacked_antichains(self):
        poset = expand_finite(Prod(Fin(antichain(2)), Fin(chain(2))))
        assert poset.relation == frozenset({(0, 2), (0, 3), (1, 2), (1, 3)})

    def test_empty_factor(self):
        assert expand_finite(Prod(Fin(chain(3)), Fin(antichain(0)))).size == 0

    def test_infinite_leaf_rejected(self):
        with pytest.raises(DomainError):
            expand_finite(Prod(Ord(w), Fin(chain(2))))

    def test_finite_collapse(self):
        rng = Random(4)
        for _ in range(60):
            p = random_poset(rng, max_size=4)
            q = random_poset(rng, max_size=4)
            term = Prod(Fin(p), Fin(q))
            expansion = expand_finite(term)
            assert expansion.size == p.size * q.size
            assert max_order_type(term) == expansion.size
            assert expansion == lex_product(p, q)[0]


class TestStructuralInvariants:
    def test_random_terms_decompose_cleanly(self):
        rng = Random(6)
        for _ in range(300):
            term = random_term(rng)
            d = decompose(term)
            value = max_order_type(term)
            assert d.finite_part >= d.max_count
            assert (d.max_count == 0) == (d.finite_part == 0)
            if d.max_count == 0 and not value.is_zero:
                assert value.is_limit
            if d.max_count >= 1:
                assert value.finite_part >= 1

    def test_sum_below_union(self):
        rng = Random(7)
        for _ in range(200):
            a = random_term(rng, max_depth=2)
            b = random_term(rng, max_depth=2)
            assert max_order_type(Sum(a, b)) <= max_order_type(Union(a, b))

    def test_monotone_in_index_type(self):
        base = o("w^2+w*2+1")
        values = [
            product_type(base, Decomposition(ZERO, 1, 1)),
            product_type(base, Decomposition(ZERO, 2, 2)),
            product_type(base, Decomposition(ZERO, 3, 1)),
            product_type(base, Decomposition(w, 0, 0)),
            product_type(base, Decomposition(w, 1, 1)),
            product_type(base, Decomposition(w * 2, 2, 2)),
        ]
        assert values == sorted(values)
        assert len(set(map(str, values))) == len(values)


class TestParser:
    def test_product_example(self):
        term = parse_term("ord(w+1) . antichain(2)")
        assert term == Prod(Ord(w + 1), Fin(antichain(2)))

    def test_precedence_product_over_sum(self):
        term = parse_term("chain(2) + chain(2) . antichain(2)")
        assert isinstance(term, Sum)
        assert isinstance(term.high, Prod)

    def test_union_operator(self):
        term = parse_term("ord(w) (+) chain(1)")
        assert term == Union(Ord(w), Fin(chain(1)))

    def test_parentheses(self):
        term = parse_term("(chain(2) + chain(2)) . antichain(2)")
        assert isinstance(term, Prod)
        assert isinstance(term.base, Sum)

    def test_left_association(self):
        term = parse_term("chain(1) . chain(2) . chain(3)")
        assert isinstance(term, Prod) and isinstance(term.base, Prod)

    def test_poset_literal(self):
        term = parse_term("poset(3; 0<2, 1<2)")
        assert term.poset == FinitePoset.from_edges(3, [(0, 2), (1, 2)])

    def test_poset_literal_no_edges(self):
        assert parse_term("poset(3)").poset == antichain(3)

    def test_nested_ordinal_error_position(self):
        with pytest.raises(ParseError) as err:
            parse_term("chain(2) + ord(w*0)")
        assert err.value.position == 17

    def test_cyclic_poset_literal_is_a_parse_error(self):
        with pytest.raises(ParseError):
            parse_term("poset(2; 0<1, 1<0)")

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            parse_term("chain(2) chain(3)")
        with pytest.raises(ParseError):
            parse_term("")

    def test_literal_round_trip(self):
        rng = Random(8)
        for _ in range(60):
            term = random_term(rng, max_depth=3)
            assert parse_term(to_literal(term)) == term
