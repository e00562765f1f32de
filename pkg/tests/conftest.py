import hypothesis.strategies as st

from otype import ZERO, Ordinal


def _combine(monomials):
    total = ZERO
    for exponent, coefficient in monomials:
        total = total.nat_sum(Ordinal.omega_power(exponent, coefficient))
    return total


def ordinals(max_depth: int = 2, max_coeff: int = 5, max_terms: int = 4):
    """Strategy for canonical ordinals of bounded CNF nesting depth."""
    if max_depth <= 0:
        return st.just(ZERO)
    exponent = ordinals(max_depth - 1, max_coeff, max_terms)
    monomial = st.tuples(exponent, st.integers(1, max_coeff))
    return st.lists(monomial, max_size=max_terms).map(_combine)


def nonzero_ordinals(max_depth: int = 2):
    return ordinals(max_depth).filter(lambda a: not a.is_zero)
