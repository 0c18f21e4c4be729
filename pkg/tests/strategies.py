"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

coefficient = st.integers(min_value=-9, max_value=9)


def normals(n_min=2, n_max=4, allow_zero=True):
    entries = coefficient if allow_zero else coefficient.filter(bool)
    return (
        st.integers(min_value=n_min, max_value=n_max)
        .flatmap(lambda n: st.lists(entries, min_size=n, max_size=n))
        .filter(any)
    )


nonzero_rationals = st.builds(
    lambda num, den, sign: sign * Fraction(num, den),
    st.integers(1, 40),
    st.integers(1, 12),
    st.sampled_from((1, -1)),
)

small_vectors_2d = st.tuples(
    st.integers(-6, 6).map(Fraction), st.integers(-6, 6).map(Fraction)
).filter(any)
