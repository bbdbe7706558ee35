from fractions import Fraction

from hypothesis import strategies as st

from fuzzysoft import FuzzySet, FuzzySoftSet, Universe

UNIVERSE = Universe(["x1", "x2", "x3"])


@st.composite
def soft_sets(draw, prefix="p", min_params=0, max_params=4, denominator=4, universe=UNIVERSE):
    n = draw(st.integers(min_params, max_params))
    grade = st.integers(0, denominator).map(lambda k: Fraction(k, denominator))
    images = {}
    for j in range(1, n + 1):
        images[f"{prefix}{j}"] = FuzzySet(universe, draw(st.lists(grade, min_size=len(universe), max_size=len(universe))))
    return FuzzySoftSet(universe, list(images), images)
