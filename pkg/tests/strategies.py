from hypothesis import strategies as st

from levelrank.abacus import ChargedMultipartition
from levelrank.partition import Multipartition, Partition


@st.composite
def partitions(draw, max_size=10):
    n = draw(st.integers(0, max_size))
    parts = []
    while n:
        k = draw(st.integers(1, min(n, parts[-1] if parts else n)))
        parts.append(k)
        n -= k
    return Partition(parts)


@st.composite
def charged(draw, level, max_size=10, charge=5):
    comps = [draw(partitions(max_size=max_size // level + 1)) for _ in range(level)]
    charges = draw(st.lists(st.integers(-charge, charge), min_size=level, max_size=level))
    return ChargedMultipartition(Multipartition(comps), tuple(charges))
