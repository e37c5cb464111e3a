from hypothesis import strategies as st

from schur_isotropy import Partition


@st.composite
def partitions(draw, max_size=8, allow_empty=True):
    """Random partition with at most ``max_size`` boxes."""
    raw = draw(st.lists(st.integers(min_value=1, max_value=max_size), max_size=8))
    raw.sort(reverse=True)
    parts, total = [], 0
    for p in raw:
        if total + p <= max_size:
            parts.append(p)
            total += p
    if not allow_empty and not parts:
        parts = [draw(st.integers(min_value=1, max_value=max_size))]
    return Partition(parts)
