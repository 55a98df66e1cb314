from hypothesis import strategies as st

from fusionkit.partitions import normalize


@st.composite
def partition_strategy(draw, max_size=12, max_len=6):
    n_parts = draw(st.integers(min_value=0, max_value=max_len))
    parts = sorted(
        draw(
            st.lists(
                st.integers(min_value=0, max_value=max_size),
                min_size=n_parts,
                max_size=n_parts,
            )
        ),
        reverse=True,
    )
    return normalize(parts)
