from __future__ import annotations

import pytest
from hypothesis import strategies as st

from alttab.core import AltTableau, Arrow, parse_tableau

T0_COMPACT = "EEDDEDDEEDDED|L3,5;U4,9;U6,8;L6,9;L7,9;L10,12"


@pytest.fixture(scope="session")
def t0() -> AltTableau:
    return parse_tableau(T0_COMPACT)


@st.composite
def tableaux(draw, max_len: int = 10) -> AltTableau:
    """Random valid tableau: random border word, then a random legal filling.

    Arrows are chosen cell by cell, leftmost column first, respecting the
    same emptiness rules as the exhaustive generator, so every draw is valid
    by construction.
    """
    n = draw(st.integers(min_value=0, max_value=max_len))
    word = "".join(draw(st.sampled_from("DE")) for _ in range(n))
    labels = tuple(range(1, n + 1))
    rows = [l for l, c in zip(labels, word) if c == "D"]
    cols = [l for l, c in zip(labels, word) if c == "E"]
    row_used = {i: False for i in rows}
    col_used = {j: False for j in cols}
    arrows = []
    for j in sorted(cols, reverse=True):
        for i in rows:
            if i >= j:
                continue
            options = [""]
            if not row_used[i]:
                options.append("L")
            if not col_used[j]:
                options.append("U")
            choice = draw(st.sampled_from(options))
            if choice:
                arrows.append(Arrow(i, j, choice))
                row_used[i] = True
                col_used[j] = True
    return AltTableau(labels, word, tuple(arrows))
