import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rainbowconn.coloring import (
    EdgeColoring,
    random_coloring,
    rc_coloring,
    restrict_palette_check,
    src_coloring,
    used_colors,
)
from rainbowconn.errors import BindingError, InvalidParameterError
from rainbowconn.graph import build_complete, build_path
from rainbowconn.witness import build_witness

GRID7 = [(a, b) for a in range(3, 8) for b in range(a, 8)]


@pytest.fixture(scope="module")
def g33():
    return build_witness((3, 3))


def test_rc_coloring_33(g33):
    wg, c = g33, rc_coloring(g33)
    g = wg.graph
    assert c.color_of(g, wg.u(1), wg.v_id) == 1
    assert c.color_of(g, wg.cycle(1), wg.v_id) == 2
    assert c.color_of(g, wg.cycle(2), wg.v_id) == 3
    assert all(c.color_of(g, x, wg.w_id) == 3 for x in wg.cycle_ids)
    assert all(c.color_of(g, wg.cycle(i), wg.cycle(i + 1)) == 1 for i in range(1, 19))
    assert used_colors(c) == {1, 2, 3}
    assert c.palette_size == 3


def test_rc_coloring_45():
    wg = build_witness((4, 5))
    c, g = rc_coloring(wg), wg.graph
    assert c.color_of(g, wg.u(1), wg.u(2)) == 1
    assert c.color_of(g, wg.u(2), wg.u(3)) == 2
    assert c.color_of(g, wg.cycle(7), wg.v_id) == 3
    assert c.color_of(g, wg.cycle(8), wg.v_id) == 4


def test_src_coloring_33(g33):
    wg, c = g33, src_coloring(g33)
    g = wg.graph
    assert [c.color_of(g, wg.cycle(i), wg.v_id) for i in range(1, 19)] == [2] * 9 + [3] * 9
    w = [c.color_of(g, wg.cycle(i), wg.w_id) for i in range(1, 13)]
    assert w == [1, 1, 1, 2, 2, 2, 3, 3, 3, 1, 1, 1]
    assert c.color_of(g, wg.cycle(1), wg.cycle(2)) == 1
    assert c.color_of(g, wg.cycle(2), wg.cycle(3)) == 2
    assert c.color_of(g, wg.cycle(3), wg.cycle(4)) == 3
    assert c.color_of(g, wg.cycle(18), wg.cycle(1)) == 3
    assert c.color_of(g, wg.u(1), wg.v_id) == 1


def test_used_colors_examples():
    assert used_colors(rc_coloring(build_witness((3, 3)))) == {1, 2, 3}
    assert used_colors(src_coloring(build_witness((3, 4)))) == {1, 2, 3, 4}
    assert used_colors(EdgeColoring.constant(build_complete(4))) == {1}


def test_restrict_palette_check_examples():
    assert not restrict_palette_check(src_coloring(build_witness((3, 3))), 2)
    assert restrict_palette_check(EdgeColoring.constant(build_complete(4)), 1)
    assert restrict_palette_check(rc_coloring(build_witness((4, 6))), 4)


@pytest.mark.parametrize("a, b", GRID7)
def test_color_counts_and_determinism(a, b):
    wg = build_witness((a, b))
    rc, src = rc_coloring(wg), src_coloring(wg)
    assert len(used_colors(rc)) == a
    assert len(used_colors(src)) == b
    assert rc == rc_coloring(wg) and src == src_coloring(build_witness((a, b)))


@pytest.mark.parametrize("a, b", GRID7)
def test_src_hub_class_sizes(a, b):
    wg = build_witness((a, b))
    c, g = src_coloring(wg), wg.graph
    w_classes = Counter(c.color_of(g, x, wg.w_id) for x in wg.cycle_ids)
    v_classes = Counter(c.color_of(g, x, wg.v_id) for x in wg.cycle_ids)
    assert set(w_classes.values()) == {3 * (b - a + 2)}
    assert set(v_classes.values()) == {3 * b}
    assert sorted(v_classes) == list(range(a - 1, b + 1))


def test_coloring_validation():
    with pytest.raises(InvalidParameterError):
        EdgeColoring(2, 2, (1,))
    with pytest.raises(InvalidParameterError):
        EdgeColoring(2, 2, (1, 3))
    with pytest.raises(BindingError):
        EdgeColoring.of((1, 2)).check_bound(build_path(4))


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 8), st.integers(0, 2**32), st.randoms(use_true_random=False))
def test_recolor_bijection_preserves_count(k, seed, rnd):
    g = build_complete(5)
    c = random_coloring(g, k, random.Random(seed))
    perm = list(range(1, k + 1))
    rnd.shuffle(perm)
    d = c.recolor(dict(zip(range(1, k + 1), perm)))
    assert len(used_colors(d)) == len(used_colors(c))
