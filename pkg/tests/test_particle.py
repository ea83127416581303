import pytest
from hypothesis import given
from hypothesis import strategies as st

from brauer_i2n.errors import InvalidParameter
from brauer_i2n.particle import (
    BoxSpec,
    classify_relation,
    closed_form,
    simulate,
    to_svg,
    unfold,
    valid_specs,
)

from oracles import lcm


@pytest.mark.parametrize("m,k,stop", [(5, 2, (1, 0)), (3, 1, (6, 0)), (4, 2, (8, 3))])
def test_stop_points(m, k, stop):
    spec = BoxSpec(m, k)
    assert simulate(spec)[0] == stop
    assert closed_form(spec) == stop


def test_m5_k2_trajectory():
    # traced by hand: down to the floor, flat bounce, up, bounce, wall, back
    _, trace = simulate(BoxSpec(5, 2))
    assert [(s.x, s.y) for s in trace] == [
        (1, 3), (2, 2), (3, 1), (4, 0), (5, 0), (6, 1), (7, 2), (8, 3), (9, 3), (10, 2),
        (10, 1), (9, 0), (8, 0), (7, 1), (6, 2), (5, 3), (4, 3), (3, 2), (2, 1), (1, 0),
    ]


@pytest.mark.parametrize("m,k,tag", [(5, 2, "0.1.14"), (3, 1, "0.1.13"), (4, 2, "0.1.15")])
def test_classify(m, k, tag):
    assert classify_relation(BoxSpec(m, k)) == tag


def test_unfold_example():
    flat = unfold(simulate(BoxSpec(5, 2))[1])
    assert flat[0] == (1, 3)
    assert flat[-1][0] == 20
    assert all(b[0] > a[0] for a, b in zip(flat, flat[1:]))


@pytest.mark.parametrize("m,k", [(1, 1), (3, 2), (4, 0), (2, 3)])
def test_invalid_box(m, k):
    with pytest.raises(InvalidParameter):
        BoxSpec(m, k)


def test_sweep_matches_closed_form():
    count = 0
    for spec in valid_specs(40):
        stop, trace = simulate(spec)
        assert stop == closed_form(spec)
        assert stop != (1, spec.top)
        assert unfold(trace)[-1][0] - 1 == 2 * lcm(spec.k, spec.m) - 1
        assert len(trace) - 1 <= 4 * spec.k * spec.lcm
        count += 1
    assert count == sum(m // 2 for m in range(2, 41))


@given(st.integers(2, 60).flatmap(lambda m: st.tuples(st.just(m), st.integers(1, m // 2))))
def test_states_stay_in_box(mk):
    spec = BoxSpec(*mk)
    _, trace = simulate(spec)
    for s in trace:
        assert 1 <= s.x <= spec.width and 0 <= s.y <= spec.top
        assert s.dx in (-1, 1) and s.dy in (-1, 1)
    # unfolded path advances one unit per step and keeps the folded heights
    assert [y for _, y in unfold(trace)] == [s.y for s in trace]


def test_svg():
    spec = BoxSpec(5, 2)
    svg = to_svg(spec, simulate(spec)[1])
    assert svg.startswith("<svg") and svg.count("<polyline") == 2
    assert "20,20" in svg  # start point (1, 3) scaled by 20
