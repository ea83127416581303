import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from brauer_i2n.diagram import BrauerDiagram, generator_e, generator_r, identity, multiply
from brauer_i2n.errors import InvalidParameter, NotSymmetricError
from brauer_i2n.roots import (
    AdmissibleSet,
    Root,
    act_diagram,
    act_e,
    act_r,
    admissible_sets,
    complete,
    e_beta,
    e_beta_from_witness,
    e_hat,
    height,
    orthogonal_pairs,
    positive_roots,
    simple_root,
    symmetry_profile,
    top_of,
)

from oracles import all_matchings

a = simple_root


def S(t, *roots):
    return AdmissibleSet.of(t, roots)


class TestRoots:
    def test_height(self):
        assert height(a(3)) == 1
        assert height(Root(1, 4)) == 3
        for m in (3, 4, 5):
            assert height(Root(1, 2 * m)) == 2 * m - 1

    def test_invalid(self):
        with pytest.raises(InvalidParameter):
            Root(3, 2)
        with pytest.raises(InvalidParameter):
            S(3, (1, 2), (2, 3))
        with pytest.raises(InvalidParameter):
            S(2, (1, 4))

    @pytest.mark.parametrize("t", range(1, 7))
    def test_admissible_sets_are_partial_matchings(self, t):
        # number of partial matchings of t+1 points (telephone numbers)
        expected = [1, 1, 2, 4, 10, 26, 76, 232][t + 1]
        sets = admissible_sets(t)
        assert len(sets) == len(set(sets)) == expected
        for B in sets:
            assert 2 * len(B) <= t + 1

    def test_json(self):
        B = S(3, (3, 4), (1, 2))
        assert B.to_json() == '{"t":3,"roots":[[1,2],[3,4]]}'
        assert AdmissibleSet.from_dict(B.to_dict()) == B


class TestActions:
    def test_act_r(self):
        assert act_r(1, S(2, (1, 2))) == S(2, (1, 2))
        assert act_r(2, S(2, (1, 2))) == S(2, (1, 3))
        assert act_r(1, S(2, (2, 3))) == S(2, (1, 3))

    def test_act_e_cases(self):
        assert act_e(1, S(2, (1, 2))) == S(2, (1, 2))
        assert act_e(2, S(2)) == S(2, (2, 3))
        assert act_e(2, S(2, (1, 2))) == S(2, (2, 3))

    def test_act_e_example_from_diagram(self):
        # E2 * complete({alpha_1}) at t=2, composed by hand: top cup {2,3}
        b = complete(S(2, (1, 2)))
        assert b.pairs == ((1, 2), (3, 4), (5, 6))
        assert top_of(multiply(generator_e(2, 2), b)) == S(2, (2, 3))

    def test_act_e_two_touching_roots(self):
        # alpha_2 meets both (1,2) and (3,4)
        B = S(3, (1, 2), (3, 4))
        assert act_e(2, B) == S(3, (2, 3), (1, 4))
        assert act_e(2, B) == act_diagram(generator_e(3, 2), B)

    @pytest.mark.parametrize("t", range(1, 6))
    def test_actions_match_diagram_oracle(self, t):
        for B in admissible_sets(t):
            for i in range(1, t + 1):
                assert act_r(i, B) == act_diagram(generator_r(t, i), B)
                assert act_e(i, B) == act_diagram(generator_e(t, i), B)

    @pytest.mark.parametrize("t", [2, 3])
    def test_completion_independence(self, t):
        # any diagram with top B (no extra top strands) gives the same action
        n = t + 1
        for pairs in all_matchings(2 * n):
            d = BrauerDiagram.from_pairs(t, pairs)
            B = top_of(d)
            for i in range(1, t + 1):
                assert top_of(multiply(generator_e(t, i), d)) == act_e(i, B)
                assert top_of(multiply(generator_r(t, i), d)) == act_r(i, B)


class TestTopAndCompletion:
    def test_top_of(self):
        assert top_of(generator_e(1, 1)) == S(1, (1, 2))
        assert top_of(identity(3)) == S(3)
        assert top_of(multiply(generator_e(2, 2), generator_e(2, 1))) == S(2, (2, 3))

    @pytest.mark.parametrize("t", range(1, 7))
    def test_complete_round_trip(self, t):
        for B in admissible_sets(t):
            d = complete(B)
            assert top_of(d) == B
            assert len(d.vertical_strands()) == t + 1 - 2 * len(B)


class TestEBeta:
    def test_simple(self):
        assert e_beta(2, a(1)) == generator_e(2, 1)

    def test_conjugates(self):
        R, E = generator_r, generator_e
        lhs = multiply(R(2, 2), multiply(E(2, 1), R(2, 2)))
        rhs = multiply(R(2, 1), multiply(E(2, 2), R(2, 1)))
        assert e_beta(2, Root(1, 3)) == lhs == rhs

    def test_top(self):
        assert top_of(e_beta(3, Root(2, 4))) == S(3, (2, 4))

    @pytest.mark.parametrize("t", range(1, 6))
    def test_witness_independence(self, t):
        n = t + 1
        for r in positive_roots(t):
            expected = e_beta(t, r)
            witnesses = 0
            for node in range(1, t + 1):
                for perm in itertools.permutations(range(1, n + 1)):
                    if perm[node - 1] == r.i and perm[node] == r.j:
                        assert e_beta_from_witness(t, list(perm), node) == expected
                        witnesses += 1
                        if witnesses >= 6:
                            break
            # only t witnesses exist when t <= 2
            assert witnesses >= (3 if t >= 3 else t)

    @pytest.mark.parametrize("t", range(2, 6))
    def test_orthogonal_commute(self, t):
        for b, c in orthogonal_pairs(t):
            assert multiply(e_beta(t, b), e_beta(t, c)) == multiply(e_beta(t, c), e_beta(t, b))


class TestEHat:
    def test_empty(self):
        assert e_hat(S(2)) == identity(2)

    def test_single(self):
        assert e_hat(S(1, (1, 2))) == generator_e(1, 1).shift_delta(-1)

    def test_idempotent_example(self):
        B = S(3, (1, 2), (3, 4))
        assert multiply(e_hat(B), e_hat(B)) == e_hat(B)

    @pytest.mark.parametrize("t", range(1, 6))
    def test_idempotent_all(self, t):
        for B in admissible_sets(t):
            h = e_hat(B)
            assert multiply(h, h) == h
            assert top_of(h) == B

    @pytest.mark.parametrize("t", [3, 4, 5])
    def test_order_independent(self, t):
        for B in admissible_sets(t):
            roots = B.sorted_roots()
            ref = e_hat(B)
            for order in itertools.islice(itertools.permutations(roots), 6):
                prod = identity(t)
                for r in order:
                    prod = multiply(prod, e_beta(t, r))
                assert prod.shift_delta(-len(B)) == ref


class TestSymmetryProfile:
    def test_n10(self):
        Y2 = S(9, (2, 3), (4, 5), (6, 7), (8, 9), (1, 10))
        assert symmetry_profile(Y2) == (2, 1)

    def test_n8(self):
        Y2 = S(7, (2, 3), (4, 5), (6, 7), (1, 8))
        assert symmetry_profile(Y2) == (1, 2)

    def test_empty(self):
        assert symmetry_profile(S(5)) == (0, 0)

    def test_not_symmetric(self):
        with pytest.raises(NotSymmetricError):
            symmetry_profile(S(5, (1, 2)))


@given(st.integers(1, 6), st.data())
def test_action_preserves_admissibility(t, data):
    sets = admissible_sets(t)
    B = data.draw(st.sampled_from(sets))
    i = data.draw(st.integers(1, t))
    for C in (act_r(i, B), act_e(i, B)):
        assert isinstance(C, AdmissibleSet) and 2 * len(C) <= t + 1
