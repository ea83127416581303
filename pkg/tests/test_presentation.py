import pytest

from brauer_i2n.errors import InvalidParameter, ParseError
from brauer_i2n.particle import BoxSpec, classify_relation
from brauer_i2n.presentation import (
    ALPHABET,
    GeneratorWord,
    ThetaParameters,
    declared_parameters,
    formula_rank,
    normal_forms,
    relation_schema,
    xi_relation_tag,
)


def by_source(rels, source):
    return [r for r in rels if r.source == source]


def test_odd_xi_relations():
    rels = by_source(relation_schema(5), "0.2.7")
    assert [r.slot for r in rels] == ["xi_1", "xi_2"]
    assert str(rels[0].lhs) == "e0 r1 e0"
    assert str(rels[1].lhs) == "e0 r1 r0 r1 e0"
    assert all(str(r.rhs) == "e0" for r in rels)


def test_n8_k2_uses_e0e1e0_form():
    rels = [r for r in relation_schema(8) if r.slot == "xi_2"]
    assert len(rels) == 1
    assert rels[0].source == "0.1.15"
    assert str(rels[0].lhs) == "e0 r1 r0 r1 e0"
    assert str(rels[0].rhs) == "e0 e1 e0"


def test_fixed_exponent_relation():
    rels = by_source(relation_schema(6), "0.1.6")
    assert len(rels) == 1
    r = rels[0]
    assert r.slot is None
    assert str(r.lhs) == "e1 e0 e1"
    assert r.rhs.letters == ("e1",) and r.rhs.delta_exp == 1
    assert r.to_dict() == {"source": "0.1.6", "lhs": "e1 e0 e1", "rhs": "delta^1 e1", "slot": None}


@pytest.mark.parametrize("n", range(6, 17, 2))
def test_even_schema_counts(n):
    m = n // 2
    rels = relation_schema(n)
    half = m // 2
    for source, count in [("0.1.3", 2), ("0.1.4", 4), ("0.1.5", 2), ("0.1.6", 1), ("0.1.7", 1),
                          ("0.1.8", 1), ("0.1.9", 1), ("0.1.10", half), ("0.1.11", half),
                          ("0.1.12", half), ("0.1.20", 1)]:
        assert len(by_source(rels, source)) == count, source
    xi = [r for r in rels if r.source in ("0.1.13", "0.1.14", "0.1.15")]
    assert [r.slot for r in xi] == [f"xi_{k}" for k in range(1, half + 1)]
    for k, r in enumerate(xi, start=1):
        assert r.source == xi_relation_tag(m, k) == classify_relation(BoxSpec(m, k))


@pytest.mark.parametrize("n", range(5, 17))
def test_alphabet_and_slots(n):
    declared = set(declared_parameters(n))
    for r in relation_schema(n):
        assert set(r.lhs.letters) <= set(ALPHABET)
        assert set(r.rhs.letters) <= set(ALPHABET)
        assert r.slot is None or r.slot in declared


def test_xi_tag_examples():
    assert xi_relation_tag(5, 2) == "0.1.14"
    assert xi_relation_tag(3, 1) == "0.1.13"
    assert xi_relation_tag(4, 2) == "0.1.15"


def test_schema_rejects_small_n():
    with pytest.raises(InvalidParameter):
        relation_schema(4)


class TestWords:
    def test_parse_round_trip(self):
        for text in ["1", "e0 r1 r0", "delta^2 e1", "delta^-1 r0 e0"]:
            assert str(GeneratorWord.parse(6, text)) == text

    def test_parse_errors(self):
        with pytest.raises(ParseError):
            GeneratorWord.parse(6, "e0 x1")
        with pytest.raises(ParseError):
            GeneratorWord.parse(6, "delta^q e0")

    def test_bad_letters(self):
        with pytest.raises(InvalidParameter):
            GeneratorWord(6, ("e2",))

    def test_op(self):
        assert GeneratorWord.parse(6, "e0 r1 e1").op() == GeneratorWord.parse(6, "e1 r1 e0")


class TestTheta:
    def test_odd_requires_equal_kappas(self):
        with pytest.raises(InvalidParameter):
            ThetaParameters(5, 2, 3)

    def test_negative_rejected(self):
        with pytest.raises(InvalidParameter):
            ThetaParameters(6, 2, 3, eta={1: -1})

    def test_to_dict_order(self):
        th = ThetaParameters(6, 2, 3, eta={1: 1}, xi={1: 0}, theta={1: 1, 0: 0})
        assert list(th.to_dict()) == ["kappa0", "kappa1", "eta", "xi", "theta"]
        assert th.to_dict()["theta"] == {"0": 0, "1": 1}
        assert th.value("kappa_1") == 3 and th.value("theta_1") == 1


class TestNormalForms:
    @pytest.mark.parametrize("n,size", [(5, 35), (6, 66), (7, 63)])
    def test_sizes(self, n, size):
        assert len(normal_forms(n)) == size == formula_rank(n)

    @pytest.mark.parametrize("n", range(6, 17, 2))
    def test_even_family_counts(self, n):
        m = n // 2
        forms = normal_forms(n)
        ii = [f for f in forms if f.family == "ii"]
        assert sum(1 for f in ii if f.middle == ("e0",)) == 2 * m * m
        assert sum(1 for f in ii if f.middle == ("e1",)) == m * m
        for fam in ("iii", "iv", "v"):
            assert sum(1 for f in forms if f.family == fam) == m * m
        assert len(forms) == 2 * n + 6 * m * m == formula_rank(n)

    @pytest.mark.parametrize("n", range(5, 13))
    def test_distinct_tuples(self, n):
        forms = normal_forms(n)
        assert len({f.key() for f in forms}) == len(forms)

    def test_word(self):
        f = [f for f in normal_forms(5) if f.family == "odd"][-1]
        assert f.word().letters[len(f.u.letters)] == "e0"
