import pytest
from hypothesis import given, strategies as st

from addtriples import counting
from addtriples.residues import ResidueSet, IncompatibleSetsError, full_set, make_set

from oracles import brute_count, brute_multiplicities

METHODS = [
    counting.count_naive,
    counting.count_shift,
    counting.count_layers,
    counting.count_convolution,
    counting.count_triples,
]

PAPER_A9 = [0, 1, 2, 4, 5, 7, 8]
PAPER_B9 = [0, 1, 3, 4, 6, 7]


@pytest.mark.parametrize("method", METHODS)
class TestAgainstKnownValues:
    def test_small_pair(self, method):
        a = make_set(5, [0, 1])
        assert method(a, a) == 3

    def test_composite_witness(self, method):
        assert method(make_set(9, PAPER_A9), make_set(9, PAPER_B9)) == 24

    def test_empty_sides(self, method):
        assert method(make_set(5, []), make_set(5, [0, 1])) == 0
        assert method(make_set(5, [0, 1]), make_set(5, [])) == 0

    def test_shift_sum_example(self, method):
        # per-shift overlaps are 5, 2, 0, 0
        assert method(make_set(11, [0, 3, 5, 6]), make_set(11, range(5))) == 7

    def test_full_a_gives_t_squared(self, method):
        assert method(full_set(7), make_set(7, [0, 1, 2])) == 9

    def test_singleton_a_against_interval(self, method):
        assert method(make_set(13, [0]), make_set(13, range(4))) == 4

    def test_modulus_mismatch(self, method):
        with pytest.raises(IncompatibleSetsError):
            method(make_set(5, [0]), make_set(7, [0]))


def all_subset_pairs(p):
    for abits in range(1 << p):
        for bbits in range(1 << p):
            yield ResidueSet(p, abits), ResidueSet(p, bbits)


@pytest.mark.parametrize("p", [3, 5])
def test_four_way_agreement_exhaustive(p):
    for a, b in all_subset_pairs(p):
        reference = brute_count(p, list(a), list(b))
        assert counting.count_naive(a, b) == reference
        assert counting.count_shift(a, b) == reference
        assert counting.count_layers(a, b) == reference
        assert counting.count_convolution(a, b) == reference


def test_four_way_agreement_exhaustive_p7():
    mismatches = []
    for a, b in all_subset_pairs(7):
        r = counting.count_naive(a, b)
        if not r == counting.count_shift(a, b) == counting.count_layers(a, b) == counting.count_convolution(a, b):
            mismatches.append((a, b))
    assert not mismatches


@given(
    st.sampled_from([9, 15, 17, 23, 25, 49]).flatmap(
        lambda p: st.tuples(
            st.integers(min_value=0, max_value=(1 << p) - 1),
            st.integers(min_value=0, max_value=(1 << p) - 1),
        ).map(lambda bits: (ResidueSet(p, bits[0]), ResidueSet(p, bits[1])))
    )
)
def test_four_way_agreement_randomized(pair):
    a, b = pair
    reference = brute_count(a.modulus, list(a), list(b))
    for method in METHODS:
        assert method(a, b) == reference


class TestLayers:
    def test_small_example(self):
        a = make_set(5, [0, 1])
        dec = counting.layers(a, a)
        assert [layer.elements() for layer in dec.layers] == [(0, 1, 2), (1,)]
        assert counting.count_layers(a, a) == 2 + 1

    def test_singleton(self):
        dec = counting.layers(make_set(5, [0]), make_set(5, [0]))
        assert [layer.elements() for layer in dec.layers] == [(0,)]

    def test_three_element_interval(self):
        a = make_set(5, [0, 1, 2])
        dec = counting.layers(a, a)
        assert [layer.elements() for layer in dec.layers] == [
            (0, 1, 2, 3, 4),
            (1, 2, 3),
            (2,),
        ]

    @given(
        st.sampled_from([5, 7, 9, 11, 13]).flatmap(
            lambda p: st.tuples(
                st.integers(min_value=0, max_value=(1 << p) - 1),
                st.integers(min_value=0, max_value=(1 << p) - 1),
            ).map(lambda bits: (ResidueSet(p, bits[0]), ResidueSet(p, bits[1])))
        )
    )
    def test_structure_invariants(self, pair):
        a, b = pair
        dec = counting.layers(a, b)
        # multiplicity matches the brute-force tally
        assert list(dec.multiplicity) == brute_multiplicities(a.modulus, list(a), list(b))
        # nesting, thresholds, and total mass
        for i, layer in enumerate(dec.layers, start=1):
            assert layer.elements() == tuple(
                c for c, m in enumerate(dec.multiplicity) if m >= i
            )
            if i > 1:
                assert layer.bits & dec.layers[i - 2].bits == layer.bits
        assert sum(layer.cardinality for layer in dec.layers) == a.cardinality * b.cardinality
        if dec.layers:
            assert len(dec.layers) <= min(a.cardinality, b.cardinality)
        # the two views of the layer method agree
        assert counting.count_layers(a, b) == sum(
            layer.intersection_size(b) for layer in dec.layers
        )
        assert counting.layer_sizes(a, b) == list(dec.sizes())


class TestIdentities:
    @pytest.mark.parametrize(
        "p,s,t,expected",
        [(5, 2, 2, 7), (9, 7, 6, 30), (7, 3, 7, 21)],
    )
    def test_complement_rhs_values(self, p, s, t, expected):
        assert counting.complement_identity_rhs(p, s, t) == expected

    def test_complement_rhs_domain(self):
        with pytest.raises(ValueError):
            counting.complement_identity_rhs(5, 6, 2)

    @given(
        st.sampled_from([5, 7, 9, 11, 15]).flatmap(
            lambda p: st.tuples(
                st.integers(min_value=0, max_value=(1 << p) - 1),
                st.integers(min_value=0, max_value=(1 << p) - 1),
            ).map(lambda bits: (ResidueSet(p, bits[0]), ResidueSet(p, bits[1])))
        )
    )
    def test_complement_identity(self, pair):
        a, b = pair
        p = a.modulus
        lhs = counting.count_naive(a, b) + counting.count_naive(a.complement(), b.complement())
        assert lhs == counting.complement_identity_rhs(p, a.cardinality, b.cardinality)

    @given(
        st.sampled_from([5, 7, 9, 11, 13]).flatmap(
            lambda p: st.integers(min_value=1, max_value=(1 << p) - 1).map(
                lambda bits: ResidueSet(p, bits)
            )
        )
    )
    def test_all_shifts_total_is_t_squared(self, b):
        total = sum(b.shift(a).intersection_size(b) for a in range(b.modulus))
        assert total == b.cardinality**2

    @given(
        st.sampled_from([5, 7, 9, 11]).flatmap(
            lambda p: st.tuples(
                st.integers(min_value=0, max_value=(1 << p) - 1),
                st.integers(min_value=0, max_value=(1 << p) - 1),
                st.integers(min_value=0, max_value=p - 1),
            ).map(lambda v: (ResidueSet(p, v[0]), ResidueSet(p, v[1]), v[2]))
        )
    )
    def test_translation_of_b_invariance(self, args):
        a, b, c = args
        assert counting.count_triples(a, b.shift(c)) == counting.count_triples(a, b)

    @given(
        st.sampled_from([5, 7, 11, 13]).flatmap(
            lambda p: st.tuples(
                st.integers(min_value=0, max_value=(1 << p) - 1),
                st.integers(min_value=0, max_value=(1 << p) - 1),
                st.integers(min_value=1, max_value=p - 1),
            ).map(lambda v: (ResidueSet(p, v[0]), ResidueSet(p, v[1]), v[2]))
        )
    )
    def test_dilation_invariance(self, args):
        a, b, lam = args
        p = a.modulus
        a2 = make_set(p, [lam * x for x in a])
        b2 = make_set(p, [lam * x for x in b])
        assert counting.count_triples(a2, b2) == counting.count_triples(a, b)


def test_dispatcher_uses_both_routes():
    a = make_set(9, PAPER_A9)
    b = make_set(9, PAPER_B9)
    assert counting.count_triples(a, b) == 24
    assert counting.SHIFT_METHOD_MAX_P == 4096


def test_convolution_matches_on_structured_inputs():
    # dense, sparse and interval shapes across a few moduli
    for p in (9, 15, 21):
        for a_elems, b_elems in [
            (range(p), range(3)),
            ([0], range(p - 1)),
            (range(0, p, 3), range(0, p, 2)),
        ]:
            a, b = make_set(p, a_elems), make_set(p, b_elems)
            assert counting.count_convolution(a, b) == brute_count(p, list(a), list(b))
