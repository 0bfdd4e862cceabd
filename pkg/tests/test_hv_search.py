import itertools

import pytest
from hypothesis import given, settings, strategies as st_

from localworlds import hv_search as hv
from localworlds.correlations import Constraint, CorrelationSpec, ghz_spec

GHZ = ghz_spec()


def spec_of(constraints, parties=("A", "B", "C"), settings_=("X", "Y")):
    return CorrelationSpec(tuple(parties), tuple(settings_), tuple(constraints))


class TestSingleWorld:
    def test_ghz_unsat_over_64(self):
        report = hv.enumerate_single_world(GHZ)
        assert not report.satisfiable
        assert report.total_searched == 64
        assert report.witness_count == 0

    def test_xxx_alone_has_32_witnesses(self):
        report = hv.enumerate_single_world(spec_of([Constraint(("X", "X", "X"), -1)]))
        assert report.satisfiable
        # 4 of the 8 X-combinations have product -1, Y slots free: 4 * 8 = 32
        assert report.witness_count == 32
        assert report.total_searched == 64

    def test_empty_spec_vacuous(self):
        report = hv.enumerate_single_world(spec_of([]))
        assert report.satisfiable and report.witness_count == 64

    def test_witnesses_actually_satisfy(self):
        report = hv.enumerate_single_world(spec_of([Constraint(("X", "X", "X"), -1)]))
        for w in report.witnesses:
            prod = 1
            for p in "ABC":
                prod *= w.single_value((p, "X"))
            assert prod == -1

    def test_size_guard(self):
        big = CorrelationSpec(tuple("ABCDEFG"), ("X", "Y", "Z"), ())
        with pytest.raises(hv.SearchSizeError):
            hv.enumerate_single_world(big)

    def test_witness_truncation_keeps_exact_count(self):
        wide = CorrelationSpec(tuple("ABCD"), ("X", "Y", "Z"), ())
        report = hv.enumerate_single_world(wide)
        assert report.total_searched == 2 ** 12
        assert report.witness_count == 2 ** 12
        assert len(report.witnesses) == hv.WITNESS_CAP
        assert report.truncated


class TestContradictionTrace:
    def test_ghz_chain_follows_the_choice_sets(self):
        trace = hv.derive_contradiction_trace(GHZ)
        assert trace.contradiction and trace.closed
        kinds = [s.kind for s in trace.steps]
        assert kinds == ["seed", "seed", "derive", "seed", "derive", "derive",
                         "contradiction"]
        by_slot = {s.slot: s for s in trace.steps if s.slot}
        order = trace.symbol_order
        assert order == ["l", "m", "n"]
        assert by_slot[("C", "X")].monomial.render(order) == "-lm"
        assert by_slot[("B", "Y")].monomial.render(order) == "-lmn"
        assert by_slot[("C", "Y")].monomial.render(order) == "mn"
        final = trace.steps[-1]
        assert final.slot == ("A", "X")
        assert final.monomial.render(order) == "-l"
        assert "lambda_X^A = -l" in final.text and "contradicts lambda_X^A = l" in final.text

    def test_flipped_xxx_closes_consistently(self):
        flipped = spec_of([Constraint(("X", "X", "X"), +1)] + list(GHZ.constraints[1:]))
        trace = hv.derive_contradiction_trace(flipped)
        assert trace.closed and not trace.contradiction
        assert hv.enumerate_single_world(flipped).satisfiable

    def test_single_constraint_has_no_chain(self):
        trace = hv.derive_contradiction_trace(spec_of([Constraint(("X", "X", "X"), -1)]))
        assert not trace.closed and not trace.contradiction

    def test_oracle_agreement_on_corpus(self):
        corpus = [
            GHZ,
            spec_of([Constraint(("X", "X", "X"), +1)] + list(GHZ.constraints[1:])),
            spec_of([Constraint(("X", "X", "X"), -1)]),
            spec_of([]),
            CorrelationSpec(("A", "B"), ("Z",), (Constraint(("Z", "Z"), +1),)),
            CorrelationSpec(("A", "B"), ("Z",),
                            (Constraint(("Z", "Z"), +1), Constraint(("Z", "Z"), -1))),
        ]
        for spec in corpus:
            trace = hv.derive_contradiction_trace(spec)
            brute = hv.enumerate_single_world(spec)
            if trace.contradiction:
                assert not brute.satisfiable
            if trace.closed and not trace.contradiction:
                assert brute.satisfiable


class TestDivergentWorlds:
    def test_ghz_four_worlds_unsat(self):
        report = hv.enumerate_divergent_worlds(GHZ, 4, ("X", "X", "X"))
        assert not report.satisfiable
        # three free (party, Y) slots, four worlds each: 2^12 candidates
        assert report.total_searched == 4096
        assert report.detail["worlds"] == ["w1", "w2", "w3", "w4"]

    def test_epr_two_worlds_sat(self):
        spec = CorrelationSpec(("A", "B"), ("Z",), (Constraint(("Z", "Z"), +1),))
        report = hv.enumerate_divergent_worlds(spec, 2)
        assert report.satisfiable and report.witness_count == 1
        w = report.witnesses[0]
        assert w.value_vector(("A", "Z")) == (+1, -1)
        assert w.value_vector(("B", "Z")) == (+1, -1)
        assert w.world_tags() == ("w1", "w2")

    def test_single_world_reduction(self):
        spec = CorrelationSpec(("A",), ("Z",), (Constraint(("Z",), +1),))
        div = hv.enumerate_divergent_worlds(spec, 1)
        single = hv.enumerate_single_world(spec)
        assert div.satisfiable == single.satisfiable
        assert div.witnesses[0].value_vector(("A", "Z")) == (+1,)

    def test_world_count_mismatch(self):
        with pytest.raises(hv.WorldCountError):
            hv.enumerate_divergent_worlds(GHZ, 3, ("X", "X", "X"))

    def test_anchor_must_match_a_constraint(self):
        with pytest.raises(hv.WorldCountError):
            hv.enumerate_divergent_worlds(GHZ, 4, ("Z", "Z", "Z"))

    def test_anchor_vectors_follow_world_labels(self):
        combos = hv.satisfying_combinations(GHZ.constraints[0])
        assert combos == [(+1, +1, -1), (+1, -1, +1), (-1, +1, +1), (-1, -1, -1)]

    def test_survivors_of_first_three_force_the_product(self):
        # all assignments satisfying the anchor plus the two Y-involving
        # constraints force the remaining product to -1 in every world
        survivors = hv.divergent_survivors(GHZ, 3, ("X", "X", "X"))
        assert len(survivors) == 16  # the free outcome vector of (A, Y)
        for table in survivors:
            for w in range(4):
                prod = (table[("A", "X")][w] * table[("B", "Y")][w] *
                        table[("C", "Y")][w])
                assert prod == -1


class TestMultivaluedWitness:
    def test_ghz_minimal_witness_is_fully_multivalued(self):
        report = hv.many_worlds_witness(GHZ)
        assert report.satisfiable
        w = report.witnesses[0]
        for slot in GHZ.slots:
            assert w.value_set(slot) == {+1, -1}

    def test_epr_witness_multivalued_with_pairing_rule(self):
        spec = CorrelationSpec(("A", "B"), ("Z",), (Constraint(("Z", "Z"), +1),))
        report = hv.many_worlds_witness(spec)
        w = report.witnesses[0]
        assert w.value_set(("A", "Z")) == {+1, -1}
        assert w.value_set(("B", "Z")) == {+1, -1}
        assert report.detail["pairing_rule"]["ZZ"] == [[1, 1], [-1, -1]]

    def test_unconstrained_single_party(self):
        spec = CorrelationSpec(("A",), ("X",), ())
        report = hv.many_worlds_witness(spec)
        assert len(report.witnesses[0].value_set(("A", "X"))) == 1

    def test_always_satisfiable(self):
        report = hv.many_worlds_witness(GHZ)
        assert report.witness_count >= 1

    def test_size_guard(self):
        big = CorrelationSpec(tuple("ABCDEFG"), ("X", "Y"), ())
        with pytest.raises(hv.SearchSizeError):
            hv.many_worlds_witness(big)


class TestChshBound:
    def test_bound_is_two(self):
        assert hv.chsh_classical_bound() == 2.0

    def test_attained_by_all_plus_strategy(self):
        assert hv.chsh_strategy_value(+1, +1, +1, +1) == 2.0

    def test_quantum_value_exceeds_bound(self):
        import math

        from localworlds.correlations import chsh_value, epr_state, tsirelson_settings
        s = chsh_value(epr_state(), tsirelson_settings())
        assert s > hv.chsh_classical_bound()
        assert s == pytest.approx(2 * math.sqrt(2), abs=1e-9)

    def test_no_strategy_beats_two(self):
        for strat in itertools.product((+1, -1), repeat=4):
            assert hv.chsh_strategy_value(*strat) <= 2.0


constraint_st = st_.builds(
    Constraint,
    st_.tuples(st_.sampled_from(["X", "Y"]), st_.sampled_from(["X", "Y"]),
               st_.sampled_from(["X", "Y"])),
    st_.sampled_from([+1, -1]),
)


class TestProperties:
    @settings(max_examples=80, deadline=None)
    @given(st_.lists(constraint_st, max_size=4), constraint_st)
    def test_adding_constraints_is_monotone(self, constraints, extra):
        base = spec_of(constraints)
        extended = spec_of(constraints + [extra])
        r_base = hv.enumerate_single_world(base)
        r_ext = hv.enumerate_single_world(extended)
        if not r_base.satisfiable:
            assert not r_ext.satisfiable
        assert r_ext.witness_count <= r_base.witness_count

    @settings(max_examples=40, deadline=None)
    @given(st_.lists(constraint_st, max_size=3))
    def test_exhaustiveness(self, constraints):
        spec = spec_of(constraints)
        report = hv.enumerate_single_world(spec)
        assert report.total_searched == 2 ** len(spec.slots)
