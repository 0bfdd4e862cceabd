import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st_

from localworlds import correlations as co
from localworlds import hilbert as hb
from oracles import projector_distribution

S2 = 1 / math.sqrt(2)


def x_branch_projector():
    ket = np.kron(hb.KET_UP_X, hb.KET_UP_X)
    return np.outer(ket, ket.conj())


def post_measurement_pair():
    """Two-branch record over (a, A, b, B): both observers recorded up/down_x."""
    ux, dx = hb.KET_UP_X, hb.KET_DOWN_X
    amps = S2 * (np.kron(np.kron(ux, ux), np.kron(ux, ux)) +
                 np.kron(np.kron(dx, dx), np.kron(dx, dx)))
    return hb.StateVector(("A", "a", "B", "b"), amps)


class TestCanonicalStates:
    def test_epr_is_normalized(self):
        assert co.epr_state().norm() == pytest.approx(1.0, abs=1e-12)

    def test_epr_zz_perfect_correlation(self):
        assert hb.expectation(co.epr_state(), [("a", hb.Z), ("b", hb.Z)]) == pytest.approx(1.0)

    def test_epr_y_basis_coefficients(self):
        # same vector rewritten in the y basis: equal-weight support on the
        # two same-outcome terms, nothing else
        dist = hb.born_distribution(co.epr_state(), {"a": hb.Y, "b": hb.Y})
        assert dist[(+1, +1)] == pytest.approx(0.5, abs=1e-12)
        assert dist[(-1, -1)] == pytest.approx(0.5, abs=1e-12)
        assert dist[(+1, -1)] == pytest.approx(0.0, abs=1e-12)
        assert dist[(-1, +1)] == pytest.approx(0.0, abs=1e-12)

    def test_basis_rewrite_invariance(self):
        # rotating both qubits into the y eigenbasis turns Y measurements into
        # Z measurements of the rewritten vector; expectations must agree
        psi = co.epr_state()
        rot = hb.Operator(("a",), hb.Y.basis.conj().T)
        rot_b = hb.Operator(("b",), hb.Y.basis.conj().T)
        rewritten = hb.apply(rot_b, hb.apply(rot, psi))
        e_y = hb.expectation(psi, [("a", hb.Y), ("b", hb.Y)])
        e_z = hb.expectation(rewritten, [("a", hb.Z), ("b", hb.Z)])
        assert e_y == pytest.approx(e_z, abs=1e-12)
        assert e_y == pytest.approx(1.0, abs=1e-12)

    def test_ghz_satisfies_all_constraints(self):
        report = co.verify_spec(co.ghz_state(), co.ghz_spec())
        assert report.passed
        assert [r.constraint.name() for r in report.results] == ["XXX", "YYX", "YXY", "XYY"]
        for r in report.results:
            assert r.expectation == pytest.approx(r.constraint.required, abs=1e-12)
            assert r.support_ok

    def test_ghz_zzz_expectation_zero(self):
        # frozen oracle value: direct projector computation gives 0
        oracle = projector_distribution(co.ghz_state(), [("A", hb.Z.matrix),
                                                         ("B", hb.Z.matrix),
                                                         ("C", hb.Z.matrix)])
        prods = sum(p * c[0] * c[1] * c[2] for c, p in oracle.items())
        assert prods == pytest.approx(0.0, abs=1e-12)
        got = hb.expectation(co.ghz_state(), [("A", hb.Z), ("B", hb.Z), ("C", hb.Z)])
        assert got == pytest.approx(0.0, abs=1e-12)


class TestVerifySpec:
    def test_epr_zz_spec(self):
        spec = co.CorrelationSpec(("a", "b"), ("Z",), (co.Constraint(("Z", "Z"), +1),))
        assert co.verify_spec(co.epr_state(), spec).passed

    def test_product_state_fails_xxx(self):
        up3 = hb.StateVector(("A", "B", "C"), [1] + [0] * 7)
        report = co.verify_spec(up3, co.ghz_spec())
        assert not report.passed
        xxx = report.results[0]
        assert xxx.constraint.name() == "XXX"
        assert not xxx.satisfied
        assert xxx.expectation == pytest.approx(0.0, abs=1e-12)

    def test_support_check_catches_mean_only_correlation(self):
        # E(ZZ) = 0.5 without perfect correlation must not pass a ZZ spec
        amps = [math.sqrt(0.75), 0, math.sqrt(0.25), 0]  # |00> and |10>
        psi = hb.StateVector(("a", "b"), amps)
        spec = co.CorrelationSpec(("a", "b"), ("Z",), (co.Constraint(("Z", "Z"), +1),))
        report = co.verify_spec(psi, spec)
        assert not report.passed and not report.results[0].support_ok

    def test_label_mismatch(self):
        with pytest.raises(hb.LabelError):
            co.verify_spec(co.epr_state(), co.ghz_spec())


class TestReducedStateInsufficiency:
    def test_two_branch_record(self):
        psi = post_measurement_pair()
        p = x_branch_projector()
        lhs, rhs, gap = co.reduced_state_insufficiency(psi, (("A", "a"), ("B", "b")), (p, p))
        assert lhs == pytest.approx(0.25, abs=1e-12)
        assert rhs == pytest.approx(0.5, abs=1e-12)
        assert gap == pytest.approx(0.25, abs=1e-12)

    def test_epr_with_z_projectors(self):
        pz = np.outer([1, 0], [1, 0])
        lhs, rhs, gap = co.reduced_state_insufficiency(co.epr_state(), (("a",), ("b",)),
                                                       (pz, pz))
        assert (lhs, rhs) == pytest.approx((0.25, 0.5), abs=1e-12)

    def test_product_state_gap_zero(self):
        psi = hb.tensor(hb.tensor(hb.basis_state("A", hb.KET_UP_X),
                                  hb.basis_state("a", hb.KET_UP_X)),
                        hb.tensor(hb.basis_state("B", hb.KET_DOWN_X),
                                  hb.basis_state("b", hb.KET_DOWN_X)))
        p = x_branch_projector()
        _, _, gap = co.reduced_state_insufficiency(psi, (("A", "a"), ("B", "b")), (p, p))
        assert gap == pytest.approx(0.0, abs=1e-12)

    @settings(max_examples=80, deadline=None)
    @given(st_.integers(0, 2 ** 32 - 1))
    def test_separable_states_have_zero_gap(self, seed):
        rng = np.random.default_rng(seed)

        def ket():
            v = rng.normal(size=2) + 1j * rng.normal(size=2)
            return v / np.linalg.norm(v)

        left = hb.StateVector(("p",), ket())
        right = hb.StateVector(("q",), ket())
        psi = hb.tensor(left, right)
        proj = np.outer(ket(), ket().conj())  # arbitrary rank-1 block per side
        proj_l = np.outer(left.amplitudes, left.amplitudes.conj())
        _, _, gap = co.reduced_state_insufficiency(psi, (("p",), ("q",)), (proj_l, proj))
        assert gap <= 1e-12

    def test_partition_must_cover(self):
        with pytest.raises(hb.CompositionError):
            co.reduced_state_insufficiency(co.epr_state(), (("a",), ("a",)),
                                           (np.eye(2), np.eye(2)))


class TestChsh:
    def test_tsirelson_value(self):
        s = co.chsh_value(co.epr_state(), co.tsirelson_settings())
        assert s == pytest.approx(2 * math.sqrt(2), abs=1e-9)

    def test_degenerate_settings(self):
        s = co.chsh_value(co.epr_state(), [(hb.Z, hb.Z)] * 4)
        e = hb.expectation(co.epr_state(), [("a", hb.Z), ("b", hb.Z)])
        assert s == pytest.approx(2 * e, abs=1e-12)
        assert -2 - 1e-12 <= s <= 2 + 1e-12

    def test_product_state_z_settings(self):
        psi = hb.tensor(hb.basis_state("a"), hb.basis_state("b"))
        assert co.chsh_value(psi, [(hb.Z, hb.Z)] * 4) == pytest.approx(2.0, abs=1e-12)

    def test_arity_checks(self):
        with pytest.raises(ValueError):
            co.chsh_value(co.epr_state(), [(hb.Z, hb.Z)] * 3)
        with pytest.raises(hb.HilbertError):
            co.chsh_value(co.ghz_state(), [(hb.Z, hb.Z)] * 4)


class TestSpecSerialization:
    def test_round_trip(self):
        spec = co.ghz_spec()
        again = co.spec_from_dict(co.spec_to_dict(spec))
        assert again == spec

    def test_settings_inferred_from_constraints(self):
        data = {"parties": ["A", "B"],
                "constraints": [{"settings": ["Z", "Z"], "required": 1}]}
        spec = co.spec_from_dict(data)
        assert spec.settings == ("Z",)

    def test_bad_required_value(self):
        with pytest.raises(ValueError):
            co.Constraint(("Z", "Z"), 0)

    def test_constraint_arity_checked(self):
        with pytest.raises(ValueError):
            co.CorrelationSpec(("A", "B"), ("Z",), (co.Constraint(("Z",), +1),))
