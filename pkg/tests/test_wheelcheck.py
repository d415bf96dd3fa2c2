import json
from fractions import Fraction

import pytest

from macvertex.cyclotomic import CyclotomicNumber, zeta
from macvertex.multipoly import MultiPoly
from macvertex.partitions import staircase
from macvertex.symfun import macdonald_at_combinatorial_point
from macvertex.vertex import fused_determinant
from macvertex.wheelcheck import (
    WheelChain,
    WheelPreconditionError,
    check_Vn_membership,
    check_wheel,
    wheel_chains,
)


class TestChains:
    def test_minimal_example(self):
        chains = wheel_chains(1, 2, 3)
        assert len(chains) == 1
        assert chains[0].indices == (1, 2, 3)
        assert chains[0].shifts == (0, 0)

    def test_shift_patterns_r2(self):
        shifts = {c.shifts for c in wheel_chains(2, 2, 3)}
        assert shifts == {(0, 0), (1, 0), (0, 1)}

    @pytest.mark.parametrize("ell", [1, 2, 3, 4])
    def test_shift_count_formula(self, ell):
        shifts = {c.shifts for c in wheel_chains(ell, 2, 3)}
        assert len(shifts) == ell * (ell + 1) // 2

    def test_index_combinations(self):
        chains = wheel_chains(1, 2, 4)
        assert len(chains) == 4  # C(4,3) index choices, one shift pattern

    def test_base_shift_narrows(self):
        full = {c.shifts for c in wheel_chains(3, 2, 3)}
        narrowed = {c.shifts for c in wheel_chains(3, 2, 3, base_shift=2)}
        assert narrowed == {(0, 0)}
        assert narrowed < full

    def test_chain_validation(self):
        with pytest.raises(ValueError):
            WheelChain((2, 1, 3), (0, 0), 1, 2)
        with pytest.raises(ValueError):
            WheelChain((1, 2, 3), (1, 0), 1, 2)


class TestCheckWheel:
    def test_zero_polynomial_passes(self):
        q = zeta(3)
        report = check_wheel(MultiPoly.zero(4, 3), 1, 2, q * q, q)
        assert report.passed
        assert report.total_chains == 4

    def test_z21_passes(self):
        q = zeta(3)
        z = fused_determinant(2, 1, q)
        report = check_wheel(z, 1, 2, q * q, q)
        assert report.passed and report.total_chains == 4

    def test_precondition_enforced(self):
        q = CyclotomicNumber.from_rational(Fraction(5, 2))
        with pytest.raises(WheelPreconditionError):
            check_wheel(MultiPoly.zero(4), 1, 2, q * q, q)

    def test_negative_control(self):
        q = CyclotomicNumber.from_rational(Fraction(5, 2))
        z = fused_determinant(2, 1, q)
        report = check_wheel(z, 1, 2, q * q, q, force=True)
        assert not report.passed
        assert len(report.failures) == 4
        chain, point, value = report.failures[0]
        assert point is not None and not value.is_zero

    def test_symbolic_and_random_agree(self):
        q3 = zeta(3)
        z = fused_determinant(2, 1, q3)
        sym = check_wheel(z, 1, 2, q3 * q3, q3)
        rnd = check_wheel(z, 1, 2, q3 * q3, q3, trials=5, seed=11)
        assert sym.passed == rnd.passed
        qg = CyclotomicNumber.from_rational(Fraction(5, 2))
        zg = fused_determinant(2, 1, qg)
        sym = check_wheel(zg, 1, 2, qg * qg, qg, force=True)
        rnd = check_wheel(zg, 1, 2, qg * qg, qg, trials=5, seed=11, force=True)
        assert sym.passed == rnd.passed is False

    def test_report_json(self):
        q = CyclotomicNumber.from_rational(Fraction(5, 2))
        z = fused_determinant(2, 1, q)
        report = check_wheel(z, 1, 2, q * q, q, force=True)
        data = report.to_json()
        assert data["total_chains"] == 4 and data["pass"] is False
        assert json.dumps(data)
        assert data["failures"][0]["chain"]["indices"] == [1, 2, 3]


class TestVnMembership:
    def test_z21_all_bullets(self):
        q = zeta(3)
        z = fused_determinant(2, 1, q)
        report = check_Vn_membership(z, 2, 1, q)
        assert all(v for k, v in report.items() if k != "wheel_report")

    def test_partial_degree_violation(self):
        q = zeta(3)
        bad = MultiPoly.monomial((2, 0, 0, 0), 1, 4, 3)
        report = check_Vn_membership(bad, 2, 1, q)
        assert not report["partial_degree"]

    def test_macdonald_limit_is_member(self):
        q = zeta(3)
        exp, _ = macdonald_at_combinatorial_point(staircase(2, 1), 1, 4)
        poly = exp.to_multipoly()
        q_embedded = q.as_order(poly.order)
        report = check_Vn_membership(poly, 2, 1, q_embedded)
        assert all(v for k, v in report.items() if k != "wheel_report")

    def test_uniqueness_operational(self):
        # two members of V_n are proportional: cross-evaluation vanishes
        q = zeta(3)
        z = fused_determinant(2, 1, q)
        a = z * MultiPoly.constant(Fraction(3, 7), 4, 3)
        b = z * (q * MultiPoly.constant(2, 4, 3))
        for poly in (a, b):
            rep = check_Vn_membership(poly, 2, 1, q)
            assert all(v for k, v in rep.items() if k != "wheel_report")
        w = [Fraction(2), Fraction(9, 4), Fraction(5), Fraction(7, 3)]
        w2 = [Fraction(1), Fraction(3), Fraction(11, 2), Fraction(13)]
        assert a.eval(w) * b.eval(w2) == b.eval(w) * a.eval(w2)
