import random
from fractions import Fraction

import pytest

from macvertex.cyclotomic import CyclotomicNumber, zeta
from macvertex.multipoly import MultiPoly
from macvertex.partitions import staircase
from macvertex.symfun import schur
from macvertex.vertex import (
    ConfigError,
    GridConfig,
    HigherSpinASM,
    ResourceError,
    annihilation_rmatrix,
    apply_rmatrix,
    brute_force_configs,
    config_to_hsasm,
    count_configs,
    determinant_side_value,
    enumerate_hsasm,
    enumerate_partition_function,
    extend_spectral,
    fused_determinant,
    fused_determinant_interp,
    fused_determinant_point,
    fused_matrix,
    fused_r,
    gamma_const,
    leading_coefficient,
    q_factorial,
    q_integer,
    r_matrix,
    recursion_check,
    symmetric_state,
    transfer_matrix,
    weight_abc,
)


def cyc(v, order):
    return CyclotomicNumber.from_rational(Fraction(v), order)


class TestWeights:
    def test_examples(self):
        q = zeta(16)
        one = CyclotomicNumber.one(16)
        assert weight_abc("a", one, one, q) == q - q.inverse()
        assert weight_abc("c", one, one, q) == q - q.inverse()
        x = cyc(Fraction(7, 3), 16)
        assert weight_abc("b", x, x, q).is_zero

    def test_r_matrix_structure(self):
        q = zeta(16)
        x = cyc(2, 16)
        m = r_matrix(x, x, q)
        # b entries vanish at x = y
        assert m[1][1].is_zero and m[2][2].is_zero
        assert not m[1][2].is_zero

    def test_identity_relation_symbolic(self):
        # R(x,y) R(y,x) = a(x,y) a(y,x) Id with symbolic amplitudes
        order = 16
        q = zeta(order)
        X = MultiPoly.variable(0, 2, order)
        Y = MultiPoly.variable(1, 2, order)
        m1 = r_matrix(X, Y, q)
        m2 = r_matrix(Y, X, q)
        scalar = weight_abc("a", X, Y, q) * weight_abc("a", Y, X, q)
        for i in range(4):
            for j in range(4):
                acc = MultiPoly.zero(2, order)
                for k in range(4):
                    acc = acc + m1[i][k] * m2[k][j]
                expected = scalar if i == j else MultiPoly.zero(2, order)
                assert acc == expected

    def test_ybe_numeric(self):
        q = Fraction(7, 3)
        rng = random.Random(3)
        ys = [Fraction(rng.randint(2, 9), rng.randint(1, 4)) for _ in range(3)]
        r12 = r_matrix(ys[0], ys[1], q)
        r13 = r_matrix(ys[0], ys[2], q)
        r23 = r_matrix(ys[1], ys[2], q)
        for word in range(8):
            lhs = apply_rmatrix({word: Fraction(1)}, r12, 0, 1)
            lhs = apply_rmatrix(lhs, r13, 0, 2)
            lhs = apply_rmatrix(lhs, r23, 1, 2)
            rhs = apply_rmatrix({word: Fraction(1)}, r23, 1, 2)
            rhs = apply_rmatrix(rhs, r13, 0, 2)
            rhs = apply_rmatrix(rhs, r12, 0, 1)
            assert lhs == rhs


class TestAnnihilation:
    def test_matrix_form(self):
        order = 16
        q = zeta(order)
        X = MultiPoly.variable(0, 1, order)
        m = annihilation_rmatrix(1, X, q)
        pref = (q * q - 1) * X * X
        zero = MultiPoly.zero(1, order)
        expected = [
            [zero, zero, zero, zero],
            [zero, -1 * pref, pref, zero],
            [zero, pref, -1 * pref, zero],
            [zero, zero, zero, zero],
        ]
        assert m == expected

    def test_kernel_and_image(self):
        q = zeta(16)
        x = cyc(3, 16)
        m = annihilation_rmatrix(2, x, q)
        one = CyclotomicNumber.one(16)
        # words on 2 sites: bit set = minus; |+-> = {1}? site0 minus -> word 1
        sym = {0b01: one, 0b10: one}
        assert apply_rmatrix(sym, m, 0, 1) == {}
        assert apply_rmatrix({0b00: one}, m, 0, 1) == {}
        anti = {0b01: one, 0b10: -one}
        out = apply_rmatrix(anti, m, 0, 1)
        assert set(out) == {0b01, 0b10}
        assert out[0b01] == -out[0b10]


class TestSymmetricState:
    def test_counts(self):
        assert len(symmetric_state(4, 2)) == 6
        assert symmetric_state(3, 0) == {0: 1}
        with pytest.raises(ValueError):
            symmetric_state(2, 3)

    def test_adjacent_transposition_invariance(self):
        state = symmetric_state(4, 2)
        for word in state:
            for i in range(3):
                b1 = (word >> i) & 1
                b2 = (word >> (i + 1)) & 1
                swapped = word & ~((1 << i) | (1 << (i + 1)))
                swapped |= (b2 << i) | (b1 << (i + 1))
                assert state.get(swapped) == state[word]


class TestFusion:
    def test_ell1_reduces_to_r_matrix(self):
        q = zeta(16)
        x, y = cyc(2, 16), cyc(5, 16)
        tensor = fused_r(1, x, y, q)
        m = r_matrix(x, y, q)
        # label 1 = plus, 0 = minus; r_matrix index 0 = (+,+)
        for a in range(2):
            for b in range(2):
                for g in range(2):
                    for e in range(2):
                        row = 2 * (1 - g) + (1 - e)
                        col = 2 * (1 - a) + (1 - b)
                        assert tensor.entry(a, b, g, e) == m[row][col]

    def test_conservation(self):
        q = zeta(16)
        tensor = fused_r(2, cyc(2, 16), cyc(5, 16), q)
        for (a, b, g, e) in tensor.entries:
            assert a + b == g + e

    def test_identity_relation_ell2(self):
        q = zeta(16)
        x, y = cyc(2, 16), cyc(7, 16)
        m1 = fused_matrix(fused_r(2, x, y, q))
        m2 = fused_matrix(fused_r(2, y, x, q))
        dim = 9
        prod = [
            [
                sum((m1[i][k] * m2[k][j] for k in range(dim)),
                    CyclotomicNumber.zero(16))
                for j in range(dim)
            ]
            for i in range(dim)
        ]
        diag = prod[0][0]
        assert not diag.is_zero
        for i in range(dim):
            for j in range(dim):
                assert prod[i][j] == (diag if i == j else CyclotomicNumber.zero(16))

    def test_fused_output_annihilated(self):
        # the fused product of small R's maps symmetric inputs to vectors
        # killed by every annihilation operator on either factor
        for ell in (2, 3):
            q = zeta(16)
            X, Y = cyc(2, 16), cyc(7, 16)
            mats = {
                (i, j): r_matrix(q ** (i - 1) * X, q ** (j - 1) * Y, q)
                for i in range(1, ell + 1)
                for j in range(1, ell + 1)
            }
            one = CyclotomicNumber.one(16)
            vec = {}
            for wl in symmetric_state(ell, 1):
                for wr in symmetric_state(ell, ell - 1):
                    vec[wl | (wr << ell)] = one
            for i in range(ell, 0, -1):
                for j in range(1, ell + 1):
                    vec = apply_rmatrix(vec, mats[(i, j)], i - 1, ell + j - 1)
            for i in range(1, ell):
                ann_x = annihilation_rmatrix(i, X, q)
                assert apply_rmatrix(vec, ann_x, i - 1, i) == {}
                ann_y = annihilation_rmatrix(i, Y, q)
                assert apply_rmatrix(vec, ann_y, ell + i - 1, ell + i) == {}

    def test_ybe_ell2_numeric(self):
        q = zeta(16)
        vals = [cyc(v, 16) for v in (2, 5, 7)]
        t12 = fused_r(2, vals[0], vals[1], q)
        t13 = fused_r(2, vals[0], vals[2], q)
        t23 = fused_r(2, vals[1], vals[2], q)

        def apply(tensor, state, s1, s2):
            out = {}
            for labels, coef in state.items():
                a, b = labels[s1], labels[s2]
                for g in range(3):
                    e = a + b - g
                    if not 0 <= e <= 2:
                        continue
                    w = tensor.entry(a, b, g, e)
                    if w.is_zero:
                        continue
                    new = list(labels)
                    new[s1], new[s2] = g, e
                    key = tuple(new)
                    add = coef * w
                    out[key] = out[key] + add if key in out else add
            return {k: v for k, v in out.items() if not v.is_zero}

        import itertools

        for start in itertools.product(range(3), repeat=3):
            init = {start: CyclotomicNumber.one(16)}
            lhs = apply(t23, apply(t13, apply(t12, init, 0, 1), 0, 2), 1, 2)
            rhs = apply(t12, apply(t13, apply(t23, init, 1, 2), 0, 2), 0, 1)
            assert lhs == rhs


class TestExtendSpectral:
    def test_examples(self):
        order = 16
        q = zeta(order)
        x1 = MultiPoly.variable(0, 2, order)
        x2 = MultiPoly.variable(1, 2, order)
        assert extend_spectral([x1], 2, q) == [x1, q ** 2 * x1]
        assert extend_spectral([x1, x2], 1, q) == [x1, x2]
        ext = extend_spectral([x1, x2], 3, q)
        assert len(ext) == 6
        assert ext[3] == x2 and ext[5] == q ** 4 * x2


class TestEnumeration:
    def test_single_vertex(self):
        q = zeta(16)
        X, Y = Fraction(2), Fraction(3)
        val = enumerate_partition_function(1, 1, [X], [Y], q)
        assert val == (q - q.inverse()) * cyc(6, 16)

    def test_matches_brute_force(self):
        q = zeta(12)
        Xs, Ys = [Fraction(2), Fraction(3)], [Fraction(5), Fraction(7)]
        dp = enumerate_partition_function(2, 1, Xs, Ys, q)
        tensors = [
            [fused_r(1, cyc(x, 12), cyc(y, 12), q) for y in Ys] for x in Xs
        ]
        total = CyclotomicNumber.zero(12)
        for cfg in brute_force_configs(2, 1):
            w = CyclotomicNumber.one(12)
            for i in range(2):
                for j in range(2):
                    w = w * tensors[i][j].entry(
                        cfg.h[i][j], cfg.v[i + 1][j], cfg.h[i][j + 1], cfg.v[i][j]
                    )
            total = total + w
        assert dp == total

    def test_fused_equals_extended_grid(self):
        # Z_{n,l}(x, y) = Z_{ln}(xbar, ybar): amplitudes q^k X for q^{2k} x
        q = zeta(16)
        Xs, Ys = [Fraction(2)], [Fraction(3)]
        fused = enumerate_partition_function(1, 2, Xs, Ys, q)
        ext_X = [cyc(2, 16), q * cyc(2, 16)]
        ext_Y = [cyc(3, 16), q * cyc(3, 16)]
        plain = enumerate_partition_function(2, 1, ext_X, ext_Y, q)
        assert fused == plain

    def test_resource_cap(self):
        with pytest.raises(ResourceError):
            enumerate_partition_function(
                3, 3, [Fraction(1)] * 3, [Fraction(2)] * 3, zeta(16), max_states=10
            )

    @pytest.mark.parametrize(
        "n,ell,order", [(1, 1, 12), (2, 1, 12), (1, 2, 16), (2, 2, 16)]
    )
    def test_enumeration_vs_determinant_constant_ratio(self, n, ell, order):
        q = zeta(order)
        primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
        rng = random.Random(17)
        ratios = []
        for _ in range(3):
            vals = rng.sample(primes, 2 * n)
            Xs = [Fraction(v) for v in vals[:n]]
            Ys = [Fraction(v) for v in vals[n:]]
            enum = enumerate_partition_function(n, ell, Xs, Ys, q)
            if isinstance(enum, Fraction):
                enum = CyclotomicNumber.from_rational(enum, order)
            side = determinant_side_value(n, ell, q, Xs, Ys)
            ratios.append(enum * side.inverse())
        assert all(r == ratios[0] for r in ratios)

    def test_transfer_matrices_commute(self):
        q = zeta(12)
        ys = [cyc(5, 12), cyc(7, 12)]
        t1 = transfer_matrix(1, cyc(2, 12), ys, q)
        t2 = transfer_matrix(1, cyc(3, 12), ys, q)
        size = len(t1)
        for i in range(size):
            for j in range(size):
                ab = sum(
                    (t1[i][k] * t2[k][j] for k in range(size)),
                    CyclotomicNumber.zero(12),
                )
                ba = sum(
                    (t2[i][k] * t1[k][j] for k in range(size)),
                    CyclotomicNumber.zero(12),
                )
                assert ab == ba


class TestDeterminant:
    def test_trivial_cases(self):
        q = zeta(12)
        z = fused_determinant(1, 1, q)
        assert z == MultiPoly.constant(1, 2, 12)
        q16 = zeta(16)
        z12 = fused_determinant(1, 2, q16)
        assert z12 == MultiPoly.constant(-(q16 + q16.inverse()), 2, 16)

    def test_schur_at_zeta3(self):
        q = zeta(3)
        z = fused_determinant(2, 1, q)
        assert z == schur(staircase(2, 1), 4, 3)

    def test_degree_and_symmetry(self):
        q = zeta(12)
        for n, ell in ((2, 1), (2, 2)):
            z = fused_determinant(n, ell, zeta(12) if ell == 1 else zeta(16))
            assert z.is_homogeneous()
            assert z.total_degree() == ell * n * (n - 1)
            assert all(z.degree_in(v) <= ell * (n - 1) for v in range(2 * n))
            # x-swap, y-swap, block swap
            assert z.permute_vars([1, 0, 2, 3]) == z
            assert z.permute_vars([0, 1, 3, 2]) == z
            assert z.permute_vars([2, 3, 0, 1]) == z

    def test_full_symmetry_only_at_root_of_unity(self):
        z3 = fused_determinant(2, 1, zeta(3))
        assert z3.permute_vars([0, 2, 1, 3]) == z3
        zgen = fused_determinant(2, 1, CyclotomicNumber.from_rational(Fraction(5, 2)))
        assert zgen.permute_vars([0, 2, 1, 3]) != zgen

    def test_interp_matches_direct(self):
        q = zeta(3)
        assert fused_determinant_interp(2, 1, q) == fused_determinant(2, 1, q)

    def test_interp_22_matches_point_evaluations(self):
        q = zeta(5)
        z = fused_determinant_interp(2, 2, q)
        rng = random.Random(5)
        for _ in range(3):
            pt = [Fraction(p) for p in rng.sample([2, 3, 5, 7, 11, 13], 4)]
            direct = fused_determinant_point(2, 2, q, pt[:2], pt[2:])
            assert z.eval(pt) == direct


class TestGammaAndRecursion:
    def test_q_integers(self):
        q = zeta(16)
        assert q_integer(1, q) == CyclotomicNumber.one(16)
        assert q_integer(2, q) == q + q.inverse()
        assert q_factorial(1, q) == CyclotomicNumber.one(16)
        assert q_factorial(2, q) == q + q.inverse()
        q7 = zeta(7)
        expected = (q7 + q7.inverse()) * (q7 ** 2 + 1 + q7.inverse() ** 2)
        assert q_factorial(3, q7) == expected

    def test_gamma_variants(self):
        q = zeta(5)
        g1p = gamma_const(1, 2, q, "prop")
        g1a = gamma_const(1, 2, q, "appendix")
        assert g1p == g1a == -(q + q.inverse())
        g2 = gamma_const(2, 2, q, "prop")
        assert g2 == gamma_const(2, 2, q, "appendix")
        assert g2 == q ** 4 * (q + q.inverse()) ** 2
        # the two formulas split at n = 3
        assert gamma_const(3, 2, q, "prop") != gamma_const(3, 2, q, "appendix")

    def test_leading_coefficient_small(self):
        assert leading_coefficient(2, 1, zeta(3)) == gamma_const(
            2, 1, zeta(3), "prop"
        )
        q5 = zeta(5)
        assert leading_coefficient(2, 2, q5) == gamma_const(2, 2, q5, "appendix")

    def test_recursion_n2_ell1(self):
        q = zeta(3)
        ok, diff = recursion_check(2, 1, q)
        assert ok and diff.is_zero
        # explicit form: restriction equals x2 y2
        z = fused_determinant(2, 1, q)
        restricted = z.substitute_scalar(0, 0).substitute_scalar(2, 0)
        x2 = MultiPoly.variable(1, 4, 3)
        y2 = MultiPoly.variable(3, 4, 3)
        assert restricted == x2 * y2

    def test_recursion_generic_q(self):
        q = CyclotomicNumber.from_rational(Fraction(5, 2))
        ok, _ = recursion_check(2, 1, q)
        assert ok


class TestConfigsAndASMs:
    def test_counts_match_asm_sequence(self):
        assert [count_configs(n, 1) for n in (1, 2, 3, 4)] == [1, 2, 7, 42]

    def test_brute_force_matches_dp_count(self):
        for n, ell in ((2, 1), (3, 1), (2, 2), (1, 3)):
            assert len(brute_force_configs(n, ell)) == count_configs(n, ell)

    def test_single_fused_vertex_asm(self):
        cfgs = brute_force_configs(1, 2)
        assert len(cfgs) == 1
        asm = config_to_hsasm(cfgs[0])
        assert asm.rows == ((2,),)

    def test_n2_ell1_asms(self):
        asms = {config_to_hsasm(c) for c in brute_force_configs(2, 1)}
        expected = {
            HigherSpinASM(2, 1, [[1, 0], [0, 1]]),
            HigherSpinASM(2, 1, [[0, 1], [1, 0]]),
        }
        assert asms == expected

    @pytest.mark.parametrize("n,ell", [(2, 1), (3, 1), (2, 2)])
    def test_bijection(self, n, ell):
        cfgs = brute_force_configs(n, ell)
        images = [config_to_hsasm(c) for c in cfgs]
        assert len(set(images)) == len(cfgs)
        assert set(images) == set(enumerate_hsasm(n, ell))

    def test_config_validation(self):
        with pytest.raises(ConfigError):
            GridConfig(1, 1, [[0, 0]], [[1], [0]])
        with pytest.raises(ConfigError):
            HigherSpinASM(2, 1, [[1, 1], [0, 0]])
        with pytest.raises(ConfigError):
            HigherSpinASM(2, 1, [[-1, 2], [2, -1]])

    def test_json(self):
        cfg = brute_force_configs(1, 2)[0]
        data = cfg.to_json()
        assert data["h"] == [[2, 0]] and data["v"] == [[2], [0]]
        asm = config_to_hsasm(cfg)
        assert asm.to_json() == [[2]]
