"""Root systems, exponents, and the Weyl dimension formula."""

import pytest

from katzmod.roots import (build_root_system, exponents, algebra_dimension,
                           weyl_dimension, irreps_of_dimension, irreps_up_to)


class TestBuildRootSystem:
    def test_a2_heights(self):
        rs = build_root_system("A", 2)
        assert len(rs.positive_roots) == 3
        assert sorted(sum(r) for r in rs.positive_roots) == [1, 1, 2]

    def test_g2_heights(self):
        rs = build_root_system("G", 2)
        assert len(rs.positive_roots) == 6
        assert sorted(sum(r) for r in rs.positive_roots) == [1, 1, 2, 3, 4, 5]

    def test_e8_counts(self):
        rs = build_root_system("E", 8)
        assert len(rs.positive_roots) == 120
        assert 2 * len(rs.positive_roots) + 8 == 248

    def test_positive_coordinates_and_simple_heights(self):
        for t, n in [("A", 4), ("B", 3), ("C", 3), ("D", 4), ("F", 4), ("G", 2)]:
            rs = build_root_system(t, n)
            assert all(all(c >= 0 for c in root) for root in rs.positive_roots)
            simples = [r for r in rs.positive_roots if sum(r) == 1]
            assert len(simples) == n

    def test_root_count_dimension_relation(self):
        for t, n in [("A", 5), ("B", 4), ("C", 4), ("D", 5), ("E", 6), ("E", 7), ("F", 4)]:
            rs = build_root_system(t, n)
            assert algebra_dimension(rs) == 2 * len(rs.positive_roots) + n

    def test_d3_permitted_and_flagged(self):
        rs = build_root_system("D", 3)
        assert rs.a3_isomorphic
        assert exponents(rs) == exponents(build_root_system("A", 3))
        assert not build_root_system("D", 4).a3_isomorphic

    def test_invalid_types_rejected(self):
        for t, n in [("A", 0), ("B", 1), ("C", 1), ("D", 2), ("E", 5), ("E", 9),
                     ("F", 3), ("G", 3), ("H", 2)]:
            with pytest.raises(ValueError):
                build_root_system(t, n)


class TestExponents:
    def test_a_series(self):
        for n in range(1, 8):
            assert exponents(build_root_system("A", n)) == tuple(range(1, n + 1))

    def test_c4(self):
        assert exponents(build_root_system("C", 4)) == (1, 3, 5, 7)

    def test_d4(self):
        assert exponents(build_root_system("D", 4)) == (1, 3, 3, 5)

    def test_exceptional(self):
        assert exponents(build_root_system("E", 6)) == (1, 4, 5, 7, 8, 11)
        assert exponents(build_root_system("F", 4)) == (1, 5, 7, 11)
        assert exponents(build_root_system("G", 2)) == (1, 5)

    def test_sum_rules(self):
        for t, n in [("A", 6), ("B", 5), ("C", 5), ("D", 6), ("E", 7), ("G", 2)]:
            rs = build_root_system(t, n)
            exp = exponents(rs)
            assert sum(exp) == len(rs.positive_roots)
            assert sum(2 * r + 1 for r in exp) == algebra_dimension(rs)


class TestAlgebraDimension:
    def test_small_values(self):
        assert algebra_dimension(build_root_system("G", 2)) == 14
        assert algebra_dimension(build_root_system("A", 3)) == 15
        assert algebra_dimension(build_root_system("E", 7)) == 133


class TestWeylDimension:
    def test_a1_sym_powers(self):
        rs = build_root_system("A", 1)
        for m in range(10):
            assert weyl_dimension(rs, (m,)) == m + 1

    def test_g2_fundamentals(self):
        rs = build_root_system("G", 2)
        assert weyl_dimension(rs, (1, 0)) == 7
        assert weyl_dimension(rs, (0, 1)) == 14

    def test_c3_first_fundamental(self):
        rs = build_root_system("C", 3)
        assert weyl_dimension(rs, (1, 0, 0)) == 6

    def test_adjoint_dimensions(self):
        # the adjoint representation has dimension equal to the algebra's
        cases = {("B", 3): (0, 1, 0), ("C", 3): (2, 0, 0), ("G", 2): (0, 1),
                 ("A", 2): (1, 1), ("F", 4): (1, 0, 0, 0)}
        for (t, n), w in cases.items():
            rs = build_root_system(t, n)
            assert weyl_dimension(rs, w) == algebra_dimension(rs)

    def test_zero_weight_is_trivial(self):
        for t, n in [("A", 3), ("B", 4), ("C", 2), ("D", 5), ("E", 6), ("F", 4), ("G", 2)]:
            rs = build_root_system(t, n)
            assert weyl_dimension(rs, (0,) * n) == 1

    def test_strict_monotonicity_small_rank(self):
        # the BFS pruning premise, exhaustively at small rank
        for t, n in [("A", 1), ("A", 2), ("B", 2), ("G", 2)]:
            rs = build_root_system(t, n)
            grid = [(a,) for a in range(4)] if n == 1 else \
                   [(a, b) for a in range(4) for b in range(4)]
            for w in grid:
                base = weyl_dimension(rs, w)
                for i in range(n):
                    up = w[:i] + (w[i] + 1,) + w[i + 1:]
                    assert weyl_dimension(rs, up) > base

    def test_bad_weights_rejected(self):
        rs = build_root_system("A", 2)
        with pytest.raises(ValueError):
            weyl_dimension(rs, (1,))
        with pytest.raises(ValueError):
            weyl_dimension(rs, (-1, 0))


class TestIrrepsOfDimension:
    def test_a1_unique_sym8(self):
        rs = build_root_system("A", 1)
        assert irreps_of_dimension(rs, 9) == [(8,)]

    def test_c2_defining(self):
        rs = build_root_system("C", 2)
        assert (1, 0) in irreps_of_dimension(rs, 4)

    def test_g2_has_nothing_of_dimension_5(self):
        rs = build_root_system("G", 2)
        assert irreps_of_dimension(rs, 5) == []

    def test_g2_small_dims(self):
        rs = build_root_system("G", 2)
        dims = sorted(d for _, d in irreps_up_to(rs, 30))
        assert dims == [1, 7, 14, 27]

    def test_b2_c2_same_dimensions(self):
        b2 = sorted(d for _, d in irreps_up_to(build_root_system("B", 2), 12))
        c2 = sorted(d for _, d in irreps_up_to(build_root_system("C", 2), 12))
        assert b2 == c2 == [1, 4, 5, 10]

    def test_dimension_values_match_weyl(self):
        rs = build_root_system("B", 3)
        for w, d in irreps_up_to(rs, 40):
            assert weyl_dimension(rs, w) == d

    def test_bad_dimension_rejected(self):
        with pytest.raises(ValueError):
            irreps_of_dimension(build_root_system("A", 1), 0)
