"""Coset enumeration, subgroup invariants, congruence testing, dimensions."""

import json
import random

import pytest

from katzmod.subgroups import (GeneratorSet, Word, matrix_to_word, coset_enumerate,
                               invariants, congruence_test, dim_cusp_forms,
                               dim_rho_prim, subgroup_invariants, load_generator_file,
                               resolve_subgroup, CosetCapExceeded, PRESETS, FULL_GROUP,
                               S_MAT, T_MAT, T_INV_MAT, mat_mul, psl2_canonical)

# well-known congruence subgroups, by generators; (index, widths) for cross-checks
CONGRUENCE_GROUPS = {
    "principal_level_2": ([(1, 2, 0, 1), (1, 0, 2, 1)], 6, (2, 2, 2)),
    "hecke_level_2": ([(1, 1, 0, 1), (1, 0, 2, 1)], 3, (2, 1)),
    "hecke_level_3": ([(1, 1, 0, 1), (1, 0, 3, 1)], 4, (3, 1)),
    "hecke_level_4": ([(1, 1, 0, 1), (1, 0, 4, 1), (3, -1, 4, -1)], 6, (4, 1, 1)),
    "hecke_level_5": ([(1, 1, 0, 1), (1, 0, 5, 1), (2, -1, 5, -2), (3, -2, 5, -3)], 6, (5, 1)),
}


def eq_up_to_sign(a, b):
    return a == b or a == tuple(-x for x in b)


def random_word_matrix(rng, max_len=14, bound=10 ** 6):
    """Random product of S, T, T^-1 with all entries within the bound."""
    m = (1, 0, 0, 1)
    for _ in range(rng.randint(1, max_len)):
        step = mat_mul(m, rng.choice([S_MAT, T_MAT, T_INV_MAT]))
        if max(abs(x) for x in step) > bound:
            break
        m = step
    return m


class TestGeneratorSet:
    def test_determinant_checked(self):
        with pytest.raises(ValueError):
            GeneratorSet("bad", [(1, 0, 0, 2)])
        with pytest.raises(ValueError):
            GeneratorSet("bad", [(0, 1, 1, 0)])

    def test_reduced_mod_minus_identity(self):
        gens = GeneratorSet("x", [(-1, 0, 0, -1), (-2, -1, -1, -1)])
        assert gens.generators[0] == (1, 0, 0, 1)
        assert gens.generators[1] == (2, 1, 1, 1)

    def test_canonical_sign(self):
        assert psl2_canonical((0, -1, 1, 0)) == (0, 1, -1, 0)
        assert psl2_canonical((0, 1, -1, 0)) == (0, 1, -1, 0)


class TestMatrixToWord:
    def test_t(self):
        word = matrix_to_word(T_MAT)
        assert word.letters == ("T",)
        assert word.evaluate() == T_MAT

    def test_s(self):
        word = matrix_to_word(S_MAT)
        assert eq_up_to_sign(word.evaluate(), S_MAT)

    def test_gamma43_generator(self):
        m = (2, 1, 1, 1)
        word = matrix_to_word(m)
        assert eq_up_to_sign(word.evaluate(), m)

    def test_round_trip_200_random(self):
        rng = random.Random(101)
        seen = 0
        while seen < 200:
            m = random_word_matrix(rng)
            word = matrix_to_word(m)
            assert eq_up_to_sign(word.evaluate(), m), m
            seen += 1

    def test_non_unimodular_rejected(self):
        with pytest.raises(ValueError):
            matrix_to_word((2, 0, 0, 1))


class TestCosetEnumeration:
    def test_full_group(self):
        table = coset_enumerate(FULL_GROUP)
        assert table.index == 1

    def test_preset_indices(self):
        assert coset_enumerate(PRESETS["gamma43"]).index == 7
        assert coset_enumerate(PRESETS["gamma52"]).index == 7
        assert coset_enumerate(PRESETS["gamma711"]).index == 9

    def test_table_relations(self):
        for name in PRESETS:
            table = coset_enumerate(PRESETS[name])
            n = table.index
            identity = tuple(range(n))
            square = tuple(table.perm_S[table.perm_S[i]] for i in range(n))
            assert square == identity
            st = tuple(table.perm_T[table.perm_S[i]] for i in range(n))
            cube = identity
            for _ in range(3):
                cube = tuple(st[i] for i in cube)
            assert cube == identity

    def test_known_congruence_indices(self):
        for name, (gens, index, widths) in CONGRUENCE_GROUPS.items():
            table = coset_enumerate(GeneratorSet(name, gens))
            assert table.index == index, name

    def test_cap_exceeded(self):
        with pytest.raises(CosetCapExceeded):
            coset_enumerate(PRESETS["gamma711"], cap=3)


class TestInvariants:
    def test_gamma43(self):
        inv = subgroup_invariants(PRESETS["gamma43"])
        assert inv.index == 7
        assert inv.cusp_widths == (4, 3)
        assert inv.nu2 == 1 and inv.nu3 == 1
        assert inv.genus == 0
        assert inv.level == 12

    def test_gamma52(self):
        inv = subgroup_invariants(PRESETS["gamma52"])
        assert inv.index == 7
        assert inv.cusp_widths == (5, 2)
        assert inv.nu2 == 1 and inv.nu3 == 1
        assert inv.genus == 0
        assert inv.level == 10

    def test_gamma711(self):
        inv = subgroup_invariants(PRESETS["gamma711"])
        assert inv.index == 9
        assert inv.cusp_widths == (7, 1, 1)
        assert inv.nu2 == 1 and inv.nu3 == 0
        assert inv.genus == 0
        assert inv.level == 7

    def test_full_group(self):
        inv = subgroup_invariants(FULL_GROUP)
        assert inv.index == 1 and inv.cusp_widths == (1,)
        assert inv.nu2 == 1 and inv.nu3 == 1 and inv.genus == 0

    def test_known_congruence_widths(self):
        for name, (gens, index, widths) in CONGRUENCE_GROUPS.items():
            inv = invariants(coset_enumerate(GeneratorSet(name, gens)))
            assert inv.cusp_widths == widths, name
            assert sum(inv.cusp_widths) == inv.index

    def test_widths_sum_to_index_random(self):
        rng = random.Random(211)
        produced = 0
        while produced < 50:
            gens = []
            for _ in range(rng.randint(1, 3)):
                gens.append(random_word_matrix(rng, max_len=10, bound=10 ** 4))
            try:
                table = coset_enumerate(GeneratorSet("random", gens), cap=20000)
            except CosetCapExceeded:
                continue
            inv = invariants(table)
            assert sum(inv.cusp_widths) == inv.index
            assert inv.genus >= 0
            produced += 1


class TestCongruence:
    def test_full_group_congruence(self):
        assert congruence_test(coset_enumerate(FULL_GROUP))

    def test_presets_noncongruence(self):
        for name in PRESETS:
            assert not subgroup_invariants(PRESETS[name]).congruence

    def test_known_congruence_groups(self):
        # levels 2 and 4 drive the power-of-two branch, 3 and 5 the odd
        # branch, and gamma43 / gamma52 above the general branch
        for name, (gens, index, widths) in CONGRUENCE_GROUPS.items():
            assert congruence_test(coset_enumerate(GeneratorSet(name, gens))), name


def psl2_mod_n_size(n):
    """|PSL2(Z/n)| = n^3 prod_(p|n) (1 - 1/p^2), halved for n > 2."""
    size = n ** 3
    m = n
    p = 2
    while m > 1:
        if m % p == 0:
            while m % p == 0:
                m //= p
            size = size // (p * p) * (p * p - 1)
        p += 1
    return size // 2 if n > 2 else size


def image_size_mod_n(gens, n):
    """Order of the image of the subgroup in PSL2(Z/n), by closure."""
    def reduce(m):
        m = tuple(x % n for x in m)
        return min(m, tuple((-x) % n for x in m))

    seen = {reduce((1, 0, 0, 1))}
    frontier = list(seen)
    mats = [reduce(g) for g in gens.generators]
    while frontier:
        nxt = []
        for a in frontier:
            for b in mats:
                c = reduce(mat_mul(a, b))
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        frontier = nxt
    return len(seen)


class TestCongruenceOracle:
    """Dual route: a subgroup of level N is congruence exactly when the index
    of its congruence closure (the preimage of its image mod N) equals its own
    index.  This recomputes the congruence flag with no permutation words."""

    def oracle(self, gens):
        inv = invariants(coset_enumerate(gens))
        n = inv.level
        closure_index = psl2_mod_n_size(n) // image_size_mod_n(gens, n)
        assert psl2_mod_n_size(n) % image_size_mod_n(gens, n) == 0
        assert closure_index <= inv.index
        return closure_index == inv.index

    def test_presets_against_oracle(self):
        for name in PRESETS:
            inv = subgroup_invariants(PRESETS[name])
            assert self.oracle(PRESETS[name]) == inv.congruence == False

    def test_congruence_family_against_oracle(self):
        for name, (gens, index, widths) in CONGRUENCE_GROUPS.items():
            gset = GeneratorSet(name, gens)
            inv = invariants(coset_enumerate(gset))
            assert self.oracle(gset) == inv.congruence == True, name

    def test_random_subgroups_against_oracle(self):
        rng = random.Random(307)
        checked = 0
        while checked < 30:
            gens = [random_word_matrix(rng, max_len=9, bound=10 ** 4)
                    for _ in range(rng.randint(1, 3))]
            gset = GeneratorSet("random", gens)
            try:
                table = coset_enumerate(gset, cap=20000)
            except CosetCapExceeded:
                continue
            inv = invariants(table)
            if inv.level > 24:
                continue  # keep the mod-N closure affordable
            assert self.oracle(gset) == inv.congruence, gens
            checked += 1


class TestDimCuspForms:
    def test_full_group_weights(self):
        inv = subgroup_invariants(FULL_GROUP)
        # classical dimensions for the modular group
        assert dim_cusp_forms(inv, 12) == 1
        assert dim_cusp_forms(inv, 4) == 0
        assert dim_cusp_forms(inv, 6) == 0
        assert dim_cusp_forms(inv, 14) == 0
        assert dim_cusp_forms(inv, 16) == 1
        assert dim_cusp_forms(inv, 2) == 0

    def test_gamma43_weight_4(self):
        inv = subgroup_invariants(PRESETS["gamma43"])
        assert dim_cusp_forms(inv, 4) == 1

    def test_weight_2_is_genus(self):
        inv = subgroup_invariants(PRESETS["gamma711"])
        assert dim_cusp_forms(inv, 2) == inv.genus

    def test_odd_weight_rejected(self):
        inv = subgroup_invariants(FULL_GROUP)
        with pytest.raises(ValueError):
            dim_cusp_forms(inv, 5)
        with pytest.raises(ValueError):
            dim_cusp_forms(inv, 0)


class TestDimRhoPrim:
    def test_gamma43_small(self):
        assert dim_rho_prim(PRESETS["gamma43"], 2) == 2
        assert dim_rho_prim(PRESETS["gamma43"], 20) == 20

    def test_gamma52(self):
        assert dim_rho_prim(PRESETS["gamma52"], 10) == 10

    def test_gamma711_small(self):
        assert dim_rho_prim(PRESETS["gamma711"], 2) == 2
        assert dim_rho_prim(PRESETS["gamma711"], 4) == 4

    def test_gamma711_growth(self):
        # regression pin for what the formula yields at larger k: the cusp
        # and elliptic data of this index-9 subgroup make the excess over the
        # full group exceed k/2 once floor((k+2)/3) < k/2
        assert dim_rho_prim(PRESETS["gamma711"], 6) == 8
        assert dim_rho_prim(PRESETS["gamma711"], 20) == 26

    def test_non_preset_rejected(self):
        other = GeneratorSet("gamma2", [(1, 2, 0, 1), (1, 0, 2, 1)])
        with pytest.raises(ValueError, match="congruence closure unknown"):
            dim_rho_prim(other, 2)

    def test_odd_k_rejected(self):
        with pytest.raises(ValueError):
            dim_rho_prim(PRESETS["gamma43"], 3)


class TestGeneratorFiles:
    def test_round_trip(self, tmp_path):
        doc = {"name": "gamma2", "generators": [[1, 2, 0, 1], [1, 0, 2, 1]]}
        path = tmp_path / "gamma2.json"
        path.write_text(json.dumps(doc))
        gens = load_generator_file(path)
        assert gens.name == "gamma2"
        table = coset_enumerate(gens)
        assert table.index == 6
        assert invariants(table).cusp_widths == (2, 2, 2)

    def test_resolve_preset_and_path(self, tmp_path):
        assert resolve_subgroup("gamma43") is PRESETS["gamma43"]
        doc = {"name": "t", "generators": [[1, 1, 0, 1]]}
        path = tmp_path / "t.json"
        path.write_text(json.dumps(doc))
        assert resolve_subgroup(str(path)).name == "t"
        with pytest.raises(ValueError, match="unknown subgroup"):
            resolve_subgroup("gamma_nonexistent")

    def test_malformed_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text(json.dumps([1, 2, 3]))
        with pytest.raises(ValueError):
            load_generator_file(path)


class TestWord:
    def test_word_evaluation(self):
        w = Word(("S", "T", "T^-1", "S"))
        assert eq_up_to_sign(w.evaluate(), mat_mul(mat_mul(S_MAT, T_MAT),
                                                   mat_mul(T_INV_MAT, S_MAT)))

    def test_length(self):
        assert len(matrix_to_word((1, 3, 0, 1))) == 3
