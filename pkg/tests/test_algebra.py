import random
from itertools import product

import pytest

import helpers
from bckcodes import (
    Axiom,
    CayleyTable,
    SearchCapExceeded,
    are_isomorphic,
    check_bci,
    check_bck,
    check_bck_alt,
    is_commutative,
    is_implicative,
    is_positive_implicative,
    partial_order,
    relabel,
    violation_holds,
)

ONE = CayleyTable.from_rows([[0]])
CHAIN2 = CayleyTable.from_rows([[0, 0], [1, 0]])


class TestAxiomChecks:
    def test_sample4_is_bck(self, sample4):
        assert check_bci(sample4).verdict
        assert check_bck(sample4).verdict
        assert check_bck_alt(sample4).verdict

    def test_one_element_table(self):
        assert check_bci(ONE).verdict
        assert check_bck(ONE).verdict
        assert check_bck_alt(ONE).verdict

    def test_idempotent_entry_breaks_axiom_3(self):
        t = CayleyTable.from_rows([[0, 0], [1, 1]])
        report = check_bci(t)
        assert not report.verdict
        assert any(v.axiom is Axiom.A3 and v.witness == (1,) for v in report.violations)

    def test_nonzero_top_row_breaks_axiom_5(self):
        # the xor table: a BCI-algebra (group difference) that is not BCK
        t = CayleyTable.from_rows([[0, 1], [1, 0]])
        assert check_bci(t).verdict
        report = check_bck(t)
        assert not report.verdict
        assert any(v.axiom is Axiom.A5 and v.witness == (1,) for v in report.violations)

    def test_constructed_algebra_is_bck(self, algebra7):
        assert check_bck(algebra7).verdict

    def test_bck_implies_bci_on_random_tables(self):
        rng = random.Random(11)
        for _ in range(300):
            t = helpers.random_table(rng, rng.randint(1, 4))
            if check_bck(t).verdict:
                assert check_bci(t).verdict

    def test_every_violation_reevaluates(self):
        rng = random.Random(12)
        for _ in range(100):
            t = helpers.random_table(rng, rng.randint(2, 4))
            for report in (check_bci(t), check_bck(t), check_bck_alt(t)):
                assert report.verdict == (not report.violations)
                for v in report.violations:
                    assert violation_holds(t, v.axiom, v.witness)

    def test_reports_are_deterministic(self, algebra7):
        t = CayleyTable.from_rows([[0, 0, 0], [1, 0, 2], [2, 2, 0]])
        assert check_bck(t) == check_bck(t)
        assert check_bck(algebra7) == check_bck(algebra7)

    def test_agreement_with_naive_checker_order2(self):
        for grid in product(range(2), repeat=4):
            t = CayleyTable(entries=((grid[0], grid[1]), (grid[2], grid[3])))
            assert check_bck(t).verdict == helpers.naive_bck(t.entries)

    def test_alt_axiomatization_agrees_on_sample(self):
        rng = random.Random(13)
        for _ in range(500):
            t = helpers.random_table(rng, 3)
            assert check_bck(t).verdict == check_bck_alt(t).verdict


class TestProperties:
    def test_sample4_is_commutative(self, sample4):
        # independent pair scan
        e = sample4.entries
        expected = None
        for x in range(4):
            for y in range(4):
                if e[x][e[x][y]] != e[y][e[y][x]]:
                    expected = (x, y)
                    break
            if expected:
                break
        assert expected is None
        assert is_commutative(sample4) is None

    def test_one_element_properties(self):
        assert is_commutative(ONE) is None
        assert is_implicative(ONE) is None
        assert is_positive_implicative(ONE) is None

    def test_constructed_algebra_witnesses_are_smallest(self, algebra7):
        e = algebra7.entries
        r = algebra7.size
        pairs = [
            (x, y) for x in range(r) for y in range(r) if e[x][e[x][y]] != e[y][e[y][x]]
        ]
        assert is_commutative(algebra7) == min(pairs)
        pairs = [(x, y) for x in range(r) for y in range(r) if e[x][e[y][x]] != x]
        assert is_implicative(algebra7) == min(pairs)
        triples = [
            (x, y, z)
            for x in range(r)
            for y in range(r)
            for z in range(r)
            if e[e[x][y]][z] != e[e[x][z]][e[y][z]]
        ]
        assert is_positive_implicative(algebra7) == min(triples)

    def test_published_witnesses_are_genuine(self, algebra7):
        e = algebra7.entries
        assert e[7][e[7][6]] != e[6][e[6][7]]
        assert e[6][e[7][6]] != 6
        assert e[e[7][6]][3] != e[e[7][3]][e[6][3]]

    def test_second_construction_not_implicative(self, algebra4_small):
        assert is_implicative(algebra4_small) is not None

    def test_large_table_not_positive_implicative(self, table4_large):
        assert is_positive_implicative(table4_large) is not None


class TestPartialOrder:
    def test_sample4_relations(self, sample4):
        po = partial_order(sample4)
        assert po.holds(1, 2)       # a <= b since a*b = 0
        assert po.holds(3, 3)
        assert not po.holds(3, 1)   # c*a = c
        assert po.reflexive and po.antisymmetric and po.transitive

    def test_zero_below_everything(self, algebra7, sample4):
        for t in (algebra7, sample4):
            po = partial_order(t)
            assert all(po.holds(0, x) for x in range(t.size))

    def test_chain_in_constructed_algebra(self, algebra7):
        po = partial_order(algebra7)
        assert all(po.holds(i, i + 1) for i in range(1, 5))

    def test_order_properties_hold_for_bck_tables(self, random_codes_200):
        from bckcodes import build_algebra

        for code in random_codes_200[:25]:
            po = partial_order(build_algebra(code))
            assert po.reflexive and po.antisymmetric and po.transitive


class TestIsomorphism:
    def test_identity(self, sample4):
        assert are_isomorphic(sample4, sample4) == (0, 1, 2, 3)

    def test_relabeled_copy_found_and_valid(self, algebra7):
        rng = random.Random(14)
        for _ in range(5):
            perm = helpers.random_zero_fixing_permutation(rng, algebra7.size)
            other = relabel(algebra7, perm)
            sigma = are_isomorphic(algebra7, other)
            assert sigma is not None and sigma[0] == 0
            ea, eb = algebra7.entries, other.entries
            r = algebra7.size
            assert all(
                eb[sigma[x]][sigma[y]] == sigma[ea[x][y]]
                for x in range(r)
                for y in range(r)
            )

    def test_size_mismatch(self, sample4):
        assert are_isomorphic(sample4, ONE) is None

    def test_nonisomorphic_same_size(self, algebra7, algebra4_small):
        # both are 9-element chains in the order, so only the identity could
        # work, and the tables differ
        assert are_isomorphic(algebra7, algebra4_small) is None
        assert are_isomorphic(algebra4_small, algebra7) is None

    def test_exhaustive_oracle_agreement_small(self):
        from itertools import permutations

        rng = random.Random(15)
        for _ in range(40):
            a = helpers.random_table(rng, 3)
            b = helpers.random_table(rng, 3)
            found = any(
                all(
                    b.entries[p[x]][p[y]] == p[a.entries[x][y]]
                    for x in range(3)
                    for y in range(3)
                )
                for p in ((0,) + rest for rest in permutations((1, 2)))
            )
            assert (are_isomorphic(a, b) is not None) == found

    def test_symmetry(self, sample4):
        rng = random.Random(16)
        perm = helpers.random_zero_fixing_permutation(rng, 4)
        other = relabel(sample4, perm)
        assert are_isomorphic(sample4, other) is not None
        assert are_isomorphic(other, sample4) is not None

    def test_cap_refused(self):
        big = CayleyTable.from_rows(
            [[0] * 12] + [[i] + [0] * 11 for i in range(1, 12)]
        )
        with pytest.raises(SearchCapExceeded):
            are_isomorphic(big, big)
        assert are_isomorphic(big, big, cap=12) is not None


class TestRelabel:
    def test_relabel_roundtrip(self, sample4):
        perm = [0, 2, 3, 1]
        inverse = [perm.index(i) for i in range(4)]
        assert relabel(relabel(sample4, perm), inverse) == sample4

    def test_relabel_rejects_non_permutation(self, sample4):
        with pytest.raises(ValueError):
            relabel(sample4, [0, 1, 1, 2])
