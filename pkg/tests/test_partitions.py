import itertools

import pytest
from hypothesis import given, strategies as st

from rrweights.partitions import (
    ALL,
    DISTINCT,
    ODD_PARTS,
    RR,
    RR2,
    Chain,
    Partition,
    StringBlock,
    chains,
    conjugate,
    count,
    enumerate_partitions,
    hook_partition,
    nu_3,
    nu_d,
    parts_allowed,
    rank_profile,
    ranks_in,
    strings,
)

FIGURE = Partition((7, 6, 6, 4, 4, 2, 1, 1))

partitions = st.lists(st.integers(1, 12), max_size=10).map(lambda xs: Partition(tuple(sorted(xs, reverse=True))))


def brute_partitions(n):
    """All partitions of n via compositions, deduplicated; deliberately naive."""
    seen = set()
    for k in range(n + 1):
        for cuts in itertools.combinations(range(1, n), k - 1) if k else [()]:
            if k == 0:
                if n == 0:
                    seen.add(())
                continue
            bounds = (0,) + cuts + (n,)
            seen.add(tuple(sorted((bounds[i + 1] - bounds[i] for i in range(k)), reverse=True)))
    return seen


class TestPartition:
    def test_validation(self):
        with pytest.raises(ValueError):
            Partition((1, 2))
        with pytest.raises(ValueError):
            Partition((2, 0))
        assert Partition().sigma == 0 and Partition().nu == 0

    def test_stats(self):
        assert nu_d((3, 3, 1)) == 2
        assert nu_3((9, 6, 6, 2)) == 3
        assert FIGURE.sigma == 31 and FIGURE.nu == 8


class TestFerrers:
    def test_conjugate(self):
        assert conjugate(()) == Partition()
        assert conjugate((3, 1)) == Partition((2, 1, 1))
        assert conjugate(FIGURE) == Partition((8, 6, 5, 5, 3, 3, 1))

    def test_figure_profile(self):
        prof = rank_profile(FIGURE)
        assert prof.durfee == 4
        assert prof.hooks == (14, 9, 6, 2)
        assert prof.ranks == (-1, 0, 1, -1)

    def test_single_node(self):
        prof = rank_profile((1,))
        assert (prof.durfee, prof.hooks, prof.ranks) == (1, (1,), (0,))

    @given(partitions)
    def test_conjugate_is_an_involution(self, p):
        assert conjugate(conjugate(p)) == p
        assert conjugate(p).sigma == p.sigma

    @given(partitions)
    def test_profile_invariants(self, p):
        prof = rank_profile(p)
        assert sum(prof.hooks) == p.sigma
        assert hook_partition(p).is_rogers_ramanujan()
        assert all((h - r) % 2 == 1 for h, r in zip(prof.hooks, prof.ranks))
        # conjugation negates every successive rank
        assert rank_profile(conjugate(p)).ranks == tuple(-r for r in prof.ranks)


class TestChainsAndStrings:
    def test_chains(self):
        assert chains((9, 7, 4, 2)) == [Chain(7, 2), Chain(2, 2)]
        assert chains((5,)) == [Chain(5, 1)]
        assert Chain(7, 2).parts == (7, 9)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_odd_staircase_is_one_chain(self, n):
        p = Partition(tuple(range(2 * n - 1, 0, -2)))
        assert chains(p) == [Chain(1, n)]

    def test_strings(self):
        blocks = strings((9, 6, 2))
        assert [(s.parts, s.eta) for s in blocks] == [((6, 9), 1), ((2,), 0)]
        assert [(s.parts, s.eta) for s in strings((4,))] == [((4,), 0)]

    def test_strings_of_12_9_7_4_2(self):
        # every gap is 2 or 3, so this is a single string with two gaps of 3
        blocks = strings((12, 9, 7, 4, 2))
        assert [(s.parts, s.eta) for s in blocks] == [((2, 4, 7, 9, 12), 2)]

    def test_rejects_non_rr(self):
        with pytest.raises(ValueError):
            chains((3, 2))
        with pytest.raises(ValueError):
            strings((4, 4))
        with pytest.raises(ValueError):
            StringBlock((2, 6))

    @given(st.lists(st.integers(2, 5), max_size=8), st.integers(1, 4))
    def test_blocks_reassemble(self, gaps, start):
        parts = [start]
        for g in gaps:
            parts.append(parts[-1] + g)
        p = Partition(tuple(reversed(parts)))
        assert sorted(x for ch in chains(p) for x in ch.parts) == sorted(p.parts)
        assert sorted(x for s in strings(p) for x in s.parts) == sorted(p.parts)
        assert sum(s.eta for s in strings(p)) == gaps.count(3)


class TestEnumeration:
    def test_small_examples(self):
        assert [p.parts for p in enumerate_partitions(4, ranks_in(1, 3))] == [(4,), (3, 1)]
        assert [p.parts for p in enumerate_partitions(4, RR)] == [(4,), (3, 1)]
        assert count(5, DISTINCT) == 3
        for filt in (ALL, DISTINCT, ODD_PARTS, RR, RR2, parts_allowed([1], 2), ranks_in(0, 0)):
            assert [p.parts for p in enumerate_partitions(0, filt)] == [()]

    def test_empty_rank_window(self):
        assert count(0, ranks_in(2, 1)) == 1
        assert count(5, ranks_in(2, 1)) == 0

    def test_reverse_lexicographic(self):
        got = [p.parts for p in enumerate_partitions(6)]
        assert got == sorted(got, reverse=True)

    def test_known_counts(self):
        assert [count(n) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
        assert count(40) == 37338

    @pytest.mark.parametrize("n", range(13))
    def test_filters_match_brute_force(self, n):
        everything = brute_partitions(n)
        assert {p.parts for p in enumerate_partitions(n)} == everything
        for filt in (DISTINCT, ODD_PARTS, RR, RR2, parts_allowed([2, 3], 6), ranks_in(-1, 2)):
            got = [p.parts for p in enumerate_partitions(n, filt)]
            assert len(got) == len(set(got))
            assert set(got) == {p for p in everything if filt.accepts(p)}

    @pytest.mark.parametrize("n", range(25))
    def test_euler_odd_equals_distinct(self, n):
        assert count(n, ODD_PARTS) == count(n, DISTINCT)
