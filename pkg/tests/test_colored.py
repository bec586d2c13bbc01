import pytest

from rrweights.colored import (
    ColoredPartition,
    ColorSymbol,
    Transform,
    aggregate_to_vector,
    enumerate_type1,
    goellnitz_counts,
    goellnitz_difference_count,
    position,
    quadratic_value,
    refined_counts,
    transformed_value,
    type1_monomial_sum,
    vector_counts,
)
from rrweights.identities import goellnitz_product_ints
from rrweights.polyq import a, b, c


def sym(value, color):
    return ColorSymbol(value, color)


class TestSymbols:
    def test_positions(self):
        assert position(sym(1, "a")) == 2
        assert position(sym(2, "bc")) == 9
        assert position(sym(1, "c")) == 5

    def test_quadratic_values(self):
        assert quadratic_value(sym(2, "c")) == 4
        assert quadratic_value(sym(2, "ab")) == 2
        assert quadratic_value(sym(3, "a")) == 5

    def test_secondary_needs_value_two(self):
        with pytest.raises(ValueError):
            sym(1, "ab")
        with pytest.raises(ValueError):
            sym(2, "d")
        assert sym(2, "ac").is_secondary and sym(2, "ac").kind == "secondary"

    @pytest.mark.parametrize("pos", [p for p in range(2, 80) if p != 3])
    def test_index_line_round_trip(self, pos):
        s = ColorSymbol.at(pos)
        assert position(s) == pos
        assert transformed_value(s, Transform.QUADRATIC) == quadratic_value(s)
        assert transformed_value(s, Transform.PLAIN) == s.value

    def test_index_line_order(self):
        line = [ColorSymbol.at(p) for p in range(4, 16)]
        labels = [f"{s.color}{s.value}" for s in line]
        assert labels == ["b1", "c1", "ab2", "ac2", "a2", "bc2", "b2", "c2", "ab3", "ac3", "a3", "bc3"]

    def test_standard_secondary_residues(self):
        for v in range(2, 10):
            for col in ("ab", "ac", "bc"):
                p = position(sym(v, col))
                assert p % 6 in (0, 1, 3) and p >= 6

    def test_quadratic_transform_is_weakly_monotone(self):
        vals = [quadratic_value(ColorSymbol.at(p)) for p in range(2, 120) if p != 3]
        assert vals == sorted(vals)


class TestType1:
    def test_gap_rules(self):
        # positions 8 and 2: gap 6 under a primary top
        assert ColoredPartition((sym(2, "a"), sym(1, "a"))).is_type1()
        # positions 9 and 4: gap 5
        assert not ColoredPartition((sym(2, "bc"), sym(1, "b"))).is_type1()
        # position 3 would be bc_1, which does not occur
        with pytest.raises(ValueError):
            sym(1, "bc")

    def test_secondary_top_needs_seven(self):
        top = sym(3, "ab")  # position 12
        assert not ColoredPartition((top, sym(2, "ab"))).is_type1()  # gap 6
        assert ColoredPartition((top, sym(1, "c"))).is_type1()  # gap 7
        assert ColoredPartition((sym(3, "b"), sym(2, "ab"))).is_type1()  # primary top, gap 6

    def test_quadratic_small(self):
        assert {str(cp) for cp in enumerate_type1(1, Transform.QUADRATIC)} == {"1_a", "1_b"}
        assert {str(cp) for cp in enumerate_type1(2, Transform.QUADRATIC)} == {"1_c", "2_ab"}
        assert type1_monomial_sum(1) == a + b
        assert type1_monomial_sum(2) == c + a * b
        assert type1_monomial_sum(3) == (1 + c) * (a + b)

    def test_standard_two(self):
        got = list(enumerate_type1(2, Transform.STANDARD))
        assert [str(cp) for cp in got] == ["1_a"]
        assert got[0].monomial == a

    @pytest.mark.parametrize("n", range(0, 16))
    def test_enumeration_matches_naive_filter(self, n):
        # every subset of symbols with transformed sum n, filtered by is_type1
        symbols = [ColorSymbol.at(p) for p in range(2, 6 * n + 6) if p != 3 and p <= n]
        naive = set()

        def rec(i, chosen, total):
            if total == n:
                cp = ColoredPartition(tuple(sorted(chosen, key=position, reverse=True)))
                if cp.is_type1():
                    naive.add(cp.positions)
                return
            for j in range(i, len(symbols)):
                p = position(symbols[j])
                if total + p <= n:
                    rec(j + 1, chosen + [symbols[j]], total + p)

        rec(0, [], 0)
        assert {cp.positions for cp in enumerate_type1(n)} == naive


class TestGoellnitz:
    def test_examples(self):
        assert goellnitz_counts(0) == (1, 1)
        assert goellnitz_counts(2) == (1, 1)
        assert goellnitz_counts(6) == (1, 1)

    @pytest.mark.parametrize("n", range(30))
    def test_three_routes(self, n):
        big_b, big_c = goellnitz_counts(n)
        assert big_b == big_c == goellnitz_difference_count(n) == goellnitz_product_ints(n)[n]


class TestRefined:
    def test_examples(self):
        assert vector_counts(1) == {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1}
        assert refined_counts(2) == {(1, 0, 0, 0, 0, 0): 1}

    def test_plain_aggregate_at_two(self):
        agg = aggregate_to_vector(refined_counts(2, Transform.PLAIN))
        assert agg == vector_counts(2)

    def test_standard_is_not_the_refined_vector_world(self):
        # under the modulus-6 transform the aggregate counts partitions of n into
        # 2, 4, 5 mod 6, which is a different object from vector_counts
        assert aggregate_to_vector(refined_counts(2)) != vector_counts(2)
