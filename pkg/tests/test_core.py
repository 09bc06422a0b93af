import itertools

import pytest
from hypothesis import given

from wreathperm import (
    ColoredPermutation,
    ColoredSymbol,
    ParseError,
    format_cycles,
    format_one_line,
    parse_cycles,
    parse_one_line,
    rotate_left,
    rotate_right,
    shift_symbol,
)

from conftest import colored_perms, group

# A size-11, four-color element used as the running fixture: one-line text,
# underlying permutation, color of each value, and its cycle factorization.
BIG_ONE_LINE = "3 5^2 1^2 9 6^1 2 7^1 4^1 11^3 8^1 10^1"
BIG_SIGMA = (3, 5, 1, 9, 6, 2, 7, 4, 11, 8, 10)
BIG_COLORS = {1: 2, 2: 0, 3: 0, 4: 1, 5: 2, 6: 1, 7: 1, 8: 1, 9: 0, 10: 1, 11: 3}
BIG_CYCLES = "(1^2 3)(2 5^2 6^1)(4^1 9 11^3 10^1 8^1)(7^1)"


@pytest.fixture
def big():
    return parse_one_line(BIG_ONE_LINE, 4, 11)


class TestSymbol:
    def test_order_examples(self):
        # higher color exponent sorts lower; ties compare values
        assert ColoredSymbol(3, 2) < ColoredSymbol(1, 1)
        assert ColoredSymbol(1, 1) < ColoredSymbol(2, 1)
        assert ColoredSymbol(4, 1) < ColoredSymbol(1, 0)

    @pytest.mark.parametrize("ell,n", [(3, 4), (4, 11)])
    def test_strict_total_order(self, ell, n):
        symbols = [ColoredSymbol(v, c) for c in range(ell) for v in range(1, n + 1)]
        ranked = sorted(symbols)
        assert len(set(ranked)) == ell * n
        for a, b in itertools.combinations(ranked, 2):
            assert a < b and not b < a
        for a, b, c in itertools.combinations(ranked, 3):
            assert a < c  # transitivity along the sorted chain

    def test_shift_examples(self):
        assert shift_symbol(ColoredSymbol(4, 2), 1, 11) == ColoredSymbol(5, 2)
        s = ColoredSymbol(7, 1)
        assert shift_symbol(s, 0, 9) == s
        assert shift_symbol(ColoredSymbol(3, 1), -2, 9) == ColoredSymbol(1, 1)

    def test_shift_out_of_range(self):
        with pytest.raises(ValueError):
            shift_symbol(ColoredSymbol(9, 0), 1, 9)
        with pytest.raises(ValueError):
            shift_symbol(ColoredSymbol(2, 1), -3, 9)


class TestGroupStructure:
    def test_identity(self):
        e = ColoredPermutation.identity(2, 3)
        assert format_one_line(e) == "1 2 3"
        assert ColoredPermutation.identity(1, 0).n == 0
        with pytest.raises(ValueError):
            ColoredPermutation.identity(0, 3)

    def test_identity_neutral_exhaustive(self):
        e = ColoredPermutation.identity(2, 3)
        for p in group(2, 3):
            assert e * p == p
            assert p * e == p

    def test_compose_hand_example(self):
        a = parse_one_line("2^1 1", 2)
        b = parse_one_line("1^1 2", 2)
        # by the multiplication rule: sigma = (2,1), colors (1 + 1, 1 + 0) mod 2
        assert format_one_line(a * b) == "2 1"

    @pytest.mark.parametrize("ell", [1, 2, 3])
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_compose_matches_symbol_action(self, ell, n):
        symbols = [ColoredSymbol(v, c) for v in range(1, n + 1) for c in range(ell)]
        for a in group(ell, n):
            for b in group(ell, n):
                ab = a * b
                for s in symbols:
                    assert ab.apply(s) == a.apply(b.apply(s))

    def test_associativity_exhaustive(self):
        for ell, n in [(1, 2), (1, 3), (2, 2), (2, 3), (3, 1), (3, 2), (3, 3)]:
            elems = group(ell, n)
            index = {p: i for i, p in enumerate(elems)}
            table = [
                tuple(index[a * b] for b in elems) for a in elems
            ]
            for i, row_i in enumerate(table):
                for j, tj in enumerate(table):
                    lhs = table[row_i[j]]
                    rhs = tuple(row_i[x] for x in tj)
                    assert lhs == rhs, f"associativity fails at ell={ell} n={n} i={i} j={j}"

    def test_inverses_exhaustive(self):
        for ell, n in [(3, 3), (2, 4)]:
            e = ColoredPermutation.identity(ell, n)
            for p in group(ell, n):
                assert p * p.inverse() == e
                assert p.inverse() * p == e
                assert p.inverse().inverse() == p

    def test_closure_size(self):
        elems = set(group(2, 3))
        assert len(elems) == 48
        sample = list(elems)[::7]
        for a in sample:
            for b in sample:
                assert a * b in elems

    def test_compose_mismatch(self):
        with pytest.raises(ValueError):
            ColoredPermutation.identity(2, 3) * ColoredPermutation.identity(2, 2)
        with pytest.raises(ValueError):
            ColoredPermutation.identity(2, 3) * ColoredPermutation.identity(3, 3)


class TestApply:
    def test_fixture_images(self, big):
        assert big.image(2) == ColoredSymbol(5, 2)
        assert big.apply(ColoredSymbol(2)) == ColoredSymbol(5, 2)
        assert big.apply(ColoredSymbol(5)) == ColoredSymbol(6, 1)

    def test_colored_input(self, big):
        # colors compose additively mod ell
        assert big.apply(ColoredSymbol(2, 3)) == ColoredSymbol(5, 1)

    def test_identity_apply(self):
        e = ColoredPermutation.identity(4, 5)
        for v in range(1, 6):
            for c in range(4):
                assert e.apply(ColoredSymbol(v, c)) == ColoredSymbol(v, c)

    def test_out_of_range(self, big):
        with pytest.raises(ValueError):
            big.apply(ColoredSymbol(12, 0))


class TestCycles:
    def test_fixture_factorization(self, big):
        assert format_cycles(big) == "(10^1 8^1 4^1 9 11^3)(7^1)(2 5^2 6^1)(1^2 3)"
        assert parse_cycles(BIG_CYCLES, 4, 11) == big

    def test_identity_cycles(self):
        e = ColoredPermutation.identity(2, 4)
        assert [len(c) for c in e.cycles()] == [1, 1, 1, 1]
        assert format_cycles(e) == "(4)(3)(2)(1)"

    def test_roundtrip_exhaustive(self):
        for p in group(3, 4):
            assert ColoredPermutation.from_cycles(p.cycles(), 3, 4) == p
            assert parse_cycles(format_cycles(p), 3, 4) == p
            assert parse_one_line(format_one_line(p), 3, 4) == p

    def test_from_cycles_errors(self):
        with pytest.raises(ValueError):
            ColoredPermutation.from_cycles(
                [[ColoredSymbol(1), ColoredSymbol(1)]], 2, 2
            )
        with pytest.raises(ValueError):
            ColoredPermutation.from_cycles([[ColoredSymbol(1)]], 2, 2)


class TestText:
    def test_parse_fixture(self, big):
        assert big.sigma == BIG_SIGMA
        assert {v: big.color_of(v) for v in range(1, 12)} == BIG_COLORS
        assert format_one_line(big) == BIG_ONE_LINE

    def test_format_identity(self):
        assert format_one_line(ColoredPermutation.identity(2, 2)) == "1 2"

    def test_empty(self):
        p = parse_one_line("", 3)
        assert p.n == 0
        assert format_one_line(p) == ""
        assert parse_cycles("", 3, 0) == p
        assert format_cycles(p) == ""

    def test_parse_canonicalizes(self):
        assert format_one_line(parse_one_line("  2   1 ", 2)) == "2 1"

    @pytest.mark.parametrize(
        "text,ell",
        [
            ("2 2", 2),        # repeated value
            ("1^0 2", 2),      # explicit zero exponent is not a token
            ("1^2 2", 2),      # exponent must stay below the color count
            ("1^1 2", 1),      # no exponents with a single color
            ("0 1", 2),        # values are 1-based
            ("x 1", 2),        # not a token
            ("3 1", 2),        # value out of range for inferred n = 2
        ],
    )
    def test_parse_errors(self, text, ell):
        with pytest.raises(ParseError):
            parse_one_line(text, ell)

    def test_parse_length_mismatch(self):
        with pytest.raises(ParseError):
            parse_one_line("1 2", 2, 3)

    def test_parse_cycles_errors(self):
        with pytest.raises(ParseError):
            parse_cycles("(1 2", 2)
        with pytest.raises(ParseError):
            parse_cycles("1 2", 2)
        with pytest.raises(ParseError):
            parse_cycles("()", 2)
        with pytest.raises(ParseError):
            parse_cycles("(1)(1)", 2)
        with pytest.raises(ParseError):
            parse_cycles("(1)", 2, 2)  # missing value 2


class TestRotations:
    def test_examples(self):
        p = parse_one_line("1 2 3", 1)
        assert format_one_line(rotate_right(p)) == "3 1 2"
        assert format_one_line(rotate_left(rotate_right(p))) == "1 2 3"

    def test_inverse_pair_exhaustive(self):
        for p in group(2, 4):
            assert rotate_left(rotate_right(p)) == p
            assert rotate_right(rotate_left(p)) == p

    def test_full_turn(self):
        for p in group(3, 3):
            q = p
            for _ in range(3):
                q = rotate_right(q)
            assert q == p

    def test_empty_rotation(self):
        with pytest.raises(ValueError):
            rotate_right(ColoredPermutation.identity(1, 0))


@given(colored_perms())
def test_text_roundtrip_random(p):
    assert parse_one_line(format_one_line(p), p.ell, p.n) == p
    assert parse_cycles(format_cycles(p), p.ell, p.n) == p


@given(colored_perms(max_n=5))
def test_group_laws_random(p):
    e = ColoredPermutation.identity(p.ell, p.n)
    assert p * p.inverse() == e
    assert p.inverse().inverse() == p
