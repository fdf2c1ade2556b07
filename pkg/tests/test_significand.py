import math
import random
from fractions import Fraction

import pytest

from benfordkit.errors import DomainError, MalformedToken, ZeroValue
from benfordkit.significand import (
    MAX_EXTRACT_DIGITS,
    ExactDecimal,
    SignificantDigits,
    extract_digits,
    extract_digits_bigint,
    extract_digits_rational,
    first_digit,
    format_token,
    parse_token,
)


class TestParseToken:
    def test_leading_zero_fraction(self):
        x = parse_token("0.150")
        assert x.digits == "150"
        assert x.exponent == 0
        assert x.as_fraction() == Fraction(150, 1000)

    def test_scientific_notation(self):
        x = parse_token("6.626e-34")
        assert x.digits == "6626"
        assert x.as_fraction() == Fraction(6626, 10**3) * Fraction(1, 10**34)

    def test_grouped_separators(self):
        x = parse_token("2,300", separators=True)
        assert x.digits == "2300"
        assert x.as_fraction() == 2300

    def test_separators_off_rejects_comma(self):
        with pytest.raises(MalformedToken):
            parse_token("2,300")

    def test_bad_grouping_rejected(self):
        with pytest.raises(MalformedToken):
            parse_token("1,23", separators=True)

    def test_plain_integer(self):
        assert parse_token("129").as_fraction() == 129

    def test_leading_plus(self):
        assert parse_token("+7.5").as_fraction() == Fraction(15, 2)

    def test_negative(self):
        x = parse_token("-0.25")
        assert x.sign == -1
        assert x.as_fraction() == Fraction(-1, 4)

    def test_lone_fraction(self):
        assert parse_token(".5").as_fraction() == Fraction(1, 2)

    @pytest.mark.parametrize("text", ["", "abc", "1.2.3", "--5", "1e", ".e5", "5.", "0x1f"])
    def test_malformed(self, text):
        with pytest.raises(MalformedToken):
            parse_token(text)

    @pytest.mark.parametrize("text", ["0", "0.00", "0e5", ".000"])
    def test_zero_tokens_parse(self, text):
        assert parse_token(text).is_zero

    def test_large_exponent_exact(self):
        x = parse_token("1.5e100")
        assert x.as_fraction() == Fraction(15, 10) * 10**100


class TestFormatRoundTrip:
    def test_examples(self):
        for text in ["0.150", "129", "-4.2e7", ".5", "0.00"]:
            x = parse_token(text)
            assert parse_token(format_token(x)) == x

    def test_random_round_trip(self):
        rng = random.Random(7)
        for _ in range(500):
            ndigits = rng.randrange(1, 12)
            digits = str(rng.randrange(1, 10)) + "".join(
                str(rng.randrange(10)) for _ in range(ndigits - 1)
            )
            x = ExactDecimal(
                sign=rng.choice([1, -1]),
                digits=digits,
                exponent=rng.randrange(-60, 60),
            )
            assert parse_token(format_token(x)) == x

    def test_denormalized_digits_round_trip_by_value(self):
        # Leading zeros normalize away on reparse; the value is preserved
        # and one parse/format pass reaches a fixed point.
        x = ExactDecimal(sign=1, digits="0123", exponent=5)
        y = parse_token(format_token(x))
        assert y.as_fraction() == x.as_fraction()
        assert parse_token(format_token(y)) == y


class TestExtractDigits:
    def test_first_digit_of_0_150(self):
        assert extract_digits(parse_token("0.150"), 1, 10).digits == (1,)

    def test_three_digits_of_129(self):
        sig = extract_digits(parse_token("129"), 3, 10)
        assert sig.digits == (1, 2, 9)
        assert sig.exponent == 2

    def test_hex_first_digit(self):
        sig = extract_digits(parse_token("255"), 1, 16)
        assert sig.digits == (15,)
        assert sig.exponent == 1

    def test_zero_raises(self):
        with pytest.raises(ZeroValue):
            extract_digits(parse_token("0.00"), 1, 10)

    def test_negative_uses_magnitude(self):
        assert extract_digits(parse_token("-129"), 2, 10).digits == (1, 2)

    def test_padding_beyond_mantissa(self):
        assert extract_digits(parse_token("15"), 4, 10).digits == (1, 5, 0, 0)

    def test_k_cap(self):
        with pytest.raises(DomainError):
            extract_digits(parse_token("5"), MAX_EXTRACT_DIGITS + 1, 10)
        with pytest.raises(DomainError):
            extract_digits(parse_token("5"), 0, 10)

    def test_base_validation(self):
        with pytest.raises(DomainError):
            extract_digits(parse_token("5"), 1, 1)

    def test_unit_interval_first_digit_is_floor(self):
        # For x in [1, base), the first digit is floor(x).
        for base in (2, 7, 10, 16):
            for num in range(base, 6 * base):
                x = Fraction(num, 6)
                if x < 1 or x >= base:
                    continue
                sig = extract_digits_rational(x.numerator, x.denominator, 1, base)
                assert sig.first == math.floor(x)
                assert sig.exponent == 0


class TestExtractBigint:
    def test_examples(self):
        assert extract_digits_bigint(1024, 2, 10).digits == (1, 0)
        assert extract_digits_bigint(120, 1, 10).digits == (1,)

    def test_fibonacci_term_by_recursion_oracle(self):
        a, b = 1, 1
        for _ in range(29):
            a, b = b, a + b
        assert a == 832040
        assert extract_digits_bigint(a, 1, 10).digits == (8,)

    def test_zero(self):
        with pytest.raises(ZeroValue):
            extract_digits_bigint(0, 1, 10)

    @pytest.mark.parametrize("base", [2, 3, 10, 16, 64])
    def test_exact_powers_of_base(self, base):
        # Boundary classification must be exact: b**m has first digit 1 and
        # exponent m; b**m - 1 has first digit base-1 and exponent m-1.
        for m in (1, 2, 5, 17, 40):
            sig = extract_digits_bigint(base**m, 1, base)
            assert (sig.first, sig.exponent) == (1, m)
            sig = extract_digits_bigint(base**m - 1, 1, base)
            assert (sig.first, sig.exponent) == (base - 1, m - 1)

    def test_decimal_digits_match_str(self):
        rng = random.Random(3)
        for _ in range(200):
            n = rng.randrange(1, 10**30)
            k = rng.randrange(1, 10)
            digits = extract_digits_bigint(n, k, 10).digits
            expect = (str(n) + "0" * k)[:k]
            assert "".join(map(str, digits)) == expect


class TestScaleShift:
    def test_power_of_ten_shift_on_tokens(self):
        rng = random.Random(11)
        for _ in range(100):
            x = parse_token(f"{rng.randrange(1, 10**6)}.{rng.randrange(10**4)}")
            k = rng.randrange(1, 6)
            base_sig = extract_digits(x, k, 10)
            for m in (-7, -1, 1, 12):
                shifted = extract_digits(x.scaled(m), k, 10)
                assert shifted.digits == base_sig.digits
                assert shifted.exponent == base_sig.exponent + m

    @pytest.mark.parametrize("base", [2, 7, 10, 16])
    def test_base_power_scaling_of_integers(self, base):
        rng = random.Random(base)
        for _ in range(50):
            n = rng.randrange(1, 10**12)
            k = rng.randrange(1, 5)
            sig = extract_digits_bigint(n, k, base)
            for m in (1, 3, 9):
                scaled = extract_digits_bigint(n * base**m, k, base)
                assert scaled.digits == sig.digits
                assert scaled.exponent == sig.exponent + m

    def test_rational_scaling_via_token(self):
        # 0.15 * 3**4 = 12.15 exactly; leading base-3 digits must agree.
        x = parse_token("0.15")
        y = parse_token("12.15")
        assert (
            extract_digits(x, 3, 3).digits == extract_digits(y, 3, 3).digits
        )


class TestConcatenationConsistency:
    def test_prefix_property(self):
        rng = random.Random(23)
        for _ in range(200):
            n = rng.randrange(1, 10**15)
            base = rng.choice([2, 8, 10, 16])
            k = rng.randrange(2, 8)
            full = extract_digits_bigint(n, k, base)
            prefix = extract_digits_bigint(n, k - 1, base)
            assert full.digits[: k - 1] == prefix.digits
            assert full.exponent == prefix.exponent


class TestSignificantDigitsType:
    def test_invariants(self):
        with pytest.raises(ValueError):
            SignificantDigits(base=10, digits=(0, 1), exponent=0)
        with pytest.raises(ValueError):
            SignificantDigits(base=10, digits=(10,), exponent=0)
        with pytest.raises(ValueError):
            SignificantDigits(base=1, digits=(1,), exponent=0)
        with pytest.raises(ValueError):
            SignificantDigits(base=10, digits=(), exponent=0)


class TestHelpers:
    def test_first_digit(self):
        assert first_digit(832040) == 8
        assert first_digit(-300) == 3
        assert first_digit(255, 16) == 15
        with pytest.raises(ZeroValue):
            first_digit(0)

    def test_from_float_reads_shortest_decimal(self):
        assert ExactDecimal.from_float(0.1).as_fraction() == Fraction(1, 10)
        assert ExactDecimal.from_float(-2.5).as_fraction() == Fraction(-5, 2)
        with pytest.raises(MalformedToken):
            ExactDecimal.from_float(float("inf"))

    def test_from_int(self):
        assert ExactDecimal.from_int(-129).as_fraction() == -129
        assert ExactDecimal.from_int(0).is_zero

    def test_str_rendering(self):
        assert str(parse_token("0.150")) == "0.150"
        assert str(parse_token("129")) == "129"
