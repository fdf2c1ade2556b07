"""Lossless significant-digit extraction in arbitrary base.

Numeric tokens are kept as exact decimal records (sign, digit string,
power-of-ten exponent), so digit extraction never rounds. Conversion to a
non-decimal base runs on integer scalings of the value; no floating-point
logarithm is consulted anywhere, which is what makes boundary values such
as exact powers of the base come out right by construction.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from .errors import DomainError, MalformedToken, ZeroValue

# Most digits a single extraction may request. Generous next to practical
# use (positions beyond ~7 are already near-uniform) while bounding the
# zero-padding applied to short mantissas.
MAX_EXTRACT_DIGITS = 18

_TOKEN_PLAIN = re.compile(
    r"""
    [+-]?
    (?:
        (?P<int>\d+) (?: \. (?P<frac>\d+) )?
      | \. (?P<lone_frac>\d+)
    )
    (?: [eE] (?P<exp>[+-]?\d+) )?
    """,
    re.VERBOSE,
)

# Same grammar with the integer part optionally written in comma-grouped
# form ("2,300"). Group alternatives are ordered so the grouped form wins
# when it applies.
_TOKEN_GROUPED = re.compile(
    r"""
    [+-]?
    (?:
        (?P<int>\d{1,3}(?:,\d{3})+|\d+) (?: \. (?P<frac>\d+) )?
      | \. (?P<lone_frac>\d+)
    )
    (?: [eE] (?P<exp>[+-]?\d+) )?
    """,
    re.VERBOSE,
)


def token_pattern(separators: bool = False) -> re.Pattern[str]:
    """Compiled regex for the numeric-token grammar (used by the scanner)."""
    return _TOKEN_GROUPED if separators else _TOKEN_PLAIN


@dataclass(frozen=True)
class ExactDecimal:
    """A numeric token held exactly: value = sign * 0.<digits> * 10**exponent.

    ``digits`` stores base-10 digit characters with the first nonzero digit
    leading (zero values keep their written zeros). The representation is
    exact, so it round-trips the source token's numeric value.
    """

    sign: int
    digits: str
    exponent: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if not self.digits or not self.digits.isdigit():
            raise ValueError("digits must be a non-empty string of 0-9")

    @property
    def is_zero(self) -> bool:
        return self.digits.strip("0") == ""

    def as_fraction(self) -> Fraction:
        """The exact rational value."""
        scale = self.exponent - len(self.digits)
        mantissa = self.sign * int(self.digits)
        if scale >= 0:
            return Fraction(mantissa * 10**scale)
        return Fraction(mantissa, 10**-scale)

    def scaled(self, power_of_ten: int) -> "ExactDecimal":
        """This value times 10**power_of_ten (exact)."""
        return ExactDecimal(self.sign, self.digits, self.exponent + power_of_ten)

    @classmethod
    def from_int(cls, value: int) -> "ExactDecimal":
        sign = -1 if value < 0 else 1
        return parse_token(str(abs(value)))._replace_sign(sign)

    @classmethod
    def from_float(cls, value: float) -> "ExactDecimal":
        if not math.isfinite(value):
            raise MalformedToken(f"non-finite float {value!r}")
        return parse_token(repr(value))

    def _replace_sign(self, sign: int) -> "ExactDecimal":
        return ExactDecimal(sign, self.digits, self.exponent)

    def __str__(self) -> str:
        dec = Decimal(
            (0 if self.sign > 0 else 1,
             tuple(int(c) for c in self.digits),
             self.exponent - len(self.digits))
        )
        return str(dec)


@dataclass(frozen=True)
class SignificantDigits:
    """The first k significant digits of a value in some base.

    ``digits[0]`` is the first nonzero digit; ``exponent`` is the power of
    ``base`` carried by that leading digit, i.e.
    |value| = (d1.d2d3...) * base**exponent.
    """

    base: int
    digits: tuple[int, ...]
    exponent: int

    def __post_init__(self) -> None:
        if self.base < 2:
            raise ValueError("base must be >= 2")
        if not self.digits:
            raise ValueError("at least one digit required")
        if self.digits[0] == 0:
            raise ValueError("first significant digit cannot be 0")
        if any(d < 0 or d >= self.base for d in self.digits):
            raise ValueError("digits must lie in [0, base)")

    @property
    def first(self) -> int:
        return self.digits[0]


def parse_token(text: str, *, separators: bool = False) -> ExactDecimal:
    """Parse a numeric token into an exact decimal record.

    The grammar accepts an optional sign, an integer part (comma-grouped
    only when ``separators`` is on), an optional fraction, an optional
    e/E exponent, or a bare ``.digits`` fraction. Zero tokens parse fine;
    extraction is where zero turns into an error.
    """
    m = token_pattern(separators).fullmatch(text)
    if m is None:
        raise MalformedToken(f"not a numeric token: {text!r}")
    sign = -1 if text.startswith("-") else 1
    int_part = (m.group("int") or "").replace(",", "")
    frac_part = m.group("frac") or m.group("lone_frac") or ""
    exp10 = int(m.group("exp") or 0)

    written = int_part + frac_part
    stripped = written.lstrip("0")
    if not stripped:
        # Exactly zero: keep the written zeros so the record stays non-empty.
        return ExactDecimal(sign, written, len(int_part) + exp10)
    lead_zeros = len(written) - len(stripped)
    return ExactDecimal(sign, stripped, len(int_part) - lead_zeros + exp10)


def format_token(value: ExactDecimal) -> str:
    """Canonical token for an ExactDecimal; parse_token(format_token(x)) == x."""
    sign = "-" if value.sign < 0 else ""
    return f"{sign}.{value.digits}e{value.exponent}"


def _integer_log(num: int, den: int, base: int) -> int:
    """Largest e with base**e <= num/den, by exact integer comparison.

    A floating-point estimate seeds the search; the exact comparisons then
    correct it, so the result is right even when num/den sits on or next to
    a power of the base.
    """
    e = int(math.floor((math.log(num) - math.log(den)) / math.log(base)))
    while base**e * den > num:
        e -= 1
    while base ** (e + 1) * den <= num:
        e += 1
    return e


def extract_digits_rational(
    num: int, den: int, k: int, base: int = 10
) -> SignificantDigits:
    """First k base-``base`` digits of the positive rational num/den, exactly."""
    if base < 2:
        raise DomainError(f"base must be >= 2, got {base}")
    if k < 1 or k > MAX_EXTRACT_DIGITS:
        raise DomainError(f"k must be in [1, {MAX_EXTRACT_DIGITS}], got {k}")
    if num == 0:
        raise ZeroValue("value is zero; no significant digit exists")
    if num < 0 or den <= 0:
        raise DomainError("num/den must be a positive rational")

    e = _integer_log(num, den, base)
    shift = k - 1 - e
    if shift >= 0:
        leading = (num * base**shift) // den
    else:
        leading = num // (den * base**-shift)
    digits = []
    for _ in range(k):
        leading, d = divmod(leading, base)
        digits.append(d)
    digits.reverse()
    return SignificantDigits(base=base, digits=tuple(digits), exponent=e)


def extract_digits(value: ExactDecimal, k: int, base: int = 10) -> SignificantDigits:
    """First k significant digits of |value| in ``base``.

    Raises ZeroValue when the token is exactly zero (callers exclude and
    count such entries). Conversion is exact for every base.
    """
    if value.is_zero:
        raise ZeroValue("value is zero; no significant digit exists")
    frac = value.as_fraction()
    return extract_digits_rational(abs(frac.numerator), frac.denominator, k, base)


def extract_digits_bigint(value: int, k: int, base: int = 10) -> SignificantDigits:
    """Same contract as extract_digits, for arbitrary-precision integers."""
    if value == 0:
        raise ZeroValue("value is zero; no significant digit exists")
    return extract_digits_rational(abs(value), 1, k, base)


def first_digit(value: int, base: int = 10) -> int:
    """Leading significant digit of a nonzero integer.

    Base 10 reads the digit off the decimal expansion directly; other bases
    go through the exact integer conversion.
    """
    if value == 0:
        raise ZeroValue("value is zero; no significant digit exists")
    if base == 10:
        return int(str(abs(value))[0])
    return extract_digits_bigint(value, 1, base).first
