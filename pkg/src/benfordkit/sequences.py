"""Exact generators for the classic digit-law test series.

All series are produced with exact integer or rational arithmetic and
emitted lazily as first-significant-digit streams, so censuses over tens
of thousands of terms never materialize the underlying big integers.

The geometric series alpha**n is the delicate one: terms can sit next to
digit boundaries d * base**k, where any floating-point shortcut can
misclassify. It runs on a truncated-product interval (60 significant
decimal digits with tracked floor/ceil error); a digit is emitted only
once both interval endpoints agree on it, and the rare uncertified term
falls back to exact big-rational powering.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Union

import numpy as np

from .errors import DomainError
from .significand import extract_digits_rational, first_digit

PRIME_BOUND_CAP = 10**8
PRODUCT_DIGITS = 60

# Default configuration for the pooled-recursion conformance suite: seven
# seed pairs at 1474 terms each.
DEFAULT_FIBONACCI_SEEDS: tuple[tuple[int, int], ...] = (
    (1, 1), (1, 2), (1, 3), (1, 4), (2, 5), (3, 7), (4, 9),
)
DEFAULT_FIBONACCI_TERMS = 1474


def fibonacci_values(a1: int, a2: int, n_terms: int) -> Iterator[int]:
    """Terms of the additive recursion a(n+2) = a(n+1) + a(n)."""
    if a1 < 1 or a2 < 1:
        raise DomainError("seeds must be positive integers")
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    x, y = a1, a2
    for _ in range(n_terms):
        yield x
        x, y = y, x + y


def fibonacci_digits(a1: int, a2: int, n_terms: int, base: int = 10) -> Iterator[int]:
    """First significant digits of the recursion terms."""
    return (first_digit(v, base) for v in fibonacci_values(a1, a2, n_terms))


def prime_values(bound: int) -> Iterator[int]:
    """All primes strictly below ``bound``, by sieve of Eratosthenes."""
    if bound < 2:
        raise DomainError("bound must be >= 2")
    if bound > PRIME_BOUND_CAP:
        raise DomainError(f"bound capped at {PRIME_BOUND_CAP}")
    flags = np.ones(bound, dtype=bool)
    flags[:2] = False
    for p in range(2, math.isqrt(bound - 1) + 1):
        if flags[p]:
            flags[p * p :: p] = False
    for p in np.nonzero(flags)[0]:
        yield int(p)


def prime_digits(bound: int, base: int = 10) -> Iterator[int]:
    return (first_digit(p, base) for p in prime_values(bound))


def factorial_values(n_max: int) -> Iterator[int]:
    """1!, 2!, ..., n_max! by a running product."""
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    f = 1
    for n in range(1, n_max + 1):
        f *= n
        yield f


def factorial_digits(n_max: int, base: int = 10) -> Iterator[int]:
    return (first_digit(f, base) for f in factorial_values(n_max))


def n_power_values(k: int, n_max: int) -> Iterator[int]:
    """n**k for n = 1..n_max."""
    if k < 1:
        raise DomainError("exponent k must be >= 1")
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    for n in range(1, n_max + 1):
        yield n**k


def n_power_digits(k: int, n_max: int, base: int = 10) -> Iterator[int]:
    return (first_digit(v, base) for v in n_power_values(k, n_max))


def pascal_values(rows: int) -> Iterator[int]:
    """Binomial coefficients C(n, r) for n < rows, rows read left to right."""
    if rows < 1:
        raise DomainError("rows must be >= 1")
    for n in range(rows):
        c = 1
        for r in range(n + 1):
            yield c
            c = c * (n - r) // (r + 1)


def pascal_digits(rows: int, base: int = 10) -> Iterator[int]:
    return (first_digit(v, base) for v in pascal_values(rows))


AlphaLike = Union[Fraction, int, str, float]


def _as_ratio(alpha: AlphaLike) -> Fraction:
    a = Fraction(alpha)
    if a.numerator <= a.denominator or a.denominator < 1:
        raise DomainError(f"alpha must exceed 1, got {a}")
    return a


def alpha_power_values(alpha: AlphaLike, n_max: int) -> Iterator[Fraction]:
    """Exact rationals alpha**n for n = 1..n_max."""
    a = _as_ratio(alpha)
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    x = Fraction(1)
    for _ in range(n_max):
        x *= a
        yield x


class _ProductInterval:
    """Running truncated product bracketing alpha**n.

    Keeps lo <= alpha**n / 10**shift <= hi with lo held at PRODUCT_DIGITS
    decimal digits. Floor/ceil division widens the bracket by at most one
    unit in the last digit per step, so after desk-scale runs the bracket
    is still dozens of digits tighter than any first-digit decision needs.
    """

    __slots__ = ("p", "q", "lo", "hi", "shift")

    def __init__(self, p: int, q: int):
        self.p = p
        self.q = q
        self.lo = self.hi = 10 ** (PRODUCT_DIGITS - 1)
        self.shift = -(PRODUCT_DIGITS - 1)

    def step(self) -> None:
        p, q = self.p, self.q
        self.lo = (self.lo * p) // q
        self.hi = -((-self.hi * p) // q)
        excess = len(str(self.lo)) - PRODUCT_DIGITS
        if excess > 0:
            scale = 10**excess
            self.lo //= scale
            self.hi = -((-self.hi) // scale)
            self.shift += excess

    def certified_digit(self, base: int) -> int | None:
        """Leading base digit if both endpoints agree on it, else None."""
        if base == 10:
            lo_s, hi_s = str(self.lo), str(self.hi)
            if len(lo_s) == len(hi_s) and lo_s[0] == hi_s[0]:
                return int(lo_s[0])
            return None
        lo_sig = _leading_of_scaled(self.lo, self.shift, base)
        hi_sig = _leading_of_scaled(self.hi, self.shift, base)
        if lo_sig == hi_sig:
            return lo_sig[0]
        return None


def _leading_of_scaled(mantissa: int, shift: int, base: int) -> tuple[int, int]:
    """(leading digit, exponent) of mantissa * 10**shift in ``base``."""
    if shift >= 0:
        sig = extract_digits_rational(mantissa * 10**shift, 1, 1, base)
    else:
        sig = extract_digits_rational(mantissa, 10**-shift, 1, base)
    return sig.first, sig.exponent


def alpha_power_digits(alpha: AlphaLike, n_max: int, base: int = 10) -> Iterator[int]:
    """First base digits of alpha**n for n = 1..n_max, every digit certified.

    ``alpha`` may be a Fraction, an integer, or an exact string such as
    "1.007" or "1007/1000" (floats are taken at their exact binary value).
    """
    a = _as_ratio(alpha)
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    if base < 2:
        raise DomainError("base must be >= 2")
    interval = _ProductInterval(a.numerator, a.denominator)

    def gen() -> Iterator[int]:
        for n in range(1, n_max + 1):
            interval.step()
            d = interval.certified_digit(base)
            if d is None:
                d = _exact_alpha_digit(a, n, base)
            yield d

    return gen()


def _exact_alpha_digit(alpha: Fraction, n: int, base: int) -> int:
    """Exact big-rational fallback for an uncertified term."""
    return extract_digits_rational(
        alpha.numerator**n, alpha.denominator**n, 1, base
    ).first


_KINDS = ("fibonacci", "primes", "power_alpha", "factorial", "power_n", "pascal")


@dataclass(frozen=True)
class SequenceSpec:
    """Parameters selecting one series generator.

    ``params`` keys by kind:
      fibonacci: a1, a2, terms;  primes: below;  power_alpha: alpha, n;
      factorial: n;  power_n: k, n;  pascal: rows.
    """

    kind: str
    params: dict = field(default_factory=dict)
    base: int = 10

    def __post_init__(self) -> None:
        if self.kind not in _KINDS:
            raise DomainError(f"unknown sequence kind {self.kind!r}")
        if self.base < 2:
            raise DomainError("base must be >= 2")

    def _int(self, key: str, default: int | None = None) -> int:
        if key not in self.params:
            if default is None:
                raise DomainError(f"{self.kind} requires parameter {key!r}")
            return default
        return int(self.params[key])

    def digit_stream(self) -> Iterator[int]:
        if self.kind == "fibonacci":
            return fibonacci_digits(
                self._int("a1", 1), self._int("a2", 1), self._int("terms"), self.base
            )
        if self.kind == "primes":
            return prime_digits(self._int("below"), self.base)
        if self.kind == "power_alpha":
            if "alpha" not in self.params:
                raise DomainError("power_alpha requires parameter 'alpha'")
            return alpha_power_digits(self.params["alpha"], self._int("n"), self.base)
        if self.kind == "factorial":
            return factorial_digits(self._int("n"), self.base)
        if self.kind == "power_n":
            return n_power_digits(self._int("k"), self._int("n"), self.base)
        return pascal_digits(self._int("rows"), self.base)

    def value_stream(self) -> Iterator:
        if self.kind == "fibonacci":
            return fibonacci_values(
                self._int("a1", 1), self._int("a2", 1), self._int("terms")
            )
        if self.kind == "primes":
            return prime_values(self._int("below"))
        if self.kind == "power_alpha":
            if "alpha" not in self.params:
                raise DomainError("power_alpha requires parameter 'alpha'")
            return alpha_power_values(self.params["alpha"], self._int("n"))
        if self.kind == "factorial":
            return factorial_values(self._int("n"))
        if self.kind == "power_n":
            return n_power_values(self._int("k"), self._int("n"))
        return pascal_values(self._int("rows"))

    @classmethod
    def from_config(cls, text: str) -> "SequenceSpec":
        """Parse the small config format: one kind line plus key=value lines."""
        kind = None
        params: dict = {}
        base = 10
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" in line:
                key, value = (part.strip() for part in line.split("=", 1))
                if key == "kind":
                    kind = value
                elif key == "base":
                    base = int(value)
                else:
                    params[key] = value
            else:
                if kind is not None:
                    raise DomainError(f"duplicate kind line {line!r}")
                kind = line
        if kind is None:
            raise DomainError("config must name a sequence kind")
        return cls(kind=kind.replace("-", "_"), params=params, base=base)
