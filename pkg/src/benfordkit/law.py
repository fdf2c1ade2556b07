"""The significant-digit law and its derived statistics.

First-digit probabilities generalize to any base as log_b(1 + 1/d). The
joint law over the first k decimal digits is log10(1 + 1/m), with m the
integer spelled by the digits; marginals, moments, distances to uniform,
and inter-digit correlations all derive from it by exact summation.

Sums run through compensated accumulation (math.fsum over vectorized
chunks), so the 12-digit reference values hold in ordinary doubles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from .errors import DomainError

# Exact enumeration over position-k prefixes costs ~9 * 10**(k-1) terms;
# 8 keeps that at desk scale.
MAX_POSITION = 8
# Correlations enumerate the full joint support 9 * 10**(j-1).
MAX_CORRELATION_POSITION = 5

_LN10 = math.log(10.0)
_CHUNK = 1 << 18


def _fsum_chunks(parts: list[float]) -> float:
    return math.fsum(parts)


def _sum_log10_reciprocal(lo: int, hi: int, offset: int, stride: int) -> float:
    """Compensated sum of log10(1 + 1/(stride*m + offset)) for m in [lo, hi)."""
    parts = []
    for start in range(lo, hi, _CHUNK):
        m = np.arange(start, min(start + _CHUNK, hi), dtype=np.float64)
        terms = np.log1p(1.0 / (stride * m + offset))
        parts.append(math.fsum(terms.tolist()))
    return _fsum_chunks(parts) / _LN10


@dataclass(frozen=True)
class DigitDistribution:
    """Distribution of the digit at one significant position."""

    position: int
    support: tuple[int, ...]
    probabilities: tuple[float, ...]

    def prob(self, digit: int) -> float:
        try:
            return self.probabilities[self.support.index(digit)]
        except ValueError:
            raise DomainError(f"digit {digit} not in support {self.support}") from None

    def as_array(self) -> np.ndarray:
        return np.asarray(self.probabilities)


def first_digit_prob(d: int, base: int = 10) -> float:
    """P(first significant digit = d) in ``base``: log_base(1 + 1/d)."""
    if base < 2:
        raise DomainError(f"base must be >= 2, got {base}")
    if d < 1 or d > base - 1:
        raise DomainError(f"first digit must lie in [1, {base - 1}], got {d}")
    return math.log1p(1.0 / d) / math.log(base)


def first_digit_distribution(base: int = 10) -> DigitDistribution:
    """The full first-digit law over {1, ..., base-1}."""
    support = tuple(range(1, base))
    probs = tuple(first_digit_prob(d, base) for d in support)
    return DigitDistribution(position=1, support=support, probabilities=probs)


def joint_prob(digits: Sequence[int]) -> float:
    """Probability that the first k decimal digits are exactly ``digits``.

    Equals log10(1 + 1/m) where m is the integer with decimal expansion
    d1 d2 ... dk. For k = 1 this reduces to the first-digit law in base 10.
    """
    digits = tuple(digits)
    if not digits:
        raise DomainError("at least one digit required")
    if digits[0] < 1 or digits[0] > 9:
        raise DomainError(f"leading digit must lie in [1, 9], got {digits[0]}")
    if any(d < 0 or d > 9 for d in digits[1:]):
        raise DomainError("trailing digits must lie in [0, 9]")
    m = 0
    for d in digits:
        m = 10 * m + d
    return math.log1p(1.0 / m) / _LN10


def _check_position(k: int) -> None:
    if k < 1 or k > MAX_POSITION:
        raise DomainError(f"position must lie in [1, {MAX_POSITION}], got {k}")


@lru_cache(maxsize=None)
def marginal_distribution(k: int) -> DigitDistribution:
    """Distribution of the k-th significant decimal digit.

    Position 1 is the first-digit law itself; deeper positions sum the
    joint law over every (k-1)-digit prefix.
    """
    _check_position(k)
    if k == 1:
        return first_digit_distribution(10)
    lo, hi = 10 ** (k - 2), 10 ** (k - 1)
    support = tuple(range(10))
    probs = tuple(_sum_log10_reciprocal(lo, hi, offset=d, stride=10) for d in support)
    return DigitDistribution(position=k, support=support, probabilities=probs)


def moments(k: int) -> tuple[float, float]:
    """Mean and variance of the k-th significant digit under the law."""
    dist = marginal_distribution(k)
    mean = math.fsum(d * p for d, p in zip(dist.support, dist.probabilities))
    second = math.fsum(d * d * p for d, p in zip(dist.support, dist.probabilities))
    return mean, second - mean * mean


def tvd_from_uniform(k: int) -> float:
    """Total variation distance of the position-k law from uniform.

    The uniform reference is 1/9 on {1..9} at position 1 and 1/10 on
    {0..9} deeper in; convergence to uniform is geometric in k.
    """
    dist = marginal_distribution(k)
    u = 1.0 / len(dist.support)
    return 0.5 * math.fsum(abs(p - u) for p in dist.probabilities)


@lru_cache(maxsize=None)
def digit_correlation(i: int, j: int) -> float:
    """Correlation of the digits at positions i < j, from the exact joint law."""
    if not (1 <= i < j):
        raise DomainError(f"need 1 <= i < j, got ({i}, {j})")
    if j > MAX_CORRELATION_POSITION:
        raise DomainError(
            f"position j must lie in [2, {MAX_CORRELATION_POSITION}], got {j}"
        )
    lo, hi = 10 ** (j - 1), 10**j
    parts: dict[str, list[float]] = {n: [] for n in ("i", "j", "ii", "jj", "ij")}
    for start in range(lo, hi, _CHUNK):
        m = np.arange(start, min(start + _CHUNK, hi), dtype=np.int64)
        p = np.log1p(1.0 / m) / _LN10
        di = ((m // 10 ** (j - i)) % 10).astype(np.float64)
        dj = (m % 10).astype(np.float64)
        parts["i"].append(math.fsum((p * di).tolist()))
        parts["j"].append(math.fsum((p * dj).tolist()))
        parts["ii"].append(math.fsum((p * di * di).tolist()))
        parts["jj"].append(math.fsum((p * dj * dj).tolist()))
        parts["ij"].append(math.fsum((p * di * dj).tolist()))
    e_i = _fsum_chunks(parts["i"])
    e_j = _fsum_chunks(parts["j"])
    e_ii = _fsum_chunks(parts["ii"])
    e_jj = _fsum_chunks(parts["jj"])
    e_ij = _fsum_chunks(parts["ij"])
    cov = e_ij - e_i * e_j
    var_i = e_ii - e_i * e_i
    var_j = e_jj - e_j * e_j
    return cov / math.sqrt(var_i * var_j)


def expected_counts(k: int, sample_size: int) -> np.ndarray:
    """Expected digit counts at position k for a sample of the given size."""
    if sample_size < 1:
        raise DomainError(f"sample_size must be >= 1, got {sample_size}")
    return marginal_distribution(k).as_array() * sample_size
