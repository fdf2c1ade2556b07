"""Walk through the significant-digit law and its derived statistics.

Run:  python demos/law_tables.py
"""

import math

from benfordkit import (
    digit_correlation,
    first_digit_prob,
    joint_prob,
    moments,
    tvd_from_uniform,
)

# The first-digit law says small leading digits dominate: in base 10 a
# leading 1 appears about 30.1% of the time, a leading 9 only 4.6%.
print("first-digit probabilities, base 10")
for d in range(1, 10):
    print(f"  P(D1 = {d}) = {first_digit_prob(d, 10):.5f}")

# The same formula log_b(1 + 1/d) works in any base. In base 2 the only
# possible leading digit is 1, so its probability is exactly 1.
print("\nfirst digit 1 across bases")
for base in (2, 8, 10, 16, 60):
    print(f"  base {base:>2}: P(D1 = 1) = {first_digit_prob(1, base):.5f}")

# Joint law over the first k digits: the chance a value starts "129" is
# log10(1 + 1/129), about a third of a percent.
print(f"\nP(digits start 1,2,9) = {joint_prob((1, 2, 9)):.5f}")

# Deeper digit positions flatten out fast. The mean approaches 4.5 and the
# variance 8.25, the moments of a uniform digit.
print("\nposition  mean           variance        distance to uniform")
for k in range(1, 8):
    mean, variance = moments(k)
    print(f"  {k}       {mean:.11f}  {variance:.12f}  {tvd_from_uniform(k):.8f}")

# The distance to uniform shrinks by almost exactly 10x per position once
# k > 2 -- geometric convergence.
print("\nsuccessive tvd ratios")
prev = None
for k in range(2, 8):
    value = tvd_from_uniform(k)
    if prev is not None:
        print(f"  tvd({k})/tvd({k - 1}) = {value / prev:.6f}")
    prev = value

# Neighboring digit positions are weakly positively correlated, and the
# dependence decays with distance.
print("\ncorrelation of digit positions i and j")
header = "  i\\j " + "".join(f"{j:>12}" for j in range(2, 6))
print(header)
for i in range(1, 5):
    cells = ""
    for j in range(2, 6):
        cells += f"{digit_correlation(i, j):>12.7f}" if j > i else " " * 12
    print(f"  {i}   {cells}")

# Sanity: every base's first-digit law is a probability distribution.
total = math.fsum(first_digit_prob(d, 16) for d in range(1, 16))
print(f"\nbase-16 probabilities sum to {total:.15f}")
