"""Pulling numbers out of messy real-world text, exactly.

Run:  python demos/text_scanning.py
"""

import io
import sys

from benfordkit import (
    ScanPolicy,
    census_from_text,
    dump_tokens_csv,
    extract_digits,
    scan_text,
)

# A naive first-character reader calls the first digit of 0.150 a zero.
# The scanner parses the token exactly and extracts the first significant
# digit, which is 1.
sample = "The reading fell from 0.150 to 0.0042 after 2,300 trials."
policy = ScanPolicy(thousands_separators=True)

print("tokens found:")
for token in scan_text(sample, policy):
    digit = extract_digits(token.value, 1).first
    print(f"  line {token.line} col {token.column:>2}  raw={token.raw!r:<12} "
          f"value={token.value}  first digit={digit}")

# Arbitrary prose never errors; words, units, and version strings are not
# numbers and are passed over silently.
noisy = "Model v2.0 on A4 paper: Planck 6.626e-34 J s, x-5 offsets, no crash."
print("\nnoisy line tokens:", [t.raw for t in scan_text(noisy)])

# Policies exclude token shapes instead of editing the input. Here
# standalone 4-digit integers (years, in this corpus) are dropped and
# tallied under exclusions.
text = "in 1999 we shipped 23 units; in 2001, 1850 units"
census = census_from_text(text, ScanPolicy(skip_patterns=(r"\d{4}",)))
print(f"\nwith year shapes skipped: counts={census.counts} "
      f"exclusions={census.exclusions}")

# Zero values have no significant digit; they are excluded and counted
# rather than miscounted under digit 0.
census = census_from_text("0 0.00 7 0e9")
print(f"zeros excluded: sample={census.sample_size} exclusions={census.exclusions}")

# For audits, dump the token stream as CSV (line, column, raw, value).
print("\naudit trail:")
buffer = io.StringIO()
dump_tokens_csv(scan_text(sample, policy), buffer)
sys.stdout.write(buffer.getvalue())
