"""Screen a dataset against the first-digit law, end to end.

Run:  python demos/screen_dataset.py
"""

from benfordkit import ScanPolicy, build_report, census_from_table, render
from benfordkit.datasets import constants_sample_path

# The bundled sample: 183 physical-constant-style values. Column selection
# works by header name; everything else in the file is ignored.
path = constants_sample_path()
census = census_from_table(
    path.read_bytes(), policy=ScanPolicy(columns=("value",))
)

print(f"scanned {path.name}: {census.sample_size} values, "
      f"{census.exclusions} excluded")
print(f"digit counts: {census.counts}")

# The full report bundles the three tests. Chi-square compares against the
# two fixed critical values (15.51 at 5%, 20.09 at 1%); d1 is half the L1
# distance between observed and expected frequencies; d_max the worst
# single digit.
doc = build_report(census, input_descriptor=str(path))
print()
print(render(doc, "text"))

# A dataset this small and this close to the law is accepted at both
# levels. The same document serializes to JSON or CSV for pipelines:
print("JSON excerpt:")
import json

payload = json.loads(render(doc, "json"))
for key in ("chi_square", "d1", "d_max", "d_max_digit", "verdict"):
    print(f"  {key}: {payload[key]}")
