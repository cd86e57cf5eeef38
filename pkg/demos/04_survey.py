"""
Survey of all G(Id, pi)
=======================

Runs the combinatorial CM test and the homological oracle side by side on
every permutation of 1..n and tabulates the counts.
"""

import sys

from permcm.survey import rows_to_csv, run_survey, summarize

top = int(sys.argv[1]) if len(sys.argv) > 1 else 6

print(f"{'n':>2} {'rows':>5} {'wc':>5} {'cm':>4} {'cm+conn':>8} {'co-upo':>7} {'bad':>4}")
for n in range(1, top + 1):
    s = summarize(run_survey(n))
    print(f"{n:>2} {s['rows']:>5} {s['well_covered']:>5} {s['cm']:>4} "
          f"{s['cm_connected']:>8} {s['complement_upo']:>7} {s['mismatches']:>4}")

# First lines of the CSV for n = 3.
print(rows_to_csv(run_survey(3)))
