"""Brute-force verification: every counting claim checked by enumeration.

The suites enumerate whole groups (within a budget), recount each statistic,
and compare against the tables and product formulas.  Reports are
deterministic at any worker count.
"""

from collections import Counter

from wreathperm import BudgetError, enumerate_group, report_json, verify_suite

results = verify_suite("all", 2, 4, jobs=2)
by_suite = Counter(r.check for r in results)
print(f"ran {len(results)} checks over groups of up to 4 letters, 2 colors:")
for name, count in sorted(by_suite.items()):
    status = all(r.passed for r in results if r.check == name)
    print(f"  {name:24s} x{count:3d}  {'pass' if status else 'FAIL'}")
print()

print("sample of the JSON report:")
print(report_json(results[:1]))
print()

try:
    list(enumerate_group(4, 10, budget=1_000_000))
except BudgetError as exc:
    print("budget guard:", exc)
