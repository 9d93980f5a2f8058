"""The identity registry: every formula checked by two independent routes.

Cases marked expected-fail encode a formula exactly as it was printed in the
source text; each has a corrected partner that must pass.

Run: python3 demos/05_identity_registry.py
"""

from specfun.verify import format_report, registry, run_identity

reg = registry()
print(f"{len(reg)} registered cases")
for chapter in sorted({c.chapter for c in reg.values()}):
    n = sum(1 for c in reg.values() if c.chapter == chapter)
    xf = sum(1 for c in reg.values() if c.chapter == chapter and c.expected_fail)
    print(f"  chapter {chapter}: {n} cases, {xf} expected failures")

print("\nA few misprint pairs (id, pass, max abs err, max rel err, notes):")
for pair in [
    ("ch5.y20.table-entry", "ch5.y20.corrected"),
    ("ch5.eq41.assoc-series.as-printed", "ch5.eq41.assoc-series"),
    ("ch4.ex5.as-printed", "ch4.ex5"),
]:
    for i in pair:
        print(" ", format_report(run_identity(i)))
