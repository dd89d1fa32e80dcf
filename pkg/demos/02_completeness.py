"""
Deciding completeness from the least-preference map
===================================================

Mapping every context to its shift with the least preferred digit appended
gives a functional graph. A table is complete exactly when the only cycle
of that graph is the self-loop at the all-zero context (and 0 is last in
the zero context's row).
"""

# %%
from pathlib import Path

from prefseq import generate, is_complete, is_de_bruijn, parse_preference_table, prefer_opposite_binary
from prefseq.analysis import format_cycle

DATA = Path(__file__).parent / "data"

for name in ("ternary_diagram.pref", "quaternary_diagram.pref", "looped.pref"):
    table = parse_preference_table((DATA / name).read_text())
    report = is_complete(table)
    print(name, "complete" if report else "incomplete", [format_cycle(c) for c in report.cycles])

# %%
# The looped table yields a full order-3 sequence from 001. From 000 it does
# too, because at order span+1 the 0 in row 00 is never accepted (000 is the
# initial word) so the row acts like (2, 1, 0). One order higher, the
# cycle shows up.
looped = parse_preference_table((DATA / "looped.pref").read_text())
for n, start in ((3, (0, 0, 1)), (3, None), (4, None), (5, None)):
    s = generate(looped, n, start)
    print(n, start, is_de_bruijn(s), s.halt_length, 3**n)

# %%
# Prefer-opposite has a self-loop at context 1, hence the missing 1^n.
print([format_cycle(c) for c in is_complete(prefer_opposite_binary()).cycles])
