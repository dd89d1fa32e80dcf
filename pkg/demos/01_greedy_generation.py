"""
Greedy generation from preference tables
========================================

A preference table lists, for every context of the last ``span`` digits,
the order in which digits are tried. The generator appends the first digit
whose length-n window is new and stops when none is.
"""

# %%
# The Ford (prefer-higher) rule is a span-0 table.
from pathlib import Path

from prefseq import (
    generate,
    is_de_bruijn,
    missing_windows,
    parse_preference_table,
    prefer_higher,
    prefer_opposite_binary,
)

DATA = Path(__file__).parent / "data"

ford = prefer_higher(3)
for n in (2, 3, 4):
    s = generate(ford, n)
    print(n, len(s), is_de_bruijn(s), s.text if n < 4 else s.text[:30] + "...")

# %%
# ``wrap=True`` repeats the first n-1 digits, which is how cyclic listings
# are usually printed.
print(generate(ford, 2, wrap=True).text)

# %%
# Span-1 tables keyed by the last digit also give full sequences, at every order.
for name in ("ternary_diagram.pref", "quaternary_diagram.pref"):
    table = parse_preference_table((DATA / name).read_text())
    print(name, generate(table, 2, wrap=True).text,
          [is_de_bruijn(generate(table, n)) for n in range(2, 6)])

# %%
# Prefer-opposite misses exactly one word, the all-ones word.
opp = prefer_opposite_binary()
for n in range(2, 8):
    s = generate(opp, n)
    print(n, s.halt_length, 2**n, missing_windows(s))
