"""
Preference-function complexity and the census
=============================================

The complexity of a de Bruijn sequence started at 0^n is the smallest span
of a table that regenerates it. Spans are checked by collecting, for every
generated position, which digits the accepted one has to beat.
"""

# %%
from prefseq import (
    DigitSequence,
    complexity,
    count_by_complexity,
    count_de_bruijn,
    empirical_census,
    enumerate_complete,
    equivalent_to_ford,
    format_preference_table,
    generate,
)

# %%
# All sixteen binary order-4 sequences and their complexities.
for p in enumerate_complete(2, 3):
    s = generate(p, 4)
    r = complexity(s)
    print(s.text, r.span, r.feasible)

# %%
# The span-2 sequence and its witness table.
s = DigitSequence.from_text("0000101001111011000", 2, 4)
print(format_preference_table(complexity(s).witness))

# %%
# Enumerated counts against the closed forms. The literal N_1 formula does
# not subtract the complexity-0 sequences.
for t, n in ((2, 4), (3, 2)):
    table = empirical_census(t, n)
    print(t, n, table.line(), "M =", count_de_bruijn(t, n))
    print("  corrected:", [count_by_complexity(t, i) for i in range(n)])
    print("  literal:  ", [count_by_complexity(t, i, "paper") for i in range(n)])

# %%
# Every complexity-0 sequence is a relabelled Ford sequence.
for p in enumerate_complete(4, 0):
    print(p.rows[0], equivalent_to_ford(generate(p, 3)))
