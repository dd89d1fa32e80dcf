"""Golden values: known preference tables and the sequences they generate."""

from prefseq import PreferenceFunction

# diagrams keyed by the last digit, with their order-2 sequences (wrapped)
DIAGRAMS = [
    (3, [(2, 1, 0), (2, 1, 0), (2, 1, 0)], "00221201100"),
    (3, [(1, 2, 0), (1, 0, 2), (2, 1, 0)], "00110221200"),
    (3, [(1, 2, 0), (2, 1, 0), (0, 2, 1)], "00120221100"),
    (4, [(3, 2, 1, 0)] * 4, "003323130221201100"),
    (4, [(1, 2, 3, 0), (3, 1, 0, 2), (0, 2, 1, 3), (2, 3, 1, 0)], "001320221103312300"),
    (4, [(3, 2, 1, 0), (3, 2, 1, 0), (0, 2, 3, 1), (0, 2, 3, 1)], "003020132233121100"),
]


def diagram_function(i):
    t, rows, _ = DIAGRAMS[i]
    return PreferenceFunction(t, 1, tuple(rows))


LOOPED_TABLE_TEXT = """\
# counterexample: de Bruijn from 001 although g has a 3-cycle
t=3 span=2
00: 0 2 1
01: 1 2 0
02: 0 1 2
10: 1 2 0
11: 0 1 2
12: 1 2 0
20: 1 0 2
21: 2 1 0
22: 2 0 1
"""
LOOPED_SEQUENCE = "00110121222010200021112022100"

# all sixteen binary order-4 sequences started at 0000, numbered 1..16
BINARY4 = {
    1: "0000100110101111000",
    2: "0000101001101111000",
    3: "0000111101100101000",
    4: "0000111101011001000",
    5: "0000100111101011000",
    6: "0000101001111011000",
    7: "0000110111100101000",
    8: "0000110101111001000",
    9: "0000101111001101000",
    10: "0000101111010011000",
    11: "0000101100111101000",
    12: "0000110010111101000",
    13: "0000111101001011000",
    14: "0000110100101111000",
    15: "0000101101001111000",
    16: "0000111100101101000",
}

BINARY4_SPAN = {i: 3 for i in BINARY4}
BINARY4_SPAN[3] = 0
BINARY4_SPAN[6] = 2

SEQ6_SPAN2 = {(0, 0): (1, 0), (0, 1): (0, 1), (1, 0): (1, 0), (1, 1): (1, 0)}

# span-3 rows as printed, one column per sequence, contexts 000..111 in order.
# Columns 7 and 8 as printed regenerate sequences 12 and 4 instead.
_ROWS_TEXT = """
1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0
0,1 0,1 1,0 1,0 0,1 0,1 1,0 1,0 0,1 0,1 0,1 1,0 1,0 1,0 0,1 1,0
0,1 1,0 1,0 1,0 0,1 1,0 1,0 1,0 1,0 1,0 1,0 1,0 0,1 0,1 1,0 1,0
0,1 0,1 1,0 1,0 1,0 1,0 0,1 1,0 1,0 1,0 0,1 0,1 1,0 0,1 0,1 1,0
1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0
0,1 0,1 1,0 0,1 0,1 0,1 1,0 0,1 1,0 1,0 1,0 1,0 0,1 0,1 1,0 1,0
1,0 1,0 1,0 1,0 1,0 1,0 0,1 1,0 0,1 1,0 0,1 0,1 1,0 1,0 1,0 0,1
1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0 1,0
"""
_cells = [line.split() for line in _ROWS_TEXT.strip().splitlines()]
BINARY4_ROWS = {
    seq: tuple(tuple(int(d) for d in _cells[ctx][seq - 1].split(",")) for ctx in range(8))
    for seq in BINARY4
}
