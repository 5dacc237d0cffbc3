"""Index formatting shared by every ``to_text`` method.

Index sets of size 26 or less print as lower-case letters (1 -> ``a``);
larger ones print as decimal numbers.  Parsing accepts either form.
"""

LETTERS = "abcdefghijklmnopqrstuvwxyz"


def index_str(x: int, n: int) -> str:
    if x == 0:
        return "-"
    if n <= 26 and 1 <= x <= 26:
        return LETTERS[x - 1]
    return str(x)


def parse_index(tok: str) -> int:
    if len(tok) == 1 and tok in LETTERS:
        return LETTERS.index(tok) + 1
    if tok.isdigit():
        return int(tok)
    raise ValueError(f"bad index {tok!r}")
