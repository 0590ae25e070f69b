"""Read the two 9x9 arrays out of the LaTeX source shipped next to the package.

Entries are parsed with a tiny grammar (integers, q, h, q^{k}, h^k, products
and sums of those), independent of the package's own renderers.
"""

import re
from fractions import Fraction
from pathlib import Path

from sjord.scalars import HPoly, QRat

SOURCE_MD = Path(__file__).resolve().parents[1] / "paper.md"


def _arrays():
    text = SOURCE_MD.read_text(encoding="utf-8")
    blocks = re.findall(r"\\begin\{array\}\{c{9}\}(.*?)\\end\{array\}", text, re.S)
    out = []
    for b in blocks:
        b = b.replace(r"\noalign{\medskip}", "").replace(r"{\sf h}", "h")
        rows = [r for r in (x.strip() for x in b.split(r"\\")) if r]
        out.append([[c.strip() for c in r.split("&")] for r in rows])
    return out


_TERM = re.compile(r"([+-]?)(\d*)(q|h)?(?:\^\{?(-?\d+)\}?)?")


def _parse(entry: str, var: str):
    entry = entry.replace(" ", "")
    if entry in ("", "0"):
        return None
    total = {}
    pos = 0
    while pos < len(entry):
        m = _TERM.match(entry, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse {entry!r}")
        sign, num, sym, exp = m.groups()
        coeff = Fraction(int(num) if num else 1) * (-1 if sign == "-" else 1)
        power = (int(exp) if exp else 1) if sym else 0
        total[power] = total.get(power, 0) + coeff
        pos = m.end()
    if var == "h":
        return HPoly([total.get(k, 0) for k in range(max(total) + 1)])
    q = QRat.q()
    val = QRat.zero()
    for k, c in total.items():
        val = val + QRat.coerce(c) * q ** k
    return val


# transcription used when the LaTeX source is not shipped (it is gitignored);
# test_rmatrix.test_transcription_matches_source compares it with the source when present
_Z = "0"
TRANSCRIBED = [
    [[("q" if (i == j and i in (0, 4)) else "1" if i == j and i != 8 else
       "-q^{-2}" if i == j else "q-q^{-1}" if (i, j) in ((1, 3), (2, 6), (5, 7)) else _Z)
      for j in range(9)] for i in range(9)],
    [["1", "h", _Z, "-h", "h^2", _Z, _Z, _Z, _Z],
     [_Z, "1", _Z, _Z, "h", _Z, _Z, _Z, _Z],
     [_Z, _Z, "1", _Z, _Z, _Z, _Z, _Z, _Z],
     [_Z, _Z, _Z, "1", "-h", _Z, _Z, _Z, _Z]]
    + [[("-1" if k == 8 else "1") if j == k else _Z for j in range(9)] for k in range(4, 9)],
]


def source_available() -> bool:
    return SOURCE_MD.exists()


def displayed_matrix(index: int, var: str, source: bool = True):
    """0-based (row, col) -> value for the index-th 9x9 array (0: q-side, 1: h-side)."""
    rows = _arrays()[index] if source and source_available() else TRANSCRIBED[index]
    assert len(rows) == 9 and all(len(r) == 9 for r in rows)
    out = {}
    for i, r in enumerate(rows):
        for j, e in enumerate(r):
            v = _parse(e, var)
            if v is not None:
                out[(i, j)] = v
    return out
