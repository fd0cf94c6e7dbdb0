"""Tables of K_{p,q} for fixed n, as rows, CSV and JSON."""
from __future__ import annotations

import enum
import io
import json
from dataclasses import asdict, dataclass

from kpq.fieldcase import build_case, check_conditions, verify
from kpq.intarith import odd_primes_upto

__all__ = [
    "QPolicy",
    "TableRow",
    "COLUMNS",
    "PAPER_PAIRS",
    "PAPER_SIZE_TYPOS",
    "PAPER_SIGN_TYPOS",
    "table_row",
    "generate_table",
    "render_csv",
    "render_json",
]

COLUMNS = ("p", "q", "n", "v", "m", "d", "h", "marker", "order_p", "verdict")


class QPolicy(str, enum.Enum):
    ALL_VALID = "all"
    PAPER_RANGE = "paper"


def _pairs(spec: dict[int, tuple[int, ...]]) -> tuple[tuple[int, int], ...]:
    return tuple((p, q) for p, qs in sorted(spec.items()) for q in qs)


# (p, q) pairs exactly as printed for n = 3 and n = 5.
PAPER_PAIRS: dict[int, tuple[tuple[int, int], ...]] = {
    3: _pairs({
        3: (5,),
        5: (3, 7),
        7: (3, 5, 11, 13, 17),
        11: (3, 5, 7, 13, 17, 19, 23, 29, 31, 37),
        13: (3, 5, 7, 11, 17, 19, 23, 29, 31, 37, 41, 43, 47),
        17: (3, 5, 7, 11, 13, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67),
        19: (3, 5, 7, 11, 13, 17, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79),
    }),
    5: _pairs({
        3: (5, 7, 11, 13),
        5: (3, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53),
        7: (3, 5, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
            79, 83, 89, 97, 101, 103, 107, 109, 113, 127),
    }),
}

# Printed with negative q^2 - p^3 although q^2 > p^3; dropped from the paper range.
PAPER_SIZE_TYPOS = frozenset({(3, 11, 37), (3, 13, 47)})
# Printed without the minus sign: 47^2 - 17^3 = -2704.
PAPER_SIGN_TYPOS = frozenset({(3, 17, 47)})


@dataclass(frozen=True)
class TableRow:
    p: int
    q: int
    n: int
    v: int
    m: int
    d: int
    h: int
    marker: str
    order_p: int | None
    verdict: str


def table_row(p: int, q: int, n: int) -> TableRow:
    case = build_case(p, q, n)
    report = check_conditions(case)
    result = verify(case, report)
    return TableRow(p=p, q=q, n=n, v=case.v, m=case.m, d=case.d, h=result.h,
                    marker=report.marker, order_p=result.order_p, verdict=report.verdict)


def _valid_pairs(n: int, p_max: int) -> list[tuple[int, int]]:
    out = []
    for p in odd_primes_upto(p_max):
        bound = p**n
        for q in odd_primes_upto(int(bound**0.5) + 1):
            if q != p and q * q < bound:
                out.append((p, q))
    return out


def generate_table(n: int, p_max: int, q_policy: QPolicy | str = QPolicy.ALL_VALID) -> list[TableRow]:
    """Rows for every (p, q) allowed by ``q_policy`` with p <= p_max, sorted by (p, q)."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be an odd integer >= 3, got {n}")
    q_policy = QPolicy(q_policy)
    if q_policy is QPolicy.PAPER_RANGE:
        if n not in PAPER_PAIRS:
            raise ValueError(f"the printed tables only cover n in {sorted(PAPER_PAIRS)}")
        pairs = [(p, q) for p, q in PAPER_PAIRS[n]
                 if p <= p_max and (n, p, q) not in PAPER_SIZE_TYPOS]
    else:
        pairs = _valid_pairs(n, p_max)
    return [table_row(p, q, n) for p, q in sorted(pairs)]


def _cells(row: TableRow) -> list[str]:
    return ["" if v is None else str(v) for v in (getattr(row, c) for c in COLUMNS)]


def render_csv(rows: list[TableRow]) -> str:
    buf = io.StringIO()
    buf.write(",".join(COLUMNS) + "\n")
    for row in rows:
        buf.write(",".join(_cells(row)) + "\n")
    return buf.getvalue()


def render_json(rows: list[TableRow]) -> str:
    return json.dumps([asdict(r) for r in rows], indent=2) + "\n"
