"""Exact rank of sparse integer matrices over Q or a prime field.

Rows are ``{column: value}`` dicts.  Elimination is incremental: each incoming
row is reduced against the pivots found so far and, if anything survives,
becomes a new pivot keyed by its leading column.  Over Q rows are kept
primitive (content divided out) so integer growth stays in check.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


def check_characteristic(char: int) -> int:
    char = int(char)
    if char != 0 and not is_prime(char):
        raise ValueError(f"field characteristic must be 0 or prime, got {char}")
    return char


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    return {c: v // g for c, v in row.items()}


def rank(rows: Iterable[dict[int, int]], char: int = 0) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        if char:
            row = {c: v % char for c, v in raw.items() if v % char}
        else:
            row = {c: v for c, v in raw.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                if char:
                    inv = pow(row[lead], -1, char)
                    row = {c: v * inv % char for c, v in row.items()}
                else:
                    row = _primitive(row)
                pivots[lead] = row
                break
            a, b = piv[lead], row[lead]
            if char:
                # pivot rows are monic
                out = dict(row)
                for c, v in piv.items():
                    nv = (out.get(c, 0) - b * v) % char
                    if nv:
                        out[c] = nv
                    else:
                        out.pop(c, None)
            else:
                out = {c: a * v for c, v in row.items()}
                for c, v in piv.items():
                    nv = out.get(c, 0) - b * v
                    if nv:
                        out[c] = nv
                    else:
                        out.pop(c, None)
                out = _primitive(out) if out else out
            row = out
    return len(pivots)


def dense_rank(matrix, char: int = 0) -> int:
    """Rank of a dense matrix given as a sequence of rows."""
    return rank(({j: int(v) for j, v in enumerate(r) if v} for r in matrix), char)
