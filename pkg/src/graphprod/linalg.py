"""Exact sparse rank computation.

Matrices are lists of columns; a column is a ``dict`` mapping a row index to
a nonzero raw field value (see :class:`graphprod.exactmath.Field`).
"""

from __future__ import annotations

from typing import Iterable

from .exactmath import Field

Column = dict


def rank(columns: Iterable[Column], field: Field) -> int:
    """Rank of the matrix whose columns are given, by column reduction."""
    p = field.p
    pivots: dict = {}
    r = 0
    for col in columns:
        if not col:
            continue
        col = dict(col)
        while col:
            piv = max(col)
            other = pivots.get(piv)
            if other is None:
                c = col[piv]
                if p is None:
                    inv = 1 / c
                    col = {k: v * inv for k, v in col.items()}
                else:
                    inv = pow(c, -1, p)
                    col = {k: (v * inv) % p for k, v in col.items()}
                pivots[piv] = col
                r += 1
                break
            c = col[piv]
            if p is None:
                for k, v in other.items():
                    nv = col.get(k, 0) - c * v
                    if nv:
                        col[k] = nv
                    else:
                        col.pop(k, None)
            else:
                for k, v in other.items():
                    nv = (col.get(k, 0) - c * v) % p
                    if nv:
                        col[k] = nv
                    else:
                        col.pop(k, None)
    return r


def compose_is_zero(d_in: list[dict], d_out_lookup, field: Field) -> bool:
    """Check ``d_out ∘ d_in == 0``.

    ``d_in`` is a list of sparse columns into the middle space and
    ``d_out_lookup(j)`` returns the sparse column of the middle basis vector
    ``j``.
    """
    for col in d_in:
        acc: dict = {}
        for j, a in col.items():
            for k, b in d_out_lookup(j).items():
                acc[k] = field.add(acc.get(k, field.zero), field.mul(a, b))
        if any(v != 0 for v in acc.values()):
            return False
    return True
