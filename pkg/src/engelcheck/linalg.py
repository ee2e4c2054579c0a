"""Exact sparse row reduction over QQ or GF(p)."""

from __future__ import annotations

from typing import Callable, Dict, Hashable, Iterable, List, Optional

Vector = Dict[Hashable, object]


class EchelonSpace:
    """Incrementally maintained reduced row echelon basis of a subspace.

    Rows are sparse dicts ``column -> coefficient``. Each row is normalized
    so that its pivot entry is 1, and no pivot column appears in any other
    row. The pivot of a new row is its least column under ``pivot_key``.
    """

    def __init__(self, field, pivot_key: Callable = lambda c: c):
        self.field = field
        self.pivot_key = pivot_key
        self.rows: Dict[Hashable, Vector] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: Vector) -> Vector:
        """Remainder of ``vec`` after eliminating every pivot column."""
        out = {k: v for k, v in vec.items() if v}
        for piv in [c for c in out if c in self.rows]:
            c = out.get(piv)
            if not c:
                continue
            for col, val in self.rows[piv].items():
                nv = out.get(col, 0) - c * val
                if nv:
                    out[col] = nv
                else:
                    out.pop(col, None)
        return out

    def add(self, vec: Vector) -> Optional[Hashable]:
        """Insert ``vec``; return its new pivot, or None if it was dependent."""
        r = self.reduce(vec)
        if not r:
            return None
        piv = min(r, key=self.pivot_key)
        inv = self.field.inverse(r[piv])
        r = {k: _norm(v * inv) for k, v in r.items()}
        r[piv] = self.field.one
        for other_piv, row in self.rows.items():
            c = row.get(piv)
            if c:
                for col, val in r.items():
                    nv = row.get(col, 0) - c * val
                    if nv:
                        row[col] = _norm(nv)
                    else:
                        row.pop(col, None)
        self.rows[piv] = r
        return piv

    def contains(self, vec: Vector) -> bool:
        return not self.reduce(vec)

    @property
    def pivots(self) -> List[Hashable]:
        return sorted(self.rows, key=self.pivot_key)


def _norm(v):
    # keep integral rationals as ints
    den = getattr(v, "denominator", None)
    if den == 1 and not isinstance(v, int):
        return v.numerator
    return v


def rank(vectors: Iterable[Vector], field) -> int:
    space = EchelonSpace(field)
    for v in vectors:
        space.add(v)
    return len(space)
