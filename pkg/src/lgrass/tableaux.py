"""Shifted diagrams and semistandard set-valued shifted tableaux.

Boxes carry absolute column numbers: row r of a shifted diagram occupies
columns r, r+1, ..., r + lam_r - 1, so the quantity z(x) = x + c(x) - r(x)
of an entry x can be read off directly.  A tableau of shape lam is "on mu"
when every entry x satisfies x <= len(mu) and z(x) <= mu_x + x - 1, which
confines its image boxes (x, z(x)) to the shifted diagram of mu.
"""

from __future__ import annotations

import functools
from typing import Iterator, NamedTuple

from .indexing import check_strict


class ShiftedDiagram:
    """Staircase array of boxes for a strict partition."""

    __slots__ = ("shape",)

    def __init__(self, shape) -> None:
        self.shape = check_strict(shape)

    def boxes(self) -> Iterator[tuple[int, int]]:
        for r, part in enumerate(self.shape, start=1):
            for c in range(r, r + part):
                yield (r, c)

    def __contains__(self, box) -> bool:
        r, c = box
        return 1 <= r <= len(self.shape) and r <= c <= r + self.shape[r - 1] - 1

    def __len__(self) -> int:
        return sum(self.shape)

    def __eq__(self, other) -> bool:
        return isinstance(other, ShiftedDiagram) and self.shape == other.shape

    def __hash__(self) -> int:
        return hash(self.shape)

    def __repr__(self) -> str:
        return f"ShiftedDiagram({self.shape})"


def shifted_diagram(lam) -> ShiftedDiagram:
    return ShiftedDiagram(lam)


class EntryContext(NamedTuple):
    """An entry x together with its box (r, c) and z = x + c - r."""

    x: int
    r: int
    c: int
    z: int


def entry_context(x: int, r: int, c: int) -> EntryContext:
    return EntryContext(x, r, c, x + c - r)


def z_value(e: EntryContext) -> int:
    return e.x + e.c - e.r


class SetValuedShiftedTableau:
    """Nonempty sets of positive integers on the boxes of a shifted diagram.

    ``rows[r-1][j-1]`` is the sorted entry tuple of the j-th box of row r
    (absolute column c = r + j - 1).  The nested tuple is the canonical key:
    equality, ordering, and hashing all use it.
    """

    __slots__ = ("rows",)

    def __init__(self, rows) -> None:
        rows = tuple(tuple(tuple(sorted(set(map(int, box)))) for box in row)
                     for row in rows)
        check_strict(tuple(len(row) for row in rows))
        for row in rows:
            for box in row:
                if not box:
                    raise ValueError("every box needs a nonempty entry set")
                if box[0] < 1:
                    raise ValueError(f"entries must be positive: {box}")
        self.rows = rows

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(row) for row in self.rows)

    @property
    def diagram(self) -> ShiftedDiagram:
        return ShiftedDiagram(self.shape)

    def box(self, r: int, c: int) -> tuple[int, ...]:
        return self.rows[r - 1][c - r]

    def cells(self) -> Iterator[tuple[int, int, tuple[int, ...]]]:
        for r, row in enumerate(self.rows, start=1):
            for j, box in enumerate(row):
                yield (r, r + j, box)

    def entries(self) -> Iterator[EntryContext]:
        """Every entry with its context; repeats in distinct boxes are distinct."""
        for r, c, box in self.cells():
            for x in box:
                yield entry_context(x, r, c)

    @property
    def is_young(self) -> bool:
        return all(len(box) == 1 for _, _, box in self.cells())

    def entry_count(self) -> int:
        return sum(len(box) for _, _, box in self.cells())

    def to_json(self) -> list[dict]:
        return [{"row": r, "col": c, "entries": list(box)}
                for r, c, box in self.cells()]

    def __eq__(self, other) -> bool:
        return isinstance(other, SetValuedShiftedTableau) and self.rows == other.rows

    def __lt__(self, other) -> bool:
        return self.rows < other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "/".join("|".join(",".join(map(str, box)) for box in row)
                        for row in self.rows)
        return f"<tableau {body or 'empty'}>"


def is_semistandard(s: SetValuedShiftedTableau) -> bool:
    """Weakly increasing along rows, strictly increasing down columns, setwise."""
    cell = {(r, c): box for r, c, box in s.cells()}
    for (r, c), box in cell.items():
        right = cell.get((r, c + 1))
        if right is not None and max(box) > min(right):
            return False
        below = cell.get((r + 1, c))
        if below is not None and max(box) >= min(below):
            return False
    return True


def is_on(s: SetValuedShiftedTableau, mu) -> bool:
    """Entry bound x <= len(mu) and z(x) <= mu_x + x - 1 for every entry."""
    mu = check_strict(mu)
    h = len(mu)
    for e in s.entries():
        if e.x > h or e.z > mu[e.x - 1] + e.x - 1:
            return False
    return True


def _nonempty_subsets(vals: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    # lexicographic on the sorted tuples: (1), (1,2), (1,2,3), (1,3), (2), ...
    for i in range(len(vals)):
        head = (vals[i],)
        yield head
        for tail in _nonempty_subsets(vals[i + 1:]):
            yield head + tail


@functools.lru_cache(maxsize=None)
def _enumerate(lam, mu, set_valued: bool) -> tuple[SetValuedShiftedTableau, ...]:
    lam = check_strict(lam)
    mu = check_strict(mu)
    h = len(mu)
    boxes = [(r, c) for r, part in enumerate(lam, start=1)
             for c in range(r, r + part)]
    # entry x fits in relative column j = c - r + 1 iff j <= mu_x; mu strict
    # makes the admissible x a prefix 1..caps[j]
    caps = {j: sum(1 for p in mu if p >= j)
            for j in {c - r + 1 for r, c in boxes}}

    results: list[SetValuedShiftedTableau] = []
    filled: dict[tuple[int, int], tuple[int, ...]] = {}

    def rec(idx: int) -> None:
        if idx == len(boxes):
            rows = []
            for r, part in enumerate(lam, start=1):
                rows.append(tuple(filled[(r, c)] for c in range(r, r + part)))
            results.append(SetValuedShiftedTableau(rows))
            return
        r, c = boxes[idx]
        lo = 1
        left = filled.get((r, c - 1))
        if left is not None:
            lo = max(lo, left[-1])
        above = filled.get((r - 1, c))
        if above is not None:
            lo = max(lo, above[-1] + 1)
        hi = min(h, caps[c - r + 1])
        vals = tuple(range(lo, hi + 1))
        if not vals:
            return
        if set_valued:
            for choice in _nonempty_subsets(vals):
                filled[(r, c)] = choice
                rec(idx + 1)
        else:
            for v in vals:
                filled[(r, c)] = (v,)
                rec(idx + 1)
        filled.pop((r, c), None)

    rec(0)
    return tuple(results)


def enumerate_ssvt(lam, mu) -> list[SetValuedShiftedTableau]:
    """All semistandard set-valued shifted tableaux of shape lam on mu.

    Deterministic order: lexicographic on the flattened (box, sorted set)
    sequence.  The empty shape yields exactly one empty tableau.
    """
    return list(_enumerate(check_strict(lam), check_strict(mu), True))


def enumerate_ssyt(lam, mu) -> list[SetValuedShiftedTableau]:
    """The single-entry (Young) subset of ``enumerate_ssvt``."""
    return list(_enumerate(check_strict(lam), check_strict(mu), False))
