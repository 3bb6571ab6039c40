"""Partitions, skew shapes, hooks, tableaux, and Maya diagrams.

Conventions used throughout the package:

* a partition is a tuple of weakly decreasing positive integers with
  trailing zeros stripped; the empty partition is ``()``;
* boxes are 1-based ``(row, col)`` pairs, rows increase downwards and
  columns to the right (matrix convention);
* text form: ``"6,6,5,5,4"`` (empty string = empty partition), skew
  shapes ``"outer/inner"``.

Tableaux are plain dicts mapping boxes to entries.  Enumeration orders
are deterministic: tableaux stream in lexicographic order of their
row-reading word (entries read row by row, left to right).
"""

from __future__ import annotations

from collections import namedtuple
from math import factorial
from typing import Iterable, Iterator


def as_partition(parts: Iterable[int]) -> tuple[int, ...]:
    """Normalize an iterable into a partition tuple, validating monotonicity."""
    p = tuple(int(v) for v in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    for i in range(len(p) - 1):
        if p[i] < p[i + 1]:
            raise ValueError(f"not weakly decreasing: {p}")
    if p and p[-1] < 0:
        raise ValueError(f"negative part in {p}")
    return p


def parse_partition(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return as_partition(int(v) for v in text.split(","))


def format_partition(lam: tuple[int, ...]) -> str:
    return ",".join(str(v) for v in lam)


def parse_skew(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Parse ``"outer/inner"`` (or just ``"outer"``) into a shape pair."""
    outer, _, inner = text.partition("/")
    lam, mu = parse_partition(outer), parse_partition(inner)
    if not contains(mu, lam):
        raise ValueError(f"inner shape {mu} not contained in outer {lam}")
    return lam, mu


def size(lam: tuple[int, ...]) -> int:
    return sum(lam)


def length(lam: tuple[int, ...]) -> int:
    return len(lam)


def part(lam: tuple[int, ...], i: int) -> int:
    """i-th part (1-based), zero beyond the stored length."""
    return lam[i - 1] if 1 <= i <= len(lam) else 0


def contains(inner: tuple[int, ...], outer: tuple[int, ...]) -> bool:
    """Containment of Young diagrams: inner_i <= outer_i for all i."""
    return all(part(outer, i + 1) >= v for i, v in enumerate(inner))


def conjugate(lam: tuple[int, ...]) -> tuple[int, ...]:
    """Transpose of the Young diagram: result_j = #{i : lam_i >= j}."""
    if not lam:
        return ()
    return tuple(sum(1 for v in lam if v >= j) for j in range(1, lam[0] + 1))


def boxes(lam: tuple[int, ...]) -> list[tuple[int, int]]:
    """Boxes of the diagram in row-major order."""
    return [(i, j) for i, row in enumerate(lam, start=1) for j in range(1, row + 1)]


def skew_boxes(lam, mu) -> list[tuple[int, int]]:
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    return [
        (i, j)
        for i, row in enumerate(lam, start=1)
        for j in range(part(mu, i) + 1, row + 1)
    ]


def content(u: tuple[int, int]) -> int:
    """Content col - row of a box."""
    return u[1] - u[0]


def hook_length(lam, u) -> int:
    """Hook length arm + leg + 1 of a box inside lam."""
    i, j = u
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"box {u} outside {lam}")
    return lam[i - 1] + conjugate(lam)[j - 1] - i - j + 1


def hook_cells(lam, u) -> list[tuple[int, int]]:
    """The box itself, its arm to the right, and its leg below."""
    i, j = u
    if not (1 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"box {u} outside {lam}")
    arm = [(i, c) for c in range(j + 1, lam[i - 1] + 1)]
    leg = [(r, j) for r in range(i + 1, len(lam) + 1) if lam[r - 1] >= j]
    return [u] + arm + leg


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n with parts bounded by max_part."""
    if n == 0:
        yield ()
        return
    if max_part is None or max_part > n:
        max_part = n
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def subdiagrams(lam) -> Iterator[tuple[int, ...]]:
    """All partitions nu contained in lam, including () and lam itself."""

    def rows(i, prev):
        if i > len(lam):
            yield ()
            return
        for v in range(min(prev, lam[i - 1]), -1, -1):
            if v == 0:
                yield ()
            else:
                for rest in rows(i + 1, v):
                    yield (v,) + rest

    yield from rows(1, lam[0] if lam else 0)


def successors_add_box(mu, lam) -> list[tuple[int, ...]]:
    """All nu with |nu| = |mu| + 1 and mu <= nu <= lam."""
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    out = []
    for i in range(1, len(lam) + 1):
        row = part(mu, i)
        if row < part(lam, i) and (i == 1 or row < part(mu, i - 1)):
            nu = list(mu) + [0] * (i - len(mu))
            nu[i - 1] += 1
            out.append(as_partition(nu))
    return out


def successors_vertical_strip(mu, lam, include_empty: bool) -> list[tuple[int, ...]]:
    """All nu <= lam with nu/mu a vertical strip (at most one box per row)."""
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    rows = len(lam)
    out = []

    def build(i, acc):
        if i > rows:
            nu = as_partition(acc)
            if include_empty or nu != mu:
                out.append(nu)
            return
        base = part(mu, i)
        for add in (0, 1):
            v = base + add
            if v > part(lam, i):
                continue
            if i > 1 and v > acc[-1]:
                continue
            build(i + 1, acc + [v])

    build(1, [])
    return sorted(set(out), reverse=True)


# ---------------------------------------------------------------------------
# Standard and semistandard tableaux


def enumerate_syt(lam, mu=()) -> Iterator[dict]:
    """All standard tableaux of shape lam/mu as dicts box -> entry.

    Emitted in lexicographic order of the row-reading word.
    """
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    n_boxes = size(lam) - size(mu)
    results: list[dict] = []

    def grow(nu, k, entries):
        if k > n_boxes:
            results.append(dict(entries))
            return
        for rho in successors_add_box(nu, lam):
            i = next(r for r in range(1, len(rho) + 1) if part(rho, r) != part(nu, r))
            entries[(i, part(rho, i))] = k
            grow(rho, k + 1, entries)
            del entries[(i, part(rho, i))]

    grow(as_partition(mu), 1, {})
    order = skew_boxes(lam, mu)
    results.sort(key=lambda T: tuple(T[b] for b in order))
    yield from results


def reading_word(lam, mu, tab: dict) -> tuple[int, ...]:
    return tuple(tab[b] for b in skew_boxes(lam, mu))


def count_syt(lam, mu=()) -> int:
    return sum(1 for _ in enumerate_syt(lam, mu))


def restriction_shape(lam, mu, tab: dict, k: int) -> tuple[int, ...]:
    """Shape occupied by mu together with the entries < k of a standard tableau."""
    n_boxes = size(lam) - size(mu)
    if not 1 <= k <= n_boxes + 1:
        raise ValueError(f"k={k} out of range 1..{n_boxes + 1}")
    nu = [
        part(mu, i) + sum(1 for (r, _), v in tab.items() if r == i and v < k)
        for i in range(1, len(lam) + 1)
    ]
    return as_partition(nu)


def enumerate_ssyt(mu, flag) -> Iterator[dict]:
    """All semistandard tableaux of straight shape mu with row-i entries <= flag[i-1].

    Rows weakly increase, columns strictly increase.  Emitted in
    lexicographic order of the row-reading word.
    """
    mu = as_partition(mu)
    if len(flag) < len(mu):
        raise ValueError(f"flag {flag} shorter than shape {mu}")
    cells = boxes(mu)

    def fill(idx, entries):
        if idx == len(cells):
            yield dict(entries)
            return
        i, j = cells[idx]
        lo = 1
        if j > 1:
            lo = max(lo, entries[(i, j - 1)])
        if i > 1:
            lo = max(lo, entries[(i - 1, j)] + 1)
        for v in range(lo, flag[i - 1] + 1):
            entries[(i, j)] = v
            yield from fill(idx + 1, entries)
            del entries[(i, j)]

    yield from fill(0, {})


# ---------------------------------------------------------------------------
# Maya diagrams

MayaData = namedtuple("MayaData", "interval occupied vacant")


def maya(lam, window_rows: int) -> MayaData:
    """Maya diagram of lam padded to window_rows rows.

    interval is range(-window_rows, lam_1); occupied holds lam_i - i.
    """
    lam = as_partition(lam)
    if window_rows < len(lam):
        raise ValueError(f"window {window_rows} smaller than l({lam}) = {len(lam)}")
    top = lam[0] if lam else 0
    interval = range(-window_rows, top)
    occ = frozenset(part(lam, i) - i for i in range(1, window_rows + 1))
    return MayaData(interval, occ, frozenset(interval) - occ)


def partition_from_maya(occupied: Iterable[int]) -> tuple[int, ...]:
    """Inverse of maya(): rebuild the partition from its occupied set."""
    vals = sorted(occupied, reverse=True)
    return as_partition(v + i for i, v in enumerate(vals, start=1))
