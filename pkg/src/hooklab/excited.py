"""Excited diagrams: move closure, bijections to flagged tableaux and paths.

An excited diagram is a placement of |mu| boxes inside lam reachable from
the initial placement D = mu by diagonal moves (i,j) -> (i+1,j+1).  Moves
preserve diagonals and relative order along each diagonal, which makes
every bijection below computable from the box set alone.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction

from .partitions import (
    as_partition,
    boxes,
    contains,
    content,
    conjugate,
    maya,
    part,
    size,
)


class ExcitedDiagram:
    """Box placement inside an ambient shape, tagged with its origin shape."""

    __slots__ = ("lam", "mu", "boxes")

    def __init__(self, lam, mu, box_set):
        self.lam = as_partition(lam)
        self.mu = as_partition(mu)
        self.boxes = frozenset(box_set)
        if len(self.boxes) != size(self.mu):
            raise ValueError(f"need {size(self.mu)} boxes, got {len(self.boxes)}")
        for (i, j) in self.boxes:
            if not (1 <= i <= len(self.lam) and 1 <= j <= self.lam[i - 1]):
                raise ValueError(f"box {(i, j)} outside {self.lam}")

    @classmethod
    def initial(cls, lam, mu):
        if not contains(mu, lam):
            raise ValueError(f"{mu} is not contained in {lam}")
        return cls(lam, mu, boxes(as_partition(mu)))

    def key(self):
        return tuple(sorted(self.boxes))

    def __eq__(self, other):
        return (
            isinstance(other, ExcitedDiagram)
            and self.lam == other.lam
            and self.mu == other.mu
            and self.boxes == other.boxes
        )

    def __hash__(self):
        return hash((self.lam, self.mu, self.boxes))

    def __repr__(self):
        return f"ExcitedDiagram({self.lam}/{self.mu}, {sorted(self.boxes)})"


def excited_moves(diag: ExcitedDiagram) -> list[ExcitedDiagram]:
    """All single-box diagonal moves available from this placement."""
    out = []
    bs = diag.boxes
    for (i, j) in sorted(bs):
        tgt = (i + 1, j + 1)
        blockers = ((i + 1, j), (i, j + 1), tgt)
        if any(b in bs for b in blockers):
            continue
        if not (tgt[0] <= len(diag.lam) and tgt[1] <= diag.lam[tgt[0] - 1]):
            continue
        out.append(ExcitedDiagram(diag.lam, diag.mu, (bs - {(i, j)}) | {tgt}))
    return out


def enumerate_excited(lam, mu) -> list[ExcitedDiagram]:
    """Breadth-first closure from the initial placement, sorted box-set order.

    Returns [] when mu is not contained in lam (vanishing convention).
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        return []
    start = ExcitedDiagram.initial(lam, mu)
    seen = {start.key(): start}
    queue = deque([start])
    while queue:
        d = queue.popleft()
        for nxt in excited_moves(d):
            if nxt.key() not in seen:
                seen[nxt.key()] = nxt
                queue.append(nxt)
    return [seen[k] for k in sorted(seen)]


def flag_of(lam, mu, rows: int | None = None) -> tuple[int, ...]:
    """Row bounds f_i = max{ j : lam_j - j >= mu_i - i } for flagged tableaux."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    if rows is None:
        rows = len(mu)
    out = []
    for i in range(1, rows + 1):
        d = part(mu, i) - i
        js = [j for j in range(1, len(lam) + 1) if lam[j - 1] - j >= d]
        if not js:
            raise ValueError(f"no row of {lam} reaches diagonal {d}")
        out.append(max(js))
    return tuple(out)


def _diagonal_matching(diag: ExcitedDiagram) -> dict:
    """Map each origin box to its image in the placement.

    Moves preserve diagonals and cannot reorder boxes along one, so matching
    sorted origin boxes with sorted placement boxes per diagonal is exact.
    """
    by_diag_origin: dict[int, list] = {}
    for b in boxes(diag.mu):
        by_diag_origin.setdefault(content(b), []).append(b)
    by_diag_image: dict[int, list] = {}
    for b in diag.boxes:
        by_diag_image.setdefault(content(b), []).append(b)
    match = {}
    for d, origins in by_diag_origin.items():
        images = sorted(by_diag_image.get(d, []))
        if len(images) != len(origins):
            raise ValueError(f"diagonal {d} mismatch; not an excited placement")
        for o, im in zip(sorted(origins), images):
            match[o] = im
    return match


def to_flagged_ssyt(diag: ExcitedDiagram) -> dict:
    """Tableau T(i,j) = row of the image of origin box (i,j)."""
    return {b: im[0] for b, im in _diagonal_matching(diag).items()}


def from_flagged_ssyt(lam, mu, tab: dict) -> ExcitedDiagram:
    """Inverse bijection: origin box (i,j) lands in row T(i,j) on its diagonal."""
    placed = {(tab[(i, j)], tab[(i, j)] + j - i) for (i, j) in tab}
    return ExcitedDiagram(lam, mu, placed)


def to_paths(diag: ExcitedDiagram) -> list[list[tuple[int, int]]]:
    """Non-intersecting up/right paths covering the cells outside the placement.

    Paths enter through the lower border and leave through the right border
    of lam; the routing is reconstructed cell by cell.  Each cell outside the
    placement carries exactly one path; a cell with one incoming edge routes
    upward exactly when the cell above needs a vertical input (it exists, is
    not in the placement, and has no horizontal input).
    """
    lam, mu = diag.lam, diag.mu
    if not lam:
        return []
    n = len(lam)
    lamc = conjugate(lam)
    x_lam = maya(lam, n).occupied
    x_mu = frozenset(part(mu, i) - i for i in range(1, n + 1))
    border = x_lam ^ x_mu  # 1-bits of the boundary string

    up = {}  # cell -> bool: emits vertical output
    right = {}  # cell -> bool: emits horizontal output
    h_in = {}  # horizontal input per cell
    for j in range(1, lam[0] + 1):
        v = 1 if (j - lamc[j - 1] - 1) in border else 0
        for i in range(lamc[j - 1], 0, -1):
            cell = (i, j)
            h = h_in.get(cell, 0)
            if cell in diag.boxes:
                if v or h:
                    raise ValueError(f"placement box {cell} lies on a path")
                up[cell] = right[cell] = 0
                v = 0
                continue
            if v + h != 1:
                raise ValueError(f"cell {cell} carries {v + h} path inputs")
            above = (i - 1, j)
            goes_up = (
                i > 1
                and lam[i - 2] >= j
                and above not in diag.boxes
                and h_in.get(above, 0) == 0
            )
            up[cell] = 1 if goes_up else 0
            right[cell] = 1 - up[cell]
            if right[cell] and lam[i - 1] > j:
                h_in[(i, j + 1)] = 1
            v = up[cell]
        if lamc[j - 1] >= 1 and up.get((1, j), 0):
            raise ValueError(f"path escapes through the top of column {j}")

    # Exits must match the boundary string along the right border.
    for i in range(1, n + 1):
        bit = 1 if (lam[i - 1] - i) in border else 0
        if right.get((i, lam[i - 1]), 0) != bit:
            raise ValueError(f"row {i} exit disagrees with the boundary string")

    paths = []
    for j in range(1, lam[0] + 1):
        if (j - lamc[j - 1] - 1) not in border:
            continue
        cell = (lamc[j - 1], j)
        trail = []
        while True:
            trail.append(cell)
            if up[cell]:
                cell = (cell[0] - 1, cell[1])
            elif cell[1] == lam[cell[0] - 1]:
                break
            else:
                cell = (cell[0], cell[1] + 1)
        paths.append(trail)
    return paths


def excited_weight(diag: ExcitedDiagram, xs, ys, complement=False) -> Fraction:
    """Product of x_i - y_j over placement boxes (or over lam minus them)."""
    cells = (set(boxes(diag.lam)) - diag.boxes) if complement else diag.boxes
    total = Fraction(1)
    for (i, j) in cells:
        total *= xs[i - 1] - ys[j - 1]
    return total


def weighted_sum(lam, mu, xs, ys, complement=False) -> Fraction:
    """Sum of excited_weight over the whole closure; 0 when mu is not in lam."""
    total = Fraction(0)
    for d in enumerate_excited(lam, mu):
        total += excited_weight(d, xs, ys, complement)
    return total
