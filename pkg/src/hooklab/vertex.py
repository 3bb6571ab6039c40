"""Free-fermion five-vertex model on Young-diagram domains.

States are occupancy tuples (bottom, left, top, right) of the four edges
around a vertex, with paths travelling up and to the right.  Three weight
families act: the bulk family (empty vertex carries the spectral value,
every other allowed state carries 1), its dual (empty carries 1, the rest
1/spectral), and the crossing family (vertical pass-through carries the
spectral value, horizontal pass-through is forbidden, crossings allowed).

Partition functions on a shape lam sweep column by column with a frontier
of horizontal-edge occupancies; the strand-extended variants thread one
extra path along the northwest or the southeast border, with dual and
crossing vertices interleaved exactly where the strand crosses lattice
edges.  Boundary conditions are binary strings along the southeast border
read from the bottom-left end to the top-right end.
"""

from __future__ import annotations

from collections import namedtuple
from fractions import Fraction
from itertools import product

from .algebra import SparsePoly, Symbol, Verdict, poly, sample_rationals
from .excited import weighted_sum
from .partitions import (
    as_partition,
    contains,
    conjugate,
    maya,
    part,
    partition_from_maya,
    size,
    successors_add_box,
    successors_vertical_strip,
)

#: states with nonzero weight in the bulk family, besides the empty vertex
_PASS_STATES = {(1, 0, 1, 0), (0, 1, 0, 1), (0, 1, 1, 0), (1, 0, 0, 1)}


def weight(family: str, spectral, state) -> Fraction:
    """Vertex weight table; unlisted states weigh zero."""
    b, l, t, r = state
    if b + l != t + r:
        return Fraction(0)
    if family == "w":
        if state == (0, 0, 0, 0):
            return spectral
        return Fraction(1) if state in _PASS_STATES else Fraction(0)
    if family == "w_check":
        if spectral == 0:
            raise ZeroDivisionError("dual weight family needs nonzero spectral value")
        if state == (0, 0, 0, 0):
            return Fraction(1)
        return 1 / spectral if state in _PASS_STATES else Fraction(0)
    if family == "r":
        if state == (0, 0, 0, 0) or state == (1, 1, 1, 1):
            return Fraction(1)
        if state == (1, 0, 1, 0):
            return spectral
        if state == (0, 1, 0, 1):
            return Fraction(0)
        return Fraction(1)  # the two turning states
    raise ValueError(f"unknown weight family {family!r}")


def free_fermion_check(family: str) -> Verdict:
    """w(0000) w(1111) + w(1010) w(0101) == w(0110) w(1001), exactly.

    Checked at ten seeded nonzero spectral values; for the bulk and
    crossing families additionally as polynomials in the spectral symbol.
    """
    for s in sample_rationals(606, 10):
        if s == 0:
            continue
        lhs = weight(family, s, (0, 0, 0, 0)) * weight(family, s, (1, 1, 1, 1)) + weight(
            family, s, (1, 0, 1, 0)
        ) * weight(family, s, (0, 1, 0, 1))
        rhs = weight(family, s, (0, 1, 1, 0)) * weight(family, s, (1, 0, 0, 1))
        if lhs != rhs:
            return Verdict(False, lhs, rhs)
    if family in ("w", "r"):
        z = poly(Symbol("z", 0))
        lhs = weight(family, z, (0, 0, 0, 0)) * weight(family, z, (1, 1, 1, 1)) + weight(
            family, z, (1, 0, 1, 0)
        ) * weight(family, z, (0, 1, 0, 1))
        rhs = weight(family, z, (0, 1, 1, 0)) * weight(family, z, (1, 0, 0, 1))
        if not poly(lhs) == poly(rhs):
            return Verdict(False, lhs, rhs)
    return Verdict(True, None, None)


# ---------------------------------------------------------------------------
# Yang-Baxter equation


def _ybe_sides(wx, wc, rz, boundary):
    """Both wirings of the triangle relation for one boundary tuple.

    wx, wc, rz are weight callables state -> value for the bulk, dual, and
    crossing vertices with their three spectral parameters already bound.
    """
    i1, i2, i3, j1, j2, j3 = boundary
    zero = Fraction(0)
    left = zero
    for k1, k2, k3 in product((0, 1), repeat=3):
        left += wx((i3, k1, k3, j1)) * wc((i2, i1, k2, k1)) * rz((k3, k2, j3, j2))
    right = zero
    for k1, k2, k3 in product((0, 1), repeat=3):
        right += wx((k3, i1, j3, k1)) * wc((k2, k1, j2, j1)) * rz((i3, i2, k3, k2))
    return left, right


def ybe_check(x, y, t) -> Verdict:
    """All 64 boundary tuples of the triangle relation at one parameter triple."""
    if x == t:
        raise ValueError("triangle relation needs x != t (dual spectral is x - t)")
    wx = lambda s: weight("w", x - y, s)
    wc = lambda s: weight("w_check", x - t, s)
    rz = lambda s: weight("r", y - t, s)
    for boundary in product((0, 1), repeat=6):
        left, right = _ybe_sides(wx, wc, rz, boundary)
        if left != right:
            return Verdict(False, (boundary, left), (boundary, right))
    return Verdict(True, None, None)


def ybe_check_symbolic() -> bool:
    """Triangle relation as polynomials after clearing the single denominator.

    Multiplying both sides by (x - t) replaces the dual family with the
    bulk family at spectral x - t; the identity becomes polynomial in
    x, y, t and is compared term by term.
    """
    x, y, t = poly(Symbol("x", 1)), poly(Symbol("y", 1)), poly(Symbol("t", 1))
    wx = lambda s: weight("w", x - y, s)
    wc_cleared = lambda s: weight("w", x - t, s)
    rz = lambda s: weight("r", y - t, s)
    for boundary in product((0, 1), repeat=6):
        left, right = _ybe_sides(wx, wc_cleared, rz, boundary)
        if not poly(left) == poly(right):
            return False
    return True


# ---------------------------------------------------------------------------
# Boundary binary strings


def boundary_string_maya(lam, mu) -> str:
    """Symmetric difference of the two border-encoding sets, as a bit string.

    Bit positions follow the border from its bottom-left end (index
    -l(lam)) to the top-right end (index lam_1 - 1).
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    n = len(lam)
    if n == 0:
        return ""
    x_lam = maya(lam, n).occupied
    x_mu = frozenset(part(mu, i) - i for i in range(1, n + 1))
    diff = x_lam ^ x_mu
    return "".join("1" if k in diff else "0" for k in range(-n, lam[0]))


def _mu_part(mu, r: int):
    if r == 0:
        return float("inf")
    return part(mu, r)


def rim_hook_index(mu, i: int, j: int) -> int:
    """Which translated outer rim hook of mu the box (i, j) falls in.

    The m-th hook is the first outer rim hook shifted m-1 steps along the
    main diagonal; boxes of the plane outside mu are covered exactly once.
    """
    mu = as_partition(mu)
    if j <= part(mu, i):
        raise ValueError(f"box {(i, j)} lies inside {mu}")
    for m in range(1, i + 1):
        ii, jj = i - m + 1, j - m + 1
        if jj < 1:
            break
        if _mu_part(mu, ii) + 1 <= jj <= _mu_part(mu, ii - 1) + 1:
            return m
    raise ValueError(f"box {(i, j)} not covered by any rim hook of {mu}")


def boundary_string_rim_hooks(lam, mu) -> str:
    """Border bits from rim-hook crossings.

    A border segment separates an inside box u from the adjacent outside
    box v; the segment carries a path exactly when both boxes lie outside
    mu and in the same translated rim hook (consecutive boxes of a ribbon
    straddle the border there).
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    n = len(lam)
    if n == 0:
        return ""
    lamc = conjugate(lam)
    bits = []
    for k in range(-n, lam[0]):
        row = next((i for i in range(1, n + 1) if lam[i - 1] - i == k), None)
        if row is not None:
            u, v = (row, lam[row - 1]), (row, lam[row - 1] + 1)
        else:
            col = next(j for j in range(1, lam[0] + 1) if j - lamc[j - 1] - 1 == k)
            u, v = (lamc[col - 1], col), (lamc[col - 1] + 1, col)
        if u[1] <= part(mu, u[0]):
            bits.append("0")
            continue
        bits.append("1" if rim_hook_index(mu, *u) == rim_hook_index(mu, *v) else "0")
    return "".join(bits)


def boundary_string_to_mu(lam, bits: str) -> tuple[int, ...] | None:
    """Inner shape whose boundary string this is, or None if invalid."""
    lam = as_partition(lam)
    n = len(lam)
    if len(bits) != part(lam, 1) + n:
        raise ValueError("boundary string has the wrong length")
    x_lam = maya(lam, n).occupied
    diff = {k for k, b in zip(range(-n, part(lam, 1)), bits) if b == "1"}
    x_mu = x_lam ^ diff
    if len(x_mu) != n:
        return None
    try:
        mu = partition_from_maya(x_mu)
    except ValueError:
        return None
    return mu if contains(mu, lam) else None


# ---------------------------------------------------------------------------
# Partition functions on Young-diagram domains

PFResult = namedtuple("PFResult", "value configs")


def z_mu(lam, mu, xs, ys) -> Fraction:
    """Sum over excited placements of the placed-box weight product."""
    return weighted_sum(lam, mu, xs, ys, complement=False)


def partition_function(lam, boundary: str, xs, ys, variant: str = "plain", t=None) -> PFResult:
    """Exact partition function with the given southeast boundary string.

    variant "plain" is the bare shape; "nw_strand" adds one dual/crossing
    strand along the northwest boundary, "se_strand" splits every border
    edge with a strand vertex.  Inconsistent boundaries yield value 0 with
    configs == 0 rather than an error.
    """
    lam = as_partition(lam)
    n = len(lam)
    if variant not in ("plain", "nw_strand", "se_strand"):
        raise ValueError(f"unknown domain variant {variant!r}")
    if variant != "plain" and t is None:
        raise ValueError("strand variants need the auxiliary spectral value t")
    if len(boundary) != part(lam, 1) + n:
        raise ValueError("boundary string has the wrong length")
    if n == 0:
        return PFResult(Fraction(1), 1)
    lamc = conjugate(lam)
    bit = {k: 1 if b == "1" else 0 for k, b in zip(range(-n, lam[0]), boundary)}

    zero = Fraction(0)
    one = Fraction(1)

    # Frontier states: (h, s) with h the horizontal-edge occupancies of the
    # rows (index 0 = row 1) and s the strand edge occupancy (always 0 for
    # the plain domain).  Values: (weight sum, config count).
    states: dict = {}

    def add(st, h, s, w, c):
        key = (h, s)
        if key in states if st is states else key in st:
            pass
        prev = st.get(key)
        if prev is None:
            st[key] = (w, c)
        else:
            st[key] = (prev[0] + w, prev[1] + c)

    if variant == "nw_strand":
        # Strand climbs the west side: dual vertices feed the row edges.
        states = {((0,) * n, 0): (one, 1)}
        for i in range(n, 0, -1):
            nxt: dict = {}
            for (h, s), (w, c) in states.items():
                for s_out, h_out in product((0, 1), repeat=2):
                    wt = weight("w_check", xs[i - 1] - t, (s, 0, s_out, h_out))
                    if wt == 0:
                        continue
                    h2 = list(h)
                    h2[i - 1] = h_out
                    add(nxt, tuple(h2), s_out, w * wt, c)
            states = nxt
    else:
        states = {((0,) * n, 0): (one, 1)}

    for j in range(1, lam[0] + 1):
        col_rows = lamc[j - 1]
        k_col = j - col_rows - 1

        # Vertical edge entering the column from below.
        if variant == "se_strand":
            nxt = {}
            for (h, s), (w, c) in states.items():
                for v_in, s_out in product((0, 1), repeat=2):
                    wt = weight("r", ys[j - 1] - t, (bit[k_col], s, v_in, s_out))
                    if wt == 0:
                        continue
                    add(nxt, h + (v_in,), s_out, w * wt, c)  # v_in rides at the end
            states = {}
            pending = nxt
        else:
            pending = {(h + (bit[k_col],), s): wc for (h, s), wc in states.items()}

        # Propagate up through the column; the appended slot carries the
        # running vertical occupancy.
        for i in range(col_rows, 0, -1):
            nxt = {}
            for (hv, s), (w, c) in pending.items():
                h, v = hv[:-1], hv[-1]
                h_in = h[i - 1]
                flow = v + h_in
                if flow == 0:
                    h2 = h[: i - 1] + (0,) + h[i:]
                    add(nxt, h2 + (0,), s, w * (xs[i - 1] - ys[j - 1]), c)
                elif flow == 1:
                    for v_out in (0, 1):
                        h2 = h[: i - 1] + (1 - v_out,) + h[i:]
                        add(nxt, h2 + (v_out,), s, w, c)
                # flow == 2 is the forbidden crossing: weight 0
            pending = nxt

        # Vertical edge leaving the column at the top.
        nxt = {}
        if variant == "nw_strand":
            for (hv, s), (w, c) in pending.items():
                h, v = hv[:-1], hv[-1]
                for s_out in (0, 1):
                    wt = weight("r", ys[j - 1] - t, (v, s, 0, s_out))
                    if wt == 0:
                        continue
                    add(nxt, h, s_out, w * wt, c)
        else:
            for (hv, s), (w, c) in pending.items():
                h, v = hv[:-1], hv[-1]
                if v == 0:
                    add(nxt, h, s, w, c)
        states = nxt

        # Rows ending at this column exit through the border.
        for i in range(col_rows, 0, -1):
            if lam[i - 1] != j:
                continue
            k_row = j - i
            nxt = {}
            if variant == "se_strand":
                for (h, s), (w, c) in states.items():
                    for s_out in (0, 1):
                        wt = weight("w_check", xs[i - 1] - t, (s, h[i - 1], s_out, bit[k_row]))
                        if wt == 0:
                            continue
                        h2 = h[: i - 1] + (0,) + h[i:]
                        add(nxt, h2, s_out, w * wt, c)
            else:
                for (h, s), (w, c) in states.items():
                    if h[i - 1] != bit[k_row]:
                        continue
                    h2 = h[: i - 1] + (0,) + h[i:]
                    add(nxt, h2, s, w, c)
            states = nxt

    final = states.get(((0,) * n, 0))
    if final is None:
        return PFResult(zero, 0)
    return PFResult(final[0], final[1])


def enumerate_configurations(lam, boundary: str, xs, ys):
    """Explicit configuration list [(empty-cell set, weight)] for small shapes.

    Brute-force oracle for the frontier sweep: walks the same columns but
    keeps every branch separate and records which cells stay empty.
    """
    lam = as_partition(lam)
    n = len(lam)
    if n == 0:
        return [(frozenset(), Fraction(1))]
    lamc = conjugate(lam)
    bit = {k: 1 if b == "1" else 0 for k, b in zip(range(-n, lam[0]), boundary)}
    results = []

    def sweep(j, h, empties, w):
        if j > lam[0]:
            results.append((frozenset(empties), w))
            return
        col_rows = lamc[j - 1]

        def climb(i, v, h, empties, w):
            if i == 0:
                if v != 0:
                    return
                h2, ok = list(h), True
                for r in range(1, col_rows + 1):
                    if lam[r - 1] == j:
                        if h2[r - 1] != bit[j - r]:
                            ok = False
                            break
                        h2[r - 1] = 0
                if ok:
                    sweep(j + 1, tuple(h2), empties, w)
                return
            flow = v + h[i - 1]
            if flow == 0:
                climb(i - 1, 0, h[: i - 1] + (0,) + h[i:], empties + [(i, j)], w * (xs[i - 1] - ys[j - 1]))
            elif flow == 1:
                for v_out in (0, 1):
                    climb(i - 1, v_out, h[: i - 1] + (1 - v_out,) + h[i:], empties, w)

        climb(col_rows, bit[j - col_rows - 1], h, empties, w)

    sweep(1, (0,) * n, [], Fraction(1))
    return results


# ---------------------------------------------------------------------------
# Row transfer operators


def border_parameters(lam, xs, ys) -> dict:
    """Spectral parameter per border index: x_i on row steps, y_j on column steps."""
    lam = as_partition(lam)
    n = len(lam)
    x_lam = sorted(maya(lam, n).occupied, reverse=True)
    xc_lam = sorted(maya(lam, n).vacant)
    params = {}
    for i, k in enumerate(x_lam, start=1):
        params[k] = xs[i - 1]
    for j, k in enumerate(xc_lam, start=1):
        params[k] = ys[j - 1]
    return params


def transfer_row_R(lam, mu, nu, xs, ys, t) -> Fraction:
    """One-row crossing-vertex partition function between two border states.

    Bottom occupancies encode mu, top occupancies encode nu (both padded to
    l(lam) rows); at most one path configuration exists and its weight is
    returned, 0 when none exists.  t may be a polynomial for symbolic use.
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    n = len(lam)
    if n == 0:
        return Fraction(1) if mu == nu == () else Fraction(0)
    params = border_parameters(lam, xs, ys)
    x_mu = {part(mu, i) - i for i in range(1, n + 1)}
    x_nu = {part(nu, i) - i for i in range(1, n + 1)}
    s = 0
    total = poly(1) if isinstance(t, SparsePoly) else Fraction(1)
    for k in range(-n, part(lam, 1)):
        b = 1 if k in x_mu else 0
        top = 1 if k in x_nu else 0
        s_out = b + s - top
        if s_out not in (0, 1):
            return Fraction(0)
        wt = weight("r", params[k] - t, (b, s, top, s_out))
        if isinstance(wt, Fraction) and wt == 0:
            return Fraction(0)
        if isinstance(wt, SparsePoly) and wt.is_zero():
            return Fraction(0)
        total = total * wt
        s = s_out
    if s != 0:
        return Fraction(0)
    return total


def transfer_row_T(lam, mu, nu, xs, ys, t) -> Fraction:
    """Peeled-strand one-row operator with dual vertices on the row steps.

    Boundary strings (not raw border states) drive this variant: bottom
    carries the mu-string, top the nu-string; on row steps the vertical
    flow is reversed, with the lattice side on top.
    """
    lam, mu, nu = as_partition(lam), as_partition(mu), as_partition(nu)
    n = len(lam)
    if n == 0:
        return Fraction(1) if mu == nu == () else Fraction(0)
    params = border_parameters(lam, xs, ys)
    x_lam = maya(lam, n).occupied
    b_mu = boundary_string_maya(lam, mu)
    b_nu = boundary_string_maya(lam, nu)
    bits_mu = {k: int(c) for k, c in zip(range(-n, part(lam, 1)), b_mu)}
    bits_nu = {k: int(c) for k, c in zip(range(-n, part(lam, 1)), b_nu)}
    s = 0
    total = Fraction(1)
    for k in range(-n, part(lam, 1)):
        blo, bhi = bits_mu[k], bits_nu[k]
        if k in x_lam:
            # dual vertex, vertical flow downward: strand in from the left,
            # inner (top) edge feeds in, outer (bottom) edge leads out
            s_out = s + bhi - blo
            if s_out not in (0, 1):
                return Fraction(0)
            wt = weight("w_check", params[k] - t, (s, bhi, s_out, blo))
        else:
            s_out = blo + s - bhi
            if s_out not in (0, 1):
                return Fraction(0)
            wt = weight("r", params[k] - t, (blo, s, bhi, s_out))
        if wt == 0:
            return Fraction(0)
        total *= wt
        s = s_out
    if s != 0:
        return Fraction(0)
    return total


def vertical_strip_expansion_check(lam, mu, xs, ys, t) -> Verdict:
    """Z_mu == (prod (x_i - t))^-1 sum over strips of R(mu, nu) Z_nu."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    n = len(lam)
    lhs = z_mu(lam, mu, xs, ys)
    denom = Fraction(1)
    for i in range(1, n + 1):
        denom *= xs[i - 1] - t
    acc = Fraction(0)
    for nu in successors_vertical_strip(mu, lam, include_empty=True):
        acc += transfer_row_R(lam, mu, nu, xs, ys, t) * z_mu(lam, nu, xs, ys)
    rhs = acc / denom
    return Verdict(lhs == rhs, lhs, rhs)


# ---------------------------------------------------------------------------
# Pieri rule


def p_mu(lam, mu, xs, ys) -> Fraction:
    """Border-difference linear form driving the one-box expansion."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    n = len(lam)
    if n == 0:
        return Fraction(0)
    md = maya(lam, n)
    x_lam, xc_lam = md.occupied, md.vacant
    x_mu = {part(mu, i) - i for i in range(1, n + 1)}
    total = Fraction(0)
    for k in x_lam - x_mu:
        total += xs[sum(1 for v in x_lam if v >= k) - 1]
    for k in x_mu & xc_lam:
        total -= ys[sum(1 for v in xc_lam if v <= k) - 1]
    return total


def p_mu_terms(lam, mu) -> tuple[list[int], list[int]]:
    """Indices (x rows, y columns) entering p_mu, for reporting."""
    lam, mu = as_partition(lam), as_partition(mu)
    n = len(lam)
    md = maya(lam, n)
    x_lam, xc_lam = md.occupied, md.vacant
    x_mu = {part(mu, i) - i for i in range(1, n + 1)}
    xi = sorted(sum(1 for v in x_lam if v >= k) for k in x_lam - x_mu)
    yj = sorted(sum(1 for v in xc_lam if v <= k) for k in x_mu & xc_lam)
    return xi, yj


def p_mu_border_form(lam, mu, xs, ys) -> Fraction:
    """Equivalent form: sum x_i minus border labels at the mu positions."""
    lam, mu = as_partition(lam), as_partition(mu)
    n = len(lam)
    params = border_parameters(lam, xs, ys)
    total = sum((xs[i - 1] for i in range(1, n + 1)), Fraction(0))
    for i in range(1, n + 1):
        total -= params[part(mu, i) - i]
    return total


def pieri_check_5v(lam, mu, xs, ys) -> Verdict:
    """p_mu(lam) Z_mu(lam) == sum over one-box growths of Z_nu(lam)."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    lhs = p_mu(lam, mu, xs, ys) * z_mu(lam, mu, xs, ys)
    rhs = Fraction(0)
    for nu in successors_add_box(mu, lam):
        rhs += z_mu(lam, nu, xs, ys)
    return Verdict(lhs == rhs, lhs, rhs)


# ---------------------------------------------------------------------------
# Seeded sampling helpers


def sample_xy(lam, seed: int, with_t: bool = False):
    """Seeded x/y (and optionally t) values with all needed differences nonzero."""
    lam = as_partition(lam)
    n = max(len(lam), 1)
    cols = max(part(lam, 1), 1)
    for attempt in range(1000):
        vals = sample_rationals(seed * 31337 + attempt, n + cols + 1)
        xs, ys, t = vals[:n], vals[n : n + cols], vals[n + cols]
        if any(x == y for x in xs for y in ys):
            continue
        if with_t and any(x == t for x in xs):
            continue
        return (xs, ys, t) if with_t else (xs, ys)
    raise RuntimeError("could not sample vertex-model parameters")
