"""Factorial Schur polynomials by four independent algorithms.

The same quantity is computed as (1) a shifted-power alternant divided by
the Vandermonde, (2) a signed sum of simple-pole residues over
permutations, (3) a weighted sum over semistandard tableaux, and (4) a
Jacobi-Trudi style determinant in elementary/complete symmetric
polynomials.  Exact agreement of the four routes is the module's main
test surface.

Shift sequences are passed as callables index -> value so that negative
indices (needed by the lattice-path expansion) and border-interleaved
sequences are handled uniformly; ``seq_shifts`` adapts a plain list.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from .algebra import (
    SparsePoly,
    Symbol,
    Verdict,
    det_bareiss,
    det_cofactor,
    exact_divide,
    poly,
    vandermonde,
)
from .excited import weighted_sum
from .partitions import as_partition, boxes, content, enumerate_ssyt, part


def seq_shifts(values, start: int = 1):
    """Adapt a sequence to a shift callable; indices outside it are errors."""
    vals = list(values)

    def shift(i: int):
        if not start <= i < start + len(vals):
            raise IndexError(f"shift index {i} outside [{start}, {start + len(vals) - 1}]")
        return vals[i - start]

    return shift


def zero_shifts(_i: int) -> Fraction:
    return Fraction(0)


def padded_shifts(values, start: int = 1):
    """Like seq_shifts but returns 0 outside the range (lattice-path use)."""
    vals = list(values)

    def shift(i: int):
        if start <= i < start + len(vals):
            return vals[i - start]
        return Fraction(0)

    return shift


def _check_distinct(xs):
    seen = {}
    for i, v in enumerate(xs, start=1):
        if v in seen:
            raise ValueError(f"coincident x values at indices {seen[v]} and {i}")
        seen[v] = i


def sym_e(k: int, vals) -> Fraction:
    """Elementary symmetric polynomial e_k of the given values."""
    if k < 0:
        return Fraction(0)
    row = [Fraction(1)] + [Fraction(0)] * k
    for v in vals:
        for d in range(min(k, len(row) - 1), 0, -1):
            row[d] = row[d] + row[d - 1] * v
    return row[k]


def sym_h(k: int, vals) -> Fraction:
    """Complete homogeneous symmetric polynomial h_k of the given values.

    Recurrence h_k(v_1..v_m) = h_k(v_1..v_{m-1}) + v_m h_{k-1}(v_1..v_m).
    """
    if k < 0:
        return Fraction(0)
    row = [Fraction(1)] + [Fraction(0)] * k
    for v in vals:
        for d in range(1, k + 1):
            row[d] = row[d] + v * row[d - 1]
    return row[k]


def f_poly(j: int, shifts) -> SparsePoly:
    """prod_{i=1..j} (u - a_i) as a polynomial in the symbol u."""
    if j < 0:
        raise ValueError("negative polynomial index")
    u = poly(Symbol("u", 0))
    result = poly(1)
    for i in range(1, j + 1):
        result = result * (u - poly(shifts(i)))
    return result


def f_eval(j: int, uval, shifts):
    """prod_{i=1..j} (uval - a_i) evaluated directly."""
    result = uval - uval + 1 if isinstance(uval, SparsePoly) else Fraction(1)
    for i in range(1, j + 1):
        result = result * (uval - shifts(i))
    return result


def _column_exponents(mu_seq, n: int) -> list[int]:
    """Exponents mu_j + n - j for an arbitrary integer sequence padded to n."""
    mu_seq = list(mu_seq) + [0] * (n - len(mu_seq))
    if len(mu_seq) > n:
        raise ValueError(f"sequence {mu_seq} longer than n={n}")
    exps = [mu_seq[j - 1] + n - j for j in range(1, n + 1)]
    if any(e < 0 for e in exps):
        raise ValueError(f"negative column exponent for {mu_seq}, n={n}")
    return exps


def factorial_schur_det(mu_seq, n: int, xs, shifts) -> Fraction:
    """Alternant determinant det[(x_i-a_1)...(x_i-a_{mu_j+n-j})] / Delta(x).

    Accepts arbitrary integer sequences mu_seq: when two column exponents
    collide (the sequence is not a partition) the determinant vanishes,
    which is exactly the antisymmetry convention the Pieri rule relies on.
    """
    xs = list(xs)[:n]
    if len(xs) < n:
        raise ValueError(f"need {n} x values")
    _check_distinct(xs)
    exps = _column_exponents(mu_seq, n)
    matrix = [[f_eval(e, x, shifts) for e in exps] for x in xs]
    delta = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            delta *= xs[i] - xs[j]
    return det_bareiss(matrix) / delta


def factorial_schur_det_symbolic(mu, n: int, xsyms, shifts) -> SparsePoly:
    """Symbolic alternant / Vandermonde via cofactor expansion (n <= 5)."""
    if n > 5:
        raise ValueError("symbolic determinant limited to n <= 5")
    exps = _column_exponents(mu, n)
    matrix = [[f_eval(e, poly(x), shifts) for e in exps] for x in xsyms]
    return exact_divide(det_cofactor(matrix), vandermonde(xsyms))


def factorial_schur_residues(mu, n: int, xs, shifts) -> Fraction:
    """Sum of the simple-pole residues of the defining contour integral.

    Only assignments of distinct poles to the integration variables
    contribute (coincident poles kill the Vandermonde factor), so the sum
    runs over permutations.  Each residue is evaluated literally; the
    (-1)^C(n,2) prefactor belongs to the integral's normalization.
    """
    xs = list(xs)[:n]
    _check_distinct(xs)
    exps = [part(as_partition(mu), i) + n - i for i in range(1, n + 1)]
    total = Fraction(0)
    for sigma in permutations(range(n)):
        res = Fraction(1)
        for i in range(n):
            xv = xs[sigma[i]]
            res *= f_eval(exps[i], xv, shifts)
            for j in range(n):
                if j != sigma[i]:
                    res /= xv - xs[j]
        for i in range(n):
            for j in range(i + 1, n):
                res *= xs[sigma[i]] - xs[sigma[j]]
        total += res
    if (n * (n - 1) // 2) % 2:
        total = -total
    return total


def factorial_schur_comb(mu, n: int, xs, shifts) -> Fraction:
    """Tableau sum over SSYT(mu) with entries <= n."""
    mu = as_partition(mu)
    if len(mu) > n:
        return Fraction(0)
    xs = list(xs)
    total = Fraction(0)
    for tab in enumerate_ssyt(mu, (n,) * max(len(mu), 1)):
        term = Fraction(1)
        for u, entry in tab.items():
            term *= xs[entry - 1] - shifts(entry + content(u))
        total += term
    return total


def p_entry(i: int, j: int, mu, m, xs, bshifts) -> Fraction:
    """Jacobi-Trudi style matrix entry: alternating e/h convolution."""
    mu = as_partition(mu)
    k = part(mu, i) + j - i
    if k < 0:
        return Fraction(0)
    mi = m[i - 1]
    bvals = [bshifts(r) for r in range(1, part(mu, i) + mi - i + 1)]
    xvals = list(xs)[:mi]
    total = Fraction(0)
    for r in range(0, k + 1):
        term = sym_e(r, bvals) * sym_h(k - r, xvals)
        total += -term if r % 2 else term
    return total


def F_general_det(mu, m, n: int, xs, bshifts) -> Fraction:
    """Determinant of p_entry over an n x n window."""
    mu = as_partition(mu)
    if len(mu) > n:
        raise ValueError(f"shape {mu} needs more than {n} rows")
    if len(m) < n:
        raise ValueError(f"flag vector {m} shorter than n={n}")
    matrix = [[p_entry(i, j, mu, m, xs, bshifts) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return det_bareiss(matrix)


def lattice_path_weight_sum(s: int, k: int, rows: int, xs, bshifts) -> Fraction:
    """Weighted up/right paths from (-s+1, 1) to (k+1, rows).

    A horizontal step (r, t) -> (r+1, t) carries weight x_t - b_{r+t}; the
    path weight is the product over its horizontal steps.  Computed by a
    rectangular dynamic program over (column, height).
    """
    start_col, end_col = -s + 1, k + 1
    if end_col < start_col:
        return Fraction(0)
    xs = list(xs)
    table = {(start_col, 1): Fraction(1)}
    for col in range(start_col, end_col + 1):
        for h in range(1, rows + 1):
            if (col, h) in table:
                continue
            acc = Fraction(0)
            if h > 1 and (col, h - 1) in table:
                acc += table[(col, h - 1)]
            if col > start_col and (col - 1, h) in table:
                acc += table[(col - 1, h)] * (xs[h - 1] - bshifts(col - 1 + h))
            table[(col, h)] = acc
    return table[(end_col, rows)]


def flagged_tableau_sum(mu, m, xs, bshifts) -> Fraction:
    """Weighted sum over flagged SSYT of shape mu with row bounds m."""
    mu = as_partition(mu)
    if not mu:
        return Fraction(1)
    xs = list(xs)
    total = Fraction(0)
    for tab in enumerate_ssyt(mu, tuple(m[: len(mu)])):
        term = Fraction(1)
        for u, entry in tab.items():
            term *= xs[entry - 1] - bshifts(entry + content(u))
        total += term
    return total


# ---------------------------------------------------------------------------
# Border-interleaved shift sequence and its consequences


def border_positions(lam, n: int) -> list[tuple[str, int]]:
    """Labels along the staircase border of lam padded to n rows.

    Position r in 1..lam_1+n is ("x", i) when r = lam_i + n - i + 1 and
    ("y", j) for the j-th remaining position.
    """
    lam = as_partition(lam)
    if n < len(lam):
        raise ValueError(f"n={n} smaller than l({lam})")
    top = part(lam, 1) + n
    xpos = {part(lam, i) + n - i + 1: i for i in range(1, n + 1)}
    out: list[tuple[str, int]] = []
    ycount = 0
    for r in range(1, top + 1):
        if r in xpos:
            out.append(("x", xpos[r]))
        else:
            ycount += 1
            out.append(("y", ycount))
    return out


def a_lambda(lam, n: int, xvals, yvals) -> list:
    """Shift sequence interleaving x and y values along the border of lam."""
    seq = []
    for kind, idx in border_positions(lam, n):
        seq.append(xvals[idx - 1] if kind == "x" else yvals[idx - 1])
    return seq


def excited_sum_F(lam, mu, xs, ys) -> Fraction:
    """Sum over excited placements of the placed-box weight product.

    Equals the alternant evaluated at the border-interleaved shifts; zero
    when mu is not contained in lam.
    """
    return weighted_sum(lam, mu, xs, ys, complement=False)


def pieri_check_F(mu, n: int, xs, shifts) -> Verdict:
    """One-box expansion: sum_i F_{mu+e_i} = (sum x - sum a_{mu_i+n-i+1}) F_mu.

    Bumped sequences that fail to decrease weakly are fed to the alternant
    as-is; its column collision makes them exact zeros.
    """
    mu = as_partition(mu)
    xs = list(xs)[:n]
    lhs = Fraction(0)
    for i in range(1, n + 1):
        bumped = [part(mu, r) for r in range(1, n + 1)]
        bumped[i - 1] += 1
        lhs += factorial_schur_det(bumped, n, xs, shifts)
    factor = sum(xs, Fraction(0)) - sum(
        (shifts(part(mu, i) + n - i + 1) for i in range(1, n + 1)), Fraction(0)
    )
    rhs = factor * factorial_schur_det(mu, n, xs, shifts)
    return Verdict(lhs == rhs, lhs, rhs)
