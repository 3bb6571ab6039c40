"""Beta-deformed interpolation family and its strip-chain identities.

The deformed one-variable factors are prod (u + a_i + beta u a_i); their
alternant J behaves like the factorial Schur alternant after the Moebius
substitution z_i = -a_i / (1 + beta a_i), which the relation check makes
exact.  Vanishing holds at the interpolation point x^lam, the expansion
rule adds vertical strips weighted by beta^(strip size), and iterating it
expresses J_mu / J_lam as a chain sum with Y-factor denominators.  Letting
beta shrink recovers the one-box (standard-tableau) chain sum.

beta = 0 makes every Y-factor vanish identically; strip-chain operations
therefore reject it, and only the explicit degeneration check approaches
it through small nonzero values.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Verdict, sample_rationals
from .excited import weighted_sum
from .hooks import TFrame, generic_strip_recursion, mhlf_lhs
from .partitions import (
    as_partition,
    contains,
    part,
    size,
    subdiagrams,
    successors_vertical_strip,
)
from .schur import border_positions, factorial_schur_det, seq_shifts


class BetaShifts:
    """Deformation parameter with a 1-indexed shift list.

    Requires 1 + beta * a_i != 0 throughout; exposes the Moebius images
    z_i = -a_i / (1 + beta a_i) and the interpolation values x^lam.
    """

    def __init__(self, beta: Fraction, avals):
        self.beta = Fraction(beta)
        self.avals = [Fraction(v) for v in avals]
        for i, v in enumerate(self.avals, start=1):
            if 1 + self.beta * v == 0:
                raise ValueError(f"degenerate shift: 1 + beta*a_{i} = 0")

    def __len__(self):
        return len(self.avals)

    def a(self, i: int) -> Fraction:
        if not 1 <= i <= len(self.avals):
            raise IndexError(f"shift index {i} outside 1..{len(self.avals)}")
        return self.avals[i - 1]

    def z(self, i: int) -> Fraction:
        ai = self.a(i)
        return -ai / (1 + self.beta * ai)

    def x_lambda(self, lam, n: int) -> list[Fraction]:
        """Interpolation point: x_i = z at the row positions of lam."""
        lam = as_partition(lam)
        return [self.z(part(lam, i) + n - i + 1) for i in range(1, n + 1)]


def sample_beta_shifts(lam, seed: int, beta) -> BetaShifts:
    """Seeded distinct shifts, nondegenerate for every chain inside lam."""
    lam = as_partition(lam)
    n = len(lam)
    count = part(lam, 1) + n + 1
    for attempt in range(1000):
        vals = sample_rationals(seed * 48611 + attempt, count)
        beta = Fraction(beta)
        if any(1 + beta * v == 0 for v in vals):
            continue
        shifts = BetaShifts(beta, vals)
        if _shifts_degenerate(shifts, lam, n):
            continue
        return shifts
    raise RuntimeError("could not sample nondegenerate deformed shifts")


def _shifts_degenerate(shifts: BetaShifts, lam, n: int) -> bool:
    if n == 0:
        return False
    xs = shifts.x_lambda(lam, n)
    if len(set(xs)) != n:
        return True
    for nu in subdiagrams(lam):
        if nu != lam and y_factor(nu, lam, n, shifts) == 0:
            return True
    return False


def f_beta(r: int, u, shifts: BetaShifts):
    """prod_{i=1..r} (u + a_i + beta u a_i)."""
    if r < 0:
        raise ValueError("negative factor count")
    result = Fraction(1)
    for i in range(1, r + 1):
        ai = shifts.a(i)
        result = result * (u + ai + shifts.beta * u * ai)
    return result


def j_det(mu_seq, n: int, xs, shifts: BetaShifts) -> Fraction:
    """Deformed alternant det[f_beta(mu_j + n - j, x_i)] / Delta(x).

    Like the undeformed alternant, arbitrary integer sequences are allowed
    and column collisions produce exact zeros.
    """
    xs = list(xs)[:n]
    if len(set(xs)) != n:
        raise ValueError("coincident x values")
    mu_seq = list(mu_seq) + [0] * (n - len(mu_seq))
    exps = [mu_seq[j - 1] + n - j for j in range(1, n + 1)]
    if any(e < 0 for e in exps):
        raise ValueError(f"negative exponent for {mu_seq}")
    from .algebra import det_bareiss

    matrix = [[f_beta(e, x, shifts) for e in exps] for x in xs]
    delta = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            delta *= xs[i] - xs[j]
    return det_bareiss(matrix) / delta


def j_empty_closed_form(n: int, shifts: BetaShifts) -> Fraction:
    """J at the empty shape: prod (1 + beta a_i)^(n - i)."""
    result = Fraction(1)
    for i in range(1, n + 1):
        result *= (1 + shifts.beta * shifts.a(i)) ** (n - i)
    return result


def j_full_closed_form(lam, n: int, shifts: BetaShifts) -> Fraction:
    """J at the interpolation point of its own shape, in closed form.

    Triangularity gives the diagonal product over shifted differences,
    divided by the Vandermonde of the interpolation values.
    """
    lam = as_partition(lam)
    xs = shifts.x_lambda(lam, n)
    prod = Fraction(1)
    for i in range(1, n + 1):
        r = part(lam, i) + n - i + 1
        for j in range(1, part(lam, i) + n - i + 1):
            prod *= (shifts.a(j) - shifts.a(r)) / (1 + shifts.beta * shifts.a(r))
    delta = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            delta *= xs[i] - xs[j]
    return prod / delta


def j_vanishing_check(lam, mu, shifts: BetaShifts) -> Verdict:
    """Zero off the interpolation cone; the closed form on the diagonal."""
    lam, mu = as_partition(lam), as_partition(mu)
    n = max(len(lam), len(mu), 1)
    xs = shifts.x_lambda(lam, n)
    value = j_det(mu, n, xs, shifts)
    if not contains(mu, lam):
        return Verdict(value == 0, value, Fraction(0))
    if mu == lam:
        expected = j_full_closed_form(lam, n, shifts)
        return Verdict(value == expected, value, expected)
    return Verdict(True, value, None)


def beta_pieri_check(mu, n: int, xs, shifts: BetaShifts) -> Verdict:
    """Strip expansion of the multiplier prod (1+beta x_i)(1+beta a_{mu_i+n-i+1}).

    The left side sums beta^(strip size) J over all 0/1 bumps of the first
    n parts (the empty strip included); bumps that break monotonicity feed
    the alternant as-is and vanish by column collision.
    """
    mu = as_partition(mu)
    xs = list(xs)[:n]
    beta = shifts.beta
    lhs = Fraction(0)
    for mask in range(1 << n):
        eps = [(mask >> i) & 1 for i in range(n)]
        seq = [part(mu, i + 1) + eps[i] for i in range(n)]
        lhs += beta ** sum(eps) * j_det(seq, n, xs, shifts)
    rhs = j_det(mu, n, xs, shifts)
    for i in range(1, n + 1):
        rhs *= (1 + beta * xs[i - 1]) * (1 + beta * shifts.a(part(mu, i) + n - i + 1))
    return Verdict(lhs == rhs, lhs, rhs)


def y_factor(nu, lam, n: int, shifts: BetaShifts) -> Fraction:
    """prod_i (1 + beta x^lam_i)(1 + beta a_{nu_i+n-i+1}) - 1.

    Vanishes at nu = lam, which terminates the strip recursion.
    """
    nu = as_partition(nu)
    xs = shifts.x_lambda(lam, n)
    prod = Fraction(1)
    for i in range(1, n + 1):
        prod *= (1 + shifts.beta * xs[i - 1]) * (
            1 + shifts.beta * shifts.a(part(nu, i) + n - i + 1)
        )
    return prod - 1


def strip_chain_sum(lam, mu, shifts: BetaShifts, method: str = "dp") -> Fraction:
    """Sum over strict vertical-strip chains of beta^(sizes) / Y-factors.

    method="dp" uses the memoized strip recursion; "enumerate" walks every
    chain explicitly (oracle).
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if shifts.beta == 0:
        raise ValueError("strip-chain sums are singular at beta = 0")
    n = len(lam)
    beta = shifts.beta

    if method == "enumerate":
        def chains(nu) -> Fraction:
            if nu == lam:
                return Fraction(1)
            acc = Fraction(0)
            for rho in successors_vertical_strip(nu, lam, include_empty=False):
                acc += beta ** (size(rho) - size(nu)) * chains(rho)
            return acc / y_factor(nu, lam, n, shifts)

        return chains(mu)
    if method != "dp":
        raise ValueError(f"unknown method {method!r}")

    def strip_pieri(nu):
        succ = [
            (rho, beta ** (size(rho) - size(nu)))
            for rho in successors_vertical_strip(nu, lam, include_empty=False)
        ]
        return y_factor(nu, lam, n, shifts), succ

    return generic_strip_recursion(lam, mu, strip_pieri)


def ssyt_sum_check(lam, mu, shifts: BetaShifts) -> Verdict:
    """J_mu / J_lam at the interpolation point equals the strip-chain sum."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    n = max(len(lam), 1)
    xs = shifts.x_lambda(lam, n)
    lhs = j_det(mu, n, xs, shifts) / j_det(lam, n, xs, shifts)
    rhs = strip_chain_sum(lam, mu, shifts)
    return Verdict(lhs == rhs, lhs, rhs)


def shift_product(mu, n: int, shifts: BetaShifts) -> Fraction:
    """prod over rows i of prod_{j <= mu_i+n-i} (1 + beta a_j).

    Column j of the deformed alternant factors as this row's product times
    the undeformed column at the Moebius-image shifts.
    """
    mu = as_partition(mu)
    result = Fraction(1)
    for i in range(1, n + 1):
        for j in range(1, part(mu, i) + n - i + 1):
            result *= 1 + shifts.beta * shifts.a(j)
    return result


def jf_relation_check(mu, n: int, xs, shifts: BetaShifts) -> Verdict:
    """J equals shift_product times the alternant at the Moebius-image shifts."""
    mu = as_partition(mu)
    xs = list(xs)[:n]
    lhs = j_det(mu, n, xs, shifts)
    zshifts = seq_shifts([shifts.z(i) for i in range(1, len(shifts) + 1)])
    rhs = shift_product(mu, n, shifts) * factorial_schur_det(mu, n, xs, zshifts)
    return Verdict(lhs == rhs, lhs, rhs)


def shifts_from_xy(lam, xs, ys, beta) -> BetaShifts:
    """Shift list realizing given x/y values on the border of lam.

    Row positions carry -x_i/(1+beta x_i), the remaining positions carry
    -y_j/(1+beta y_j); the Moebius images then interleave x and y exactly
    as the border sequence of lam.
    """
    lam = as_partition(lam)
    n = len(lam)
    beta = Fraction(beta)
    avals = []
    for kind, idx in border_positions(lam, n):
        v = xs[idx - 1] if kind == "x" else ys[idx - 1]
        if 1 + beta * v == 0:
            raise ValueError(f"degenerate substitution at {kind}{idx}")
        avals.append(-v / (1 + beta * v))
    return BetaShifts(beta, avals)


def excited_vs_ssyt_check(lam, mu, xs, ys, beta) -> Verdict:
    """Excited-placement sum against the deformed strip-chain form.

    The left side is the beta-free placed-box weight sum.  The right side
    is J at the full shape times the chain sum, divided by the shift
    product (the chain sum gives J_mu / J_lam, and the placement sum is
    J_mu / shift_product).  Both sides are exact rationals.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    n = max(len(lam), 1)
    shifts = shifts_from_xy(lam, xs, ys, beta)
    lhs = weighted_sum(lam, mu, xs, ys, complement=False)
    if not lam:
        return Verdict(lhs == 1, lhs, Fraction(1))
    j_full = j_det(lam, n, shifts.x_lambda(lam, n), shifts)
    rhs = j_full * strip_chain_sum(lam, mu, shifts) / shift_product(mu, n, shifts)
    return Verdict(lhs == rhs, lhs, rhs)


def beta_zero_degeneration(lam, mu, frame: TFrame, beta, rel_tol=Fraction(1, 1000)) -> Verdict:
    """Small-beta limit of the chain sum against the one-box chain sum.

    Build shifts a_k = -t_k/(1+beta t_k) from the frame, so the Moebius
    images reproduce the frame's border values; J_mu / J_lam then equals
    the strip-chain sum, whose single-box chains dominate as beta shrinks
    (each Y-factor is beta times a border sum plus higher order, and the
    strip-size beta powers in the chain weights cancel exactly those of
    the surviving one-box terms).  The limit is the standard-tableau chain
    sum; the relative difference bound is checked in exact rationals.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    n = max(len(lam), 1)
    beta = Fraction(beta)
    if len(lam) == 0:
        return Verdict(True, Fraction(1), Fraction(1))
    # Chain sums see only t-differences, so pin t_1 = 0 before substituting;
    # this makes single-box skew shapes agree exactly at finite beta.
    base = frame.t(1)
    avals = []
    for k in range(1, part(lam, 1) + n + 1):
        tk = frame.t(k) - base
        if 1 + beta * tk == 0:
            raise ValueError(f"degenerate substitution at t_{k}")
        avals.append(-tk / (1 + beta * tk))
    shifts = BetaShifts(beta, avals)
    xs = shifts.x_lambda(lam, n)
    ratio = j_det(mu, n, xs, shifts) / j_det(lam, n, xs, shifts)
    target = mhlf_lhs(lam, mu, frame)
    if target == 0:
        return Verdict(ratio == 0, ratio, target)
    ok = abs(ratio / target - 1) <= rel_tol
    return Verdict(ok, ratio, target)
