"""Hook-length counts and their multivariate generalizations.

The central objects are two equal sums attached to a shape pair mu <= lam:
a sum over standard tableaux of reciprocal border-variable weights, and a
sum over excited placements of reciprocal hook factors.  Both live in a
frame assigning exact rationals to border variables t_1..t_{lam_1+n}; the
frame constructor guarantees every denominator in the contract is nonzero,
so the sums never divide by zero mid-flight.

The tableau-side sum is computed by a memoized recursion over the lattice
of intermediate shapes (exponentially fewer terms than tableau-by-tableau
enumeration, which is kept as the oracle).
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from .algebra import SparsePoly, Verdict, poly, sample_rationals, sym_t
from .excited import enumerate_excited, flag_of
from .partitions import (
    as_partition,
    boxes,
    contains,
    content,
    conjugate,
    enumerate_ssyt,
    enumerate_syt,
    hook_cells,
    hook_length,
    part,
    restriction_shape,
    size,
    skew_boxes,
    subdiagrams,
    successors_add_box,
)

# ---------------------------------------------------------------------------
# Integer counts


def hlf_count(lam) -> int:
    """Number of standard tableaux of straight shape via the hook product."""
    lam = as_partition(lam)
    value = Fraction(factorial(size(lam)))
    for u in boxes(lam):
        value /= hook_length(lam, u)
    assert value.denominator == 1
    return int(value)


def nhlf_count(lam, mu) -> int:
    """Number of standard tableaux of skew shape via excited placements."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    total = Fraction(0)
    cells = set(boxes(lam))
    for d in enumerate_excited(lam, mu):
        term = Fraction(1)
        for u in cells - d.boxes:
            term /= hook_length(lam, u)
        total += term
    value = factorial(size(lam) - size(mu)) * total
    assert value.denominator == 1
    return int(value)


# ---------------------------------------------------------------------------
# Variable frames


class TFrame:
    """Exact rational values for the border variables t_1..t_{lam_1+n}.

    Row variables are x_i = t_{lam_i+n-i+1}; the remaining positions give
    the column variables y_j = t_{j+n-lam'_j}.
    """

    def __init__(self, lam, tvals):
        self.lam = as_partition(lam)
        self.n = len(self.lam)
        top = part(self.lam, 1) + self.n
        self.tvals = {k: tvals[k] for k in range(1, top + 1)}
        lamc = conjugate(self.lam)
        self.xs = [self.tvals[self.lam[i - 1] + self.n - i + 1] for i in range(1, self.n + 1)]
        self.ys = [
            self.tvals[j + self.n - lamc[j - 1]] for j in range(1, part(self.lam, 1) + 1)
        ]

    @classmethod
    def integer(cls, lam):
        """The specialization t_k = k (always nondegenerate)."""
        lam = as_partition(lam)
        top = part(lam, 1) + len(lam)
        return cls(lam, {k: Fraction(k) for k in range(1, top + 1)})

    def t(self, k: int) -> Fraction:
        return self.tvals[k]

    def x(self, i: int) -> Fraction:
        return self.xs[i - 1]

    def y(self, j: int) -> Fraction:
        return self.ys[j - 1]

    def hook_factor(self, i: int, j: int) -> Fraction:
        return self.xs[i - 1] - self.ys[j - 1]

    def t_weight(self, nu) -> Fraction:
        """sum_i t_{lam_i+n-i+1} - t_{nu_i+n-i+1} over the n padded rows."""
        nu = as_partition(nu)
        total = Fraction(0)
        for i in range(1, self.n + 1):
            total += self.xs[i - 1] - self.tvals[part(nu, i) + self.n - i + 1]
        return total


def _frame_degenerate(frame: TFrame, mu) -> bool:
    lam = frame.lam
    for (i, j) in boxes(lam):
        if frame.hook_factor(i, j) == 0:
            return True
    for nu in subdiagrams(lam):
        if nu != lam and contains(mu, nu) and frame.t_weight(nu) == 0:
            return True
    return False


def sample_t_frame(lam, seed: int, mu=()) -> TFrame:
    """Seeded frame, resampled until every contract denominator is nonzero."""
    lam = as_partition(lam)
    top = part(lam, 1) + len(lam)
    for attempt in range(1000):
        vals = sample_rationals(seed * 7919 + attempt, top)
        frame = TFrame(lam, {k: vals[k - 1] for k in range(1, top + 1)})
        if not _frame_degenerate(frame, as_partition(mu)):
            return frame
    raise RuntimeError("could not sample a nondegenerate frame")


class ZFrame:
    """Content-indexed variables z_k, k in [-n+1, lam_1-1].

    Translates to a TFrame by t_1 = 0, t_{k+1} = t_k + z_{k-n}; only
    differences of t's ever matter, so pinning t_1 loses nothing.
    """

    def __init__(self, lam, zvals):
        self.lam = as_partition(lam)
        self.n = len(self.lam)
        lo, hi = -self.n + 1, part(self.lam, 1) - 1
        self.zvals = {k: zvals[k] for k in range(lo, hi + 1)}
        self.lo, self.hi = lo, hi

    def z(self, k: int) -> Fraction:
        if not self.lo <= k <= self.hi:
            raise ValueError(f"z index {k} outside [{self.lo}, {self.hi}]")
        return self.zvals[k]

    def z_sum(self, cells) -> Fraction:
        """sum of z_{content(u)} over a set of boxes."""
        return sum((self.z(content(u)) for u in cells), Fraction(0))

    def to_t_frame(self) -> TFrame:
        top = part(self.lam, 1) + self.n
        tvals = {1: Fraction(0)}
        for k in range(2, top + 1):
            tvals[k] = tvals[k - 1] + self.zvals[k - 1 - self.n]
        return TFrame(self.lam, tvals)

    @classmethod
    def ones(cls, lam):
        lam = as_partition(lam)
        n = len(lam)
        return cls(lam, {k: Fraction(1) for k in range(-n + 1, part(lam, 1))})


def sample_z_frame(lam, seed: int, mu=()) -> ZFrame:
    lam = as_partition(lam)
    n = len(lam)
    count = part(lam, 1) - 1 + n
    for attempt in range(1000):
        vals = sample_rationals(seed * 104729 + attempt, count)
        zf = ZFrame(lam, {k: vals[i] for i, k in enumerate(range(-n + 1, part(lam, 1)))})
        if not _frame_degenerate(zf.to_t_frame(), as_partition(mu)):
            return zf
    raise RuntimeError("could not sample a nondegenerate z-frame")


# ---------------------------------------------------------------------------
# The two sides of the multivariate identity


def mhlf_lhs(lam, mu, frame: TFrame, method: str = "dp") -> Fraction:
    """Sum over standard tableaux of prod_k 1/t(shape below entry k).

    method="dp" recurses over intermediate shapes with memoization;
    method="enumerate" walks every tableau (the independent oracle).
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    if method == "enumerate":
        total = Fraction(0)
        n_boxes = size(lam) - size(mu)
        for tab in enumerate_syt(lam, mu):
            term = Fraction(1)
            for k in range(1, n_boxes + 1):
                nu = restriction_shape(lam, mu, tab, k)
                w = frame.t_weight(nu)
                if w == 0:
                    raise ZeroDivisionError(f"degenerate frame: t({nu}) = 0")
                term /= w
            total += term
        return total
    if method != "dp":
        raise ValueError(f"unknown method {method!r}")

    memo: dict = {}

    def rec(nu) -> Fraction:
        if nu == lam:
            return Fraction(1)
        if nu in memo:
            return memo[nu]
        acc = Fraction(0)
        for rho in successors_add_box(nu, lam):
            acc += rec(rho)
        w = frame.t_weight(nu)
        if w == 0:
            raise ZeroDivisionError(f"degenerate frame: t({nu}) = 0")
        memo[nu] = acc / w
        return memo[nu]

    return rec(mu)


def mhlf_rhs(lam, mu, frame: TFrame) -> Fraction:
    """Sum over excited placements of prod of reciprocal hook factors."""
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    cells = set(boxes(lam))
    total = Fraction(0)
    for d in enumerate_excited(lam, mu):
        term = Fraction(1)
        for (i, j) in cells - d.boxes:
            f = frame.hook_factor(i, j)
            if f == 0:
                raise ZeroDivisionError(f"degenerate frame: hook factor ({i},{j}) = 0")
            term /= f
        total += term
    return total


def mhlf_symbolic_check(lam, mu) -> bool:
    """Fully symbolic identity check after clearing all denominators.

    With D_L = prod over intermediate shapes of t(nu) and D_R = prod over
    boxes of the hook factors, the identity is equivalent to the polynomial
    equation (sum over tableaux of the complementary t-products) * D_R ==
    (sum over placements of placed-box products) * D_L in the t-variables.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    n = len(lam)
    lamc = conjugate(lam)

    def tvar(k):
        return poly(sym_t(k))

    def t_weight_poly(nu) -> SparsePoly:
        acc = poly(0)
        for i in range(1, n + 1):
            acc = acc + tvar(part(lam, i) + n - i + 1) - tvar(part(nu, i) + n - i + 1)
        return acc

    def hook_poly(i, j) -> SparsePoly:
        return tvar(part(lam, i) + n - i + 1) - tvar(j + n - lamc[j - 1])

    interval = [nu for nu in subdiagrams(lam) if contains(mu, nu) and nu != lam]
    tw = {nu: t_weight_poly(nu) for nu in interval}

    n_boxes = size(lam) - size(mu)
    lhs_cleared = poly(0)
    for tab in enumerate_syt(lam, mu):
        chain = {restriction_shape(lam, mu, tab, k) for k in range(1, n_boxes + 1)}
        term = poly(1)
        for nu in interval:
            if nu not in chain:
                term = term * tw[nu]
        lhs_cleared = lhs_cleared + term

    rhs_cleared = poly(0)
    for d in enumerate_excited(lam, mu):
        term = poly(1)
        for (i, j) in d.boxes:
            term = term * hook_poly(i, j)
        rhs_cleared = rhs_cleared + term

    d_left = poly(1)
    for nu in interval:
        d_left = d_left * tw[nu]
    d_right = poly(1)
    for (i, j) in boxes(lam):
        d_right = d_right * hook_poly(i, j)

    return lhs_cleared * d_right == rhs_cleared * d_left


def z_form_check(lam, mu, zframe: ZFrame) -> Verdict:
    """Content-variable identity checked directly and through translation.

    Evaluates the tableau side and the placement side in z-variables, then
    both sides again in the translated t-frame, and requires all four exact
    values to coincide.  The verdict carries (tableau side, placement side).
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    n_boxes = size(lam) - size(mu)

    lhs_z = Fraction(0)
    for tab in enumerate_syt(lam, mu):
        term = Fraction(1)
        for k in range(1, n_boxes + 1):
            nu = restriction_shape(lam, mu, tab, k)
            term /= zframe.z_sum(skew_boxes(lam, nu))
        lhs_z += term

    cells = set(boxes(lam))
    rhs_z = Fraction(0)
    for d in enumerate_excited(lam, mu):
        term = Fraction(1)
        for u in cells - d.boxes:
            term /= zframe.z_sum(hook_cells(lam, u))
        rhs_z += term

    frame = zframe.to_t_frame()
    lhs_t = mhlf_lhs(lam, mu, frame)
    rhs_t = mhlf_rhs(lam, mu, frame)
    ok = lhs_z == rhs_z == lhs_t == rhs_t
    return Verdict(ok, lhs_z, rhs_z)


# ---------------------------------------------------------------------------
# Generic recursion engines


def generic_syt_recursion(lam, mu, pieri, vanish=None) -> Fraction:
    """Sum over standard tableaux of prod_k C_{box k} / p(shape below k).

    pieri(nu) must return (p_nu, successors) with successors a list of
    (nu_plus_box, coefficient); vanish(nu) -> True drops a successor.
    Computed by memoized recursion over intermediate shapes.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if vanish is None:
        vanish = lambda nu: not contains(nu, lam)
    memo: dict = {}

    def rec(nu) -> Fraction:
        if nu == lam:
            return Fraction(1)
        if nu in memo:
            return memo[nu]
        p_nu, succ = pieri(nu)
        if p_nu == 0:
            raise ZeroDivisionError(f"recursion factor vanishes at {nu}")
        acc = Fraction(0)
        for rho, coeff in succ:
            rho = as_partition(rho)
            if vanish(rho):
                continue
            acc += coeff * rec(rho)
        memo[nu] = acc / p_nu
        return memo[nu]

    return rec(mu)


def generic_strip_recursion(lam, mu, strip_pieri, vanish=None) -> Fraction:
    """Strip-chain analogue: successors grow by more than one box at a time.

    strip_pieri(nu) returns (factor_nu, successors) where successors lists
    (enlarged shape, coefficient) pairs over nonempty strips.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if vanish is None:
        vanish = lambda nu: not contains(nu, lam)
    memo: dict = {}

    def rec(nu) -> Fraction:
        if nu == lam:
            return Fraction(1)
        if nu in memo:
            return memo[nu]
        factor, succ = strip_pieri(nu)
        if factor == 0:
            raise ZeroDivisionError(f"recursion factor vanishes at {nu}")
        acc = Fraction(0)
        for rho, coeff in succ:
            rho = as_partition(rho)
            if rho == nu or vanish(rho):
                continue
            acc += coeff * rec(rho)
        memo[nu] = acc / factor
        return memo[nu]

    return rec(mu)


# ---------------------------------------------------------------------------
# The tableau-product variant of the identity


def oof_check(lam, mu, frame: TFrame) -> Verdict:
    """Tableau-side sum against the hook-product-times-SSYT-sum form.

    The right side multiplies the reciprocal full hook product by a sum
    over SSYT of the inner shape (entries bounded by n) of border-variable
    differences t_{lam_{n+1-T(u)}+T(u)} - t_{T(u)+c(u)}.
    """
    lam, mu = as_partition(lam), as_partition(mu)
    if not contains(mu, lam):
        raise ValueError(f"{mu} is not contained in {lam}")
    n = len(lam)
    if n == 0:
        return Verdict(True, Fraction(1), Fraction(1))
    lhs = mhlf_lhs(lam, mu, frame)

    hook_prod = Fraction(1)
    for (i, j) in boxes(lam):
        hook_prod *= frame.hook_factor(i, j)

    ssyt_sum = Fraction(0)
    for tab in enumerate_ssyt(mu, (n,) * max(len(mu), 1)):
        term = Fraction(1)
        for u, entry in tab.items():
            hi = part(lam, n + 1 - entry) + entry
            lo = entry + content(u)
            term *= frame.t(hi) - frame.t(lo)
        ssyt_sum += term

    rhs = ssyt_sum / hook_prod
    return Verdict(lhs == rhs, lhs, rhs)
