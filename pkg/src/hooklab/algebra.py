"""Exact arithmetic substrate: symbols, sparse polynomials, evaluation points.

Rationals are :class:`fractions.Fraction` (arbitrary precision, canonical
form).  Polynomials are sparse dicts from monomials to nonzero rational
coefficients; a monomial is a tuple of (symbol, exponent) pairs sorted in
the global symbol order.  No floating point anywhere.
"""

from __future__ import annotations

import random
from collections import namedtuple
from fractions import Fraction
from typing import Iterable, NamedTuple

KINDS = ("x", "y", "t", "a", "b", "z", "u", "beta")


class Symbol(NamedTuple):
    kind: str
    index: int = 0

    def key(self):
        return (KINDS.index(self.kind), self.index)

    def __repr__(self):
        return f"{self.kind}{self.index}" if self.kind != "beta" else "beta"


def sym_x(i):
    return Symbol("x", i)


def sym_y(j):
    return Symbol("y", j)


def sym_t(k):
    return Symbol("t", k)


Verdict = namedtuple("Verdict", "ok lhs rhs")


class ExactDivisionError(ArithmeticError):
    """Raised when polynomial division leaves a remainder; carries the witness."""

    def __init__(self, message, remainder):
        super().__init__(message)
        self.remainder = remainder


def _as_coeff(v):
    if isinstance(v, Fraction):
        return v
    if isinstance(v, int):
        return Fraction(v)
    raise TypeError(f"cannot coerce {v!r} into a rational coefficient")


def _mono_mul(m1, m2):
    d = dict(m1)
    for s, e in m2:
        d[s] = d.get(s, 0) + e
    return tuple(sorted(d.items(), key=lambda p: p[0].key()))


def _mono_cmp_key(m):
    # Lexicographic order: earlier symbols dominate; absent symbol = exponent 0.
    # Encoded so plain tuple comparison of keys matches monomial order: for each
    # present symbol, (-key, exponent) descending...  Comparison is done via
    # merge in _mono_lex_gt instead; this key only serves determinism in ties.
    return tuple((s.key(), e) for s, e in m)


def _mono_lex_gt(m1, m2):
    """True if m1 > m2 in lex order over the global symbol order."""
    d1, d2 = dict(m1), dict(m2)
    for s in sorted(set(d1) | set(d2), key=lambda s: s.key()):
        e1, e2 = d1.get(s, 0), d2.get(s, 0)
        if e1 != e2:
            return e1 > e2
    return False


class SparsePoly:
    """Multivariate polynomial with exact rational coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {m: c for m, c in (terms or {}).items() if c != 0}

    @classmethod
    def const(cls, c):
        c = _as_coeff(c)
        return cls({(): c} if c else {})

    @classmethod
    def var(cls, sym: Symbol):
        return cls({((sym, 1),): Fraction(1)})

    def is_zero(self):
        return not self.terms

    def symbols(self):
        return {s for m in self.terms for s, _ in m}

    def degree(self):
        return max((sum(e for _, e in m) for m in self.terms), default=0)

    def degree_in(self, sym: Symbol):
        return max((dict(m).get(sym, 0) for m in self.terms), default=0)

    def coefficient_of(self, sym: Symbol, power: int):
        """Coefficient of sym**power, as a polynomial in the other symbols."""
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            if d.pop(sym, 0) == power:
                out[tuple(sorted(d.items(), key=lambda p: p[0].key()))] = c
        return SparsePoly(out)

    def _coerce(self, other):
        if isinstance(other, SparsePoly):
            return other
        return SparsePoly.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return SparsePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return SparsePoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, Fraction(0)) + c1 * c2
        return SparsePoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = SparsePoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.const(other)
        return isinstance(other, SparsePoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for m in sorted(self.terms, key=_mono_cmp_key):
            c = self.terms[m]
            mono = "*".join(f"{s}^{e}" if e > 1 else f"{s}" for s, e in m) or "1"
            bits.append(f"{c}*{mono}")
        return " + ".join(bits)

    def leading(self):
        """(monomial, coefficient) maximal in lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        best = None
        for m in self.terms:
            if best is None or _mono_lex_gt(m, best):
                best = m
        return best, self.terms[best]

    def evaluate(self, point: "EvalPoint") -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for s, e in m:
                v *= point[s] ** e
            total += v
        return total


def poly(v) -> SparsePoly:
    """Coerce a scalar, Symbol, or polynomial into a SparsePoly."""
    if isinstance(v, SparsePoly):
        return v
    if isinstance(v, Symbol):
        return SparsePoly.var(v)
    return SparsePoly.const(v)


def vandermonde(symbols: Iterable[Symbol]) -> SparsePoly:
    """prod_{i<j} (v_i - v_j) over the given ordered symbols."""
    syms = list(symbols)
    if len(set(syms)) != len(syms):
        raise ValueError(f"repeated symbol in {syms}")
    result = SparsePoly.const(1)
    for i in range(len(syms)):
        for j in range(i + 1, len(syms)):
            result = result * (poly(syms[i]) - poly(syms[j]))
    return result


def exact_divide(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    """Quotient p / q when q divides p exactly; otherwise raises with the remainder.

    Multivariate reduction by the single divisor's lex-leading term.  When the
    division is exact the leading term of the running remainder is always
    divisible, so the loop terminates with remainder zero.
    """
    p, q = poly(p), poly(q)
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    quot = SparsePoly()
    rem = p
    qm, qc = q.leading()
    qd = dict(qm)
    while not rem.is_zero():
        rm, rc = rem.leading()
        rd = dict(rm)
        if any(rd.get(s, 0) < e for s, e in qd.items()):
            raise ExactDivisionError("non-exact polynomial division", rem)
        mono = {s: e for s, e in rd.items()}
        for s, e in qd.items():
            mono[s] -= e
        m = tuple(sorted(((s, e) for s, e in mono.items() if e), key=lambda x: x[0].key()))
        term = SparsePoly({m: rc / qc})
        quot = quot + term
        rem = rem - term * q
    return quot


class EvalPoint:
    """Assignment of exact rationals to symbols, tagged with its seed."""

    def __init__(self, assignment: dict, seed: int = 0):
        self.assignment = dict(assignment)
        self.seed = seed

    def __getitem__(self, sym: Symbol) -> Fraction:
        if sym not in self.assignment:
            raise KeyError(f"symbol {sym} not assigned")
        return self.assignment[sym]

    def __contains__(self, sym):
        return sym in self.assignment

    def __repr__(self):
        return f"EvalPoint(seed={self.seed}, {self.assignment})"


def evaluate(p: SparsePoly, pt: EvalPoint) -> Fraction:
    return poly(p).evaluate(pt)


MAX_SAMPLE_RETRIES = 1000


def sample_point(seed: int, symbols, forbidden_zero=()) -> EvalPoint:
    """Deterministic distinct rational values avoiding given polynomial zeros.

    Values have numerator and denominator below 2**31.  Resamples with an
    incremented sub-seed until every polynomial in forbidden_zero is nonzero
    at the point; gives up after MAX_SAMPLE_RETRIES attempts.
    """
    syms = list(symbols)
    for attempt in range(MAX_SAMPLE_RETRIES):
        rng = random.Random(1_000_003 * seed + attempt)
        values: list[Fraction] = []
        used = set()
        for _ in syms:
            while True:
                v = Fraction(rng.randint(-(2**20), 2**20), rng.randint(1, 2**10))
                if v not in used:
                    used.add(v)
                    values.append(v)
                    break
        pt = EvalPoint(dict(zip(syms, values)), seed)
        if all(not poly(f).evaluate(pt) == 0 for f in forbidden_zero):
            return pt
    raise RuntimeError(f"sample_point: retry budget exhausted for seed {seed}")


def sample_rationals(seed: int, count: int, distinct=True) -> list[Fraction]:
    """Plain list of seeded rational values (distinct by default)."""
    rng = random.Random(2_000_003 * seed + 17)
    out: list[Fraction] = []
    used = set()
    while len(out) < count:
        v = Fraction(rng.randint(-(2**16), 2**16), rng.randint(1, 2**8))
        if distinct and v in used:
            continue
        used.add(v)
        out.append(v)
    return out


def det_bareiss(rows):
    """Fraction-free (Bareiss) determinant over an exact integral domain.

    Entries may be Fractions or SparsePolys; divisions performed are exact.
    """
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = Fraction(1)
    for k in range(n - 1):
        if _is_zero_entry(m[k][k]):
            pivot = next((r for r in range(k + 1, n) if not _is_zero_entry(m[r][k])), None)
            if pivot is None:
                return Fraction(0) if isinstance(prev, Fraction) else SparsePoly()
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * m[k][k] - m[i][k] * m[k][j]
                m[i][j] = _exact_entry_div(num, prev)
        prev = m[k][k]
    return m[n - 1][n - 1] if sign == 1 else -m[n - 1][n - 1]


def _is_zero_entry(v):
    return v.is_zero() if isinstance(v, SparsePoly) else v == 0


def _exact_entry_div(num, den):
    if isinstance(num, SparsePoly) or isinstance(den, SparsePoly):
        return exact_divide(poly(num), poly(den))
    return num / den


def det_cofactor(rows):
    """Cofactor-expansion determinant; intended for small symbolic matrices."""
    m = [list(r) for r in rows]
    n = len(m)
    if n > 6:
        raise ValueError("cofactor expansion limited to n <= 6")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return m[0][0]
    total = None
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in m[1:]]
        term = m[0][j] * det_cofactor(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total
