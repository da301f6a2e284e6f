"""Exact rational building blocks.

Sparse multivariate polynomials over Q, projective points, continued
fractions, and a handful of integer-root utilities.  Everything here is
exact: coefficients are `fractions.Fraction`, no floats ever enter.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence


class DomainError(ValueError):
    """A mathematical precondition was violated (degenerate or invalid input)."""


# ---------------------------------------------------------------------------
# rationals
# ---------------------------------------------------------------------------

def rat(value) -> Fraction:
    """Coerce an int, Fraction or string like "3", "-5/7", "1.25" to a Fraction.

    Floats are rejected on purpose: they carry binary rounding noise and this
    library is exact.  Decimal *strings* are fine (they are exact).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse rational from {value!r}") from exc
    raise TypeError(f"expected int, str or Fraction, got {type(value).__name__}")


def rat_str(q: Fraction) -> str:
    """Canonical string: "n" for integers, "n/d" otherwise (lowest terms)."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _int_nth_root(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0, exact integer Newton iteration."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 0
    if k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    x = 1 << (n.bit_length() // k + 1)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


def is_rational_nth_power(q: Fraction, k: int) -> bool:
    """True iff q = r^k for some rational r.

    For even k the sign must be nonnegative; q = 0 counts as a power.
    """
    q = Fraction(q)
    if q == 0:
        return True
    if q < 0:
        if k % 2 == 0:
            return False
        return is_rational_nth_power(-q, k)
    num, den = q.numerator, q.denominator
    rn = _int_nth_root(num, k)
    rd = _int_nth_root(den, k)
    return rn ** k == num and rd ** k == den


def is_rational_square(q: Fraction) -> bool:
    return is_rational_nth_power(q, 2)


# ---------------------------------------------------------------------------
# sparse multivariate polynomials
# ---------------------------------------------------------------------------

class MultiPoly:
    """Sparse multivariate polynomial over Q.

    Terms are stored as a dict mapping exponent tuples to nonzero Fraction
    coefficients.  Instances are immutable by convention: every operation
    returns a new polynomial.  The intended regime is tiny — at most 4
    variables, degree at most 6 — so no effort is spent on asymptotics.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms=None):
        object.__setattr__(self, "vars", tuple(variables))
        n = len(self.vars)
        acc: dict[tuple, Fraction] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for exp, coef in items:
                exp = tuple(int(e) for e in exp)
                if len(exp) != n:
                    raise ValueError("exponent tuple length != number of variables")
                if any(e < 0 for e in exp):
                    raise ValueError("negative exponent")
                c = rat(coef) if not isinstance(coef, Fraction) else coef
                acc[exp] = acc.get(exp, Fraction(0)) + c
        object.__setattr__(self, "terms", {e: c for e, c in acc.items() if c != 0})

    def __setattr__(self, name, value):
        raise AttributeError("MultiPoly is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, variables) -> "MultiPoly":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables, c) -> "MultiPoly":
        v = tuple(variables)
        return cls(v, {(0,) * len(v): rat(c)})

    @classmethod
    def variable(cls, variables, name) -> "MultiPoly":
        v = tuple(variables)
        exp = [0] * len(v)
        exp[v.index(name)] = 1
        return cls(v, {tuple(exp): Fraction(1)})

    @classmethod
    def from_json(cls, obj) -> "MultiPoly":
        """Inverse of to_json: {"vars": [...], "terms": [{"exp": [...], "coef": "n/d"}, ...]}."""
        if not isinstance(obj, dict) or "vars" not in obj or "terms" not in obj:
            raise ValueError("polynomial JSON needs 'vars' and 'terms'")
        return cls(obj["vars"], [(tuple(t["exp"]), rat(t["coef"])) for t in obj["terms"]])

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [
                {"exp": list(e), "coef": rat_str(c)}
                for e, c in sorted(self.terms.items(), reverse=True)
            ],
        }

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for exp, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                (v if e == 1 else f"{v}^{e}")
                for v, e in zip(self.vars, exp) if e
            )
            if not mono:
                piece = rat_str(c)
            elif c == 1:
                piece = mono
            elif c == -1:
                piece = f"-{mono}"
            else:
                piece = f"{rat_str(c)}*{mono}"
            bits.append(piece)
        out = bits[0]
        for piece in bits[1:]:
            out += f" - {piece[1:]}" if piece.startswith("-") else f" + {piece}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self})"

    # -- structure ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; the zero polynomial gets -1."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def coefficient(self, exp) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- arithmetic ----------------------------------------------------------

    def _check_same_vars(self, other: "MultiPoly"):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, (int, str, Fraction)):
            other = MultiPoly.constant(self.vars, other)
        self._check_same_vars(other)
        acc = dict(self.terms)
        for e, c in other.terms.items():
            acc[e] = acc.get(e, Fraction(0)) + c
        return MultiPoly(self.vars, acc)

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, str, Fraction)):
            other = MultiPoly.constant(self.vars, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, str, Fraction)):
            q = rat(other)
            return MultiPoly(self.vars, {e: c * q for e, c in self.terms.items()})
        self._check_same_vars(other)
        acc: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.vars, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = MultiPoly.constant(self.vars, 1)
        for _ in range(n):
            out = out * self
        return out

    # -- evaluation and calculus --------------------------------------------

    def evaluate(self, values) -> Fraction:
        vals = [rat(v) for v in values]
        if len(vals) != len(self.vars):
            raise ValueError("wrong number of values")
        total = Fraction(0)
        for exp, c in self.terms.items():
            term = c
            for v, e in zip(vals, exp):
                if e:
                    term *= v ** e
            total += term
        return total

    def partial(self, var) -> "MultiPoly":
        """Partial derivative with respect to a variable (by name or index)."""
        k = var if isinstance(var, int) else self.vars.index(var)
        acc = {}
        for exp, c in self.terms.items():
            if exp[k] == 0:
                continue
            e = list(exp)
            e[k] -= 1
            acc[tuple(e)] = c * exp[k]
        return MultiPoly(self.vars, acc)

    def gradient_at(self, point) -> tuple:
        return tuple(self.partial(k).evaluate(point) for k in range(len(self.vars)))

    # -- substitution --------------------------------------------------------

    def substitute_linear(self, var, replacement: "MultiPoly") -> "MultiPoly":
        """Replace one variable by a polynomial of degree <= 1 (same variable list)."""
        self._check_same_vars(replacement)
        if replacement.degree() > 1:
            raise ValueError("replacement must have degree <= 1")
        k = var if isinstance(var, int) else self.vars.index(var)
        out = MultiPoly.zero(self.vars)
        for exp, c in self.terms.items():
            rest = list(exp)
            rest[k] = 0
            term = MultiPoly(self.vars, {tuple(rest): c})
            out = out + term * replacement ** exp[k]
        return out

    def substitute_matrix(self, matrix) -> "MultiPoly":
        """Linear change of coordinates: returns g with g(w) = f(M w).

        `matrix` is a square list-of-lists of rationals, one row per old
        variable; the new polynomial lives in the same variable names.
        """
        n = len(self.vars)
        rows = [[rat(x) for x in row] for row in matrix]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ValueError("matrix must be square of size len(vars)")
        repl = [
            MultiPoly(self.vars, {tuple(1 if j == jj else 0 for jj in range(n)): rows[i][j]
                                  for j in range(n) if rows[i][j] != 0})
            for i in range(n)
        ]
        out = MultiPoly.zero(self.vars)
        for exp, c in self.terms.items():
            term = MultiPoly.constant(self.vars, c)
            for i, e in enumerate(exp):
                if e:
                    term = term * repl[i] ** e
            out = out + term
        return out

    def restrict_to_line(self, p1, p2) -> "MultiPoly":
        """Restrict to the projective line through p1 and p2.

        Returns the binary form f(s*p1 + t*p2) in variables (s, t).  The two
        points must be projectively distinct.
        """
        a = _point_coords(p1, len(self.vars))
        b = _point_coords(p2, len(self.vars))
        if _proportional(a, b):
            raise DomainError("restrict_to_line needs two distinct projective points")
        st = ("s", "t")
        out = MultiPoly.zero(st)
        s = MultiPoly.variable(st, "s")
        t = MultiPoly.variable(st, "t")
        lines = [s * ai + t * bi for ai, bi in zip(a, b)]
        for exp, c in self.terms.items():
            term = MultiPoly.constant(st, c)
            for lin, e in zip(lines, exp):
                if e:
                    term = term * lin ** e
            out = out + term
        return out

    # -- exact division by a linear form --------------------------------------

    def divide_by_linear(self, linear: "MultiPoly") -> "MultiPoly":
        """Exact quotient self / linear; raises ValueError if not divisible.

        The quotient is verified by multiplying back, so a successful return
        is a proof of divisibility.
        """
        self._check_same_vars(linear)
        if linear.is_zero() or linear.degree() != 1:
            raise ValueError("divisor must have degree exactly 1")
        # plain multivariate long division in lex order; the divisor is a
        # single linear form so the loop is tiny
        lead_exp = max(linear.terms)
        lead_coef = linear.terms[lead_exp]
        rem = self
        quo = MultiPoly.zero(self.vars)
        while not rem.is_zero():
            exp = max(rem.terms)
            if all(a >= b for a, b in zip(exp, lead_exp)):
                qexp = tuple(a - b for a, b in zip(exp, lead_exp))
                qc = rem.terms[exp] / lead_coef
                qterm = MultiPoly(self.vars, {qexp: qc})
                quo = quo + qterm
                rem = rem - qterm * linear
            else:
                raise ValueError("linear form does not divide the polynomial")
        if quo * linear != self:
            raise ValueError("division check failed")  # pragma: no cover
        return quo


def _point_coords(p, n: int) -> tuple:
    coords = p.coords if isinstance(p, ProjPoint) else tuple(rat(c) for c in p)
    if len(coords) != n:
        raise ValueError("point has wrong dimension")
    return coords


def _proportional(a, b) -> bool:
    """True iff the nonzero vectors a, b are parallel."""
    n = len(a)
    for i in range(n):
        for j in range(i + 1, n):
            if a[i] * b[j] != a[j] * b[i]:
                return False
    return True


# ---------------------------------------------------------------------------
# projective points
# ---------------------------------------------------------------------------

class ProjPoint:
    """A point of projective space with exact rational coordinates.

    Equality and hashing are projective (up to a nonzero scalar); the
    canonical representative scales the first nonzero coordinate to 1.
    """

    __slots__ = ("coords",)

    def __init__(self, coords):
        cs = tuple(rat(c) for c in coords)
        if not cs or all(c == 0 for c in cs):
            raise ValueError("projective point needs a nonzero coordinate")
        object.__setattr__(self, "coords", cs)

    def __setattr__(self, name, value):
        raise AttributeError("ProjPoint is immutable")

    def canonical(self) -> tuple:
        """Coordinates scaled so the first nonzero one equals 1."""
        for c in self.coords:
            if c != 0:
                return tuple(x / c for x in self.coords)
        raise AssertionError("unreachable")  # pragma: no cover

    def primitive(self) -> tuple:
        """Integer coordinates with content 1 and first nonzero entry > 0."""
        dens = [c.denominator for c in self.coords]
        lcm = 1
        for d in dens:
            lcm = lcm * d // math.gcd(lcm, d)
        ints = [int(c * lcm) for c in self.coords]
        g = 0
        for v in ints:
            g = math.gcd(g, abs(v))
        ints = [v // g for v in ints]
        for v in ints:
            if v:
                if v < 0:
                    ints = [-w for w in ints]
                break
        return tuple(ints)

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return len(self.coords) == len(other.coords) and self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __repr__(self):
        return "[" + " : ".join(rat_str(c) for c in self.coords) + "]"

    def to_json(self) -> list:
        return [rat_str(c) for c in self.canonical()]


def cross_product(a, b) -> tuple:
    """Cross product of two rational 3-vectors (line through two points, etc.)."""
    a = tuple(rat(x) for x in a)
    b = tuple(rat(x) for x in b)
    if len(a) != 3 or len(b) != 3:
        raise ValueError("cross product needs 3-vectors")
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


# ---------------------------------------------------------------------------
# continued fractions
# ---------------------------------------------------------------------------

class ContinuedFraction:
    """Finite continued fraction [a0; a1, a2, ...] of a rational number.

    `of_rational` produces the canonical Euclidean expansion, whose *full*
    form never ends in a trailing quotient 1 (the [..., a-1, 1] variant is
    not used); a truncated expansion is simply a prefix of the canonical one.
    Convergents come from the standard recurrence h_n = a_n h_{n-1} + h_{n-2}.
    """

    def __init__(self, partial_quotients: Iterable[int]):
        pq = [int(a) for a in partial_quotients]
        if not pq:
            raise ValueError("need at least one partial quotient")
        if any(a < 1 for a in pq[1:]):
            raise ValueError("partial quotients after the first must be >= 1")
        self.partial_quotients = pq
        h_prev, h_pprev = 1, 0
        k_prev, k_pprev = 0, 1
        convs = []
        for a in pq:
            h = a * h_prev + h_pprev
            k = a * k_prev + k_pprev
            convs.append(Fraction(h, k))
            h_pprev, h_prev = h_prev, h
            k_pprev, k_prev = k_prev, k
        self.convergents = convs

    @classmethod
    def of_rational(cls, value, max_quotients: int | None = None) -> "ContinuedFraction":
        """Canonical expansion of a rational, optionally truncated."""
        x = rat(value) if not isinstance(value, Fraction) else value
        pq = []
        while True:
            a = x.numerator // x.denominator  # floor
            pq.append(a)
            frac = x - a
            if frac == 0 or (max_quotients is not None and len(pq) >= max_quotients):
                break
            x = 1 / frac
        return cls(pq)

    @property
    def value(self) -> Fraction:
        return self.convergents[-1]


def contfrac_approx(value_str: str, n_convergents: int) -> ContinuedFraction:
    """Approximate a decimal string by the first n convergents of its expansion.

    The string is parsed exactly (a finite decimal is a rational); if the full
    expansion has fewer than n partial quotients the whole expansion is
    returned.  n_convergents must be >= 1.
    """
    if n_convergents < 1:
        raise DomainError("n_convergents must be >= 1")
    try:
        x = Fraction(str(value_str).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse decimal value {value_str!r}") from exc
    return ContinuedFraction.of_rational(x, max_quotients=n_convergents)
