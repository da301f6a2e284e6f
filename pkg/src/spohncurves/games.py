"""2x2 bimatrix games: payoffs, equilibria, and dependency-equilibrium tools.

Coordinates follow one convention throughout: a joint distribution is
(p11, p12, p21, p22) where p_ij is the probability that player 1 plays row i
and player 2 plays column j.  Conditional expected payoffs are written
E_k^(i): the expected payoff of player i given that *player i* plays their
k-th strategy.

Everything is exact rational arithmetic except two explicitly numeric
reports: `pareto_sweep` and the witness-sequence evaluations, which combine
exact sequence generation with float summaries (tagged "numeric" in JSON).
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import NamedTuple

from .polynomials import DomainError, rat, rat_str


# ---------------------------------------------------------------------------
# payoff tables and distributions
# ---------------------------------------------------------------------------

class PayoffTables:
    """A pair of 2x2 rational payoff tables (A for player 1, B for player 2)."""

    __slots__ = ("A", "B")

    def __init__(self, A, B):
        self.A = tuple(tuple(rat(x) for x in row) for row in A)
        self.B = tuple(tuple(rat(x) for x in row) for row in B)
        for M in (self.A, self.B):
            if len(M) != 2 or any(len(r) != 2 for r in M):
                raise ValueError("payoff tables must be 2x2")

    # entry accessors named like the math (1-based)
    @property
    def a11(self): return self.A[0][0]
    @property
    def a12(self): return self.A[0][1]
    @property
    def a21(self): return self.A[1][0]
    @property
    def a22(self): return self.A[1][1]
    @property
    def b11(self): return self.B[0][0]
    @property
    def b12(self): return self.B[0][1]
    @property
    def b21(self): return self.B[1][0]
    @property
    def b22(self): return self.B[1][1]

    @classmethod
    def from_json(cls, data) -> "PayoffTables":
        """{"A": [["2","0"],["3","1"]], "B": ...} (entries int or "n/d" strings)."""
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict) or "A" not in data or "B" not in data:
            raise ValueError("game JSON needs 'A' and 'B'")
        return cls(data["A"], data["B"])

    @classmethod
    def from_bimatrix(cls, text: str) -> "PayoffTables":
        """Parse "a11,b11 a12,b12; a21,b21 a22,b22" (rows split by ';')."""
        rows = [r.strip() for r in text.strip().split(";")]
        if len(rows) != 2:
            raise ValueError("bimatrix text needs exactly 2 rows split by ';'")
        A, B = [], []
        for r in rows:
            cells = r.split()
            if len(cells) != 2:
                raise ValueError("each bimatrix row needs exactly 2 cells")
            arow, brow = [], []
            for cell in cells:
                parts = cell.split(",")
                if len(parts) != 2:
                    raise ValueError(f"bimatrix cell {cell!r} must be 'a,b'")
                arow.append(rat(parts[0]))
                brow.append(rat(parts[1]))
            A.append(arow)
            B.append(brow)
        return cls(A, B)

    def to_json(self) -> dict:
        return {
            "A": [[rat_str(x) for x in row] for row in self.A],
            "B": [[rat_str(x) for x in row] for row in self.B],
        }

    def transpose_players(self) -> "PayoffTables":
        """Swap the two players (new A = B^T, new B = A^T)."""
        t = lambda M: ((M[0][0], M[1][0]), (M[0][1], M[1][1]))
        return PayoffTables(t(self.B), t(self.A))

    def swap_rows(self) -> "PayoffTables":
        return PayoffTables((self.A[1], self.A[0]), (self.B[1], self.B[0]))

    def swap_cols(self) -> "PayoffTables":
        f = lambda M: ((M[0][1], M[0][0]), (M[1][1], M[1][0]))
        return PayoffTables(f(self.A), f(self.B))

    def __eq__(self, other):
        if not isinstance(other, PayoffTables):
            return NotImplemented
        return self.A == other.A and self.B == other.B

    def __repr__(self):
        return f"PayoffTables(A={self.A}, B={self.B})"


class JointDistribution:
    """A point (p11, p12, p21, p22) of the closed probability simplex."""

    __slots__ = ("p11", "p12", "p21", "p22")

    def __init__(self, p11, p12, p21, p22):
        vals = [rat(p) for p in (p11, p12, p21, p22)]
        if any(v < 0 for v in vals):
            raise ValueError("probabilities must be nonnegative")
        if sum(vals) != 1:
            raise ValueError("probabilities must sum to exactly 1")
        self.p11, self.p12, self.p21, self.p22 = vals

    @classmethod
    def uniform(cls) -> "JointDistribution":
        q = Fraction(1, 4)
        return cls(q, q, q, q)

    def as_tuple(self) -> tuple:
        return (self.p11, self.p12, self.p21, self.p22)

    # marginals: p1_, p2_ are player 1's row marginals; p_1, p_2 player 2's
    @property
    def row1(self): return self.p11 + self.p12
    @property
    def row2(self): return self.p21 + self.p22
    @property
    def col1(self): return self.p11 + self.p21
    @property
    def col2(self): return self.p12 + self.p22

    def marginals(self) -> tuple:
        return (self.row1, self.row2, self.col1, self.col2)

    def totally_mixed(self) -> bool:
        return all(m != 0 for m in self.marginals())

    def to_json(self) -> list:
        return [rat_str(p) for p in self.as_tuple()]

    def __repr__(self):
        return "(" + ", ".join(rat_str(p) for p in self.as_tuple()) + ")"


class MixedProfile(NamedTuple):
    """Independent mixed strategies: q = P(row 1), r = P(col 1)."""

    q: Fraction
    r: Fraction

    def segre(self) -> JointDistribution:
        """The product distribution (q r, q(1-r), (1-q) r, (1-q)(1-r))."""
        q, r = self.q, self.r
        return JointDistribution(q * r, q * (1 - r), (1 - q) * r, (1 - q) * (1 - r))

    def to_json(self) -> dict:
        return {"q": rat_str(self.q), "r": rat_str(self.r)}


# ---------------------------------------------------------------------------
# payoffs
# ---------------------------------------------------------------------------

class ConditionalPayoffs(NamedTuple):
    """The four conditional expected payoffs E_k^(i).

    e11 = E_1^(1): player 1's expected payoff given they play row 1, etc.
    Field names are e<strategy><player>.
    """

    e11: Fraction
    e21: Fraction
    e12: Fraction
    e22: Fraction


def conditional_payoffs(game: PayoffTables, p: JointDistribution) -> ConditionalPayoffs:
    """E_1^(1) = (a11 p11 + a12 p12)/(p11+p12) and its three siblings.

    Raises DomainError naming the offending marginal if one vanishes.
    """
    names = ("p11+p12", "p21+p22", "p11+p21", "p12+p22")
    labels = ("E_1^(1)", "E_2^(1)", "E_1^(2)", "E_2^(2)")
    for m, n, l in zip(p.marginals(), names, labels):
        if m == 0:
            raise DomainError(f"{l} undefined: marginal {n} = 0")
    return ConditionalPayoffs(
        (game.a11 * p.p11 + game.a12 * p.p12) / p.row1,
        (game.a21 * p.p21 + game.a22 * p.p22) / p.row2,
        (game.b11 * p.p11 + game.b21 * p.p21) / p.col1,
        (game.b12 * p.p12 + game.b22 * p.p22) / p.col2,
    )


def expected_payoffs(game: PayoffTables, p: JointDistribution) -> tuple:
    """(pi1, pi2) = (sum a_ij p_ij, sum b_ij p_ij), exact."""
    pi1 = (game.a11 * p.p11 + game.a12 * p.p12 + game.a21 * p.p21 + game.a22 * p.p22)
    pi2 = (game.b11 * p.p11 + game.b12 * p.p12 + game.b21 * p.p21 + game.b22 * p.p22)
    return pi1, pi2


# ---------------------------------------------------------------------------
# Nash equilibria
# ---------------------------------------------------------------------------

def pure_nash(game: PayoffTables) -> list:
    """All pure Nash equilibria as 1-based (row, col) pairs, sorted.

    Best responses are weak; a game with both tables constant returns all
    four cells.
    """
    out = []
    for i in (0, 1):
        for j in (0, 1):
            if game.A[i][j] >= game.A[1 - i][j] and game.B[i][j] >= game.B[i][1 - j]:
                out.append((i + 1, j + 1))
    return out


def totally_mixed_nash(game: PayoffTables):
    """The interior Nash equilibrium, if any.

    Returns a MixedProfile, or "none" (indifference point exists but lies
    outside the open square), or "degenerate" (an indifference denominator
    vanishes, so no isolated interior equilibrium exists).
    """
    den_q = game.b11 - game.b12 - game.b21 + game.b22
    den_r = game.a11 - game.a12 - game.a21 + game.a22
    if den_q == 0 or den_r == 0:
        return "degenerate"
    q = (game.b22 - game.b21) / den_q
    r = (game.a22 - game.a12) / den_r
    if not (0 < q < 1 and 0 < r < 1):
        return "none"
    return MixedProfile(q, r)


def is_nash(game: PayoffTables, ne: MixedProfile) -> bool:
    """Exact best-response check for a mixed profile (q, r)."""
    q, r = rat(ne.q), rat(ne.r)
    if not (0 <= q <= 1 and 0 <= r <= 1):
        return False
    row1 = game.a11 * r + game.a12 * (1 - r)
    row2 = game.a21 * r + game.a22 * (1 - r)
    col1 = game.b11 * q + game.b21 * (1 - q)
    col2 = game.b12 * q + game.b22 * (1 - q)
    if 0 < q < 1 and row1 != row2:
        return False
    if q == 1 and row1 < row2:
        return False
    if q == 0 and row2 < row1:
        return False
    if 0 < r < 1 and col1 != col2:
        return False
    if r == 1 and col1 < col2:
        return False
    if r == 0 and col2 < col1:
        return False
    return True


# ---------------------------------------------------------------------------
# the 4x4 payoff-equalization matrix ("Konstanz matrix")
# ---------------------------------------------------------------------------

class KonstanzMatrix:
    """K(pi1, pi2): kernel vectors are joint distributions whose conditional
    payoffs all equal the prescribed values (pi1 for player 1, pi2 for 2).

    Rows, acting on (p11, p12, p21, p22):
        (pi1-a11, pi1-a12, 0, 0)
        (0, 0, pi1-a21, pi1-a22)
        (pi2-b11, 0, pi2-b21, 0)
        (0, pi2-b12, 0, pi2-b22)
    """

    __slots__ = ("pi1", "pi2", "rows")

    def __init__(self, game: PayoffTables, pi1, pi2):
        p1, p2 = rat(pi1), rat(pi2)
        self.pi1, self.pi2 = p1, p2
        z = Fraction(0)
        self.rows = (
            (p1 - game.a11, p1 - game.a12, z, z),
            (z, z, p1 - game.a21, p1 - game.a22),
            (p2 - game.b11, z, p2 - game.b21, z),
            (z, p2 - game.b12, z, p2 - game.b22),
        )

    def det(self) -> Fraction:
        return _det(self.rows)

    def apply(self, vec) -> tuple:
        v = [rat(x) for x in vec]
        return tuple(sum(r[j] * v[j] for j in range(4)) for r in self.rows)

    def to_json(self) -> dict:
        return {
            "pi1": rat_str(self.pi1),
            "pi2": rat_str(self.pi2),
            "matrix": [[rat_str(x) for x in row] for row in self.rows],
            "det": rat_str(self.det()),
        }


def _det(rows) -> Fraction:
    """Exact determinant by Laplace expansion (tiny matrices only)."""
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [tuple(r[k] for k in range(n) if k != j) for r in rows[1:]]
        sign = -1 if j % 2 else 1
        total += sign * rows[0][j] * _det(minor)
    return total


def konstanz_matrix(game: PayoffTables, pi1, pi2) -> KonstanzMatrix:
    return KonstanzMatrix(game, pi1, pi2)


# ---------------------------------------------------------------------------
# dependency-equilibrium membership
# ---------------------------------------------------------------------------

def spohn_determinants(game: PayoffTables, p) -> tuple:
    """(det M1, det M2) at a 4-tuple of rationals (not necessarily summing 1).

    det M1 = (p11+p12)(a21 p21 + a22 p22) - (a11 p11 + a12 p12)(p21+p22)
    det M2 = (p11+p21)(b12 p12 + b22 p22) - (b11 p11 + b21 p21)(p12+p22)

    These vanish simultaneously exactly on the Spohn variety of the game;
    the geometry module builds the same two quadrics as polynomials, which
    tests compare against this direct route.
    """
    p11, p12, p21, p22 = (rat(x) for x in p)
    d1 = (p11 + p12) * (game.a21 * p21 + game.a22 * p22) \
        - (game.a11 * p11 + game.a12 * p12) * (p21 + p22)
    d2 = (p11 + p21) * (game.b12 * p12 + game.b22 * p22) \
        - (game.b11 * p11 + game.b21 * p21) * (p12 + p22)
    return d1, d2


def de_membership(game: PayoffTables, p: JointDistribution) -> str:
    """Classify a simplex point: "DE", "notDE", or "boundary-undecided".

    Totally mixed points are dependency equilibria iff both Spohn
    determinants vanish (exact test).  Points with a zero marginal cannot be
    decided by the pointwise algebraic test (DE-ness there is a statement
    about limits of interior sequences), so they are reported as undecided.
    """
    if not p.totally_mixed():
        return "boundary-undecided"
    d1, d2 = spohn_determinants(game, p.as_tuple())
    return "DE" if d1 == 0 and d2 == 0 else "notDE"


# ---------------------------------------------------------------------------
# witness sequences for Nash equilibria
# ---------------------------------------------------------------------------

# The sequences below converge to a boundary Nash equilibrium through the
# open simplex and realize the defining limit inequalities of dependency
# equilibria.  They are stated for the normalized position "player 1 plays
# their second strategy"; arbitrary equilibria are moved there by relabeling
# strategies/players and the sequence is mapped back through the inverse
# relabeling.

_IDENT = (0, 1, 2, 3)            # cell order (11, 12, 21, 22)
_SWAP_ROWS = (2, 3, 0, 1)        # 11<->21, 12<->22
_SWAP_COLS = (1, 0, 3, 2)        # 11<->12, 21<->22
_SWAP_PLAYERS = (0, 2, 1, 3)     # transpose: 12<->21


def _compose(p, q):
    """Permutation composition: apply q after p (both act on cell indices)."""
    return tuple(q[p[i]] for i in range(4))


def _invert(p):
    inv = [0] * 4
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


class WitnessLadderRow(NamedTuple):
    r: int
    point: tuple            # exact Fractions
    payoffs: ConditionalPayoffs
    residuals: tuple        # float inequality slacks, one per required inequality


class WitnessReport:
    """Outcome of a witness-sequence construction for a Nash equilibrium.

    `sequence(r)` returns the exact interior point for integer r >= threshold.
    The ladder evaluates r = 10^3..10^6; `ok` says whether every required
    limit inequality holds within `tol` at the largest r.
    """

    def __init__(self, kind, case, formula, threshold, sequence, limit,
                 played, ladder, inequalities, ok, tol, relabeling=""):
        self.kind = kind                  # "pure" | "semi-mixed" | "totally-mixed" | "cooperation"
        self.case = case                  # human-readable case selector
        self.formula = formula            # sequence formula in normalized coordinates
        self.threshold = threshold        # minimal integer r with an interior point
        self.sequence = sequence          # callable r -> exact 4-tuple
        self.limit = limit                # exact limit point (4-tuple)
        self.played = played              # which E_k^(i) must dominate, e.g. ["e21>=e11"]
        self.ladder = ladder              # list[WitnessLadderRow]
        self.inequalities = inequalities  # list of inequality labels
        self.ok = ok
        self.tol = tol
        self.relabeling = relabeling

    def to_json(self) -> dict:
        out = {
            "numeric": True,
            "kind": self.kind,
            "case": self.case,
            "formula": self.formula,
            "relabeling": self.relabeling,
            "threshold": self.threshold,
            "limit": [rat_str(x) for x in self.limit],
            "inequalities": list(self.inequalities),
            "tolerance": self.tol,
            "ladder": [
                {
                    "r": row.r,
                    "point": [rat_str(x) for x in row.point],
                    "payoffs": {
                        "E_1^(1)": float(row.payoffs.e11),
                        "E_2^(1)": float(row.payoffs.e21),
                        "E_1^(2)": float(row.payoffs.e12),
                        "E_2^(2)": float(row.payoffs.e22),
                    },
                    "residuals": list(row.residuals),
                }
                for row in self.ladder
            ],
            "ok": self.ok,
        }
        if hasattr(self, "lam"):
            out["lambda"] = rat_str(self.lam)
            out["payoff_limits"] = [rat_str(x) for x in self.payoff_limits]
        return out


_LADDER = (10 ** 3, 10 ** 4, 10 ** 5, 10 ** 6)
_WITNESS_TOL = 1e-6


def _pure_corner_sequence(game: PayoffTables):
    """Sequence template for the normalized pure equilibrium (row 2, col 2).

    Requires a12 <= a22 and b21 <= b22 (the best-response conditions).
    Returns (case label, formula string, r -> exact tuple).
    """
    F = Fraction
    if game.a11 <= game.a12 and game.b11 <= game.b21:
        label = "a11<=a12 and b11<=b21"
        formula = "(1/r, 1/r^2, 1/r^2, 1 - 1/r - 2/r^2)"
        seq = lambda r: (F(1, r), F(1, r ** 2), F(1, r ** 2),
                         1 - F(1, r) - 2 * F(1, r ** 2))
    elif game.a11 >= game.a12 and game.b11 >= game.b21:
        label = "a11>=a12 and b11>=b21"
        formula = "(1/r^2, 1/r, 1/r, 1 - 2/r - 1/r^2)"
        seq = lambda r: (F(1, r ** 2), F(1, r), F(1, r),
                         1 - 2 * F(1, r) - F(1, r ** 2))
    elif game.a11 <= game.a12 and game.b11 >= game.b21:
        label = "a11<=a12 and b11>=b21"
        formula = "(1/r^2, 1/r^3, 1/r, 1 - 1/r - 1/r^2 - 1/r^3)"
        seq = lambda r: (F(1, r ** 2), F(1, r ** 3), F(1, r),
                         1 - F(1, r) - F(1, r ** 2) - F(1, r ** 3))
    else:
        label = "a11>=a12 and b11<=b21"
        formula = "(1/r^2, 1/r, 1/r^3, 1 - 1/r - 1/r^2 - 1/r^3)"
        seq = lambda r: (F(1, r ** 2), F(1, r), F(1, r ** 3),
                         1 - F(1, r) - F(1, r ** 2) - F(1, r ** 3))
    return label, formula, seq


def _semi_mixed_sequence(game: PayoffTables, r_mix: Fraction):
    """Sequence template for the normalized semi-mixed equilibrium
    ((0,1), (r_mix, 1-r_mix)); needs b21 == b22 (player 2 indifference)."""
    if game.b21 != game.b22:
        raise DomainError("semi-mixed witness needs b21 == b22 after normalization")
    F = Fraction
    p1, p2 = r_mix, 1 - r_mix
    if game.a11 <= game.a12:
        label = "a11<=a12"
        formula = "(1/r, 1/r^2, p1 - 1/r, p2 - 1/r^2)"
        seq = lambda r: (F(1, r), F(1, r ** 2), p1 - F(1, r), p2 - F(1, r ** 2))
    else:
        label = "a11>=a12"
        formula = "(1/r^2, 1/r, p1 - 1/r, p2 - 1/r^2)"
        seq = lambda r: (F(1, r ** 2), F(1, r), p1 - F(1, r), p2 - F(1, r ** 2))
    return label, formula, seq


def _interior_threshold(seq, start=2, cap=10 ** 7) -> int:
    r = start
    while r <= cap:
        if all(x > 0 for x in seq(r)):
            return r
        r += 1
    raise DomainError("no interior point found along the sequence")  # pragma: no cover


def _evaluate_ladder(game: PayoffTables, seq, limit_point, tol=_WITNESS_TOL):
    """Evaluate the four conditional payoffs along r = 10^3..10^6 and check
    the DE inequalities for strategies played in the limit."""
    lim = JointDistribution(*limit_point)
    checks = []  # (label, f: payoffs -> float slack)
    if lim.row1 != 0:
        checks.append(("E_1^(1) >= E_2^(1)", lambda e: float(e.e11 - e.e21)))
    if lim.row2 != 0:
        checks.append(("E_2^(1) >= E_1^(1)", lambda e: float(e.e21 - e.e11)))
    if lim.col1 != 0:
        checks.append(("E_1^(2) >= E_2^(2)", lambda e: float(e.e12 - e.e22)))
    if lim.col2 != 0:
        checks.append(("E_2^(2) >= E_1^(2)", lambda e: float(e.e22 - e.e12)))
    rows = []
    for r in _LADDER:
        pt = seq(r)
        dist = JointDistribution(*pt)
        if sum(pt) != 1:
            raise AssertionError("witness sequence left the simplex")  # pragma: no cover
        pay = conditional_payoffs(game, dist)
        rows.append(WitnessLadderRow(r, pt, pay, tuple(f(pay) for _, f in checks)))
    ok = all(res >= -tol for res in rows[-1].residuals)
    return rows, [label for label, _ in checks], ok


def ne_witness_sequence(game: PayoffTables, ne: MixedProfile,
                        tol=_WITNESS_TOL) -> WitnessReport:
    """Construct an interior sequence witnessing that a Nash equilibrium is a
    dependency equilibrium, and evaluate it on the ladder r = 10^3..10^6.

    `ne` must be a Nash equilibrium of the game (checked exactly); totally
    mixed equilibria get the constant sequence.  Boundary equilibria are
    relabeled to the normalized position (player 1 pure on row 2, and column
    2 for pure equilibria) and the sequence for the matching
    payoff-comparison case is used, mapped back through the inverse
    relabeling.
    """
    ne = MixedProfile(rat(ne.q), rat(ne.r))
    if not is_nash(game, ne):
        raise DomainError(f"profile (q={rat_str(ne.q)}, r={rat_str(ne.r)}) "
                          "is not a Nash equilibrium of this game")
    q, r_ = ne.q, ne.r

    if 0 < q < 1 and 0 < r_ < 1:
        limit = ne.segre().as_tuple()
        seq = lambda r: limit
        ladder, labels, ok = _evaluate_ladder(game, seq, limit, tol)
        return WitnessReport("totally-mixed", "interior equilibrium",
                             "constant sequence p(r) = p", 1, seq, limit,
                             labels, ladder, labels, ok, tol)

    # normalize: player 1 should be the pure player, playing row 2
    work, wq, wr = game, q, r_
    perm = _IDENT
    steps = []
    if 0 < wq < 1:  # player 1 mixes, so player 2 must be pure: swap players
        work, wq, wr = work.transpose_players(), wr, wq
        perm = _compose(perm, _SWAP_PLAYERS)
        steps.append("players swapped")
    if wq == 1:
        work, wq = work.swap_rows(), Fraction(0)
        perm = _compose(perm, _SWAP_ROWS)
        steps.append("rows swapped")

    if 0 < wr < 1:
        kind = "semi-mixed"
        label, formula, wseq = _semi_mixed_sequence(work, wr)
        wlimit = (Fraction(0), Fraction(0), wr, 1 - wr)
    else:
        if wr == 1:
            work, wr = work.swap_cols(), Fraction(0)
            perm = _compose(perm, _SWAP_COLS)
            steps.append("columns swapped")
        kind = "pure"
        label, formula, wseq = _pure_corner_sequence(work)
        wlimit = (Fraction(0), Fraction(0), Fraction(0), Fraction(1))

    # map back: original cell i carries the mass of normalized cell perm[i]
    seq = lambda r: tuple(wseq(r)[perm[i]] for i in range(4))
    limit = tuple(wlimit[perm[i]] for i in range(4))
    threshold = _interior_threshold(seq)
    ladder, labels, ok = _evaluate_ladder(game, seq, limit, tol)
    return WitnessReport(kind, label, formula, threshold, seq, limit,
                         labels, ladder, labels, ok, tol,
                         relabeling=", ".join(steps) if steps else "none")


def cooperation_witness(game: PayoffTables, tol=_WITNESS_TOL) -> WitnessReport:
    """Witness sequence showing mutual cooperation is a dependency
    equilibrium of a symmetric prisoner's-dilemma-type game.

    Requires B = A^T and a21 > a11 > a22 > a12 (each violation is named).
    With lam = (a11 - a22)/(a21 - a22) in (0, 1), the sequence

        p(r) = (1 - 1/r - 1/r^2,  1/r^2,  lam/r,  (1-lam)/r)

    converges to (1,0,0,0) with conditional payoffs tending to
    (a11, a11, a11, a22); the off-diagonal mass is split so that
    E_2^(1) = lam a21 + (1-lam) a22 = a11 exactly for every r.
    """
    bt = (
        (game.A[0][0], game.A[1][0]),
        (game.A[0][1], game.A[1][1]),
    )
    if game.B != bt:
        raise DomainError("cooperation witness requires B = transpose(A)")
    checks = (
        ("a21 > a11", game.a21 > game.a11),
        ("a11 > a22", game.a11 > game.a22),
        ("a22 > a12", game.a22 > game.a12),
    )
    for label, holds in checks:
        if not holds:
            raise DomainError(f"cooperation witness requires {label}")

    lam = (game.a11 - game.a22) / (game.a21 - game.a22)
    F = Fraction
    seq = lambda r: (1 - F(1, r) - F(1, r ** 2), F(1, r ** 2),
                     lam / r, (1 - lam) / r)
    limit = (Fraction(1), Fraction(0), Fraction(0), Fraction(0))
    threshold = _interior_threshold(seq)
    ladder, labels, ok = _evaluate_ladder(game, seq, limit, tol)
    targets = (game.a11, game.a11, game.a11, game.a22)
    report = WitnessReport("cooperation", f"lambda = {rat_str(lam)}",
                           "(1 - 1/r - 1/r^2, 1/r^2, lam/r, (1-lam)/r)",
                           threshold, seq, limit, labels, ladder, labels, ok, tol)
    report.lam = lam
    report.payoff_limits = targets
    return report


# ---------------------------------------------------------------------------
# Pareto sweep along the Spohn curve (numeric)
# ---------------------------------------------------------------------------

def sample_curve_points(game: PayoffTables, count: int, seed: int = 0,
                        simplex_only: bool = True) -> list:
    """Sample float points on the Spohn curve of a generic game.

    Draws `count` random lines through the (p11, p12, p21) face coordinates,
    intersects each with the plane cubic of the game (the image of the curve
    under dropping p22), lifts back to p22 through the first determinant,
    normalizes the sum to 1 and polishes with Gauss-Newton until both
    determinant residuals are ~1e-14.  Returns 4-lists of floats; with
    simplex_only, points must be strictly inside the simplex.
    """
    import numpy as np
    from . import geometry

    cub = geometry.build_cubic(game)
    cvec = [float(c) for c in cub.c]
    a = [[float(x) for x in row] for row in game.A]
    b = [[float(x) for x in row] for row in game.B]
    exps = [(2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 0, 2), (0, 2, 1), (0, 1, 2), (1, 1, 1)]

    def l1_m1(x, y, z):
        l1 = (a[1][1] - a[0][0]) * x + (a[1][1] - a[0][1]) * y
        m1 = z * ((a[1][0] - a[0][0]) * x + (a[1][0] - a[0][1]) * y)
        return l1, m1

    def residuals(p):
        d1 = (p[0] + p[1]) * (a[1][0] * p[2] + a[1][1] * p[3]) \
            - (a[0][0] * p[0] + a[0][1] * p[1]) * (p[2] + p[3])
        d2 = (p[0] + p[2]) * (b[0][1] * p[1] + b[1][1] * p[3]) \
            - (b[0][0] * p[0] + b[1][0] * p[2]) * (p[1] + p[3])
        return np.array([d1, d2, p.sum() - 1.0])

    def jacobian(p):
        eps = 1e-7
        J = np.zeros((3, 4))
        base = residuals(p)
        for k in range(4):
            q = p.copy()
            q[k] += eps
            J[:, k] = (residuals(q) - base) / eps
        return J

    rng = np.random.default_rng(seed)
    found = []
    seen = set()
    for _ in range(count):
        u = rng.random(3) + 1e-3
        v = rng.random(3) + 1e-3
        u /= u.sum()
        v /= v.sum()
        # restrict the cubic to the affine line (1-s) u + s v
        coeffs = np.zeros(4)
        du = v - u
        for (e, c) in zip(exps, cvec):
            if c == 0.0:
                continue
            poly = np.array([1.0])
            for k in range(3):
                for _ in range(e[k]):
                    poly = np.convolve(poly, np.array([du[k], u[k]]))
            coeffs[4 - len(poly):] += c * poly
        if not np.any(np.abs(coeffs) > 1e-14):
            continue
        lead = np.argmax(np.abs(coeffs) > 1e-14)
        roots = np.roots(coeffs[lead:]) if lead < 3 else []
        for s in roots:
            if abs(s.imag) > 1e-9:
                continue
            s = s.real
            x, y, z = (1 - s) * u + s * v
            l1, m1 = l1_m1(x, y, z)
            if abs(l1) < 1e-9:
                continue
            t = -m1 / l1
            p = np.array([x, y, z, t])
            tot = p.sum()
            if abs(tot) < 1e-9:
                continue
            p /= tot
            for _ in range(12):
                F = residuals(p)
                if np.max(np.abs(F)) < 1e-14:
                    break
                step, *_ = np.linalg.lstsq(jacobian(p), F, rcond=None)
                p = p - step
            F = residuals(p)
            if np.max(np.abs(F[:2])) > 1e-8 or abs(F[2]) > 1e-10:
                continue
            if simplex_only and (np.any(p <= 1e-9) or np.any(p >= 1 - 1e-9)):
                continue
            key = tuple(np.round(p, 9))
            if key in seen:
                continue
            seen.add(key)
            found.append([float(x) for x in p])
    return found


def pareto_sweep(game: PayoffTables, grid: int, seed: int = 0) -> dict:
    """Sample dependency equilibria and compare their payoffs with a
    reference Nash equilibrium.

    The reference is the totally mixed Nash equilibrium when one exists,
    else the unique pure one; DomainError if neither is available.  Returns
    a numeric report with all sampled points, their payoff pairs, and the
    subset weakly dominating the reference (strictly better for at least one
    player).  grid = 0 yields an empty sweep.
    """
    tm = totally_mixed_nash(game)
    if isinstance(tm, MixedProfile):
        ref_point = tm.segre()
        ref_kind = "totally-mixed"
    else:
        pures = pure_nash(game)
        if len(pures) != 1:
            raise DomainError(
                "no reference Nash equilibrium: no totally mixed one and "
                f"{len(pures)} pure ones")
        i, j = pures[0]
        cells = [Fraction(0)] * 4
        cells[(i - 1) * 2 + (j - 1)] = Fraction(1)
        ref_point = JointDistribution(*cells)
        ref_kind = f"pure ({i},{j})"
    ref1, ref2 = expected_payoffs(game, ref_point)

    a, bb = game.A, game.B
    pts = sample_curve_points(game, grid, seed=seed, simplex_only=True)
    sampled, dominating = [], []
    for p in pts:
        pi1 = float(sum(float(a[i][j]) * p[i * 2 + j] for i in range(2) for j in range(2)))
        pi2 = float(sum(float(bb[i][j]) * p[i * 2 + j] for i in range(2) for j in range(2)))
        rec = {"point": p, "payoffs": [pi1, pi2]}
        sampled.append(rec)
        if pi1 >= float(ref1) and pi2 >= float(ref2) and \
                (pi1 > float(ref1) or pi2 > float(ref2)):
            dominating.append(rec)
    return {
        "numeric": True,
        "seed": seed,
        "grid": grid,
        "reference": {
            "kind": ref_kind,
            "point": ref_point.to_json(),
            "payoffs": [rat_str(ref1), rat_str(ref2)],
        },
        "points": sampled,
        "dominating": dominating,
    }
