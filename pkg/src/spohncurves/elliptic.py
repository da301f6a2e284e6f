"""Plane cubics from quadric pencils, Aronhold invariants, Weierstrass models.

The pipeline mirrors how elliptic invariants of a Spohn curve are computed:
move a known rational point of the quadric pair to [0:0:0:1], split each
quadric as L*t + M with L linear and M quadratic in the remaining three
coordinates, and take the resultant cubic C = L1 M2 - L2 M1.  The degree-4
and degree-6 invariants S, T of a ternary cubic then give the discriminant
(64 S^3 - T^2)/1728 and j = 64 S^3 / disc, and an exact two-branch reduction
produces a Weierstrass model over Q certified against that j.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from . import geometry
from .polynomials import (
    DomainError,
    MultiPoly,
    ProjPoint,
    cross_product,
    is_rational_nth_power,
    is_rational_square,
    rat,
    rat_str,
)

VARS4 = ("x", "y", "z", "t")
VARS3 = ("x", "y", "z")


# ---------------------------------------------------------------------------
# quadric pairs
# ---------------------------------------------------------------------------

class QuadricPair:
    """Two quadric surfaces in P^3 with a common rational point.

    Polynomials are stored in variables (x, y, z, t); inputs in other
    4-variable name sets are relabeled by position.  The point is verified
    to lie on both quadrics at construction.
    """

    __slots__ = ("P1", "P2", "point")

    def __init__(self, P1: MultiPoly, P2: MultiPoly, point):
        def adapt(p):
            if len(p.vars) != 4:
                raise DomainError("quadrics must use exactly 4 variables")
            if p.vars != VARS4:
                p = MultiPoly(VARS4, dict(p.terms))
            if p.is_zero() or p.degree() != 2 or not p.is_homogeneous():
                raise DomainError("expected nonzero homogeneous quadrics")
            return p

        self.P1 = adapt(P1)
        self.P2 = adapt(P2)
        pt = point if isinstance(point, ProjPoint) else ProjPoint(point)
        if len(pt.coords) != 4:
            raise DomainError("common point must have 4 coordinates")
        if self.P1.evaluate(pt.coords) != 0 or self.P2.evaluate(pt.coords) != 0:
            raise DomainError("the common point does not lie on both quadrics")
        self.point = pt

    @classmethod
    def from_json(cls, data) -> "QuadricPair":
        """Accepts {"P1": poly, "P2": poly, "point": [...]} with polys in the
        sparse-term format, or {"A": 4x4, "B": 4x4, "point": [...]} giving
        the quadrics as v^T A v and v^T B v."""
        if "A" in data and "B" in data:
            return cls(_poly_from_matrix(data["A"]), _poly_from_matrix(data["B"]),
                       [rat(c) for c in data["point"]])
        if "P1" in data and "P2" in data:
            return cls(MultiPoly.from_json(data["P1"]),
                       MultiPoly.from_json(data["P2"]),
                       [rat(c) for c in data["point"]])
        raise ValueError("quadric-pair JSON needs P1/P2 or A/B plus point")

    def to_json(self) -> dict:
        return {"P1": self.P1.to_json(), "P2": self.P2.to_json(),
                "point": self.point.to_json()}


def _poly_from_matrix(M) -> MultiPoly:
    rows = [[rat(x) for x in row] for row in M]
    if len(rows) != 4 or any(len(r) != 4 for r in rows):
        raise ValueError("quadric matrix must be 4x4")
    terms = {}
    for i in range(4):
        for j in range(4):
            if rows[i][j] == 0:
                continue
            e = [0, 0, 0, 0]
            e[i] += 1
            e[j] += 1
            e = tuple(e)
            terms[e] = terms.get(e, Fraction(0)) + rows[i][j]
    return MultiPoly(VARS4, terms)


def spohn_pair(game) -> QuadricPair:
    """The game's Spohn quadrics with the fully-mixed-boundary point
    [0:0:0:1], relabeled to (x, y, z, t) = (p11, p12, p21, p22)."""
    q = geometry.build_quadrics(game)
    return QuadricPair(MultiPoly(VARS4, dict(q.q1.terms)),
                       MultiPoly(VARS4, dict(q.q2.terms)),
                       (0, 0, 0, 1))


# ---------------------------------------------------------------------------
# moving the common point to infinity
# ---------------------------------------------------------------------------

def translate_to_infinity(pair: QuadricPair):
    """Send the common point to [0:0:0:1] by permutation + translation.

    If the point's t-coordinate is zero, a recorded coordinate swap brings a
    nonzero coordinate into the last slot first.  Then with the point scaled
    to (x0, y0, z0, 1), substitute (x, y, z, t) -> (x + x0 t, y + y0 t,
    z + z0 t, t).  Returns (new pair, record) where record documents the
    swap and the translation vector.
    """
    coords = list(pair.point.coords)
    swap = None
    if coords[3] == 0:
        k = next(i for i in range(4) if coords[i] != 0)
        swap = k
        coords[k], coords[3] = coords[3], coords[k]

    def permute(p: MultiPoly) -> MultiPoly:
        if swap is None:
            return p
        out = {}
        for exp, c in p.terms.items():
            e = list(exp)
            e[swap], e[3] = e[3], e[swap]
            out[tuple(e)] = c
        return MultiPoly(VARS4, out)

    t0 = coords[3]
    x0, y0, z0 = (coords[0] / t0, coords[1] / t0, coords[2] / t0)
    Q = [
        [1, 0, 0, x0],
        [0, 1, 0, y0],
        [0, 0, 1, z0],
        [0, 0, 0, 1],
    ]
    new1 = permute(pair.P1).substitute_matrix(Q)
    new2 = permute(pair.P2).substitute_matrix(Q)
    for p in (new1, new2):
        if p.evaluate((0, 0, 0, 1)) != 0:  # pragma: no cover
            raise AssertionError("translation failed to move the point to infinity")
    record = {
        "swap": swap,
        "translation": [rat_str(x0), rat_str(y0), rat_str(z0)],
    }
    return QuadricPair(new1, new2, (0, 0, 0, 1)), record


class SplitKLM(NamedTuple):
    """P_i = L_i * t + M_i for a pair vanishing at [0:0:0:1] (K_i = 0)."""

    L1: MultiPoly
    M1: MultiPoly
    L2: MultiPoly
    M2: MultiPoly


def split_klm(pair: QuadricPair) -> SplitKLM:
    """Split both quadrics along powers of t.

    Requires the common point at [0:0:0:1] (so the t^2 coefficients vanish);
    raises DomainError if the two t-linear forms are proportional, in which
    case the residual curve of the pencil has genus 0 and carries no
    j-invariant.
    """
    def split(p: MultiPoly):
        if p.coefficient((0, 0, 0, 2)) != 0:
            raise DomainError("quadric does not vanish at [0:0:0:1]; "
                              "translate the common point to infinity first")
        L = {}
        M = {}
        for exp, c in p.terms.items():
            if exp[3] == 1:
                L[exp[:3]] = c
            elif exp[3] == 0:
                M[exp[:3]] = c
        return MultiPoly(VARS3, L), MultiPoly(VARS3, M)

    L1, M1 = split(pair.P1)
    L2, M2 = split(pair.P2)
    v1 = [L1.coefficient(tuple(1 if i == k else 0 for i in range(3))) for k in range(3)]
    v2 = [L2.coefficient(tuple(1 if i == k else 0 for i in range(3))) for k in range(3)]
    if all(x == 0 for x in cross_product(v1, v2)):
        raise DomainError("the t-linear forms are proportional: the pencil "
                          "degenerates to a genus-0 configuration")
    return SplitKLM(L1, M1, L2, M2)


def cubic_from_quadrics(pair: QuadricPair) -> "PlaneCubic":
    """Eliminate t: the common solutions project to L1 M2 - L2 M1 = 0."""
    moved, _ = translate_to_infinity(pair)
    s = split_klm(moved)
    C = s.L1 * s.M2 - s.L2 * s.M1
    if C.is_zero():
        raise DomainError("the pencil degenerates: the eliminant cubic "
                          "vanishes identically")
    return PlaneCubic.from_poly(C)


# ---------------------------------------------------------------------------
# plane cubics and Aronhold invariants
# ---------------------------------------------------------------------------

class TenCoeffs(NamedTuple):
    """Classical coefficient labels of a ternary cubic:

    C = a x^3 + b y^3 + c z^3 + 3d x^2 y + 3e y^2 z + 3f z^2 x
        + 3g x y^2 + 3h y z^2 + 3i z x^2 + 6m x y z
    """

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction
    e: Fraction
    f: Fraction
    g: Fraction
    h: Fraction
    i: Fraction
    m: Fraction


class PlaneCubic:
    """A ternary cubic form with its ten classical coefficients."""

    __slots__ = ("poly", "coeffs")

    def __init__(self, poly: MultiPoly, coeffs: TenCoeffs):
        self.poly = poly
        self.coeffs = coeffs

    @classmethod
    def from_poly(cls, poly: MultiPoly) -> "PlaneCubic":
        if len(poly.vars) != 3:
            raise DomainError("plane cubic needs exactly 3 variables")
        if poly.vars != VARS3:
            poly = MultiPoly(VARS3, dict(poly.terms))
        if poly.is_zero() or poly.degree() != 3 or not poly.is_homogeneous():
            raise DomainError("expected a nonzero homogeneous ternary cubic")
        co = poly.coefficient
        coeffs = TenCoeffs(
            a=co((3, 0, 0)),
            b=co((0, 3, 0)),
            c=co((0, 0, 3)),
            d=co((2, 1, 0)) / 3,
            e=co((0, 2, 1)) / 3,
            f=co((1, 0, 2)) / 3,
            g=co((1, 2, 0)) / 3,
            h=co((0, 1, 2)) / 3,
            i=co((2, 0, 1)) / 3,
            m=co((1, 1, 1)) / 6,
        )
        return cls(poly, coeffs)

    @classmethod
    def from_coeffs(cls, *coeffs) -> "PlaneCubic":
        tc = TenCoeffs(*(rat(x) for x in coeffs))
        terms = {
            (3, 0, 0): tc.a, (0, 3, 0): tc.b, (0, 0, 3): tc.c,
            (2, 1, 0): 3 * tc.d, (0, 2, 1): 3 * tc.e, (1, 0, 2): 3 * tc.f,
            (1, 2, 0): 3 * tc.g, (0, 1, 2): 3 * tc.h, (2, 0, 1): 3 * tc.i,
            (1, 1, 1): 6 * tc.m,
        }
        poly = MultiPoly(VARS3, terms)
        if poly.is_zero():
            raise DomainError("expected a nonzero cubic")
        return cls(poly, tc)

    def to_json(self) -> dict:
        return {
            "poly": self.poly.to_json(),
            "coefficients": {k: rat_str(v) for k, v in self.coeffs._asdict().items()},
        }


class AronholdInvariants(NamedTuple):
    S: Fraction       # degree 4 in the coefficients
    T: Fraction       # degree 6
    disc: Fraction    # (64 S^3 - T^2) / 1728


def aronhold(cubic: PlaneCubic) -> AronholdInvariants:
    """The two fundamental invariants and the discriminant of a ternary cubic.

    In the classical coefficient labels (the xyz coefficient is called m
    here), S and T are the following explicit polynomials; the cubic is
    singular iff disc = (64 S^3 - T^2)/1728 vanishes, and the Fermat cubic
    x^3 + y^3 + z^3 has S = 0, T = 1.
    """
    a, b, c, d, e, f, g, h, i, m = cubic.coeffs

    S = (a*g*e*c - a*g*h**2 - a*m*b*c + a*m*e*h + a*f*b*h - a*f*e**2
         - d**2*e*c + d**2*h**2 + d*i*b*c - d*i*e*h + d*g*m*c - d*g*f*h
         - 2*d*m**2*h + 3*d*m*f*e - d*f**2*b - i**2*b*h + i**2*e**2
         - i*g**2*c + 3*i*g*m*h - i*g*f*e - 2*i*m**2*e + i*m*f*b
         + g**2*f**2 - 2*g*m**2*f + m**4)

    T = (a**2*b**2*c**2 - 3*a**2*e**2*h**2 - 6*a**2*b*e*h*c + 4*a**2*b*h**3
         + 4*a**2*e**3*c - 6*a*d*g*b*c**2 + 18*a*d*g*e*h*c - 12*a*d*g*h**3
         + 12*a*d*m*b*h*c - 24*a*d*m*e**2*c + 12*a*d*m*e*h**2
         - 12*a*d*f*b*h**2 + 6*a*d*f*b*e*c + 6*a*d*f*e**2*h
         + 6*a*i*g*b*h*c - 12*a*i*g*e**2*c + 6*a*i*g*e*h**2
         + 12*a*i*m*b*e*c + 12*a*i*m*e**2*h - 6*a*i*f*b**2*c
         + 18*a*i*f*b*e*h - 24*a*g**2*m*h*c - 24*a*i*m*b*h**2
         - 12*a*i*f*e**3 + 4*a*g**3*c**2 - 12*a*g**2*f*e*c
         + 24*a*g**2*f*h**2 + 36*a*g*m**2*e*c + 12*a*g*m**2*h**2
         + 12*a*g*m*f*b*c - 60*a*g*m*f*e*h - 12*a*g*f**2*b*h
         + 24*a*g*f**2*e**2 - 20*a*m**3*b*c - 12*a*m**3*e*h
         + 36*a*m**2*f*b*h + 12*a*m**2*f*e**2 - 24*a*m*f**2*b*e
         + 4*a*f**3*b**2 + 4*d**3*b*c**2 - 12*d**3*e*h*c + 8*d**3*h**3
         + 24*d**2*i*e**2*c - 12*d**2*i*e*h**2 + 12*d**2*g*m*h*c
         + 6*d**2*g*f*e*c - 24*d**2*m**2*h**2 - 12*d**2*i*b*h*c
         - 3*d**2*g**2*c**2 - 24*g**2*m**2*f**2 + 24*g*m**4*f
         - 12*d**2*g*f*h**2 + 12*d**2*m**2*e*c - 24*d**2*m*f*b*c
         - 27*d**2*f**2*e**2 + 36*d**2*m*f*e*h + 24*d**2*f**2*b*h
         + 24*d*i**2*b*h**2 - 12*d*i**2*b*e*c - 12*d*i**2*e**2*h
         + 6*d*i*g**2*h*c - 60*d*i*g*m*e*c + 36*d*i*g*m*h**2
         + 18*d*i*g*f*b*c - 6*d*i*g*f*e*h + 36*d*i*m**2*b*c
         - 12*d*i*m**2*e*h - 60*d*i*m*f*b*h + 36*d*i*m*f*e**2
         + 6*d*i*f**2*b*e + 12*d*g**2*m*f*c - 12*d*g*m**3*c
         - 12*d*g*m**2*f*h + 36*d*g*m*f**2*e - 12*d*g*f**3*b
         + 24*d*m**4*h + 12*d*m**2*f**2*b + 4*i**3*b**2*c
         + 24*i**2*g**2*e*c - 27*i**2*g**2*h**2 - 36*d*m**3*f*e
         - 12*i**3*b*e*h + 8*i**3*e**3 - 24*i**2*g*m*b*c
         + 36*i**2*g*m*e*h + 6*i**2*g*f*b*h + 12*i**2*m**2*b*h
         - 3*i**2*f**2*b**2 - 12*d*g**2*f**2*h - 12*i**2*g*f*e**2
         - 24*i**2*m**2*e**2 + 12*i**2*m*f*b*e - 12*i*g**3*f*c
         + 12*i*g**2*m**2*c + 36*i*g**2*m*f*h - 12*i*g**2*f**2*e
         - 36*i*g*m**3*h - 12*i*g*m**2*f*e + 12*i*g*m*f**2*b
         + 24*i*m**4*e - 12*i*m**3*f*b + 8*g**3*f**3 - 8*m**6)

    disc = (64 * S**3 - T**2) / 1728
    return AronholdInvariants(S, T, disc)


class JResult(NamedTuple):
    """j-invariant of a plane cubic; value is None when the cubic is singular."""

    value: Fraction | None
    S: Fraction
    T: Fraction
    disc: Fraction

    @property
    def is_singular(self) -> bool:
        return self.value is None

    def to_json(self) -> dict:
        return {"j": "singular" if self.value is None else rat_str(self.value)}


def j_invariant(cubic: PlaneCubic) -> JResult:
    """j = 64 S^3 / disc; "singular" when the discriminant vanishes.

    The exact identity j * disc == 64 S^3 holds whenever j is defined.
    """
    S, T, disc = aronhold(cubic)
    if disc == 0:
        return JResult(None, S, T, disc)
    return JResult(64 * S**3 / disc, S, T, disc)


# ---------------------------------------------------------------------------
# Weierstrass models
# ---------------------------------------------------------------------------

class WeierstrassCurve:
    """y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q."""

    __slots__ = ("a1", "a2", "a3", "a4", "a6")

    def __init__(self, a1, a2, a3, a4, a6):
        self.a1, self.a2, self.a3, self.a4, self.a6 = (
            rat(a1), rat(a2), rat(a3), rat(a4), rat(a6))

    @classmethod
    def from_short(cls, A, B) -> "WeierstrassCurve":
        """y^2 = x^3 + A x + B."""
        return cls(0, 0, 0, A, B)

    @property
    def b2(self): return self.a1**2 + 4*self.a2
    @property
    def b4(self): return 2*self.a4 + self.a1*self.a3
    @property
    def b6(self): return self.a3**2 + 4*self.a6
    @property
    def b8(self):
        return (self.a1**2*self.a6 + 4*self.a2*self.a6 - self.a1*self.a3*self.a4
                + self.a2*self.a3**2 - self.a4**2)
    @property
    def c4(self): return self.b2**2 - 24*self.b4
    @property
    def c6(self): return -self.b2**3 + 36*self.b2*self.b4 - 216*self.b6
    @property
    def disc(self):
        return (-self.b2**2*self.b8 - 8*self.b4**3 - 27*self.b6**2
                + 9*self.b2*self.b4*self.b6)

    def is_singular(self) -> bool:
        return self.disc == 0

    def j(self) -> Fraction | None:
        if self.disc == 0:
            return None
        return self.c4**3 / self.disc

    def to_json(self) -> dict:
        jv = self.j()
        return {
            "a": [rat_str(x) for x in (self.a1, self.a2, self.a3, self.a4, self.a6)],
            "j": "singular" if jv is None else rat_str(jv),
        }

    def __repr__(self):
        return ("WeierstrassCurve(" +
                ", ".join(rat_str(x) for x in
                          (self.a1, self.a2, self.a3, self.a4, self.a6)) + ")")


def _unit3(k) -> tuple:
    return tuple(Fraction(1) if i == k else Fraction(0) for i in range(3))


def weierstrass_from_cubic(cubic: PlaneCubic, pt) -> WeierstrassCurve:
    """Exact Weierstrass model of a smooth plane cubic with a rational point.

    The point is moved to [0:1:0] with its tangent line as {z = 0}.  If the
    point is a flex, the coefficients read off directly.  Otherwise the
    projection from the point expresses the curve as a double cover of P^1
    branched along a quartic G(t) with G(0) a nonzero square, and the curve
    is Q-isomorphic to the Jacobian y^2 = x^3 - 27 I x - 27 J of v^2 = G(u)
    (classical binary-quartic invariants I, J).  Either way the result is
    certified by comparing its j-invariant with 64 S^3 / disc of the input —
    an exact identity, so a failed certification raises instead of
    returning a wrong model.
    """
    aron = aronhold(cubic)
    if aron.disc == 0:
        raise DomainError("singular cubic: no Weierstrass model")
    pt = pt if isinstance(pt, ProjPoint) else ProjPoint(pt)
    if len(pt.coords) != 3:
        raise DomainError("base point must have 3 coordinates")
    fpoly = cubic.poly
    if fpoly.evaluate(pt.coords) != 0:
        raise DomainError("base point does not lie on the cubic")
    grad = fpoly.gradient_at(pt.coords)
    if all(x == 0 for x in grad):  # pragma: no cover — impossible when disc != 0
        raise DomainError("base point is singular")

    # move pt -> [0:1:0] and its tangent -> {Z = 0}: columns of the matrix
    # are (tangent direction, pt, any completion with nonzero determinant)
    tangent_dir = None
    for k in range(3):
        v = cross_product(grad, _unit3(k))
        if any(x != 0 for x in v) and not _parallel(v, pt.coords):
            tangent_dir = v
            break
    if tangent_dir is None:  # pragma: no cover
        raise AssertionError("no tangent direction found")
    third = None
    for k in range(3):
        cols = (tangent_dir, pt.coords, _unit3(k))
        M = [[cols[j][i] for j in range(3)] for i in range(3)]
        if _det3x3(M) != 0:
            third = M
            break
    if third is None:  # pragma: no cover
        raise AssertionError("could not complete the coordinate change")
    g = fpoly.substitute_matrix(third)

    beta = g.coefficient((0, 2, 1))   # Y^2 Z
    if g.coefficient((0, 3, 0)) != 0 or g.coefficient((1, 2, 0)) != 0 or beta == 0:
        raise AssertionError("normalization failed")  # pragma: no cover
    q1 = g.coefficient((2, 1, 0))     # X^2 Y
    q2 = g.coefficient((1, 1, 1))     # X Y Z
    q3 = g.coefficient((0, 1, 2))     # Y Z^2
    k0 = g.coefficient((3, 0, 0))     # X^3
    k1 = g.coefficient((2, 0, 1))     # X^2 Z
    k2 = g.coefficient((1, 0, 2))     # X Z^2
    k3 = g.coefficient((0, 0, 3))     # Z^3

    if q1 == 0:
        # flex: the tangent meets the curve three times at pt
        if k0 == 0:  # pragma: no cover — the tangent would lie in the cubic
            raise AssertionError("degenerate flex normalization")
        E = WeierstrassCurve(
            q2 / beta,
            -k1 / beta,
            -k0 * q3 / beta**2,
            k0 * k2 / beta**2,
            -k0**2 * k3 / beta**3,
        )
    else:
        # projection from pt: on the line z = t x the curve reads
        # beta t Y^2 + (q1 + q2 t + q3 t^2) Y + (k0 + k1 t + k2 t^2 + k3 t^3)
        # (affine Y = y/x); its discriminant is the branch quartic
        A4 = q3**2 - 4 * beta * k3
        B4 = 2 * q2 * q3 - 4 * beta * k2
        C4 = q2**2 + 2 * q1 * q3 - 4 * beta * k1
        D4 = 2 * q1 * q2 - 4 * beta * k0
        E4 = q1**2
        I = 12*A4*E4 - 3*B4*D4 + C4**2
        J = 72*A4*C4*E4 + 9*B4*C4*D4 - 27*A4*D4**2 - 27*B4**2*E4 - 2*C4**3
        E = WeierstrassCurve(0, 0, 0, -27 * I, -27 * J)

    jE = E.j()
    jC = 64 * aron.S**3 / aron.disc
    if jE is None or jE != jC:
        raise AssertionError("Weierstrass reduction failed certification "
                             f"(j mismatch: {jE} vs {jC})")
    return E


def _parallel(u, v) -> bool:
    return all(x == 0 for x in cross_product(u, v))


def _det3x3(M) -> Fraction:
    return (M[0][0]*(M[1][1]*M[2][2] - M[1][2]*M[2][1])
            - M[0][1]*(M[1][0]*M[2][2] - M[1][2]*M[2][0])
            + M[0][2]*(M[1][0]*M[2][1] - M[1][1]*M[2][0]))


# ---------------------------------------------------------------------------
# Q-isomorphism
# ---------------------------------------------------------------------------

def q_isomorphic(E1: WeierstrassCurve, E2: WeierstrassCurve) -> bool:
    """Are two nonsingular Weierstrass curves isomorphic over Q?

    Curves are Q-isomorphic iff (c4', c6') = (u^4 c4, u^6 c6) for a rational
    u.  Generically u^2 = (c6'/c6)/(c4'/c4) must be a rational square; for
    j = 0 (c4 = 0) the criterion is c6'/c6 a sixth power, for j = 1728
    (c6 = 0) it is c4'/c4 a fourth power.
    """
    if E1.is_singular() or E2.is_singular():
        raise DomainError("q_isomorphic needs nonsingular curves")
    if E1.j() != E2.j():
        return False
    c4, c6 = E1.c4, E1.c6
    c4p, c6p = E2.c4, E2.c6
    if c4 == 0:  # j = 0; same j forces c4p == 0
        return is_rational_nth_power(c6p / c6, 6)
    if c6 == 0:  # j = 1728
        return is_rational_nth_power(c4p / c4, 4)
    s = (c6p / c6) / (c4p / c4)  # = u^2 if isomorphic
    return (is_rational_square(s) and c4p == s**2 * c4 and c6p == s**3 * c6)


# ---------------------------------------------------------------------------
# game-level equivalence
# ---------------------------------------------------------------------------

def game_equivalence(game1, game2) -> dict:
    """Compare two games through the elliptic invariants of their cubics.

    Reports the j-invariants, whether they agree, and whether the curves are
    actually Q-isomorphic (same j is necessary, not sufficient).  Raises
    DomainError naming the matched reducibility cases if a cubic is
    singular, since j is undefined there.
    """
    results = []
    for tag, game in (("first", game1), ("second", game2)):
        spohn = geometry.build_cubic(game)
        if spohn.is_zero():
            raise DomainError(f"the {tag} game has the zero cubic; "
                              "no elliptic invariants exist")
        plane = PlaneCubic.from_poly(spohn.f)
        jres = j_invariant(plane)
        if jres.is_singular:
            cases = sorted(geometry.classify_cases(game))
            raise DomainError(
                f"the {tag} game has a singular cubic (matched reducibility "
                f"cases: {cases}); j is undefined")
        results.append((plane, jres))

    (p1, j1), (p2, j2) = results
    same_j = j1.value == j2.value
    fully = False
    if same_j:
        E1 = _weierstrass_of_spohn(p1)
        E2 = _weierstrass_of_spohn(p2)
        fully = q_isomorphic(E1, E2)
    return {
        "j1": rat_str(j1.value),
        "j2": rat_str(j2.value),
        "same_j": same_j,
        "fully_equivalent": fully,
    }


def _weierstrass_of_spohn(plane: PlaneCubic) -> WeierstrassCurve:
    """Weierstrass model using the first coordinate point on the curve.

    Spohn cubics have no pure-cube terms, so all three coordinate points lie
    on the curve; [1:0:0] is tried first for determinism.
    """
    for coords in ((1, 0, 0), (0, 1, 0), (0, 0, 1)):
        if plane.poly.evaluate(coords) == 0:
            return weierstrass_from_cubic(plane, coords)
    raise DomainError("no rational coordinate point on the cubic; "
                      "equivalence beyond j undetermined")  # pragma: no cover
