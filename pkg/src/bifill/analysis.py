"""Singularity analysis, the reduced partial-derivative system for paired
ruling forms, and absolute irreducibility testing.

The smoothness certificate works chart by chart. In each chart the system
is the dehomogenized form together with its four partials (the form itself
is kept: in characteristic p the Euler relations can degenerate). Candidate
x-coordinates of singular points are pinned down by a gcd accumulated over
the members that only involve x and over pairwise resultants of the rest:
a common zero roots every one of those, so the accumulated gcd is a
complete filter, and it usually collapses to a constant after one or two
resultants, which certifies the chart without any factoring. Surviving
irreducible factors m(x) are checked exactly: substitute a root of m over
GF(q^deg m) into every member and take the monic gcd in y; positive degree
certifies a singular point, and the (m, gcd) pair is the witness.

Absolute irreducibility runs one of two routes. Route A: a smooth form with
both bi-degree entries positive is irreducible over the closure, because on
this surface two effective divisors whose bi-degrees are both nonzero in
total meet (type pairing a1*b2 + a2*b1), and a meeting or repeated
component forces a singular point. Route B is a direct search: a proper
factor over GF(q), or, for GF(q)-irreducible forms, a conjugate-norm match
F = G * G^sigma * ... over GF(q^k) for some k dividing gcd(a,b).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd as int_gcd
from typing import Optional

from .bipoly import AffinePoly, BiPoly, divides, resultant_elim
from .config import DEFAULT_BUDGETS
from .errors import BadParameters, BadShape, Infeasible, ZeroPolynomial
from .geom import PointPair, ProjPoint, _eval_second, _restrict_first, enum_p1
from .gf import (
    UniPoly,
    embedding_map,
    extension_field,
    unipoly_factor,
    unipoly_gcd,
    unipoly_is_irreducible,
    unipoly_roots,
)

__all__ = [
    "jacobian_system",
    "SmoothCertificate",
    "Witness",
    "certify_smooth",
    "verify_witness",
    "witness_point",
    "singular_points",
    "common_zeros",
    "ReducedSystem",
    "reduced_system",
    "validate_setup",
    "IrreducibilityResult",
    "is_abs_irreducible",
    "conjugate_norms",
]

_CHARTS = ("X0Y0", "X0Y1", "X1Y0", "X1Y1")


def jacobian_system(F):
    """The five forms whose common zeros are the singular points."""
    return (
        F,
        F.partial("X0"),
        F.partial("X1"),
        F.partial("Y0"),
        F.partial("Y1"),
    )


# -- exhaustive solving --------------------------------------------------------

def common_zeros(forms, m=1, budget=None):
    """All points of P1xP1 over the degree-m extension where every given
    form vanishes."""
    if not forms:
        raise BadParameters("empty system")
    K = forms[0].field
    cap = budget if budget is not None else DEFAULT_BUDGETS.point_budget
    L = extension_field(K, m)
    if (L.order + 1) ** 2 > cap:
        raise Infeasible(
            f"({L.order}+1)^2 points exceed the enumeration budget {cap}"
        )
    mapped = [f.map_field(L) for f in forms]
    pts = enum_p1(L)
    out = set()
    for P in pts:
        rests = [_restrict_first(G, P) for G in mapped]
        for Q in pts:
            if all(_eval_second(L, r, Q) == 0 for r in rests):
                out.add(PointPair(P, Q))
    return out


def _min_subfield_degree(L, q, m, pair):
    """Smallest m' dividing m with all four coordinates fixed by the
    q^m'-power map."""
    coords = pair.coords()
    for mp in range(1, m):
        if m % mp:
            continue
        e = q**mp
        if all(L.pow_(c, e) == c for c in coords):
            return mp
    return m


def singular_points(F, m_max=1, budget=None):
    """Singular points over GF(q^m) for all m <= m_max, each tagged with
    the minimal extension degree containing it."""
    if F.is_zero():
        raise ZeroPolynomial("the zero polynomial does not define a curve")
    if m_max < 1:
        raise BadParameters("extension bound must be >= 1")
    K = F.field
    system = jacobian_system(F)
    out = set()
    for m in range(1, m_max + 1):
        L = extension_field(K, m)
        for pair in common_zeros(system, m, budget):
            if _min_subfield_degree(L, K.order, m, pair) == m:
                out.add((pair, m))
    return out


# -- smoothness certificate ------------------------------------------------------

@dataclass(frozen=True)
class Witness:
    chart: str
    orientation: str  # "y": modulus constrains x; "x": modulus constrains y
    modulus: UniPoly  # irreducible over the owner field
    common: UniPoly  # positive-degree common divisor over GF(q^deg m)

    def to_json(self):
        return {
            "chart": self.chart,
            "orientation": self.orientation,
            "modulus": list(self.modulus.coeffs),
            "common": list(self.common.coeffs),
            "common_field": self.common.field.describe(),
        }


@dataclass(frozen=True)
class SmoothCertificate:
    verdict: str  # Smooth | Singular | Inconclusive
    witness: Optional[Witness]
    trace: tuple

    def to_json(self):
        return {
            "verdict": self.verdict,
            "witness": self.witness.to_json() if self.witness else None,
            "trace": [dict(t) for t in self.trace],
        }


def _chart_members(F, chart, orientation):
    """Nonzero dehomogenized system members, deduplicated; orientation "x"
    swaps the chart coordinates so the shared machinery always eliminates
    the second variable."""
    members = []
    seen = set()
    for form in jacobian_system(F):
        aff = form.dehomogenize(chart)
        if aff.is_zero():
            continue
        if orientation == "x":
            aff = AffinePoly(aff.field, _transpose(aff.rows))
        if aff.rows not in seen:
            seen.add(aff.rows)
            members.append(aff)
    return members


def _transpose(rows):
    return [
        [rows[i][j] for i in range(len(rows))] for j in range(len(rows[0]))
    ]


def _root_in_splitting_field(K, mpoly):
    """(E, xbar): the degree-(deg m) extension and the least root of m."""
    E = extension_field(K, mpoly.degree)
    roots = unipoly_roots(mpoly.map_field(E), E)
    assert roots, "irreducible factor has no root in its splitting field"
    return E, min(r.i for r in roots)


def _substitute(members, K, E, xbar):
    """Specialize each member at x = xbar, giving y-polynomials over E."""
    emap = embedding_map(K, E)
    out = []
    for mem in members:
        coeffs = [
            xp.map_field(E, emap).eval_at(xbar) for xp in mem.y_coeffs()
        ]
        out.append(UniPoly(E, coeffs))
    return out


def _factor_verdict(members, K, mpoly):
    """Monic gcd in y of the system specialized at a root of m, or the
    formal certificate y when every member vanishes there."""
    E, xbar = _root_in_splitting_field(K, mpoly)
    subs = [s for s in _substitute(members, K, E, xbar) if not s.is_zero()]
    if not subs:
        return UniPoly(E, (0, 1))  # any y: certify with the root y = 0
    G = subs[0].monic()
    for s in subs[1:]:
        G = unipoly_gcd(G, s)
        if G.degree == 0:
            return None
    return G if G.degree >= 1 else None


def _modulus_avoiding(K, lcpoly):
    """Least irreducible monic polynomial that does not divide lcpoly."""
    for c in range(K.order):
        if lcpoly.eval_at(c) != 0:
            return UniPoly(K, (K.neg(c), 1))
    import itertools

    for deg in range(2, lcpoly.degree + 2):
        for tail in itertools.product(range(K.order), repeat=deg):
            cand = UniPoly(K, list(tail) + [1])
            if unipoly_is_irreducible(cand) and not (lcpoly % cand).is_zero():
                return cand
    raise AssertionError("unreachable: finitely many roots")


def _certify_chart(K, members, chart, orientation, trace):
    """One chart, one elimination orientation. Returns ("smooth", None),
    ("singular", Witness) or ("degenerate", None)."""
    xonly = []
    ypos = []
    for mem in members:
        if mem.deg_y == 0:
            xonly.append(mem.as_unipoly("x"))
        else:
            ypos.append(mem)
    D = None
    for u in xonly:
        D = u.monic() if D is None else unipoly_gcd(D, u)
        trace.append(
            {"chart": chart, "orientation": orientation,
             "pair": "x-only", "degree": D.degree}
        )
        if D.degree == 0:
            return "smooth", None
    if D is None and len(ypos) == 1:
        # a single bivariate equation always has zeros over the closure
        A = ypos[0]
        lc = A.y_coeffs()[A.deg_y]
        mpoly = _modulus_avoiding(K, lc)
        G = _factor_verdict(ypos, K, mpoly)
        assert G is not None
        trace.append(
            {"chart": chart, "orientation": orientation,
             "pair": "single", "degree": mpoly.degree}
        )
        return "singular", Witness(chart, orientation, mpoly, G)
    for i in range(len(ypos)):
        if D is not None and D.degree == 0:
            break
        for j in range(i + 1, len(ypos)):
            R = resultant_elim(ypos[i], ypos[j], "y")
            trace.append(
                {"chart": chart, "orientation": orientation,
                 "pair": [i, j],
                 "degree": R.degree if not R.is_zero() else None}
            )
            if R.is_zero():
                continue
            D = R.monic() if D is None else unipoly_gcd(D, R)
            if D.degree == 0:
                break
    if D is None:
        return "degenerate", None
    if D.degree == 0:
        return "smooth", None
    for mpoly, _mult in unipoly_factor(D):
        G = _factor_verdict(members, K, mpoly)
        if G is not None:
            return "singular", Witness(chart, orientation, mpoly, G)
    return "smooth", None


def certify_smooth(F):
    """Exact smoothness certificate for the projective zero set of F.

    Smooth means the five-form system has only trivial solutions over the
    algebraic closure. Singular comes with an independently checkable
    witness. Inconclusive is reserved for a chart whose members defeat both
    elimination orientations (all pairwise resultants identically zero).
    """
    if F.is_zero():
        raise ZeroPolynomial("the zero polynomial does not define a curve")
    K = F.field
    trace = []
    inconclusive = False
    for chart in _CHARTS:
        decided = False
        for orientation in ("y", "x"):
            members = _chart_members(F, chart, orientation)
            if not members:
                decided = True  # cannot happen for nonzero F; keep safe
                break
            state, witness = _certify_chart(K, members, chart, orientation, trace)
            if state == "singular":
                return SmoothCertificate("Singular", witness, tuple(trace))
            if state == "smooth":
                decided = True
                break
        if not decided:
            inconclusive = True
    if inconclusive:
        return SmoothCertificate("Inconclusive", None, tuple(trace))
    return SmoothCertificate("Smooth", None, tuple(trace))


def verify_witness(F, cert):
    """Re-derive a Singular certificate from scratch: the modulus must be
    irreducible and the specialized system must reproduce the stored common
    divisor."""
    if cert.verdict != "Singular" or cert.witness is None:
        return False
    w = cert.witness
    K = F.field
    if w.modulus.field is not K or not unipoly_is_irreducible(w.modulus):
        return False
    members = _chart_members(F, w.chart, w.orientation)
    G = _factor_verdict(members, K, w.modulus)
    if G is None:
        return False
    return G == w.common and G.degree >= 1


def witness_point(F, cert, order_cap=6561):
    """A concrete singular point rebuilt from a certificate: (pair, m)
    over the smallest field housing a root of the modulus and of the
    common divisor, or None when that field exceeds the supported tower
    height or the order cap."""
    if cert.verdict != "Singular":
        return None
    w = cert.witness
    K = F.field
    E, xbar = _root_in_splitting_field(K, w.modulus)
    roots = unipoly_roots(w.common, E)
    if roots:
        L, x0, y0 = E, xbar, min(r.i for r in roots)
    else:
        factors = unipoly_factor(w.common)
        k = min(f.degree for f, _ in factors)
        mf = next(f for f, _ in factors if f.degree == k)
        if E.base is not None:
            return None  # would need a third tower layer
        if E.order**k > order_cap:
            return None
        L = extension_field(E, k)
        emap = embedding_map(E, L)
        x0 = emap[xbar]
        y0 = min(r.i for r in unipoly_roots(mf.map_field(L, emap), L))
    if L.order > order_cap:
        return None
    if w.orientation == "x":
        x0, y0 = y0, x0
    chart = w.chart
    u = (1, x0) if chart[:2] == "X0" else (x0, 1)
    v = (1, y0) if chart[2:] == "Y0" else (y0, 1)
    pair = PointPair(ProjPoint(L, *u), ProjPoint(L, *v))
    degree = 1
    while K.order**degree < L.order:
        degree += 1
    for form in jacobian_system(F):
        G = form.map_field(L)
        if G.eval(*pair.coords()) != 0:
            return None
    return pair, degree


# -- paired ruling forms ----------------------------------------------------------

def _require_ruling_shapes(f, g):
    K = f.field
    q = K.order
    if f.bidegree != (0, q + 1):
        raise BadShape(f"first form must have bi-degree (0,{q + 1})")
    if g.bidegree != (q + 1, 0):
        raise BadShape(f"second form must have bi-degree ({q + 1},0)")
    if f.is_zero() or g.is_zero():
        raise BadShape("ruling forms must be nonzero")


@dataclass(frozen=True)
class ReducedSystem:
    e1: BiPoly
    e2: BiPoly
    e3: BiPoly
    e4: BiPoly

    def as_tuple(self):
        return (self.e1, self.e2, self.e3, self.e4)


def reduced_system(f, g):
    """The four bi-degree (q,q) equations equivalent to the five-form
    singularity system for a paired-ruling curve f*kx + g*ky."""
    _require_ruling_shapes(f, g)
    K = f.field
    q = K.order
    X0q = BiPoly.monomial(K, q, 0, 0, 0)
    X1q = BiPoly.monomial(K, q, 0, q, 0)
    Y0q = BiPoly.monomial(K, 0, q, 0, 0)
    Y1q = BiPoly.monomial(K, 0, q, 0, q)
    fy1 = f.partial("Y1")
    fy0 = f.partial("Y0")
    gx1 = g.partial("X1")
    gx0 = g.partial("X0")
    return ReducedSystem(
        e1=X0q * fy1 + Y0q * gx1,
        e2=X0q * fy0 - Y1q * gx1,
        e3=X1q * fy1 - Y0q * gx0,
        e4=X1q * fy0 + Y1q * gx0,
    )


def validate_setup(f, g):
    """Both ruling forms squarefree as binary forms (checked on the two
    dehomogenizations) and nonvanishing at every rational point of P1."""
    _require_ruling_shapes(f, g)
    K = f.field

    def binary_ok(coeffs):
        # coeffs low-first in the inhomogeneous variable
        u = UniPoly(K, list(coeffs))
        w = UniPoly(K, list(reversed(coeffs)))
        for h in (u, w):
            d = h.derivative()
            if d.is_zero():
                if h.degree > 0:
                    return False
                continue
            if unipoly_gcd(h, d).degree != 0:
                return False
        for t in range(K.order):
            if u.eval_at(t) == 0:
                return False
        return u.degree == K.order + 1  # nonzero at (0:1) too

    return binary_ok(f.rows[0]) and binary_ok([r[0] for r in g.rows])


# -- absolute irreducibility -------------------------------------------------------

@dataclass(frozen=True)
class IrreducibilityResult:
    irreducible: bool
    method: str


_FORM_CACHE = {}
_NORM_CACHE = {}


def _proj_forms(field, a, b):
    """All bi-degree (a,b) forms with first nonzero coefficient 1, in
    row-major coefficient order; cached per cell."""
    key = (id(field), a, b)
    if key not in _FORM_CACHE:
        s = field.order
        n = (a + 1) * (b + 1)
        out = []
        for lead in range(n):
            for tail in _counter(s, n - lead - 1):
                flat = (0,) * lead + (1,) + tail
                rows = tuple(
                    flat[i * (b + 1): (i + 1) * (b + 1)] for i in range(a + 1)
                )
                out.append(BiPoly._raw(field, a, b, rows))
        _FORM_CACHE[key] = tuple(out)
    return _FORM_CACHE[key]


def _counter(s, n):
    """All length-n digit tuples base s, least significant slot last."""
    if n == 0:
        yield ()
        return
    for head in range(s):
        for tail in _counter(s, n - 1):
            yield (head,) + tail


def _proj_cell_size(s, n):
    return (s**n - 1) // (s - 1)


def _canonical_scale(F):
    for row in F.rows:
        for c in row:
            if c:
                if c == 1:
                    return F
                return F.scale(F.field.inv(c))
    raise ZeroPolynomial("cannot normalize the zero polynomial")


def _frob_rows(L, rows, q):
    return tuple(tuple(L.pow_(c, q) for c in row) for row in rows)


def conjugate_norms(field, a, b, k):
    """Canonical coefficient matrices of every norm N(G) = G * G^s * ... of
    bi-degree (a/k, b/k) forms over GF(q^k); such a product is never
    irreducible over the closure, and a GF(q)-irreducible form that is
    reducible over the closure is such a norm. Cached per cell."""
    key = (id(field), a, b, k)
    if key in _NORM_CACHE:
        return _NORM_CACHE[key]
    q = field.order
    L = extension_field(field, k)
    emap = embedding_map(field, L)
    inv = {v: i for i, v in enumerate(emap)}
    norms = set()
    for G in _proj_forms(L, a // k, b // k):
        N = G
        H = G
        for _ in range(k - 1):
            H = BiPoly._raw(L, H.a, H.b, _frob_rows(L, H.rows, q))
            N = N * H
        N = _canonical_scale(N)
        rows = tuple(tuple(inv[c] for c in row) for row in N.rows)
        norms.add(rows)
    _NORM_CACHE[key] = frozenset(norms)
    return _NORM_CACHE[key]


def _nonvanishing_points(F, cap=32):
    """Coordinate tuples over the quadratic extension where F is nonzero;
    a divisor of F can never vanish at such a point."""
    K = F.field
    L = extension_field(K, 2)
    G = F.map_field(L)
    pts = enum_p1(L)
    out = []
    for P in pts:
        coeffs = _restrict_first(G, P)
        if all(c == 0 for c in coeffs):
            continue
        for Q in pts:
            if _eval_second(L, coeffs, Q) != 0:
                out.append((L, P.coords() + Q.coords()))
                if len(out) >= cap:
                    return out
    return out


def find_factor(F, budget=None):
    """Least proper GF(q)-factor of F in the fixed scan order (ascending
    total degree, then lexicographic cell order), or None."""
    K = F.field
    a, b = F.a, F.b
    cap = budget if budget is not None else DEFAULT_BUDGETS.factor_search_budget
    cells = sorted(
        (
            (a2, b2)
            for a2 in range(a + 1)
            for b2 in range(b + 1)
            if 0 < a2 + b2 <= (a + b) // 2
        ),
        key=lambda cell: (cell[0] + cell[1], cell),
    )
    total = sum(_proj_cell_size(K.order, (a2 + 1) * (b2 + 1)) for a2, b2 in cells)
    if total > cap:
        raise Infeasible(f"{total} division candidates exceed the budget {cap}")
    probes = _nonvanishing_points(F)
    probe_cache = {}
    for a2, b2 in cells:
        key = (a2, b2)
        if key not in probe_cache:
            probe_cache[key] = [
                (G, G.map_field(probes[0][0]) if probes else G)
                for G in _proj_forms(K, a2, b2)
            ]
        for G, GL in probe_cache[key]:
            if any(GL.eval(*pt) == 0 for _L, pt in probes):
                continue
            if divides(G, F) is not None:
                return G
    return None


def is_abs_irreducible(F, method="auto", budget=None):
    """True iff F is irreducible over the algebraic closure.

    method "A" uses the smoothness shortcut and abstains (Infeasible) when
    the form is not certified smooth; method "B" searches for factors and
    conjugate norms directly; "auto" tries A then falls back to B.
    """
    if F.is_zero():
        raise ZeroPolynomial("the zero polynomial is not a curve")
    a, b = F.a, F.b
    if method not in ("auto", "A", "B"):
        raise BadParameters(f"unknown method {method!r}")
    if method in ("auto", "A"):
        if a >= 1 and b >= 1 and certify_smooth(F).verdict == "Smooth":
            return IrreducibilityResult(True, "A")
        if method == "A":
            raise Infeasible("smoothness shortcut cannot decide this form")
    K = F.field
    cap = budget if budget is not None else DEFAULT_BUDGETS.factor_search_budget
    if find_factor(F, budget=cap) is not None:
        return IrreducibilityResult(False, "B")
    ks = [k for k in range(2, int_gcd(a, b) + 1) if int_gcd(a, b) % k == 0]
    for k in ks:
        n = (a // k + 1) * (b // k + 1)
        if _proj_cell_size(K.order**k, n) > cap:
            raise Infeasible("conjugate search exceeds the budget")
    canon = _canonical_scale(F).rows
    for k in ks:
        if canon in conjugate_norms(K, a, b, k):
            return IrreducibilityResult(False, "B")
    return IrreducibilityResult(True, "B")
