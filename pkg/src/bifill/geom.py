"""Rational points of P1 and P1xP1, the quadric embedding into P3, and
exhaustive point counting for curves.

Points are kept normalized: a P1 point is (1:t) or (0:1), so membership
checks and prints are canonical. Point counting restricts the form one
ruling at a time, which keeps the inner loop univariate.
"""

from __future__ import annotations

from .config import DEFAULT_BUDGETS
from .errors import BadParameters, FieldMismatch, Infeasible, ZeroPolynomial
from .gf import FieldElement, extension_field

__all__ = [
    "ProjPoint",
    "PointPair",
    "P3Point",
    "enum_p1",
    "rational_pairs",
    "fiber_forms",
    "segre",
    "count_points",
]


def _idx(x):
    return x.i if isinstance(x, FieldElement) else x


class ProjPoint:
    """A point of P1, normalized to (1:t) or (0:1)."""

    __slots__ = ("field", "u0", "u1")

    def __init__(self, field, u0, u1):
        u0, u1 = _idx(u0), _idx(u1)
        if u0 == 0 and u1 == 0:
            raise BadParameters("(0:0) is not a projective point")
        if u0 != 0:
            u1 = field.div(u1, u0)
            u0 = 1
        else:
            u1 = 1
        self.field = field
        self.u0 = FieldElement(field, u0)
        self.u1 = FieldElement(field, u1)

    @classmethod
    def affine(cls, field, t):
        return cls(field, 1, t)

    @classmethod
    def infinity(cls, field):
        return cls(field, 0, 1)

    def is_infinity(self):
        return self.u0.i == 0

    def coords(self):
        return (self.u0.i, self.u1.i)

    def text(self):
        F = self.field
        return f"({F.text_of(self.u0.i)}:{F.text_of(self.u1.i)})"

    def __eq__(self, other):
        return (
            isinstance(other, ProjPoint)
            and self.field is other.field
            and self.u0.i == other.u0.i
            and self.u1.i == other.u1.i
        )

    def __hash__(self):
        return hash((id(self.field), self.u0.i, self.u1.i))

    def __repr__(self):
        return self.text()


class PointPair:
    """A point of P1xP1 with both components over one field."""

    __slots__ = ("field", "first", "second")

    def __init__(self, first, second):
        if first.field is not second.field:
            raise FieldMismatch("components over different fields")
        self.field = first.field
        self.first = first
        self.second = second

    def coords(self):
        return self.first.coords() + self.second.coords()

    def text(self):
        return f"{self.first.text()}x{self.second.text()}"

    def __eq__(self, other):
        return (
            isinstance(other, PointPair)
            and self.first == other.first
            and self.second == other.second
        )

    def __hash__(self):
        return hash((self.first, self.second))

    def __repr__(self):
        return self.text()


class P3Point:
    """A point of P3 with the first nonzero coordinate scaled to 1."""

    __slots__ = ("field", "t")

    def __init__(self, field, coords):
        t = tuple(_idx(c) for c in coords)
        if len(t) != 4:
            raise BadParameters("P3 point needs 4 coordinates")
        lead = next((c for c in t if c != 0), None)
        if lead is None:
            raise BadParameters("(0:0:0:0) is not a projective point")
        if lead != 1:
            s = field.inv(lead)
            t = tuple(field.mul(c, s) for c in t)
        self.field = field
        self.t = t

    def coords(self):
        return self.t

    def text(self):
        F = self.field
        return "(" + ":".join(F.text_of(c) for c in self.t) + ")"

    def __eq__(self, other):
        return (
            isinstance(other, P3Point)
            and self.field is other.field
            and self.t == other.t
        )

    def __hash__(self):
        return hash((id(self.field), self.t))

    def __repr__(self):
        return self.text()


def enum_p1(field):
    """All |field|+1 points: (1:t) in element enumeration order, then (0:1)."""
    pts = [ProjPoint.affine(field, t.i) for t in field.elements()]
    pts.append(ProjPoint.infinity(field))
    return tuple(pts)


def rational_pairs(field):
    """All (|field|+1)^2 points of P1xP1, row-major in enum_p1 order."""
    pts = enum_p1(field)
    return tuple(PointPair(P, Q) for P in pts for Q in pts)


def fiber_forms(field, axis="x"):
    """The |field|+1 ruling forms: for axis 'x', the bi-degree (1,0) form
    u1*X0 - u0*X1 vanishing exactly where the first component is (u0:u1)."""
    from .bipoly import BiPoly

    out = []
    for P in enum_p1(field):
        u0, u1 = P.coords()
        rows = [[u1], [field.neg(u0)]]
        G = BiPoly(field, 1, 0, rows)
        out.append(G if axis == "x" else G.transpose())
    return tuple(out)


def segre(pair):
    """Image (u0*v0 : u0*v1 : u1*v0 : u1*v1) on the quadric T0*T3 = T1*T2."""
    F = pair.field
    u0, u1 = pair.first.coords()
    v0, v1 = pair.second.coords()
    return P3Point(
        F, (F.mul(u0, v0), F.mul(u0, v1), F.mul(u1, v0), F.mul(u1, v1))
    )


def _restrict_first(G, P):
    """Coefficients in the second ruling after pinning the first component."""
    F = G.field
    a = G.a
    u0, u1 = P.coords()
    if u0 == 1:
        out = list(G.rows[a])
        for i in range(a - 1, -1, -1):
            row = G.rows[i]
            out = [F.add(F.mul(c, u1), row[j]) for j, c in enumerate(out)]
        # Horner in u1 accumulates rows top down; row i carries X1^i, so run
        # from i=a downward multiplying by u1 once per step
        return out
    return list(G.rows[a])


def _eval_second(F, coeffs, Q):
    v0, v1 = Q.coords()
    if v0 == 1:
        acc = 0
        for c in reversed(coeffs):
            acc = F.add(F.mul(acc, v1), c)
        return acc
    return coeffs[-1]


def count_points(F, m=1, budget=None, part=None):
    """Rational point count of the zero set over the degree-m extension by
    full enumeration.

    part=(k, n) restricts to first components with index = k mod n; the
    full count is the sum over k of the n restricted counts.
    """
    if F.is_zero():
        raise ZeroPolynomial("zero polynomial has no curve")
    if m < 1:
        raise BadParameters("extension degree must be >= 1")
    cap = budget if budget is not None else DEFAULT_BUDGETS.point_budget
    L = extension_field(F.field, m)
    if (L.order + 1) ** 2 > cap:
        raise Infeasible(
            f"({L.order}+1)^2 points exceed the enumeration budget {cap}"
        )
    G = F.map_field(L)
    pts = enum_p1(L)
    total = 0
    for ix, P in enumerate(pts):
        if part is not None and ix % part[1] != part[0]:
            continue
        coeffs = _restrict_first(G, P)
        if all(c == 0 for c in coeffs):
            total += len(pts)
            continue
        for Q in pts:
            if _eval_second(L, coeffs, Q) == 0:
                total += 1
    return total
