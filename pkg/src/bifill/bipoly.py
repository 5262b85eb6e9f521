"""Bi-homogeneous polynomials in (X0,X1;Y0,Y1) and their affine charts.

A form of bi-degree (a,b) is stored as an (a+1) x (b+1) matrix of element
indices; entry [i][j] multiplies X0^(a-i) X1^i Y0^(b-j) Y1^j. The zero
polynomial is representable at every declared bi-degree, and bi-homogeneity
is structural. Affine chart polynomials keep their matrices trimmed so the
declared degrees are the actual ones.

Text grammar:  poly := term ('+' term)*
               term := [coeff '*'] factor ('*' factor)*
               factor := var ['^' nat]        var := X0|X1|Y0|Y1
               coeff := nat | '[' nat (',' nat)* ']'
Whitespace is insignificant. A bare nat coefficient is the image of the
integer (reduced mod p); the bracket form lists polynomial-basis digits,
constant first, and must match the field degree exactly. As conveniences
beyond the grammar, '-' is accepted between terms and a bare coefficient
may stand as a (0,0)-degree term; canonical output uses neither.
"""

from __future__ import annotations

import re

from .errors import (
    BadCoefficient,
    BadShape,
    BidegreeMismatch,
    FieldMismatch,
    MixedBidegree,
    ParseError,
    ZeroDivisor,
    ZeroPolynomial,
)
from .gf import FieldElement, UniPoly, embedding_map, extension_field

__all__ = [
    "BiPoly",
    "AffinePoly",
    "parse_bipoly",
    "eval_bipoly",
    "homogenize",
    "divides",
    "resultant_elim",
]

CHARTS = ("X0Y0", "X0Y1", "X1Y0", "X1Y1")


class BiPoly:
    __slots__ = ("field", "a", "b", "rows")

    def __init__(self, field, a, b, rows):
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != a + 1 or any(len(r) != b + 1 for r in rows):
            raise BadShape(f"matrix shape does not match bi-degree ({a},{b})")
        for r in rows:
            for c in r:
                if not isinstance(c, int) or not 0 <= c < field.order:
                    raise BadShape(f"coefficient index {c!r} out of range")
        self.field = field
        self.a = a
        self.b = b
        self.rows = rows

    @classmethod
    def _raw(cls, field, a, b, rows):
        self = object.__new__(cls)
        self.field = field
        self.a = a
        self.b = b
        self.rows = rows
        return self

    @classmethod
    def zero(cls, field, a, b):
        return cls._raw(field, a, b, tuple((0,) * (b + 1) for _ in range(a + 1)))

    @classmethod
    def monomial(cls, field, a, b, i, j, c=1):
        """c * X0^(a-i) X1^i Y0^(b-j) Y1^j inside bi-degree (a,b)."""
        rows = [[0] * (b + 1) for _ in range(a + 1)]
        rows[i][j] = c.i if isinstance(c, FieldElement) else c
        return cls(field, a, b, rows)

    @property
    def bidegree(self):
        return (self.a, self.b)

    def is_zero(self):
        return all(c == 0 for r in self.rows for c in r)

    def __eq__(self, other):
        return (
            isinstance(other, BiPoly)
            and self.field is other.field
            and self.a == other.a
            and self.b == other.b
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((id(self.field), self.a, self.b, self.rows))

    def _check(self, other):
        if self.field is not other.field:
            raise FieldMismatch("forms over different fields")

    def __add__(self, other):
        self._check(other)
        if (self.a, self.b) != (other.a, other.b):
            raise BidegreeMismatch(f"{self.bidegree} vs {other.bidegree}")
        F = self.field
        rows = tuple(
            tuple(F.add(x, y) for x, y in zip(r1, r2))
            for r1, r2 in zip(self.rows, other.rows)
        )
        return BiPoly._raw(F, self.a, self.b, rows)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        F = self.field
        rows = tuple(tuple(F.neg(x) for x in r) for r in self.rows)
        return BiPoly._raw(F, self.a, self.b, rows)

    def scale(self, c):
        c = c.i if isinstance(c, FieldElement) else c
        F = self.field
        rows = tuple(tuple(F.mul(x, c) for x in r) for r in self.rows)
        return BiPoly._raw(F, self.a, self.b, rows)

    def __mul__(self, other):
        self._check(other)
        F = self.field
        a, b = self.a + other.a, self.b + other.b
        out = [[0] * (b + 1) for _ in range(a + 1)]
        for i1, r1 in enumerate(self.rows):
            for j1, c1 in enumerate(r1):
                if c1 == 0:
                    continue
                for i2, r2 in enumerate(other.rows):
                    for j2, c2 in enumerate(r2):
                        if c2:
                            out[i1 + i2][j1 + j2] = F.add(
                                out[i1 + i2][j1 + j2], F.mul(c1, c2)
                            )
        return BiPoly._raw(F, a, b, tuple(tuple(r) for r in out))

    def transpose(self):
        """Swap the roles of the X and Y variable blocks."""
        rows = tuple(
            tuple(self.rows[i][j] for i in range(self.a + 1))
            for j in range(self.b + 1)
        )
        return BiPoly._raw(self.field, self.b, self.a, rows)

    # -- evaluation ----------------------------------------------------------

    def eval(self, x0, x1, y0, y1):
        """Value at raw coordinate indices over the owner field."""
        F = self.field
        a, b = self.a, self.b
        px0 = _powers(F, x0, a)
        px1 = _powers(F, x1, a)
        py0 = _powers(F, y0, b)
        py1 = _powers(F, y1, b)
        acc = 0
        for i, row in enumerate(self.rows):
            xf = F.mul(px0[a - i], px1[i])
            if xf == 0:
                continue
            rowacc = 0
            for j, c in enumerate(row):
                if c:
                    rowacc = F.add(rowacc, F.mul(c, F.mul(py0[b - j], py1[j])))
            acc = F.add(acc, F.mul(xf, rowacc))
        return acc

    # -- calculus ------------------------------------------------------------

    def partial(self, var):
        """Formal partial derivative; a depleted variable block yields the
        zero polynomial at the clamped bi-degree."""
        F = self.field
        p = F.p
        a, b = self.a, self.b
        if var in ("X0", "X1") and a == 0:
            return BiPoly.zero(F, 0, b)
        if var in ("Y0", "Y1") and b == 0:
            return BiPoly.zero(F, a, 0)
        if var == "X0":
            rows = tuple(
                tuple(F.mul(self.rows[i][j], (a - i) % p) for j in range(b + 1))
                for i in range(a)
            )
            return BiPoly._raw(F, a - 1, b, rows)
        if var == "X1":
            rows = tuple(
                tuple(F.mul(self.rows[i + 1][j], (i + 1) % p) for j in range(b + 1))
                for i in range(a)
            )
            return BiPoly._raw(F, a - 1, b, rows)
        if var == "Y0":
            rows = tuple(
                tuple(F.mul(self.rows[i][j], (b - j) % p) for j in range(b))
                for i in range(a + 1)
            )
            return BiPoly._raw(F, a, b - 1, rows)
        if var == "Y1":
            rows = tuple(
                tuple(F.mul(self.rows[i][j + 1], (j + 1) % p) for j in range(b))
                for i in range(a + 1)
            )
            return BiPoly._raw(F, a, b - 1, rows)
        raise ValueError(f"unknown variable {var!r}")

    # -- charts --------------------------------------------------------------

    def dehomogenize(self, chart):
        """Affine polynomial with the two chart variables set to 1.

        Chart X0Y0 reads (x,y) = (X1, Y1); each killed index is reversed,
        so chart X1Y0 reads (x,y) = (X0, Y1), and so on.
        """
        if chart not in CHARTS:
            raise ValueError(f"unknown chart {chart!r}")
        a, b = self.a, self.b
        rev_i = chart[:2] == "X1"
        rev_j = chart[2:] == "Y1"
        rows = [[0] * (b + 1) for _ in range(a + 1)]
        for i, row in enumerate(self.rows):
            ti = a - i if rev_i else i
            for j, c in enumerate(row):
                tj = b - j if rev_j else j
                rows[ti][tj] = c
        return AffinePoly(self.field, rows)

    # -- text and JSON -------------------------------------------------------

    def text(self):
        F = self.field
        a, b = self.a, self.b
        parts = []
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row):
                if c == 0:
                    continue
                factors = []
                if a - i > 0:
                    factors.append("X0" if a - i == 1 else f"X0^{a - i}")
                if i > 0:
                    factors.append("X1" if i == 1 else f"X1^{i}")
                if b - j > 0:
                    factors.append("Y0" if b - j == 1 else f"Y0^{b - j}")
                if j > 0:
                    factors.append("Y1" if j == 1 else f"Y1^{j}")
                if not factors:
                    parts.append(F.text_of(c))
                elif c == 1:
                    parts.append("*".join(factors))
                else:
                    parts.append("*".join([F.text_of(c)] + factors))
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        return {
            "bidegree": [self.a, self.b],
            "coeffs": [list(r) for r in self.rows],
            "field": self.field.describe(),
        }

    def map_field(self, other):
        """The same form read over an extension field."""
        if other is self.field:
            return self
        emap = embedding_map(self.field, other)
        rows = tuple(tuple(emap[c] for c in r) for r in self.rows)
        return BiPoly._raw(other, self.a, self.b, rows)

    def __repr__(self):
        return self.text()


def _powers(F, x, n):
    out = [1] * (n + 1)
    for k in range(1, n + 1):
        out[k] = F.mul(out[k - 1], x)
    return out


def eval_bipoly(F, point):
    """Evaluate at a PointPair or a raw 4-tuple of coordinates.

    Coordinates from a declared extension of the owner lift F before
    evaluating; the result is a FieldElement of the coordinate field.
    """
    if hasattr(point, "first"):
        coord_field = point.field
        coords = (point.first.u0, point.first.u1, point.second.u0, point.second.u1)
    else:
        x0, x1, y0, y1 = point
        coord_field = x0.field if isinstance(x0, FieldElement) else F.field
        coords = (x0, x1, y0, y1)
    idx = [c.i if isinstance(c, FieldElement) else c for c in coords]
    G = F.map_field(coord_field)
    return FieldElement(coord_field, G.eval(*idx))


class AffinePoly:
    """Bivariate chart polynomial; [i][j] multiplies x^i y^j; the stored
    matrix is trimmed so deg_x, deg_y are exact (the zero polynomial is the
    1 x 1 zero matrix)."""

    __slots__ = ("field", "deg_x", "deg_y", "rows")

    def __init__(self, field, rows):
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise BadShape("ragged coefficient matrix")
        while len(rows) > 1 and all(c == 0 for c in rows[-1]):
            rows.pop()
        w = len(rows[0])
        while w > 1 and all(r[w - 1] == 0 for r in rows):
            w -= 1
        rows = [r[:w] for r in rows]
        self.field = field
        self.deg_x = len(rows) - 1
        self.deg_y = w - 1
        self.rows = tuple(tuple(r) for r in rows)

    @classmethod
    def zero(cls, field):
        return cls(field, [[0]])

    def is_zero(self):
        return self.deg_x == 0 and self.deg_y == 0 and self.rows[0][0] == 0

    def __eq__(self, other):
        return (
            isinstance(other, AffinePoly)
            and self.field is other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((id(self.field), self.rows))

    def _check(self, other):
        if self.field is not other.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other):
        self._check(other)
        F = self.field
        nx = max(self.deg_x, other.deg_x)
        ny = max(self.deg_y, other.deg_y)
        rows = [[0] * (ny + 1) for _ in range(nx + 1)]
        for i, r in enumerate(self.rows):
            for j, c in enumerate(r):
                rows[i][j] = c
        for i, r in enumerate(other.rows):
            for j, c in enumerate(r):
                rows[i][j] = F.add(rows[i][j], c)
        return AffinePoly(F, rows)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        F = self.field
        return AffinePoly(F, [[F.neg(c) for c in r] for r in self.rows])

    def __mul__(self, other):
        self._check(other)
        F = self.field
        if self.is_zero() or other.is_zero():
            return AffinePoly.zero(F)
        nx = self.deg_x + other.deg_x
        ny = self.deg_y + other.deg_y
        out = [[0] * (ny + 1) for _ in range(nx + 1)]
        for i1, r1 in enumerate(self.rows):
            for j1, c1 in enumerate(r1):
                if c1 == 0:
                    continue
                for i2, r2 in enumerate(other.rows):
                    for j2, c2 in enumerate(r2):
                        if c2:
                            out[i1 + i2][j1 + j2] = F.add(
                                out[i1 + i2][j1 + j2], F.mul(c1, c2)
                            )
        return AffinePoly(F, out)

    def scale(self, c):
        c = c.i if isinstance(c, FieldElement) else c
        F = self.field
        return AffinePoly(F, [[F.mul(x, c) for x in r] for r in self.rows])

    def eval_at(self, x, y):
        F = self.field
        x = x.i if isinstance(x, FieldElement) else x
        y = y.i if isinstance(y, FieldElement) else y
        py = _powers(F, y, self.deg_y)
        acc = 0
        for row in reversed(self.rows):
            rowval = 0
            for j, c in enumerate(row):
                if c:
                    rowval = F.add(rowval, F.mul(c, py[j]))
            acc = F.add(F.mul(acc, x), rowval)
        return acc

    def y_coeffs(self):
        """Coefficients as polynomials in x: entry j is the x-polynomial
        multiplying y^j."""
        F = self.field
        return [
            UniPoly(F, [self.rows[i][j] for i in range(self.deg_x + 1)])
            for j in range(self.deg_y + 1)
        ]

    def x_coeffs(self):
        F = self.field
        return [
            UniPoly(F, list(self.rows[i]))
            for i in range(self.deg_x + 1)
        ]

    @classmethod
    def from_y_coeffs(cls, field, polys):
        nx = max((p.degree for p in polys if not p.is_zero()), default=0)
        rows = [[0] * len(polys) for _ in range(nx + 1)]
        for j, p in enumerate(polys):
            for i, c in enumerate(p.coeffs):
                rows[i][j] = c
        return cls(field, rows)

    @classmethod
    def from_x_coeffs(cls, field, polys):
        ny = max((p.degree for p in polys if not p.is_zero()), default=0)
        rows = [[0] * (ny + 1) for _ in range(len(polys))]
        for i, p in enumerate(polys):
            for j, c in enumerate(p.coeffs):
                rows[i][j] = c
        return cls(field, rows)

    def as_unipoly(self, var):
        """Convert to a univariate polynomial when the other degree is 0."""
        if var == "x":
            if self.deg_y != 0:
                raise BadShape("polynomial still involves y")
            return UniPoly(self.field, [r[0] for r in self.rows])
        if self.deg_x != 0:
            raise BadShape("polynomial still involves x")
        return UniPoly(self.field, list(self.rows[0]))

    def divmod_uni(self, m, var):
        """Long division by a univariate polynomial in var with invertible
        leading coefficient; returns (quotient, remainder)."""
        F = self.field
        if m.is_zero():
            raise ZeroDivisor("division by the zero polynomial")
        dm = m.degree
        if dm == 0:
            return self.scale(F.inv(m.coeffs[0])), AffinePoly.zero(F)
        if var == "x":
            cols = self.x_coeffs()  # entry i multiplies x^i, a y-polynomial
        else:
            cols = self.y_coeffs()
        inv_lc = F.inv(m.lc())
        quot = [UniPoly(F, ()) for _ in range(max(len(cols) - dm, 0))]
        work = list(cols)
        for i in range(len(work) - 1, dm - 1, -1):
            piece = work[i]
            if piece.is_zero():
                continue
            qc = piece.scale(inv_lc)
            quot[i - dm] = qc
            for k, mc in enumerate(m.coeffs):
                if mc:
                    work[i - dm + k] = work[i - dm + k] - qc.scale(mc)
        rem = work[:dm] if dm <= len(work) else work
        builder = AffinePoly.from_x_coeffs if var == "x" else AffinePoly.from_y_coeffs
        qpoly = builder(F, quot) if quot else AffinePoly.zero(F)
        rpoly = builder(F, rem) if rem else AffinePoly.zero(F)
        return qpoly, rpoly

    def text(self):
        parts = []
        F = self.field
        for i, row in enumerate(self.rows):
            for j, c in enumerate(row):
                if c == 0:
                    continue
                factors = []
                if i > 0:
                    factors.append("x" if i == 1 else f"x^{i}")
                if j > 0:
                    factors.append("y" if j == 1 else f"y^{j}")
                if not factors:
                    parts.append(F.text_of(c))
                elif c == 1:
                    parts.append("*".join(factors))
                else:
                    parts.append("*".join([F.text_of(c)] + factors))
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return self.text()


def homogenize(aff, a, b, chart="X0Y0"):
    """Inverse of dehomogenize at a declared bi-degree (a,b)."""
    if aff.deg_x > a or aff.deg_y > b:
        raise BidegreeMismatch(
            f"chart degrees ({aff.deg_x},{aff.deg_y}) exceed target ({a},{b})"
        )
    if chart not in CHARTS:
        raise ValueError(f"unknown chart {chart!r}")
    rev_i = chart[:2] == "X1"
    rev_j = chart[2:] == "Y1"
    rows = [[0] * (b + 1) for _ in range(a + 1)]
    for i, row in enumerate(aff.rows):
        ti = a - i if rev_i else i
        for j, c in enumerate(row):
            tj = b - j if rev_j else j
            rows[ti][tj] = c
    return BiPoly(aff.field, a, b, rows)


# -- parsing -------------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<var>X0|X1|Y0|Y1)|(?P<nat>\d+)|(?P<lb>\[)|(?P<rb>\])"
    r"|(?P<op>[*^+,-]))"
)


def _tokenize(text):
    pos = 0
    out = []
    n = len(text)
    while pos < n:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == m.start():
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            at = n - len(stripped)
            raise ParseError(f"unexpected character {stripped[0]!r}", at)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, field, textlen):
        self.toks = tokens
        self.k = 0
        self.field = field
        self.textlen = textlen

    def peek(self):
        return self.toks[self.k] if self.k < len(self.toks) else (None, None, self.textlen)

    def take(self):
        t = self.peek()
        self.k += 1
        return t

    def expect(self, kind, value=None):
        t = self.take()
        if t[0] != kind or (value is not None and t[1] != value):
            raise ParseError(f"expected {value or kind}", t[2])
        return t

    def parse(self):
        terms = [self.term(negate=False)]
        while True:
            kind, val, pos = self.peek()
            if kind is None:
                break
            if kind == "op" and val in "+-":
                self.take()
                terms.append(self.term(negate=(val == "-")))
            else:
                raise ParseError("expected '+' between terms", pos)
        return terms

    def term(self, negate):
        F = self.field
        coeff = 1
        exps = {"X0": 0, "X1": 0, "Y0": 0, "Y1": 0}
        kind, val, pos = self.peek()
        saw_any = False
        if kind == "nat" or kind == "lb":
            coeff = self.coefficient()
            saw_any = True
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                self.factor(exps)
                saw_any = True
            elif kind == "var":
                raise ParseError("missing '*' after coefficient", pos)
        else:
            self.factor(exps)
            saw_any = True
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.take()
                self.factor(exps)
            else:
                break
        if not saw_any:
            raise ParseError("empty term", pos)
        if negate:
            coeff = F.neg(coeff)
        return coeff, exps

    def coefficient(self):
        F = self.field
        kind, val, pos = self.take()
        if kind == "nat":
            return int(val) % F.p  # integer literals act through 1
        if kind == "lb":
            digits = []
            while True:
                t = self.take()
                if t[0] != "nat":
                    raise ParseError("expected digit inside coefficient", t[2])
                digits.append(int(t[1]))
                t = self.take()
                if t[0] == "rb":
                    break
                if not (t[0] == "op" and t[1] == ","):
                    raise ParseError("expected ',' or ']' in coefficient", t[2])
            if len(digits) != F.e or any(not 0 <= d < F.s for d in digits):
                raise BadCoefficient(
                    f"{digits} is not a digit vector for GF({F.order})"
                )
            return F.index_of(digits)
        raise ParseError("expected coefficient", pos)

    def factor(self, exps):
        t = self.take()
        if t[0] != "var":
            raise ParseError("expected variable", t[2])
        var = t[1]
        kind, val, pos = self.peek()
        exp = 1
        if kind == "op" and val == "^":
            self.take()
            t2 = self.expect("nat")
            exp = int(t2[1])
        exps[var] += exp


def parse_bipoly(text, field):
    """Parse polynomial text over the given field; all terms must share one
    bi-degree and like terms combine."""
    tokens = _tokenize(text)
    if not tokens:
        raise ParseError("empty polynomial text", 0)
    terms = _Parser(tokens, field, len(text)).parse()
    bidegrees = {
        (e["X0"] + e["X1"], e["Y0"] + e["Y1"]) for _c, e in terms
    }
    if len(bidegrees) != 1:
        raise MixedBidegree(f"terms of bi-degrees {sorted(bidegrees)}")
    a, b = bidegrees.pop()
    F = field
    rows = [[0] * (b + 1) for _ in range(a + 1)]
    for c, e in terms:
        i, j = e["X1"], e["Y1"]
        rows[i][j] = F.add(rows[i][j], c)
    return BiPoly(field, a, b, rows)


# -- divisibility ---------------------------------------------------------------

def divides(G, F):
    """Exact cofactor H with G*H = F, or None. Solves the linear system in
    H's coefficients and re-multiplies to confirm (mul by a nonzero form is
    injective, so H is unique when it exists)."""
    if G.is_zero():
        raise ZeroDivisor("zero divisor")
    G._check(F)
    ah, bh = F.a - G.a, F.b - G.b
    if ah < 0 or bh < 0:
        return None
    K = F.field
    ncols = (ah + 1) * (bh + 1)
    mat = []
    for fi in range(F.a + 1):
        for fj in range(F.b + 1):
            row = [0] * (ncols + 1)
            for hi in range(max(0, fi - G.a), min(ah, fi) + 1):
                for hj in range(max(0, fj - G.b), min(bh, fj) + 1):
                    row[hi * (bh + 1) + hj] = G.rows[fi - hi][fj - hj]
            row[ncols] = F.rows[fi][fj]
            mat.append(row)
    sol = _solve_exact(K, mat, ncols)
    if sol is None:
        return None
    rows = tuple(
        tuple(sol[i * (bh + 1) + j] for j in range(bh + 1)) for i in range(ah + 1)
    )
    H = BiPoly._raw(K, ah, bh, rows)
    if G * H == F:
        return H
    return None


def _solve_exact(K, mat, ncols):
    """Gaussian elimination for an overdetermined exact system; returns the
    unique solution vector or None when inconsistent."""
    nrows = len(mat)
    piv_rows = []
    r = 0
    for c in range(ncols):
        sel = None
        for i in range(r, nrows):
            if mat[i][c] != 0:
                sel = i
                break
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = K.inv(mat[r][c])
        mat[r] = [K.mul(x, inv) for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [K.sub(x, K.mul(f, y)) for x, y in zip(mat[i], mat[r])]
        piv_rows.append(c)
        r += 1
    for i in range(r, nrows):
        if mat[i][ncols] != 0:
            return None
    sol = [0] * ncols
    for row_idx, c in enumerate(piv_rows):
        sol[c] = mat[row_idx][ncols]
    return sol


# -- resultants -----------------------------------------------------------------

def _uni_resultant(a, b):
    """Exact Sylvester determinant of two univariate polynomials by the
    Euclidean recurrence, signs included."""
    L = a.field
    if a.is_zero() or b.is_zero():
        return 0
    res = 1
    while True:
        da, db = a.degree, b.degree
        if db == 0:
            return L.mul(res, L.pow_(b.coeffs[0], da))
        if da == 0:
            return L.mul(res, L.pow_(a.coeffs[0], db))
        if da < db:
            if (da * db) % 2 == 1:
                res = L.neg(res)
            a, b = b, a
            continue
        r = a % b
        if r.is_zero():
            return 0
        res = L.mul(res, L.pow_(b.lc(), da - r.degree))
        if (da * db) % 2 == 1:
            res = L.neg(res)
        a, b = b, r


def resultant_elim(A, B, var):
    """Resultant of two chart polynomials eliminating var; the result is a
    univariate polynomial in the other variable over the owner field.

    Computed as the exact Sylvester determinant by evaluation at enough
    points of an extension field and interpolation back; specialization is
    valid at points where neither leading coefficient vanishes, and the
    interpolated coefficients land in the owner field exactly.
    """
    if A.is_zero() or B.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    A._check(B)
    K = A.field
    if var == "x":
        # reuse the y-elimination path with the roles of x and y swapped
        At = AffinePoly(K, _transpose_rows(A.rows))
        Bt = AffinePoly(K, _transpose_rows(B.rows))
        return resultant_elim(At, Bt, "y")
    if var != "y":
        raise ValueError(f"unknown variable {var!r}")
    ca = A.y_coeffs()
    cb = B.y_coeffs()
    na, nb = A.deg_y, B.deg_y
    if na == 0 and nb == 0:
        return UniPoly(K, (1,))
    if na == 0:
        base = ca[0]
        out = UniPoly(K, (1,))
        for _ in range(nb):
            out = out * base
        return out
    if nb == 0:
        base = cb[0]
        out = UniPoly(K, (1,))
        for _ in range(na):
            out = out * base
        return out
    lca, lcb = ca[na], cb[nb]
    bound = na * B.deg_x + nb * A.deg_x
    need = bound + 1
    k = 1
    while K.order**k < need + lca.degree + lcb.degree:
        k += 1
    L = extension_field(K, k)
    emap = embedding_map(K, L)
    ca_l = [p.map_field(L, emap) for p in ca]
    cb_l = [p.map_field(L, emap) for p in cb]
    xs = []
    ys = []
    for xi in range(L.order):
        if ca_l[na].eval_at(xi) == 0 or cb_l[nb].eval_at(xi) == 0:
            continue
        fa = UniPoly(L, [p.eval_at(xi) for p in ca_l])
        fb = UniPoly(L, [p.eval_at(xi) for p in cb_l])
        xs.append(xi)
        ys.append(_uni_resultant(fa, fb))
        if len(xs) == need:
            break
    assert len(xs) == need, "extension field too small for interpolation"
    coeffs_l = _newton_interp(L, xs, ys)
    inv = {v: i for i, v in enumerate(emap)}
    out = []
    for c in coeffs_l:
        assert c in inv, "resultant coefficient escaped the owner field"
        out.append(inv[c])
    return UniPoly(K, out)


def _transpose_rows(rows):
    return tuple(tuple(rows[i][j] for i in range(len(rows))) for j in range(len(rows[0])))


def _newton_interp(L, xs, ys):
    """Coefficient list (constant first) of the interpolating polynomial."""
    n = len(xs)
    divided = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = L.sub(divided[i], divided[i - 1])
            den = L.sub(xs[i], xs[i - j])
            divided[i] = L.div(num, den)
    # Horner expansion of the Newton form into monomial coefficients
    coeffs = [0] * n
    coeffs[0] = divided[n - 1]
    deg = 0
    for k in range(n - 2, -1, -1):
        # multiply by (t - xs[k]) then add divided[k]
        nxk = L.neg(xs[k])
        for d in range(deg + 1, 0, -1):
            coeffs[d] = L.add(coeffs[d - 1], L.mul(coeffs[d], nxk))
        coeffs[0] = L.mul(coeffs[0], nxk)
        deg += 1
        coeffs[0] = L.add(coeffs[0], divided[k])
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs
