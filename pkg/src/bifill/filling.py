"""Filling verification and the constructive splitting of a filling form
along the two Frobenius-difference forms.

A form F of bi-degree (a,b) over GF(q) is filling when it vanishes at all
(q+1)^2 rational points of P1xP1. Every such F with a,b >= q+1 splits as
F = f*kx + g*ky against kx = X0^q*X1 - X0*X1^q and ky = Y0^q*Y1 - Y0*Y1^q;
the splitting below is deterministic but not unique, and the recombination
identity is asserted at exact coefficient level before returning.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bipoly import BiPoly, homogenize
from .errors import BidegreeTooSmall, NotFilling, ZeroPolynomial
from .geom import _eval_second, _restrict_first, enum_p1
from .gf import UniPoly

__all__ = [
    "frobenius_forms",
    "is_filling",
    "Decomposition",
    "decompose",
    "min_bidegree_check",
]


def frobenius_forms(field):
    """(kx, ky): the bi-degree (q+1,0) and (0,q+1) forms whose zero sets are
    exactly the pairs with rational first (resp. second) component."""
    q = field.order
    kx = [[0] for _ in range(q + 2)]
    kx[1][0] = 1
    kx[q][0] = field.neg(1)
    KX = BiPoly(field, q + 1, 0, kx)
    return KX, KX.transpose()


def is_filling(F):
    """True iff F vanishes at every rational point of P1xP1."""
    if F.is_zero():
        raise ZeroPolynomial("the zero polynomial does not define a curve")
    L = F.field
    pts = enum_p1(L)
    for P in pts:
        coeffs = _restrict_first(F, P)
        for Q in pts:
            if _eval_second(L, coeffs, Q) != 0:
                return False
    return True


@dataclass(frozen=True)
class Decomposition:
    f: BiPoly
    g: BiPoly
    kx: BiPoly
    ky: BiPoly

    def recombine(self):
        return self.f * self.kx + self.g * self.ky

    def verify(self, F):
        return self.recombine() == F


def _homog_y(field, coeffs, deg):
    """Degree-deg form in (Y0,Y1) from low-first coefficients (entry j is
    the Y1^j coefficient)."""
    rows = [[0] * (deg + 1)]
    for j, c in enumerate(coeffs):
        rows[0][j] = c
    return BiPoly(field, 0, deg, rows)


def _homog_x(field, coeffs, deg):
    rows = [[c] for c in list(coeffs) + [0] * (deg + 1 - len(coeffs))]
    return BiPoly(field, deg, 0, rows)


def decompose(F):
    """Split a filling form as f*kx + g*ky, tracing the constructive proof:
    reduce the chart polynomial modulo x^q-x then y^q-y, rehomogenize, and
    peel the two boundary rows into exactly divisible univariate pieces."""
    K = F.field
    q = K.order
    a, b = F.a, F.b
    if not is_filling(F):
        raise NotFilling("form does not vanish at all rational points")
    if a < q + 1 or b < q + 1:
        raise BidegreeTooSmall(f"bi-degree ({a},{b}) cannot split at q={q}")
    KX, KY = frobenius_forms(K)

    # chart identity: phi = u*(x - x^q) + v*(y - y^q)
    phi = F.dehomogenize("X0Y0")
    mx = UniPoly(K, [0, K.neg(1)] + [0] * (q - 2) + [1])  # x^q - x
    my = mx
    uq, rem = phi.divmod_uni(mx, "x")
    vq, rem2 = rem.divmod_uni(my, "y")
    assert rem2.is_zero(), "filling form failed chart reduction"
    u = -uq
    v = -vq

    # rehomogenize against the degree-q halves MX = X0^(q-1)*X1 - X1^q and
    # MY = Y0^(q-1)*Y1 - Y1^q, so F = U*MX + V*MY at bi-degrees (a-q, b)
    # and (a, b-q)
    U = homogenize(u, a - q, b)
    V = homogenize(v, a, b - q)

    # the X1^(a-q) boundary row of U is a Y-form vanishing at all (1:t);
    # peel its exact MY cofactor
    f1 = UniPoly(K, U.rows[a - q])
    f2q, r3 = f1.divmod_poly(my)
    assert r3.is_zero(), "boundary row not divisible along the second ruling"
    f2 = -f2q
    assert f2.degree <= b - q
    U0 = BiPoly(K, a - q - 1, b, U.rows[: a - q])

    # shift the peeled piece across: V0 = X1^(a-q)*f2*MX + V
    MX = BiPoly.monomial(K, q, 0, 1, 0) - BiPoly.monomial(K, q, 0, q, 0)
    shift = BiPoly.monomial(K, a - q, 0, a - q, 0) * MX * _homog_y(K, f2.coeffs, b - q)
    V0 = shift + V

    # the Y1^(b-q) boundary column of V0 is an X-form vanishing at all q+1
    # rational points; peel its exact kx cofactor
    g1 = UniPoly(K, [row[b - q] for row in V0.rows])
    f3q, r4 = g1.divmod_poly(mx)
    assert r4.is_zero(), "boundary column not divisible along the first ruling"
    f3 = -f3q
    assert f3.degree <= a - q - 1
    f3form = _homog_x(K, f3.coeffs, a - q - 1)

    W = V0 - f3form * KX * BiPoly.monomial(K, 0, b - q, 0, b - q)
    assert all(row[b - q] == 0 for row in W.rows)
    g = BiPoly(K, a, b - q - 1, [row[: b - q] for row in W.rows])

    # f = U0 + f3*(Y0^(q-1)*Y1^(b-q+1) - Y1^b)
    MYtail = BiPoly.monomial(K, 0, b, 0, b - q + 1) - BiPoly.monomial(K, 0, b, 0, b)
    f = U0 + f3form * MYtail

    out = Decomposition(f=f, g=g, kx=KX, ky=KY)
    assert out.verify(F), "recombination failed"
    return out


def min_bidegree_check(F, irreducible):
    """Diagnostic for the degree floor: an irreducible filling form cannot
    have either bi-degree entry below q+1."""
    q = F.field.order
    if irreducible and (F.a < q + 1 or F.b < q + 1):
        return "Contradiction"
    return "Consistent"
