import pytest

from _oracles import T42
from bifill.analysis import (
    certify_smooth,
    common_zeros,
    conjugate_norms,
    find_factor,
    is_abs_irreducible,
    jacobian_system,
    reduced_system,
    singular_points,
    validate_setup,
    verify_witness,
    witness_point,
)
from bifill.bipoly import divides, eval_bipoly, parse_bipoly
from bifill.errors import Infeasible, SetupViolation
from bifill.families import _ruling_pair, construct, pair_curve
from bifill.filling import frobenius_forms
from bifill.geom import rational_pairs
from bifill.gf import parse_field_spec


def field(q):
    return parse_field_spec(f"q={q}")


# -- smoothness certification ----------------------------------------------------

def test_certify_smooth_on_the_quartic(gf2):
    F = construct(2)
    assert F.text() == T42
    cert = certify_smooth(F)
    assert cert.verdict == "Smooth"
    assert cert.witness is None
    assert len(cert.trace) > 0


def test_certify_singular_fiber_product(gf2):
    KX, KY = frobenius_forms(gf2)
    F = KX * KY
    cert = certify_smooth(F)
    assert cert.verdict == "Singular"
    assert cert.witness is not None
    assert verify_witness(F, cert)


def test_witness_point_kills_the_jacobian(gf2):
    KX, KY = frobenius_forms(gf2)
    F = KX * KY
    cert = certify_smooth(F)
    point, m = witness_point(F, cert)
    assert m >= 1
    for form in jacobian_system(F):
        assert eval_bipoly(form, point).i == 0


def test_singular_locus_of_fiber_product_is_the_rational_grid(gf2):
    KX, KY = frobenius_forms(gf2)
    tagged = singular_points(KX * KY, 1)
    assert {m for _, m in tagged} == {1}
    assert {p.text() for p, _ in tagged} == {
        pair.text() for pair in rational_pairs(gf2)
    }


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_constructed_curves_are_certified_smooth(q):
    assert certify_smooth(construct(q)).verdict == "Smooth"


# -- jacobian and reduced systems ------------------------------------------------

def test_jacobian_system_shapes(gf3):
    F = construct(3)
    forms = jacobian_system(F)
    assert len(forms) == 5
    assert forms[0] is F
    assert forms[1].bidegree == (F.a - 1, F.b)
    assert forms[3].bidegree == (F.a, F.b - 1)


def test_common_zeros_of_the_two_rulings(gf2):
    KX, KY = frobenius_forms(gf2)
    zeros = common_zeros([KX, KY], 1)
    assert {p.text() for p in zeros} == {pair.text() for pair in rational_pairs(gf2)}


def test_reduced_system_frozen_gf5():
    f, g = _ruling_pair(5)
    rs = reduced_system(f, g)
    assert rs.e1.text() == "2*X0^5*Y1^5 + 3*X1^5*Y0^5"
    assert all(e.bidegree == (5, 5) for e in rs.as_tuple())


@pytest.mark.parametrize("q,m", [(5, 1), (5, 2), (4, 1), (4, 2), (3, 1), (3, 2)])
def test_reduced_system_matches_jacobian_zeros(q, m):
    f, g = _ruling_pair(q)
    F = pair_curve(f, g)
    rs = reduced_system(f, g)
    zj = common_zeros(jacobian_system(F), m)
    ze = common_zeros(rs.as_tuple(), m)
    assert zj == ze
    assert zj == set()


# -- setup validation ------------------------------------------------------------

def test_validate_setup_accepts_constructed_pairs():
    for q in (3, 4, 5, 7):
        f, g = _ruling_pair(q)
        assert validate_setup(f, g)


def test_validate_setup_rejects_rational_vanishing(gf5):
    # -4 = 1 is a square, so Y0^6 + 4*Y1^6 vanishes at rational points
    f = parse_bipoly("Y0^6 + 4*Y1^6", gf5)
    g = parse_bipoly("X0^6 + 3*X1^6", gf5)
    assert not validate_setup(f, g)
    with pytest.raises(SetupViolation):
        pair_curve(f, g)


def test_validate_setup_rejects_repeated_factors(gf3):
    # (Y0^2 + Y1^2)^2 is nonvanishing on rational points but not squarefree
    f = parse_bipoly("Y0^4 + 2*Y0^2*Y1^2 + Y1^4", gf3)
    g = parse_bipoly("X0^4 + X1^4", gf3)
    assert not validate_setup(f, g)


def test_pair_curve_check_false_bypasses_the_gate(gf5):
    f = parse_bipoly("Y0^6 + 4*Y1^6", gf5)
    g = parse_bipoly("X0^6 + 4*X1^6", gf5)
    F = pair_curve(f, g, check=False)
    assert F.bidegree == (6, 6)


# -- absolute irreducibility -----------------------------------------------------

def test_methods_agree_on_the_quartic(gf2):
    F = construct(2)
    ra = is_abs_irreducible(F, method="A")
    rb = is_abs_irreducible(F, method="B")
    assert ra.irreducible and ra.method == "A"
    assert rb.irreducible and rb.method == "B"


@pytest.mark.parametrize("q", [3, 4, 5])
def test_method_b_is_budgeted_on_larger_fields(q):
    # exhaustive division or norm scans blow the default budget; the honest
    # answer is Infeasible, not a guess
    with pytest.raises(Infeasible):
        is_abs_irreducible(construct(q), method="B")


@pytest.mark.parametrize("q", [3, 4, 5])
def test_method_a_certifies_constructed_curves(q):
    r = is_abs_irreducible(construct(q), method="A")
    assert r.irreducible and r.method == "A"


def test_norm_detects_conjugate_factorization(gf2):
    # X0^2 + X0*X1 + X1^2 is the GF(4)-norm of a linear form
    C = parse_bipoly("X0^2 + X0*X1 + X1^2", gf2)
    r = is_abs_irreducible(C, method="B")
    assert not r.irreducible
    assert r.method == "B"
    norms = conjugate_norms(gf2, 2, 0, 2)
    assert tuple(tuple(row) for row in C.rows) in norms


def test_find_factor_on_a_product(gf3):
    A = parse_bipoly("X0*Y0 + X1*Y1", gf3)
    B = parse_bipoly("X0*Y1 + 2*X1*Y0", gf3)
    G = find_factor(A * B)
    assert G is not None
    assert divides(G, A * B) is not None


def test_find_factor_none_on_constructed_curve(gf3):
    assert find_factor(construct(3)) is None


def test_reducible_form_rejected_by_fast_scan(gf2):
    KX, KY = frobenius_forms(gf2)
    r = is_abs_irreducible(KX * KY, method="B")
    assert not r.irreducible
