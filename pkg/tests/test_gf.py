import pytest
from hypothesis import given
from hypothesis import strategies as st

from bifill.errors import (
    BadParameters,
    DivisionByZero,
    NotASubfield,
    NotPrime,
)
from bifill.gf import (
    UniPoly,
    embedding_map,
    enumerate_field,
    extension_field,
    field_make,
    parse_field_spec,
    unipoly_factor,
    unipoly_gcd,
    unipoly_is_irreducible,
    unipoly_roots,
)

ORDERS = [2, 3, 4, 5, 8, 9]


def field(q):
    return parse_field_spec(f"q={q}")


# -- construction and canonical moduli ----------------------------------------

def test_canonical_moduli_frozen():
    assert field(4).modulus == (1, 1, 1)
    assert field(9).modulus == (1, 0, 1)
    assert field(16).modulus == (1, 0, 0, 1, 1)
    assert field(8).modulus == (1, 0, 1, 1)


def test_tower_modulus_frozen(gf9):
    T = extension_field(gf9, 2)
    assert T.base is gf9
    assert T.modulus == (1, 4, 1)
    assert T.order == 81


def test_extension_degree_one_is_identity(gf3):
    assert extension_field(gf3, 1) is gf3


def test_parse_field_spec_forms(gf9):
    assert parse_field_spec("p=3,e=2,mod=[1,0,1]").describe() == gf9.describe()
    assert parse_field_spec("q=9").order == 9
    with pytest.raises(NotPrime):
        parse_field_spec("q=6")
    with pytest.raises(BadParameters):
        parse_field_spec("q=9,p=3")
    with pytest.raises(BadParameters):
        parse_field_spec("r=7")
    with pytest.raises(BadParameters):
        parse_field_spec("p=3,e=2,mod=[1,0]")


def test_enumeration_counting_order(gf4):
    texts = [gf4.text_of(x.i) for x in enumerate_field(gf4)]
    assert texts == ["[0,0]", "[1,0]", "[0,1]", "[1,1]"]


# -- field axioms --------------------------------------------------------------

@given(
    q=st.sampled_from(ORDERS),
    data=st.tuples(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8)),
)
def test_field_axioms(q, data):
    K = field(q)
    a, b, c = (K.element(i % K.order) for i in data)
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + K.element(0) == a
    assert a * K.element(1) == a
    assert a - a == K.element(0)
    if a != K.element(0):
        assert a * (K.element(1) / a) == K.element(1)


@given(q=st.sampled_from(ORDERS), i=st.integers(0, 8))
def test_characteristic(q, i):
    K = field(q)
    a = K.element(i % K.order)
    acc = K.element(0)
    for _ in range(K.p):
        acc = acc + a
    assert acc == K.element(0)


def test_division_by_zero_is_both_types(gf5):
    with pytest.raises(DivisionByZero):
        gf5.element(1) / gf5.element(0)
    with pytest.raises(ZeroDivisionError):
        gf5.element(1) / gf5.element(0)


# -- Frobenius and embeddings --------------------------------------------------

@pytest.mark.parametrize("q,m", [(2, 2), (2, 3), (3, 2), (4, 2), (5, 2)])
def test_frobenius_fixed_subfield_count(q, m):
    K = field(q)
    E = extension_field(K, m)
    fixed = [x for x in enumerate_field(E) if x**q == x]
    assert len(fixed) == q


@pytest.mark.parametrize("q,m", [(2, 2), (3, 2), (4, 2), (9, 2)])
def test_embedding_is_a_homomorphism(q, m):
    K = field(q)
    E = extension_field(K, m)
    emap = embedding_map(K, E)
    for a in enumerate_field(K):
        for b in enumerate_field(K):
            assert emap[(a + b).i] == E.add(emap[a.i], emap[b.i])
            assert emap[(a * b).i] == E.mul(emap[a.i], emap[b.i])


def test_embedding_requires_subfield(gf4, gf9):
    with pytest.raises(NotASubfield):
        embedding_map(gf4, gf9)


# -- univariate polynomials ----------------------------------------------------

def upoly(K, *coeffs):
    return UniPoly(K, list(coeffs))


@st.composite
def unipolys(draw, max_deg=4):
    q = draw(st.sampled_from([2, 3, 5]))
    K = field(q)
    deg = draw(st.integers(0, max_deg))
    coeffs = [draw(st.integers(0, q - 1)) for _ in range(deg + 1)]
    return UniPoly(K, coeffs)


@given(f=unipolys(), g=unipolys())
def test_divmod_identity(f, g):
    if f.field is not g.field or g.is_zero():
        return
    quo, rem = f.divmod_poly(g)
    assert quo * g + rem == f
    assert rem.is_zero() or rem.degree < g.degree


@given(f=unipolys(), g=unipolys())
def test_derivative_leibniz(f, g):
    if f.field is not g.field:
        return
    assert (f * g).derivative() == f.derivative() * g + f * g.derivative()


@given(f=unipolys(), g=unipolys())
def test_gcd_divides_both(f, g):
    if f.field is not g.field or (f.is_zero() and g.is_zero()):
        return
    d = unipoly_gcd(f, g)
    assert d.lc() == 1
    for h in (f, g):
        if not h.is_zero():
            _, rem = h.divmod_poly(d)
            assert rem.is_zero()


@given(f=unipolys())
def test_factor_remultiplies(f):
    if f.is_zero() or f.degree == 0:
        return
    K = f.field
    factors = unipoly_factor(f, seed=0)
    prod = UniPoly(K, [f.lc()])
    for base, mult in factors:
        assert base.lc() == 1
        assert unipoly_is_irreducible(base)
        for _ in range(mult):
            prod = prod * base
    assert prod == f


def _brute_irreducible(f):
    K = f.field
    if f.degree < 1:
        return False
    for d in range(1, f.degree):
        for idx in range(K.order**d):
            coeffs, n = [], idx
            for _ in range(d):
                coeffs.append(n % K.order)
                n //= K.order
            coeffs.append(1)  # monic degree-d candidate
            _, rem = f.divmod_poly(UniPoly(K, coeffs))
            if rem.is_zero():
                return False
    return True


@pytest.mark.parametrize("q,max_deg", [(2, 4), (3, 3)])
def test_irreducibility_vs_trial_division(q, max_deg):
    K = field(q)
    for idx in range(1, K.order ** (max_deg + 1)):
        coeffs, n = [], idx
        while n:
            coeffs.append(n % K.order)
            n //= K.order
        f = UniPoly(K, coeffs)
        if f.degree < 1:
            continue
        assert unipoly_is_irreducible(f) == _brute_irreducible(f), f.coeffs


def test_roots_oracle(gf5):
    f = upoly(gf5, 1, 1) * upoly(gf5, 3, 1)  # (x+1)(x+3): roots -1=4, -3=2
    roots = unipoly_roots(f, gf5)
    assert {r.i for r in roots} == {4, 2}
    for r in roots:
        assert f.eval_at(r.i) == 0


@given(f=unipolys())
def test_roots_all_evaluate_to_zero(f):
    if f.is_zero():
        return
    roots = unipoly_roots(f, f.field)
    assert len(roots) <= max(f.degree, 0)
    for r in roots:
        assert f.eval_at(r.i) == 0


def test_powmod_matches_repeated_multiplication(gf3):
    f = upoly(gf3, 1, 2, 1)
    m = upoly(gf3, 1, 0, 0, 1)
    direct = UniPoly(gf3, [1])
    for _ in range(7):
        direct = (direct * f).divmod_poly(m)[1]
    assert f.powmod(7, m) == direct


def test_field_make_rejects_composite_characteristic():
    with pytest.raises(NotPrime):
        field_make(6)
