"""Finite fields GF(p^e), one further extension layer, and univariate polynomials.

Representation. Every field element is an integer index in range(order).
Writing s for the cardinality of the base field (s = p for a one-level
extension, s = |K| for an extension of K), an element with polynomial-basis
digits (c0, c1, ..., c_{e-1}), constant digit first, gets the index

    c0 + c1*s + c2*s^2 + ... + c_{e-1}*s^(e-1).

The constant digit is the least significant one, so enumeration by index is
the natural "counting" order: over GF(4) it reads 0, 1, w, w+1 where w is
the class of t. Prime-field elements keep their usual integer values, and
the prime constants 0..p-1 keep those indices in every extension built here,
which makes several embeddings the identity on indices.

Multiplication, inversion and powering go through exp/log tables relative to
a fixed generator (fields here stay small, a few thousand elements at most).
Addition needs no table in characteristic 2 (XOR on indices, since digit
packing is by powers of two at every level); odd-characteristic fields use a
flat table when small enough and digitwise base-field addition otherwise.

Towers are capped at height 2: prime -> GF(q) -> GF(q^m). The second layer
stores base-field indices as digits, so the base field embeds by identity.

The canonical modulus of an extension is the lexicographically smallest
monic irreducible over the base, comparing coefficient tuples constant
digit first with base elements in index order. No lookup tables of moduli
are shipped; the scan is deterministic and cheap at these sizes.
"""

from __future__ import annotations

import itertools
import random
import re

from .errors import (
    BadParameters,
    DivisionByZero,
    FieldMismatch,
    NotASubfield,
    NotPrime,
    ZeroPolynomial,
)

__all__ = [
    "Field",
    "FieldElement",
    "UniPoly",
    "field_make",
    "field_with_modulus",
    "extension_field",
    "parse_field_spec",
    "enumerate_field",
    "embed",
    "embedding_map",
    "unipoly_gcd",
    "unipoly_is_irreducible",
    "unipoly_factor",
    "unipoly_roots",
]


def _is_prime(n):
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def _prime_factors(n):
    """Distinct prime factors of n by trial division (n stays desk-sized)."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# Flat addition tables cost order^2 ints; worth it only for small odd fields.
_ADD_TABLE_MAX_ORDER = 256


class Field:
    """A finite field; construct through field_make or field_with_modulus.

    Instances are interned: equal parameters return the same object, so
    identity comparison is field equality. All arithmetic methods take and
    return integer element indices.
    """

    def __init__(self, p, e, modulus, base):
        self.p = p
        self.e = e
        self.base = base
        self.s = base.order if base is not None else p
        self.order = self.s**e
        self.modulus = modulus  # length e+1, base-field indices, monic
        self.zero = 0
        self.one = 1
        self._digits_cache = None
        self._build_add()
        self._build_mul()

    # -- construction helpers ------------------------------------------------

    def _build_add(self):
        p, e, order = self.p, self.e, self.order
        if p == 2:
            self.add = self._add_xor
            self.sub = self._add_xor
            self.neg = self._neg_id
            return
        self._negt = [self._neg_digits(a) for a in range(order)]
        self.neg = self._neg_table
        if e == 1 and self.base is None:
            self.add = self._add_prime
            self.sub = self._sub_prime
        elif order <= _ADD_TABLE_MAX_ORDER:
            self._addt = [
                self._add_digits(a, b) for a in range(order) for b in range(order)
            ]
            self.add = self._add_flat
            self.sub = self._sub_flat
        else:
            self.add = self._add_digits
            self.sub = self._sub_digits

    def _build_mul(self):
        order = self.order
        if order == 2:
            g = 1
        else:
            n = order - 1
            checks = [n // r for r in _prime_factors(n)]
            g = None
            for cand in range(2, order):
                if all(self._pow_raw(cand, c) != 1 for c in checks):
                    g = cand
                    break
            assert g is not None, "multiplicative group is cyclic"
        self.generator = g
        exp = [1] * (order - 1)
        for i in range(1, order - 1):
            exp[i] = self._mul_raw(exp[i - 1], g)
        log = [0] * order
        for i, v in enumerate(exp):
            log[v] = i
        self._exp = exp + exp  # doubled: no modular reduction on mul/div
        self._log = log

    # -- digit packing -------------------------------------------------------

    def coeffs_of(self, a):
        """Polynomial-basis digits of index a, constant first, length e."""
        s = self.s
        out = []
        for _ in range(self.e):
            a, r = divmod(a, s)
            out.append(r)
        return tuple(out)

    def index_of(self, coeffs):
        s = self.s
        a = 0
        for c in reversed(tuple(coeffs)):
            a = a * s + c
        return a

    # -- addition variants ---------------------------------------------------

    def _add_xor(self, a, b):
        return a ^ b

    def _neg_id(self, a):
        return a

    def _add_prime(self, a, b):
        return (a + b) % self.p

    def _sub_prime(self, a, b):
        return (a - b) % self.p

    def _add_flat(self, a, b):
        return self._addt[a * self.order + b]

    def _sub_flat(self, a, b):
        return self._addt[a * self.order + self._negt[b]]

    def _neg_table(self, a):
        return self._negt[a]

    def _add_digits(self, a, b):
        s = self.s
        base = self.base
        badd = base.add if base is not None else None
        out = 0
        mult = 1
        while a or b:
            da, db = a % s, b % s
            d = badd(da, db) if badd is not None else (da + db) % self.p
            out += d * mult
            mult *= s
            a //= s
            b //= s
        return out

    def _sub_digits(self, a, b):
        return self._add_digits(a, self._negt[b])

    def _neg_digits(self, a):
        s = self.s
        base = self.base
        out = 0
        mult = 1
        while a:
            d = a % s
            nd = base.neg(d) if base is not None else (self.p - d) % self.p
            out += nd * mult
            mult *= s
            a //= s
        return out

    # -- multiplication ------------------------------------------------------

    def _base_mul(self, x, y):
        if self.base is not None:
            return self.base.mul(x, y)
        return (x * y) % self.p

    def _base_add(self, x, y):
        if self.base is not None:
            return self.base.add(x, y)
        return (x + y) % self.p

    def _base_neg(self, x):
        if self.base is not None:
            return self.base.neg(x)
        return (self.p - x) % self.p

    def _mul_raw(self, a, b):
        """Table-free product: digit convolution reduced by the modulus."""
        if self.e == 1 and self.base is None:
            return (a * b) % self.p
        s, e = self.s, self.e
        da = self.coeffs_of(a)
        db = self.coeffs_of(b)
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            if x == 0:
                continue
            for j, y in enumerate(db):
                if y:
                    prod[i + j] = self._base_add(prod[i + j], self._base_mul(x, y))
        mod = self.modulus
        for i in range(2 * e - 2, e - 1, -1):
            c = prod[i]
            if c == 0:
                continue
            prod[i] = 0
            nc = self._base_neg(c)
            for j in range(e):
                if mod[j]:
                    prod[i - e + j] = self._base_add(
                        prod[i - e + j], self._base_mul(nc, mod[j])
                    )
        return self.index_of(prod[:e])

    def _pow_raw(self, a, k):
        r = 1
        while k:
            if k & 1:
                r = self._mul_raw(r, a)
            a = self._mul_raw(a, a)
            k >>= 1
        return r

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return self._exp[self.order - 1 - self._log[a]]

    def div(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        if a == 0:
            return 0
        return self._exp[self._log[a] - self._log[b] + self.order - 1]

    def pow_(self, a, k):
        if k < 0:
            return self.pow_(self.inv(a), -k)
        if a == 0:
            return 1 if k == 0 else 0
        return self._exp[(self._log[a] * k) % (self.order - 1)]

    def frob(self, a):
        """x -> x^p, the absolute Frobenius."""
        return self.pow_(a, self.p)

    def element(self, i):
        return FieldElement(self, i)

    def elements(self):
        return [FieldElement(self, i) for i in range(self.order)]

    # -- misc ----------------------------------------------------------------

    def describe(self):
        d = {"p": self.p, "e": self.e, "order": self.order}
        d["modulus"] = list(self.modulus)
        if self.base is not None:
            d["base"] = self.base.describe()
        return d

    def text_of(self, a):
        """Canonical element text: plain integer for prime fields, digit
        vector in brackets otherwise."""
        if self.e == 1 and self.base is None:
            return str(a)
        return "[" + ",".join(str(c) for c in self.coeffs_of(a)) + "]"

    def __repr__(self):
        if self.base is not None:
            return f"GF({self.order}/{self.s})"
        return f"GF({self.order})"


class FieldElement:
    """Thin operator wrapper around (field, index); hot paths use raw indices."""

    __slots__ = ("field", "i")

    def __init__(self, field, i):
        self.field = field
        self.i = i

    @property
    def coeffs(self):
        return self.field.coeffs_of(self.i)

    def _peer(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.i
        if isinstance(other, int):
            return other % self.field.p  # integer literals act through 1
        return NotImplemented

    def __add__(self, other):
        j = self._peer(other)
        if j is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.add(self.i, j))

    __radd__ = __add__

    def __sub__(self, other):
        j = self._peer(other)
        if j is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(self.i, j))

    def __rsub__(self, other):
        j = self._peer(other)
        if j is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.sub(j, self.i))

    def __mul__(self, other):
        j = self._peer(other)
        if j is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.mul(self.i, j))

    __rmul__ = __mul__

    def __truediv__(self, other):
        j = self._peer(other)
        if j is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(self.i, j))

    def __rtruediv__(self, other):
        j = self._peer(other)
        if j is NotImplemented:
            return NotImplemented
        return FieldElement(self.field, self.field.div(j, self.i))

    def __pow__(self, k):
        return FieldElement(self.field, self.field.pow_(self.i, k))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.i))

    def frobenius(self, q):
        """x -> x^q for a subfield cardinality q; fixes exactly GF(q)."""
        return FieldElement(self.field, self.field.pow_(self.i, q))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.i == other.i
        if isinstance(other, int):
            return self.i == other % self.field.p and self.i < self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.i))

    def __bool__(self):
        return self.i != 0

    def __repr__(self):
        return self.field.text_of(self.i)


# -- field construction and interning ---------------------------------------

_FIELDS = {}


def _intern(p, e, modulus, base):
    key = (p, e, modulus, id(base) if base is not None else None)
    f = _FIELDS.get(key)
    if f is None:
        f = Field(p, e, modulus, base)
        _FIELDS[key] = f
    return f


def field_make(p, e=1, base=None):
    """GF(p^e), or a degree-e extension of an explicit base field, with the
    canonical (lexicographically smallest) irreducible modulus."""
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if base is not None and base.p != p:
        raise FieldMismatch("base field has a different characteristic")
    if e < 1:
        raise BadParameters("extension degree must be positive")
    if base is None and e == 1:
        return _intern(p, 1, (0, 1), None)
    if base is not None and base.base is not None:
        raise BadParameters("tower height is capped at two extension layers")
    if base is not None and e == 1:
        return base
    scan_base = base if base is not None else field_make(p)
    modulus = _canonical_modulus(scan_base, e)
    return _intern(p, e, modulus, base)


def _canonical_modulus(base, e):
    for tail in itertools.product(range(base.order), repeat=e):
        cand = tail + (1,)
        if unipoly_is_irreducible(UniPoly(base, cand)):
            return cand
    raise AssertionError("an irreducible of every degree exists")


def field_with_modulus(p, modulus, base=None):
    """Field with an explicitly chosen monic irreducible modulus
    (constant-first coefficient list of length e+1)."""
    if not _is_prime(p):
        raise NotPrime(f"{p} is not prime")
    modulus = tuple(modulus)
    e = len(modulus) - 1
    if e < 1:
        raise BadParameters("modulus must have positive degree")
    if e == 1 and base is None:
        if modulus != (0, 1):
            raise BadParameters("prime field modulus must be t")
        return field_make(p)
    scan_base = base if base is not None else field_make(p)
    if any(not 0 <= c < scan_base.order for c in modulus):
        raise BadParameters("modulus coefficient out of range")
    if modulus[-1] != 1:
        raise BadParameters("modulus must be monic")
    if not unipoly_is_irreducible(UniPoly(scan_base, modulus)):
        raise BadParameters("modulus is reducible")
    return _intern(p, e, modulus, base)


def extension_field(field, m):
    """The degree-m extension of a field, as high in the tower as allowed."""
    if m == 1:
        return field
    if field.e == 1 and field.base is None:
        return field_make(field.p, m)
    if field.base is None:
        return field_make(field.p, m, base=field)
    raise BadParameters("tower height is capped at two extension layers")


_FIELD_SPEC_MOD = re.compile(r"mod=\[([0-9,\s]*)\]")


def parse_field_spec(text):
    """Field from a spec string: "q=9", "p=3,e=2", "p=3,e=2,mod=[1,0,1]"."""
    text = text.strip().replace(" ", "")
    mod = None
    m = _FIELD_SPEC_MOD.search(text)
    if m:
        mod = tuple(int(c) for c in m.group(1).split(",") if c != "")
        text = (text[: m.start()] + text[m.end() :]).strip(",")
    kv = {}
    if text:
        for part in text.split(","):
            if "=" not in part:
                raise BadParameters(f"bad field spec fragment {part!r}")
            k, v = part.split("=", 1)
            kv[k] = int(v)
    if "q" in kv:
        if mod is not None or set(kv) != {"q"}:
            raise BadParameters("q= form takes no other parameters")
        q = kv["q"]
        if q < 2:
            raise BadParameters("field cardinality must be at least 2")
        p = _prime_factors(q)[0]
        e = 0
        n = q
        while n % p == 0 and n > 1:
            n //= p
            e += 1
        if n != 1:
            raise NotPrime(f"{q} is not a prime power")
        return field_make(p, e)
    if "p" not in kv:
        raise BadParameters("field spec needs q= or p=")
    p = kv.pop("p")
    e = kv.pop("e", 1)
    if kv:
        raise BadParameters(f"unknown field spec keys {sorted(kv)}")
    if mod is None:
        return field_make(p, e)
    if len(mod) != e + 1:
        raise BadParameters("modulus length must be e+1")
    return field_with_modulus(p, mod)


def enumerate_field(field):
    """All elements exactly once, in index order (0, 1, ..., order-1); the
    constant digit varies fastest, so GF(4) reads 0, 1, w, w+1."""
    return field.elements()


# -- embeddings ---------------------------------------------------------------

_EMBED_CACHE = {}


def _layers(field):
    out = [field]
    f = field
    while f.base is not None:
        f = f.base
        out.append(f)
    if out[-1].e > 1:
        out.append(field_make(field.p))
    return out


def embedding_map(sub, sup):
    """List mapping each sub index to its image index in sup.

    The identity cases (prime constants, a tower over its own base) cost
    nothing; the remaining supported case maps the generator of sub to the
    enumeration-smallest root of sub's modulus in sup.
    """
    key = (id(sub), id(sup))
    got = _EMBED_CACHE.get(key)
    if got is not None:
        return got
    out = _build_embedding(sub, sup)
    _EMBED_CACHE[key] = out
    return out


def _build_embedding(sub, sup):
    if sub.p != sup.p:
        raise NotASubfield("different characteristics")
    if sub is sup or sub in _layers(sup):
        return list(range(sub.order))
    if sub.base is not None:
        raise NotASubfield("no embedding rule for a tower source")
    # Land in the top one-level layer; for a tower that is its base, whose
    # indices are sup indices already.
    target = sup.base if sup.base is not None else sup
    if target.base is not None or target.e % sub.e != 0:
        raise NotASubfield(f"{sub!r} does not embed in {sup!r}")
    modulus = UniPoly(target, sub.modulus)  # prime coeffs are target indices
    roots = sorted(r.i for r in unipoly_roots(modulus, target))
    if not roots:
        raise NotASubfield(f"{sub!r} does not embed in {sup!r}")
    r = roots[0]
    powers = [1]
    for _ in range(sub.e - 1):
        powers.append(target.mul(powers[-1], r))
    out = []
    for a in range(sub.order):
        acc = 0
        for c, rp in zip(sub.coeffs_of(a), powers):
            acc = target.add(acc, target.mul(c, rp))
        out.append(acc)
    return out


def embed(sub, sup, x):
    """Image of x under the deterministic embedding of sub into sup."""
    mp = embedding_map(sub, sup)
    i = x.i if isinstance(x, FieldElement) else x
    return FieldElement(sup, mp[i])


# -- univariate polynomials ---------------------------------------------------


class UniPoly:
    """Univariate polynomial over a field; coefficient indices constant
    first, trailing zeros trimmed, the zero polynomial is the empty tuple."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        cs = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field is not field:
                    raise FieldMismatch("coefficient from a different field")
                cs.append(c.i)
            else:
                c = int(c)
                if not 0 <= c < field.order:
                    raise ValueError(f"coefficient index {c} out of range")
                cs.append(c)
        while cs and cs[-1] == 0:
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def _raw(cls, field, coeffs):
        self = object.__new__(cls)
        self.field = field
        self.coeffs = coeffs
        return self

    @property
    def degree(self):
        return len(self.coeffs) - 1  # zero polynomial reports -1

    def is_zero(self):
        return not self.coeffs

    def lc(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return (
            isinstance(other, UniPoly)
            and self.field is other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((id(self.field), self.coeffs))

    def __add__(self, other):
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        while out and out[-1] == 0:
            out.pop()
        return UniPoly._raw(F, tuple(out))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        F = self.field
        return UniPoly._raw(F, tuple(F.neg(c) for c in self.coeffs))

    def __mul__(self, other):
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly._raw(F, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
        while out and out[-1] == 0:
            out.pop()
        return UniPoly._raw(F, tuple(out))

    def scale(self, c):
        c = c.i if isinstance(c, FieldElement) else c
        F = self.field
        if c == 0:
            return UniPoly._raw(F, ())
        return UniPoly._raw(F, tuple(F.mul(x, c) for x in self.coeffs))

    def shift(self, k):
        """Multiply by t^k."""
        if not self.coeffs:
            return self
        return UniPoly._raw(self.field, (0,) * k + self.coeffs)

    def monic(self):
        if not self.coeffs:
            return self
        if self.coeffs[-1] == 1:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def divmod_poly(self, other):
        self._check(other)
        F = self.field
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        a = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        if len(a) - 1 < db:
            return UniPoly._raw(F, ()), self
        inv_lc = F.inv(b[-1])
        q = [0] * (len(a) - db)
        for i in range(len(a) - 1, db - 1, -1):
            c = a[i]
            if c == 0:
                continue
            qc = F.mul(c, inv_lc)
            q[i - db] = qc
            for j in range(db + 1):
                if b[j]:
                    a[i - db + j] = F.sub(a[i - db + j], F.mul(qc, b[j]))
        while a and a[-1] == 0:
            a.pop()
        while q and q[-1] == 0:
            q.pop()
        return UniPoly._raw(F, tuple(q)), UniPoly._raw(F, tuple(a))

    def __mod__(self, other):
        return self.divmod_poly(other)[1]

    def __floordiv__(self, other):
        return self.divmod_poly(other)[0]

    def mulmod(self, other, mod):
        return (self * other) % mod

    def powmod(self, k, mod):
        F = self.field
        r = UniPoly._raw(F, (1,))
        b = self % mod
        while k:
            if k & 1:
                r = (r * b) % mod
            b = (b * b) % mod
            k >>= 1
        return r

    def derivative(self):
        F = self.field
        p = F.p
        out = []
        for k, c in enumerate(self.coeffs[1:], start=1):
            kk = k % p  # prime constants keep indices 0..p-1 in any extension
            out.append(F.mul(c, kk) if kk and c else 0)
        while out and out[-1] == 0:
            out.pop()
        return UniPoly._raw(F, tuple(out))

    def eval_at(self, x):
        x = x.i if isinstance(x, FieldElement) else x
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def map_field(self, other, emap=None):
        """Reinterpret over a larger field through an embedding map."""
        if other is self.field:
            return self
        if emap is None:
            emap = embedding_map(self.field, other)
        return UniPoly._raw(other, tuple(emap[c] for c in self.coeffs))

    def _check(self, other):
        if self.field is not other.field:
            raise FieldMismatch("polynomials over different fields")

    def __repr__(self):
        if not self.coeffs:
            return "0"
        F = self.field
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                parts.append(F.text_of(c))
            else:
                var = "t" if k == 1 else f"t^{k}"
                parts.append(var if c == 1 else f"{F.text_of(c)}*{var}")
        return " + ".join(parts)


def unipoly_gcd(f, g):
    """Monic greatest common divisor (zero if both inputs are zero)."""
    f._check(g)
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def _ext_gcd(f, g):
    """(d, u, v) with u*f + v*g = d, d the monic gcd."""
    F = f.field
    r0, r1 = f, g
    s0, s1 = UniPoly._raw(F, (1,)), UniPoly._raw(F, ())
    t0, t1 = UniPoly._raw(F, ()), UniPoly._raw(F, (1,))
    while not r1.is_zero():
        q, r = r0.divmod_poly(r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    c = F.inv(r0.lc())
    return r0.scale(c), s0.scale(c), t0.scale(c)


def unipoly_is_irreducible(f):
    """Rabin's test: x^(s^e) = x mod f and, for each prime r | e, the
    power x^(s^(e/r)) - x is coprime to f."""
    d = f.degree
    if d <= 0:
        return False
    if d == 1:
        return True
    F = f.field
    s = F.order
    x = UniPoly._raw(F, (0, 1))
    for r in _prime_factors(d):
        k = d // r
        h = x.powmod(s**k, f)
        if unipoly_gcd(h - x, f).degree != 0:
            return False
    h = x.powmod(s**d, f)
    return (h - x) % f == UniPoly._raw(F, ())


def _pth_root_poly(f):
    """For f with zero derivative, the h with h^p = f (coefficient p-th
    roots at stride p; c -> c^(s/p) inverts Frobenius on a finite field)."""
    F = f.field
    p = F.p
    k = F.order // p
    out = []
    for i in range(0, len(f.coeffs), p):
        out.append(F.pow_(f.coeffs[i], k))
    return UniPoly._raw(F, tuple(out))


def _equal_degree_split(f, d, rng):
    """One proper monic factor of f, a squarefree product of at least two
    irreducibles all of degree d (Cantor and Zassenhaus style)."""
    F = f.field
    s = F.order
    n = f.degree
    one = UniPoly._raw(F, (1,))
    while True:
        r = UniPoly(F, [rng.randrange(s) for _ in range(n)])
        if r.degree < 1:
            continue
        g = unipoly_gcd(r, f)
        if 0 < g.degree < n:
            return g
        if F.p == 2:
            # absolute trace of r modulo f
            bits = d * (s.bit_length() - 1)  # s = 2^k, extension degree k*d
            t = r % f
            acc = t
            for _ in range(bits - 1):
                t = (t * t) % f
                acc = acc + t
            g = unipoly_gcd(acc, f)
        else:
            u = r.powmod((s**d - 1) // 2, f)
            g = unipoly_gcd(u - one, f)
        if 0 < g.degree < n:
            return g


def _factor_squarefree(f, rng):
    """Irreducible factors of a squarefree monic f: distinct-degree
    splitting, then equal-degree splitting."""
    F = f.field
    s = F.order
    out = []
    x = UniPoly._raw(F, (0, 1))
    h = x
    w = f
    d = 0
    groups = []
    # a proper split of w needs two factors of degree > d
    while w.degree > 2 * d + 1:
        d += 1
        h = h.powmod(s, w)
        g = unipoly_gcd(h - x, w)
        if g.degree > 0:
            groups.append((g, d))
            w = w // g
            h = h % w
    if w.degree > 0:
        groups.append((w, w.degree))
    for g, d in groups:
        stack = [g]
        while stack:
            cur = stack.pop()
            if cur.degree == d:
                out.append(cur.monic())
            else:
                part = _equal_degree_split(cur, d, rng)
                stack.append(part)
                stack.append(cur // part)
    return out


def unipoly_factor(f, seed=0):
    """Complete factorization into monic irreducibles with multiplicities,
    sorted by (degree, coefficient tuple); deterministic for a fixed seed.
    The product of the factors times lc(f) rebuilds f exactly.
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    rng = random.Random(seed)
    out = {}
    work = f.monic()
    _factor_monic(work, out, rng)
    items = [(UniPoly._raw(f.field, c), m) for c, m in out.items()]
    items.sort(key=lambda im: (im[0].degree, im[0].coeffs))
    return items


def _factor_monic(f, out, rng):
    if f.degree <= 0:
        return
    fp = f.derivative()
    if fp.is_zero():
        h = _pth_root_poly(f)
        sub = {}
        _factor_monic(h, sub, rng)
        p = f.field.p
        for c, m in sub.items():
            out[c] = out.get(c, 0) + m * p
        return
    w = f // unipoly_gcd(f, fp)
    rest = f
    for piece in _factor_squarefree(w, rng):
        m = 0
        while True:
            q, r = rest.divmod_poly(piece)
            if not r.is_zero():
                break
            rest = q
            m += 1
        out[piece.coeffs] = out.get(piece.coeffs, 0) + m
    _factor_monic(rest, out, rng)


def unipoly_roots(f, field):
    """Zeros of f in the given field (the owner or an extension of it):
    reduce to gcd(f, t^|field| - t), then split into linear factors."""
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has every root")
    if field is not f.field:
        f = f.map_field(field)
    F = field
    x = UniPoly._raw(F, (0, 1))
    if f.degree >= 2:
        h = x.powmod(F.order, f)  # t^|field| mod f
        g = unipoly_gcd(h - x, f)
    else:
        g = f.monic()
    roots = set()
    if g.degree >= 1:
        for piece, _m in unipoly_factor(g):
            if piece.degree == 1:
                # t + c0 = 0  ->  root is -c0
                roots.add(FieldElement(F, F.neg(piece.coeffs[0])))
    return roots
