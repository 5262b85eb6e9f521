"""Exhaustive census of filling forms of a fixed bi-degree.

Vanishing at all (q+1)^2 rational pairs is linear in the coefficients, so
the filling forms of bi-degree (a,b) make up a subspace: the kernel of the
evaluation matrix at those pairs.  The matrix is the Kronecker product of
two univariate evaluation matrices of ranks min(a+1,q+1) and min(b+1,q+1),
which pins the kernel dimension at

    (a+1)(b+1) - min(a+1, q+1) * min(b+1, q+1).

census walks the nonzero kernel vectors up to scalar (first nonzero
coordinate normalized to 1, remaining coordinates in counting order) and
classifies each form.  The factor search and conjugate-norm membership of
is_abs_irreducible decide both directions exactly; when their enumeration
budget is blown the smoothness shortcut can still prove irreducible, and
whatever remains lands in an explicit unknown bucket instead of a guessed
verdict.  min_bidegree_scan applies this cell by cell over a rectangle of
bi-degrees, skipping cells with a <= q or b <= q, which carry no
absolutely irreducible filling form at all (the obstruction behind
min_bidegree_check: too few rows to meet every vertical fiber).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field
from typing import Optional, Tuple

from .analysis import certify_smooth, is_abs_irreducible
from .bipoly import BiPoly
from .config import DEFAULT_BUDGETS
from .errors import BadParameters, FieldMismatch, Infeasible
from .filling import is_filling
from .geom import enum_p1
from .gf import parse_field_spec


def _field_for(q, field=None):
    if field is None:
        return parse_field_spec(f"q={q}")
    if field.order != q:
        raise FieldMismatch(f"field of order {field.order} given for q={q}")
    return field


def _rref(rows, K):
    """Row-reduced echelon form over K (entries are element indices).
    Returns (reduced nonzero rows, pivot columns)."""
    rows = [list(r) for r in rows]
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    pivots = []
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = K.inv(rows[r][c])
        if inv != 1:
            rows[r] = [K.mul(inv, x) for x in rows[r]]
        lead = rows[r]
        for i in range(nr):
            f = rows[i][c]
            if i != r and f != 0:
                rows[i] = [K.sub(x, K.mul(f, y)) for x, y in zip(rows[i], lead)]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def filling_space_basis(q, a, b, field=None):
    """Deterministic row-reduced basis of the space of filling forms of
    bi-degree (a,b) over GF(q): kernel of the evaluation matrix at the
    rational pairs, coefficient columns in row-major (i,j) order."""
    if a < 0 or b < 0:
        raise BadParameters(f"bad bi-degree ({a},{b})")
    K = _field_for(q, field)
    pts = [P.coords() for P in enum_p1(K)]
    nc = (a + 1) * (b + 1)

    def powers(u0, u1, n):
        # row of u0^(n-i) u1^i, i = 0..n
        p0 = [1]
        p1 = [1]
        for _ in range(n):
            p0.append(K.mul(p0[-1], u0))
            p1.append(K.mul(p1[-1], u1))
        return [K.mul(p0[n - i], p1[i]) for i in range(n + 1)]

    mat = []
    for u0, u1 in pts:
        xrow = powers(u0, u1, a)
        for v0, v1 in pts:
            yrow = powers(v0, v1, b)
            mat.append([K.mul(xrow[i], yrow[j]) for i in range(a + 1) for j in range(b + 1)])
    red, pivots = _rref(mat, K)
    pivset = set(pivots)
    free = [c for c in range(nc) if c not in pivset]
    kernel = []
    for fc in free:
        v = [0] * nc
        v[fc] = 1
        for r, pc in enumerate(pivots):
            v[pc] = K.neg(red[r][fc])
        kernel.append(v)
    kernel, _ = _rref(kernel, K)  # canonical basis of the kernel itself
    out = []
    for v in kernel:
        rows = [v[i * (b + 1):(i + 1) * (b + 1)] for i in range(a + 1)]
        B = BiPoly(K, a, b, rows)
        assert is_filling(B)
        out.append(B)
    assert len(out) == nc - min(a + 1, q + 1) * min(b + 1, q + 1)
    return out


# -- projective candidate enumeration -----------------------------------------
#
# Candidate k of a dim-dimensional space: leading coordinate L runs 0,1,...
# with block sizes q^(dim-1-L); inside a block the trailing coordinates count
# up with the last coordinate fastest.

def projective_count(q, dim):
    return (q**dim - 1) // (q - 1) if dim else 0


def _candidate_vector(k, dim, q):
    size = q ** (dim - 1)
    L = 0
    while k >= size:
        k -= size
        L += 1
        size //= q
    v = [0] * dim
    v[L] = 1
    for pos in range(dim - 1, L, -1):
        v[pos] = k % q
        k //= q
    return v


def _vector_index(v, q):
    dim = len(v)
    L = next(i for i, x in enumerate(v) if x)
    idx = 0
    size = q ** (dim - 1)
    for _ in range(L):
        idx += size
        size //= q
    o = 0
    for pos in range(L + 1, dim):
        o = o * q + v[pos]
    return idx + o


def _combine(vec, flat_basis, K):
    n = len(flat_basis[0])
    acc = [0] * n
    for c, row in zip(vec, flat_basis):
        if c == 0:
            continue
        if c == 1:
            for t in range(n):
                if row[t]:
                    acc[t] = K.add(acc[t], row[t])
        else:
            for t in range(n):
                if row[t]:
                    acc[t] = K.add(acc[t], K.mul(c, row[t]))
    return acc


def candidate_poly(basis, k):
    """Candidate number k (projective order) of the span of basis."""
    B0 = basis[0]
    K, a, b = B0.field, B0.a, B0.b
    q = K.order
    total = (q ** len(basis) - 1) // (q - 1)
    if not 0 <= k < total:
        raise BadParameters(f"candidate index {k} outside [0, {total})")
    flat = [[c for row in B.rows for c in row] for B in basis]
    v = _candidate_vector(k, len(basis), q)
    acc = _combine(v, flat, K)
    rows = [acc[i * (b + 1):(i + 1) * (b + 1)] for i in range(a + 1)]
    return BiPoly(K, a, b, rows)


def candidate_index_of(F, basis):
    """Projective candidate index of F in the census order, or None when F
    is not a nonzero member of the span."""
    if not basis or F.is_zero():
        return None
    K = F.field
    q = K.order
    flat = [c for row in F.rows for c in row]
    flatb = [[c for row in B.rows for c in row] for B in basis]
    pivots = [next(i for i, x in enumerate(row) if x) for row in flatb]
    coords = [flat[p] for p in pivots]
    if _combine(coords, flatb, K) != flat:
        return None
    lead = next((i for i, c in enumerate(coords) if c), None)
    if lead is None:
        return None
    inv = K.inv(coords[lead])
    if inv != 1:
        coords = [K.mul(inv, c) for c in coords]
    return _vector_index(coords, q)


# -- census --------------------------------------------------------------------

@dataclass(frozen=True)
class CensusReport:
    q: int
    bidegree: Tuple[int, int]
    space_dimension: int
    candidates_scanned: int
    n_irreducible: int
    n_reducible: int
    n_unknown: int
    irreducible_indices: Tuple[int, ...]
    exemplars: Tuple[BiPoly, ...]
    basis: Tuple[BiPoly, ...]
    n_smooth: Optional[int] = None
    singular_irreducible_indices: Optional[Tuple[int, ...]] = None
    part: Optional[Tuple[int, int]] = None
    seconds: float = dc_field(default=0.0, compare=False)

    def to_json(self):
        return {
            "q": self.q,
            "bidegree": list(self.bidegree),
            "space_dimension": self.space_dimension,
            "candidates_scanned": self.candidates_scanned,
            "n_irreducible": self.n_irreducible,
            "n_reducible": self.n_reducible,
            "n_unknown": self.n_unknown,
            "n_smooth": self.n_smooth,
            "irreducible_indices": list(self.irreducible_indices),
            "singular_irreducible_indices": (
                None
                if self.singular_irreducible_indices is None
                else list(self.singular_irreducible_indices)
            ),
            "exemplars": [F.text() for F in self.exemplars],
            "basis": [B.text() for B in self.basis],
            "part": None if self.part is None else list(self.part),
        }


def _classify(F):
    """('irreducible'|'reducible'|'unknown', method tag or None)."""
    try:
        res = is_abs_irreducible(F, method="B")
        return ("irreducible" if res.irreducible else "reducible", res.method)
    except Infeasible:
        pass
    try:
        res = is_abs_irreducible(F, method="A")
        return ("irreducible", res.method)
    except Infeasible:
        return ("unknown", None)


def census(q, a, b, smooth=False, exemplar_cap=8, budget=None, part=None, field=None):
    """Classify every filling form of bi-degree (a,b) over GF(q) up to
    scalar.

    smooth=True additionally certifies each irreducible candidate and tags
    the non-smooth ones.  part=(k,n) scans only the k-th of n contiguous
    slices of the candidate range; merge_reports glues slices back
    together."""
    t0 = time.perf_counter()
    K = _field_for(q, field)
    basis = filling_space_basis(q, a, b, field=K)
    dim = len(basis)
    total = projective_count(q, dim)
    cap = budget if budget is not None else DEFAULT_BUDGETS.census_budget
    if total > cap:
        raise Infeasible(f"{total} candidates exceed the census budget {cap}")
    if part is None:
        lo, hi = 0, total
    else:
        k, n = part
        if not (0 <= k < n):
            raise BadParameters(f"bad partition {part}")
        lo, hi = k * total // n, (k + 1) * total // n
    flat = [[c for row in B.rows for c in row] for B in basis]
    n_irr = n_red = n_unk = 0
    irr_indices = []
    exemplars = []
    n_smooth = 0
    singular_irr = []
    for k in range(lo, hi):
        v = _candidate_vector(k, dim, q)
        acc = _combine(v, flat, K)
        rows = [acc[i * (b + 1):(i + 1) * (b + 1)] for i in range(a + 1)]
        F = BiPoly(K, a, b, rows)
        if (k - lo) % 100 == 0:
            assert is_filling(F)
        verdict, _ = _classify(F)
        if verdict == "irreducible":
            n_irr += 1
            irr_indices.append(k)
            if len(exemplars) < exemplar_cap:
                exemplars.append(F)
            if smooth:
                if certify_smooth(F).verdict == "Smooth":
                    n_smooth += 1
                else:
                    singular_irr.append(k)
        elif verdict == "reducible":
            n_red += 1
        else:
            n_unk += 1
    return CensusReport(
        q=q,
        bidegree=(a, b),
        space_dimension=dim,
        candidates_scanned=hi - lo,
        n_irreducible=n_irr,
        n_reducible=n_red,
        n_unknown=n_unk,
        irreducible_indices=tuple(irr_indices),
        exemplars=tuple(exemplars),
        basis=tuple(basis),
        n_smooth=n_smooth if smooth else None,
        singular_irreducible_indices=tuple(singular_irr) if smooth else None,
        part=part,
        seconds=time.perf_counter() - t0,
    )


def census_range(q, a, b, k, n, **kw):
    """Slice k of n of the census; see census(part=...)."""
    return census(q, a, b, part=(k, n), **kw)


def merge_reports(reports):
    """Glue complementary census slices (part=(k,n), every k exactly once)
    back into the full-range report."""
    if not reports:
        raise BadParameters("nothing to merge")
    rs = sorted(reports, key=lambda r: -1 if r.part is None else r.part[0])
    head = rs[0]
    if len(rs) == 1 and head.part is None:
        return head
    n = head.part[1] if head.part else None
    keys = [r.part for r in rs]
    if any(r.part is None or r.part[1] != n for r in rs) or keys != [(k, n) for k in range(n)]:
        raise BadParameters(f"slices {keys} do not cover the range exactly once")
    for r in rs[1:]:
        if (r.q, r.bidegree, r.space_dimension, r.basis) != (
            head.q,
            head.bidegree,
            head.space_dimension,
            head.basis,
        ) or (r.n_smooth is None) != (head.n_smooth is None):
            raise BadParameters("slices come from different censuses")
    cap = max(len(r.exemplars) for r in rs)
    exemplars = [F for r in rs for F in r.exemplars][:cap]
    smooth = head.n_smooth is not None
    return CensusReport(
        q=head.q,
        bidegree=head.bidegree,
        space_dimension=head.space_dimension,
        candidates_scanned=sum(r.candidates_scanned for r in rs),
        n_irreducible=sum(r.n_irreducible for r in rs),
        n_reducible=sum(r.n_reducible for r in rs),
        n_unknown=sum(r.n_unknown for r in rs),
        irreducible_indices=tuple(i for r in rs for i in r.irreducible_indices),
        exemplars=tuple(exemplars),
        basis=head.basis,
        n_smooth=sum(r.n_smooth for r in rs) if smooth else None,
        singular_irreducible_indices=(
            tuple(i for r in rs for i in r.singular_irreducible_indices) if smooth else None
        ),
        part=None,
        seconds=sum(r.seconds for r in rs),
    )


# -- minimal bi-degree scan ------------------------------------------------------

@dataclass(frozen=True)
class ScanCell:
    a: int
    b: int
    exists: Optional[bool]  # None = could not be decided within budget
    method: str  # "degree-lemma" | "census" | "infeasible"
    witness_index: Optional[int] = None

    def to_json(self):
        return {
            "a": self.a,
            "b": self.b,
            "exists": self.exists,
            "method": self.method,
            "witness_index": self.witness_index,
        }


def min_bidegree_scan(q, a_max, b_max, budget=None, field=None):
    """Which bi-degrees (a,b) <= (a_max,b_max) carry an absolutely
    irreducible filling form over GF(q)?

    Cells with a <= q or b <= q are settled without enumeration (no such
    form exists there; see min_bidegree_check).  Other cells enumerate the
    filling space and stop at the first irreducible candidate; exhaustion
    with unknowns pending marks the cell infeasible rather than empty."""
    K = _field_for(q, field)
    table = {}
    for a in range(a_max + 1):
        for b in range(b_max + 1):
            if a <= q or b <= q:
                table[(a, b)] = ScanCell(a, b, False, "degree-lemma")
                continue
            table[(a, b)] = _scan_cell(K, q, a, b, budget)
    return table


def _scan_cell(K, q, a, b, budget):
    basis = filling_space_basis(q, a, b, field=K)
    dim = len(basis)
    total = projective_count(q, dim)
    cap = budget if budget is not None else DEFAULT_BUDGETS.census_budget
    if total > cap:
        return ScanCell(a, b, None, "infeasible")
    flat = [[c for row in B.rows for c in row] for B in basis]
    saw_unknown = False
    for k in range(total):
        v = _candidate_vector(k, dim, q)
        acc = _combine(v, flat, K)
        rows = [acc[i * (b + 1):(i + 1) * (b + 1)] for i in range(a + 1)]
        F = BiPoly(K, a, b, rows)
        verdict, _ = _classify(F)
        if verdict == "irreducible":
            return ScanCell(a, b, True, "census", witness_index=k)
        if verdict == "unknown":
            saw_unknown = True
    if saw_unknown:
        return ScanCell(a, b, None, "infeasible")
    return ScanCell(a, b, False, "census")
