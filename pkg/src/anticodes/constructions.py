"""Explicit generator-matrix constructions: simplex codes and the codes
obtained by deleting a projective column set from them, moment-curve and
trivial-MDS complements, fixed-weight column codes, two-subspace and
elliptic-quadric codes, the two trace-code families, and concatenation
with the binary simplex inner code.

Column orderings are fixed everywhere (canonical representatives sorted by
the integer encoding with the topmost coordinate most significant) so every
construction is byte-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .gf import GF, FieldError, field_make, project_to_subfield, relative_trace
from .linear import (CodeError, LinearCode, WeightDistribution,
                     canonical_point)

LENGTH_CAP = 1 << 20


def prime_power(q: int):
    """(p, e) with q = p^e, or raise."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, e


def field_of_order(q: int) -> GF:
    return field_make(*prime_power(q))


def _point_key(field: GF, pt) -> int:
    key = 0
    for x in pt:
        key = key * field.q + x
    return key


def projective_points(field: GF, k: int):
    """All canonical projective points of F_q^k (first nonzero coord = 1),
    sorted by integer encoding, most-significant coordinate first."""
    q = field.q
    pts = []
    for lead in range(k):
        tail = k - lead - 1
        for code in range(q ** tail):
            digs = []
            c = code
            for _ in range(tail):
                digs.append(c % q)
                c //= q
            pts.append(tuple([0] * lead + [1] + list(reversed(digs))))
    pts.sort(key=lambda p: _point_key(field, p))
    return pts


@dataclass
class ProjectivePointSet:
    """A duplicate-free set of canonical projective points, order fixed."""
    field: GF
    dim: int
    points: list

    def __post_init__(self):
        canon = []
        seen = set()
        for p in self.points:
            cp = canonical_point(self.field, p)
            if cp is None:
                raise CodeError("zero column in a projective point set")
            if cp in seen:
                raise CodeError(f"repeated projective point {cp}")
            seen.add(cp)
            canon.append(cp)
        self.points = canon

    @classmethod
    def from_code(cls, code: LinearCode) -> "ProjectivePointSet":
        if code.column_points is not None:
            dim, pts = code.column_points
        else:
            dim, pts = code.k, code.generator.columns()
        return cls(code.field, dim, list(pts))


def _code_from_points(field: GF, points, label: str) -> LinearCode:
    return LinearCode.from_columns(field, points, label=label)


# ----------------------------------------------------------------------
# simplex and complements
# ----------------------------------------------------------------------

def simplex(q: int, k: int) -> LinearCode:
    field = field_of_order(q)
    n = (q ** k - 1) // (q - 1)
    if n > LENGTH_CAP:
        raise CodeError(f"simplex length {n} over the cap")
    return _code_from_points(field, projective_points(field, k),
                             label=f"simplex({q},{k})")


def complement(source, K: int) -> LinearCode:
    """Delete the source's column set from the dimension-K simplex columns.

    ``source`` is a LinearCode or a ProjectivePointSet; for K above the
    source's ambient dimension the points are embedded by prefixing zeros.
    """
    pts = source if isinstance(source, ProjectivePointSet) \
        else ProjectivePointSet.from_code(source)
    if (K < pts.dim and isinstance(source, LinearCode)
            and K >= source.k):
        # ambient coordinates are redundant; use coordinates in the
        # row-space basis instead
        pts = ProjectivePointSet(source.field, source.k,
                                 source.generator.columns())
    field = pts.field
    q = field.q
    if K < pts.dim:
        raise CodeError(f"lift dimension {K} below ambient dimension {pts.dim}")
    n = len(pts.points)
    if n >= q ** (K - 1):
        raise CodeError(f"complement needs n < q^(K-1), got n={n}, K={K}")
    pad = K - pts.dim
    deleted = {tuple([0] * pad + list(p)) for p in pts.points}
    cols = [p for p in projective_points(field, K) if p not in deleted]
    label = getattr(source, "label", "") or "points"
    code = _code_from_points(field, cols, label=f"complement({label}, K={K})")
    if code.k != K:
        raise CodeError(f"complement rank {code.k} != {K}")
    return code


def transform_wd(base: WeightDistribution, K: int) -> WeightDistribution:
    """Weight distribution of the complement, lifted to dimension K, from
    the base distribution alone: each nonzero base weight w contributes
    q^(K-k) * A_w at weight q^(K-1) - w, plus q^(K-k) - 1 full-weight
    codewords when K > k."""
    q, k = base.q, base.k
    if K < k:
        raise CodeError(f"K={K} below base dimension {k}")
    full = q ** (K - 1)
    counts = {0: 1}
    for w, c in base.counts.items():
        if w == 0:
            continue
        counts[full - w] = counts.get(full - w, 0) + q ** (K - k) * c
    if K > k:
        counts[full] = counts.get(full, 0) + q ** (K - k) - 1
    n = (q ** K - 1) // (q - 1) - base.n
    return WeightDistribution(q, n, K, counts)


# ----------------------------------------------------------------------
# moment-curve (Reed-Solomon) and trivial MDS complements
# ----------------------------------------------------------------------

def moment_curve_points(q: int, k: int) -> ProjectivePointSet:
    """The q points (1, a, a^2, ..., a^(k-1)), a in GF(q); canonical as is."""
    if k < 2:
        raise CodeError("need k >= 2 for a projective point set")
    field = field_of_order(q)
    pts = [tuple(field.pow(a, i) for i in range(k)) for a in range(q)]
    return ProjectivePointSet(field, k, pts)


def rs_code(q: int, k: int) -> LinearCode:
    """[q, k, q+1-k]_q evaluation code on the moment curve."""
    if not 2 <= k <= q:
        raise CodeError(f"rs_code needs 2 <= k <= q, got k={k}, q={q}")
    pts = moment_curve_points(q, k)
    code = _code_from_points(pts.field, pts.points, label=f"rs({q},{k})")
    if code.k != k:
        raise CodeError("moment-curve matrix lost rank")
    return code


def complementary_rs(q: int, k: int, h: int = 0) -> LinearCode:
    """Simplex minus the moment curve: [(q^(k+h)-1)/(q-1) - q, k+h]_q."""
    if h < 0:
        raise CodeError("lift h must be >= 0")
    pts = moment_curve_points(q, k)
    code = complement(pts, K=k + h)
    code.label = f"comp-rs({q},{k},h={h})"
    return code


def complementary_mds_trivial(q: int, k: int, h: int = 0) -> LinearCode:
    """Simplex minus the k identity columns (the trivial [k,k,1]_q code)."""
    if k < 2:
        raise CodeError("need k >= 2")
    field = field_of_order(q)
    ident = [tuple(1 if j == i else 0 for j in range(k)) for i in range(k)]
    code = complement(ProjectivePointSet(field, k, ident), K=k + h)
    code.label = f"comp-mds({q},{k},h={h})"
    return code


# ----------------------------------------------------------------------
# fixed-weight binary columns
# ----------------------------------------------------------------------

def fixed_weight_anticode(k: int, w: int) -> LinearCode:
    """Binary code generated by all weight-w columns of length k, in
    lexicographic order. Rank is k-1 for even w and k for odd w."""
    if not 2 <= w <= k - 1:
        raise CodeError(f"need 2 <= w <= k-1, got w={w}, k={k}")
    field = field_make(2, 1)
    cols = sorted(
        tuple(1 if i in pos else 0 for i in range(k))
        for pos in combinations(range(k), w))
    return _code_from_points(field, cols, label=f"fixed-weight({k},{w})")


# ----------------------------------------------------------------------
# two-subspace and elliptic-quadric codes in dimension 4
# ----------------------------------------------------------------------

def two_subspace_code(q: int) -> LinearCode:
    """Columns = projective points of the two complementary planes
    (*,*,0,0) and (0,0,*,*): a [2q+2, 4, q]_q two-weight code."""
    field = field_of_order(q)
    cols = [p for p in projective_points(field, 4)
            if (p[2] == p[3] == 0) or (p[0] == p[1] == 0)]
    code = _code_from_points(field, cols, label=f"two-subspace({q})")
    if code.k != 4:
        raise CodeError("two-subspace rank != 4")
    return code


def smallest_irreducible_quadratic(field: GF):
    """(c0, c1) with x^2 + c1*x + c0 irreducible over the field, minimal in
    the (c0, c1) ordering; tested by exhaustive root check."""
    for c0 in range(field.q):
        for c1 in range(field.q):
            if all(field.add(field.add(field.mul(x, x), field.mul(c1, x)), c0)
                   for x in range(field.q)):
                return c0, c1
    raise FieldError("no irreducible quadratic found")


def ovoid_code(q: int) -> LinearCode:
    """Columns = the q^2+1 points of the elliptic quadric
    x0*x1 = f(x2, x3) with f an irreducible binary quadratic form."""
    field = field_of_order(q)
    c0, c1 = smallest_irreducible_quadratic(field)

    def norm_form(a, b):
        return field.add(
            field.add(field.mul(a, a), field.mul(c1, field.mul(a, b))),
            field.mul(c0, field.mul(b, b)))

    cols = [p for p in projective_points(field, 4)
            if field.mul(p[0], p[1]) == norm_form(p[2], p[3])]
    if len(cols) != q * q + 1:
        raise CodeError(f"quadric has {len(cols)} points, expected {q * q + 1}")
    code = _code_from_points(field, cols, label=f"ovoid({q})")
    if code.k != 4:
        raise CodeError("ovoid rank != 4")
    return code


# ----------------------------------------------------------------------
# trace-code families
# ----------------------------------------------------------------------

def dual_bch_code(m: int) -> LinearCode:
    """[2^m - 1, 2m]_2 code with coordinates Tr(a*x + b*x^3) over the
    nonzero field elements x; m must be odd."""
    if m < 3 or m % 2 == 0:
        raise CodeError(f"need odd m >= 3, got {m}")
    amb = field_make(2, m)
    sub = field_make(2, 1)
    xs = list(range(1, amb.q))
    cubes = [amb.pow(x, 3) for x in xs]
    rows = []
    for j in range(m):  # a = x^j, b = 0
        a = 1 << j
        rows.append([relative_trace(amb.mul(a, x), amb, sub) for x in xs])
    for j in range(m):  # a = 0, b = x^j
        b = 1 << j
        rows.append([relative_trace(amb.mul(b, x3), amb, sub) for x3 in cubes])
    return LinearCode.from_generator(sub, rows, label=f"dual-bch(m={m})")


def kasami_code(m: int) -> LinearCode:
    """[2^(2m) - 1, 3m]_2 code with coordinates
    Tr(b*x) + Tr_m(a * x^(2^m + 1)), x over the nonzero ambient elements,
    b ranging over GF(2^(2m)) and a over the GF(2^m) subfield."""
    if m < 2:
        raise CodeError(f"need m >= 2, got {m}")
    amb = field_make(2, 2 * m)
    sub = field_make(2, m)
    gf2 = field_make(2, 1)
    xs = list(range(1, amb.q))
    # x^(2^m + 1) is the relative norm, which lands in the subfield
    norms = [project_to_subfield(amb.pow(x, (1 << m) + 1), sub, amb) for x in xs]
    rows = []
    for j in range(2 * m):  # b = x^j, a = 0
        b = 1 << j
        rows.append([relative_trace(amb.mul(b, x), amb, gf2) for x in xs])
    for j in range(m):  # b = 0, a = subfield basis element
        a = 1 << j
        rows.append([relative_trace(sub.mul(a, nx), sub, gf2) for nx in norms])
    code = LinearCode.from_generator(gf2, rows, label=f"kasami(m={m})")
    if code.k != 3 * m:
        raise CodeError(f"kasami rank {code.k} != {3 * m}")
    return code


# ----------------------------------------------------------------------
# concatenation with the binary simplex inner code
# ----------------------------------------------------------------------

def concatenate_with_simplex(outer: LinearCode) -> LinearCode:
    """Replace each GF(2^s) symbol of the outer code by the inner simplex
    [2^s - 1, s, 2^(s-1)]_2 codeword of its polynomial-basis coordinates."""
    of = outer.field
    if of.p != 2:
        raise CodeError("outer field must have characteristic 2")
    s = of.e
    gf2 = field_make(2, 1)
    inner_rows = simplex(2, s).generator.rows if s > 1 else [(1,)]

    def inner_encode(sym: int):
        coords = of.coords(sym)
        word = [0] * len(inner_rows[0])
        for c, row in zip(coords, inner_rows):
            if c:
                word = [a ^ b for a, b in zip(word, row)]
        return word

    rows = []
    for outer_row in outer.generator.rows:
        for j in range(s):
            basis = 1 << j
            scaled = [of.mul(basis, sym) for sym in outer_row]
            binary_row = []
            for sym in scaled:
                binary_row.extend(inner_encode(sym))
            rows.append(binary_row)
    return LinearCode.from_generator(
        gf2, rows, label=f"concat-simplex({outer.label})")
