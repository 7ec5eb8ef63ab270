"""Exact arithmetic over small prime-power fields GF(p^e).

Elements are integers in [0, q-1] encoding the coefficient vector of the
residue polynomial in base p (least-significant digit = constant term).
The modulus is always the lexicographically smallest monic irreducible
polynomial of degree e over GF(p), comparing coefficient lists from the
constant term upward, so field construction is deterministic across runs.
"""

from __future__ import annotations

from functools import lru_cache

SIZE_CAP = 1 << 16


class FieldError(ValueError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# ----------------------------------------------------------------------
# polynomial helpers over GF(p); coefficient lists, index i = coeff of x^i
# ----------------------------------------------------------------------

def _poly_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mod(a, b, p):
    """Remainder of a divided by b over GF(p); b must be nonzero."""
    a = list(a)
    _poly_trim(a)
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p) if p > 2 else b[-1]
    while len(a) - 1 >= db and a:
        shift = len(a) - 1 - db
        factor = (a[-1] * inv_lead) % p
        for i, bc in enumerate(b):
            a[i + shift] = (a[i + shift] - factor * bc) % p
        _poly_trim(a)
    return a


def _is_irreducible(poly, p):
    """Trial division by all monic polynomials of degree <= deg/2."""
    deg = len(poly) - 1
    if deg == 1:
        return True
    if poly[0] == 0:  # divisible by x
        return False
    for d in range(1, deg // 2 + 1):
        for code in range(p ** d):
            divisor = _digits(code, p, d) + [1]
            if not _poly_mod(poly, divisor, p):
                return False
    return True


def _digits(code: int, p: int, length: int):
    out = []
    for _ in range(length):
        out.append(code % p)
        code //= p
    return out


def _undigits(digs, p: int) -> int:
    code = 0
    for d in reversed(digs):
        code = code * p + d
    return code


def smallest_irreducible(p: int, e: int):
    """Monic irreducible of degree e over GF(p), minimal in the ordering
    that compares coefficient lists (c0, c1, ...) lexicographically."""
    if e == 1:
        return [0, 1]
    from itertools import product
    for tail in product(range(p), repeat=e):
        poly = list(tail) + [1]
        if _is_irreducible(poly, p):
            return poly
    raise FieldError(f"no irreducible polynomial of degree {e} over GF({p})")


class GF:
    """The field GF(p^e) with canonical modulus and integer-coded elements."""

    def __init__(self, p: int, e: int, modulus=None):
        if not is_prime(p):
            raise FieldError(f"p={p} is not prime")
        if e < 1:
            raise FieldError(f"extension degree must be >= 1, got {e}")
        q = p ** e
        if q > SIZE_CAP:
            raise FieldError(f"field size {q} exceeds cap {SIZE_CAP}")
        self.p = p
        self.e = e
        self.q = q
        self.modulus = list(modulus) if modulus is not None else smallest_irreducible(p, e)
        if len(self.modulus) != e + 1 or self.modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree e")
        self._mul_table = None
        self._inv_table = None
        if q <= 512:
            self._build_tables()

    def __repr__(self):
        return f"GF({self.p}^{self.e})" if self.e > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return (isinstance(other, GF)
                and (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus))

    def __hash__(self):
        return hash((self.p, self.e, tuple(self.modulus)))

    # ------------------------------------------------------------------
    def _build_tables(self):
        q = self.q
        self._mul_table = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            row = self._mul_table[a]
            inv[a] = row.index(1)
        self._inv_table = inv

    def elements(self):
        return range(self.q)

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise FieldError(f"{a!r} is not a valid element code for {self}")
        return a

    # ------------------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        da, db = _digits(a, p, self.e), _digits(b, p, self.e)
        return _undigits([(x + y) % p for x, y in zip(da, db)], p)

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        p = self.p
        return _undigits([(-x) % p for x in _digits(a, p, self.e)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def _mul_raw(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a * b) % self.p
        p = self.p
        da, db = _digits(a, p, self.e), _digits(b, p, self.e)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        rem = _poly_mod(prod, self.modulus, p)
        rem += [0] * (self.e - len(rem))
        return _undigits(rem, p)

    def mul(self, a: int, b: int) -> int:
        if self._mul_table is not None:
            return self._mul_table[a][b]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError(f"division by zero in {self}")
        if self._inv_table is not None:
            return self._inv_table[a]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if n < 0:
            raise FieldError("pow exponent must be nonnegative")
        out = 1
        base = a
        while n:
            if n & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            n >>= 1
        return out

    # ------------------------------------------------------------------
    def coords(self, a: int):
        """Coefficient vector of a over the prime field, constant term first."""
        return _digits(a, self.p, self.e)

    def from_coords(self, digs) -> int:
        return _undigits(list(digs), self.p)


@lru_cache(maxsize=None)
def field_make(p: int, e: int) -> GF:
    """The canonical GF(p^e); cached so repeated lookups share tables."""
    return GF(p, e)


# ----------------------------------------------------------------------
# subfield embeddings and relative traces
# ----------------------------------------------------------------------

@lru_cache(maxsize=None)
def _embedding_maps(p: int, sub_e: int, amb_e: int):
    """Embedding GF(p^sub_e) -> GF(p^amb_e) as (forward list, inverse dict).

    Realized by mapping the subfield generator x to the smallest root of
    the subfield modulus inside the ambient field.
    """
    sub = field_make(p, sub_e)
    amb = field_make(p, amb_e)
    if sub_e == 1:
        fwd = list(range(p))  # constants have identical base-p codes
    else:
        beta = None
        for cand in range(amb.q):
            acc = 0
            power = 1
            for c in sub.modulus:
                if c:
                    acc = amb.add(acc, amb.mul(c, power))
                power = amb.mul(power, cand)
            if acc == 0:
                beta = cand
                break
        if beta is None:
            raise FieldError("subfield modulus has no root in ambient field")
        fwd = []
        for a in range(sub.q):
            img = 0
            power = 1
            for c in sub.coords(a):
                if c:
                    img = amb.add(img, amb.mul(c, power))
                power = amb.mul(power, beta)
            fwd.append(img)
    inv = {img: a for a, img in enumerate(fwd)}
    if len(inv) != sub.q:
        raise FieldError("subfield embedding is not injective")
    return tuple(fwd), inv


def embed(x: int, sub: GF, amb: GF) -> int:
    """Image of the GF(p^e) element x inside the ambient field."""
    if sub.p != amb.p or amb.e % sub.e:
        raise FieldError(f"{sub} is not a subfield of {amb}")
    fwd, _ = _embedding_maps(sub.p, sub.e, amb.e)
    return fwd[x]


def project_to_subfield(x: int, sub: GF, amb: GF) -> int:
    """Subfield code of an ambient element known to lie in the subfield."""
    if sub.p != amb.p or amb.e % sub.e:
        raise FieldError(f"{sub} is not a subfield of {amb}")
    _, inv = _embedding_maps(sub.p, sub.e, amb.e)
    if x not in inv:
        raise FieldError(f"element {x} is not in the {sub} subfield of {amb}")
    return inv[x]


def relative_trace(x: int, amb: GF, sub: GF) -> int:
    """Tr(x) = sum of x^(p^(e*i)) over i < amb.e/sub.e, as a subfield code."""
    if sub.p != amb.p or amb.e % sub.e:
        raise FieldError(f"{sub} does not divide {amb}")
    m = amb.e // sub.e
    step = sub.q  # p^sub_e
    t = 0
    term = x
    for _ in range(m):
        t = amb.add(t, term)
        term = amb.pow(term, step)
    _, inv = _embedding_maps(sub.p, sub.e, amb.e)
    if t not in inv:
        raise FieldError("trace value escaped the subfield (embedding bug)")
    return inv[t]


# ----------------------------------------------------------------------
# linear algebra over GF
# ----------------------------------------------------------------------

class Matrix:
    """Dense row-major matrix over a GF; rows are tuples of element codes."""

    def __init__(self, field: GF, rows):
        self.field = field
        self.rows = [tuple(field.check(x) for x in r) for r in rows]
        if self.rows:
            n = len(self.rows[0])
            if any(len(r) != n for r in self.rows):
                raise ValueError("ragged matrix")
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0

    def columns(self):
        return [tuple(r[j] for r in self.rows) for j in range(self.ncols)]

    def rref(self):
        """(reduced rows, pivot column list); reduced rows exclude zero rows."""
        F = self.field
        rows = [list(r) for r in self.rows]
        pivots = []
        r = 0
        for c in range(self.ncols):
            pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = F.inv(rows[r][c])
            rows[r] = [F.mul(inv, x) for x in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        return [tuple(rows[i]) for i in range(r)], pivots

    def rank(self) -> int:
        return len(self.rref()[0])

    def kernel(self):
        """Basis matrix of the right null space; rank + nullity = ncols."""
        F = self.field
        reduced, pivots = self.rref()
        free = [c for c in range(self.ncols) if c not in pivots]
        basis = []
        for fc in free:
            v = [0] * self.ncols
            v[fc] = 1
            for ri, pc in enumerate(pivots):
                v[pc] = F.neg(reduced[ri][fc])
            basis.append(tuple(v))
        return Matrix(F, basis) if basis else Matrix(F, [])


def mat_rank(m: Matrix) -> int:
    return m.rank()


def mat_kernel(m: Matrix) -> Matrix:
    return m.kernel()
