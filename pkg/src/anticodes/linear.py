"""Linear codes: exact weight distributions, duals, projectivity, minimality.

All weight counts come from exhaustive enumeration of the q^k messages.
A scalar-class enumeration (one representative per projective message class,
nonzero counts multiplied by q-1) is kept as an independent cross-check.
"""

from __future__ import annotations

import os

from .gf import GF, Matrix

ENUM_CAP = int(os.environ.get("ANTICODES_ENUM_CAP", 1 << 24))
MINIMAL_CAP = int(os.environ.get("ANTICODES_MINIMAL_CAP", 1 << 20))


class CapExceeded(RuntimeError):
    pass


class CodeError(ValueError):
    pass


class WeightDistribution:
    """Exact weight -> count table for a linear code."""

    def __init__(self, q: int, n: int, k: int, counts: dict):
        self.q = q
        self.n = n
        self.k = k
        self.counts = {w: c for w, c in sorted(counts.items()) if c}
        total = sum(self.counts.values())
        if total != q ** k:
            raise CodeError(f"weight counts sum to {total}, expected q^k = {q ** k}")
        if self.counts.get(0) != 1:
            raise CodeError("A_0 must equal 1")
        if any(w < 0 or w > n for w in self.counts):
            raise CodeError("weight outside [0, n]")

    def nonzero_weights(self):
        return [w for w in self.counts if w > 0]

    @property
    def min_weight(self) -> int:
        return min(self.nonzero_weights())

    @property
    def max_weight(self) -> int:
        return max(self.nonzero_weights())

    @property
    def num_weights(self) -> int:
        return len(self.nonzero_weights())

    def __eq__(self, other):
        return (isinstance(other, WeightDistribution)
                and (self.q, self.n, self.k, self.counts)
                == (other.q, other.n, other.k, other.counts))

    def __repr__(self):
        return f"WeightDistribution(q={self.q}, n={self.n}, k={self.k}, {self.counts})"

    def to_dict(self):
        return {str(w): c for w, c in self.counts.items()}


class LinearCode:
    """An [n, k]_q code held as a full-rank k x n generator matrix.

    ``column_points`` optionally retains the originating column multiset in
    its ambient dimension (which may exceed k when the defining matrix was
    rank-deficient); the complement construction consumes it.
    """

    def __init__(self, field: GF, generator: Matrix, label: str = "",
                 column_points=None):
        if generator.nrows == 0 or generator.ncols == 0:
            raise CodeError("zero-size generator")
        r = generator.rank()
        if r != generator.nrows:
            raise CodeError(
                f"generator is rank-deficient: rank {r} < {generator.nrows} rows")
        self.field = field
        self.generator = generator
        self.n = generator.ncols
        self.k = generator.nrows
        self.label = label
        self.column_points = column_points
        self._wd = None

    @classmethod
    def from_generator(cls, field: GF, rows, label: str = "") -> "LinearCode":
        return cls(field, Matrix(field, rows), label=label)

    @classmethod
    def from_columns(cls, field: GF, columns, label: str = "") -> "LinearCode":
        """Code spanned by the rows of the matrix with the given columns.

        The matrix may be rank-deficient; a row basis becomes the generator
        and the full column list is kept for the complement construction.
        """
        ambient = len(columns[0])
        m = Matrix(field, [[col[i] for col in columns] for i in range(ambient)])
        basis, _ = m.rref()
        return cls(field, Matrix(field, basis), label=label,
                   column_points=(ambient, [tuple(c) for c in columns]))

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}]_{self.field.q}, {self.label!r})"

    # ------------------------------------------------------------------
    def codewords(self):
        """All q^k codewords as tuples, in span order."""
        F = self.field
        words = [tuple([0] * self.n)]
        for row in self.generator.rows:
            scaled = [tuple(F.mul(lam, x) for x in row) for lam in range(F.q)]
            words = [tuple(F.add(a, b) for a, b in zip(w, s))
                     for w in words for s in scaled]
        return words

    def _check_cap(self, cap=None):
        if self.field.q ** self.k > (cap or ENUM_CAP):
            raise CapExceeded(
                f"q^k = {self.field.q ** self.k} exceeds enumeration cap")

    def weight_distribution(self) -> WeightDistribution:
        if self._wd is None:
            self._check_cap()
            if self.field.q == 2:
                counts = self._wd_binary()
            else:
                counts = {}
                for w in self.codewords():
                    wt = sum(1 for x in w if x)
                    counts[wt] = counts.get(wt, 0) + 1
            self._wd = WeightDistribution(self.field.q, self.n, self.k, counts)
        return self._wd

    def _wd_binary(self):
        # Gray-code walk: one row xor per message, weights via popcount.
        rows = [sum(x << j for j, x in enumerate(r)) for r in self.generator.rows]
        counts = {0: 1}
        cw = 0
        for msg in range(1, 1 << self.k):
            cw ^= rows[(msg & -msg).bit_length() - 1]
            wt = cw.bit_count()
            counts[wt] = counts.get(wt, 0) + 1
        return counts

    def weight_distribution_by_classes(self) -> WeightDistribution:
        """Independent route: one message per scalar class, counts x (q-1)."""
        self._check_cap()
        F = self.field
        counts = {0: 1}
        for msg in _projective_messages(F, self.k):
            w = [0] * self.n
            for mi, row in zip(msg, self.generator.rows):
                if mi:
                    w = [F.add(a, F.mul(mi, b)) for a, b in zip(w, row)]
            wt = sum(1 for x in w if x)
            counts[wt] = counts.get(wt, 0) + (F.q - 1)
        return WeightDistribution(F.q, self.n, self.k, counts)

    def min_distance(self) -> int:
        return self.weight_distribution().min_weight

    def max_weight(self) -> int:
        return self.weight_distribution().max_weight

    # ------------------------------------------------------------------
    def dual_code(self) -> "LinearCode":
        ker = self.generator.kernel()
        if ker.nrows == 0:
            raise CodeError(f"[{self.n},{self.k}] code has a trivial dual")
        return LinearCode(self.field, ker, label=f"dual({self.label})")

    def dual_distance(self):
        """Exact dual minimum distance when the dual is enumerable, else None."""
        if self.n == self.k:
            return None
        dual = self.dual_code()
        if self.field.q ** dual.k > ENUM_CAP:
            return None
        return dual.min_distance()

    def is_projective(self) -> bool:
        """Column test: no zero column, no two columns scalar multiples."""
        F = self.field
        seen = set()
        for col in self.generator.columns():
            canon = canonical_point(F, col)
            if canon is None or canon in seen:
                return False
            seen.add(canon)
        return True

    # ------------------------------------------------------------------
    def is_minimal_exact(self):
        """(True, None) or (False, (covered, covering)) witness codeword pair.

        Minimal means: support containment between nonzero codewords only
        happens between scalar multiples.
        """
        if self.field.q ** self.k > MINIMAL_CAP:
            raise CapExceeded("pairwise support check over the cap")
        F = self.field
        seen_support = {}
        supports = []  # (mask, weight, codeword)
        for w in self.codewords():
            mask = 0
            for i, x in enumerate(w):
                if x:
                    mask |= 1 << i
            if mask == 0:
                continue
            if mask in seen_support:
                other = seen_support[mask]
                if not _is_scalar_multiple(F, w, other):
                    return False, (w, other)
            else:
                seen_support[mask] = w
                supports.append((mask, mask.bit_count(), w))
        supports.sort(key=lambda t: t[1])
        for i, (mi, wi, cwi) in enumerate(supports):
            for mj, wj, cwj in supports[i + 1:]:
                if wj > wi and mi & mj == mi:
                    # strict containment between distinct supports
                    return False, (cwi, cwj)
        return True, None

    def ab_criterion(self) -> bool:
        """Sufficient minimality condition: q*d > (q-1)*delta, exactly."""
        wd = self.weight_distribution()
        return self.field.q * wd.min_weight > (self.field.q - 1) * wd.max_weight


def _is_scalar_multiple(field: GF, u, v):
    """True when u = c * v for a nonzero scalar c (u, v nonzero tuples)."""
    pivot = next(i for i, x in enumerate(v) if x)
    if u[pivot] == 0:
        return False
    c = field.div(u[pivot], v[pivot])
    return all(x == field.mul(c, y) for x, y in zip(u, v))


def canonical_point(field: GF, vec):
    """Scale so the first nonzero coordinate is 1; None for the zero vector."""
    for x in vec:
        if x:
            inv = field.inv(x)
            return tuple(field.mul(inv, y) for y in vec)
    return None


def _projective_messages(field: GF, k: int):
    """One representative per scalar class: first nonzero coordinate = 1."""
    q = field.q
    for lead in range(k):
        tail = k - lead - 1
        for code in range(q ** tail):
            digs = []
            c = code
            for _ in range(tail):
                digs.append(c % q)
                c //= q
            yield tuple([0] * lead + [1] + digs)
