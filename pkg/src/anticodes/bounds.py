"""Bound arithmetic: Griesmer sums, the floor-sum lower bound on diameters
of projective codes, the binomial anticode bound, and optimality lookup.

Everything is exact integer arithmetic; no floats anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from importlib import resources


def griesmer_sum(q: int, k: int, d: int) -> int:
    """g_q(k, d) = sum of ceil(d / q^i) for i = 0..k-1."""
    if d < 1 or k < 1:
        raise ValueError("need d >= 1 and k >= 1")
    return sum(-(-d // q ** i) for i in range(k))


def griesmer(q: int, k: int, d: int, n: int):
    """(sum, defect): defect = n - g_q(k, d), >= 0 for any actual code."""
    s = griesmer_sum(q, k, d)
    return s, n - s


def antigriesmer_sum(q: int, k: int, delta: int) -> int:
    """Sum of floor(delta / q^i) for i = 0..k-1."""
    return sum(delta // q ** i for i in range(k))


def antigriesmer(q: int, k: int, delta: int, n: int):
    """(sum, defect, holds): the diameter floor-sum bound for projective
    codes with n < q^(k-1); computed regardless, flagged by the caller."""
    s = antigriesmer_sum(q, k, delta)
    return s, s - n, s >= n


def plotkin_anticode_floor(q: int, n: int) -> int:
    """ceil((1 - 1/q) * n): every projective anticode diameter reaches it."""
    return -(-(q - 1) * n // q)


def erdos_kleitman(n: int, delta: int) -> int:
    """Binary anticode size bound: sum of C(n, i) for i <= floor(delta/2)."""
    if not 0 <= delta <= n:
        raise ValueError("need 0 <= delta <= n")
    return sum(math.comb(n, i) for i in range(delta // 2 + 1))


def code_anticode_check(m_code: int, m_anticode: int, q: int, n: int) -> bool:
    """|C| * |A| <= q^n (caller certifies diameter(A) <= d(C) - 1)."""
    return m_code * m_anticode <= q ** n


@dataclass
class BoundsReport:
    q: int
    n: int
    k: int
    d: int
    delta: int
    griesmer_sum: int
    griesmer_defect: int
    antigriesmer_sum: int
    antigriesmer_defect: int
    antigriesmer_holds: bool
    antigriesmer_applicable: bool  # n < q^(k-1)
    plotkin_anticode_floor: int
    ek_bound: int | None  # binary only
    prop_delta_ge_k: bool

    def to_dict(self):
        return dict(self.__dict__)


def bounds_report(q: int, n: int, k: int, d: int, delta: int) -> BoundsReport:
    gs, gd = griesmer(q, k, d, n)
    ags, agd, holds = antigriesmer(q, k, delta, n)
    return BoundsReport(
        q=q, n=n, k=k, d=d, delta=delta,
        griesmer_sum=gs, griesmer_defect=gd,
        antigriesmer_sum=ags, antigriesmer_defect=agd, antigriesmer_holds=holds,
        antigriesmer_applicable=n < q ** (k - 1),
        plotkin_anticode_floor=plotkin_anticode_floor(q, n),
        ek_bound=erdos_kleitman(n, delta) if q == 2 else None,
        prop_delta_ge_k=delta >= k,
    )


# ----------------------------------------------------------------------
# best-known minimum distances (static, literature-cited entries only)
# ----------------------------------------------------------------------

@dataclass
class Optimality:
    status: str  # "optimal" | "almost_optimal" | "distance_to_best" | "unknown"
    best: int | None = None
    distance_to_best: int | None = None

    def to_dict(self):
        return {k: v for k, v in self.__dict__.items() if v is not None}


_BEST_KNOWN = None


def best_known_table() -> dict:
    """{(q, n, k): d_best} loaded from the bundled data file."""
    global _BEST_KNOWN
    if _BEST_KNOWN is None:
        table = {}
        text = resources.files("anticodes.data").joinpath("best_known.csv").read_text()
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            q, n, k, d_best, tag = line.split(",")
            key = (int(q), int(n), int(k))
            val = int(d_best)
            if key in table and table[key] != val:
                raise ValueError(f"conflicting best-known entries for {key}")
            table[key] = val
        _BEST_KNOWN = table
    return _BEST_KNOWN


def classify_optimality(n: int, k: int, q: int, d: int, table=None) -> Optimality:
    """Never guesses: unknown when the table has no entry for (q, n, k)."""
    table = best_known_table() if table is None else table
    best = table.get((q, n, k))
    if best is None:
        return Optimality("unknown")
    if d == best:
        return Optimality("optimal", best=best)
    if d == best - 1:
        return Optimality("almost_optimal", best=best)
    return Optimality("distance_to_best", best=best, distance_to_best=best - d)
