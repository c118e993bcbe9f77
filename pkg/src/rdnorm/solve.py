"""Complete solver for |x**2 - m*y**2| = n up to associates.

Enumeration runs over the y-coefficient only: every solution orbit has a
window representative a + b*sqrt(m) with |b| <= B, so it suffices to
square-test m*b**2 +- n for b in [0, B] and collapse the hits onto their
canonical window representatives.  For large B the square-testing is done
with a residue sieve and numpy; the pure-Python path is the reference.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .pell import fundamental_unit
from .qint import QuadInt, check_radicand
from .reduction import reduce_window

_NUMPY_CUTOFF = 4096  # below this b-range the plain loop wins
_INT64_LIMIT = 2**62


def coeff_bounds(m: int, n: int, eps: QuadInt) -> tuple[int, int]:
    """Largest coefficients a window representative of norm +-n can have.

    Returns (A, B) with every reduced solution satisfying |a| <= A and
    |b| <= B, via the exact squared tests 4*A**2*eps <= n*(eps+1)**2 and
    4*B**2*m*eps <= n*(eps+1)**2.  The tests must be non-strict: both
    bounds are attained with equality by window representatives at the
    lower window edge (e.g. m=146, n=2, representative -12 + sqrt(146)).
    """
    if n < 1:
        raise ValueError("n must be positive")
    upper = n * (eps + 1) ** 2

    def largest(weight: QuadInt) -> int:
        def ok(k: int) -> bool:
            return (upper - (4 * k * k) * weight).sign_real() >= 0

        hi = 1
        while ok(hi):
            hi <<= 1
        lo = hi >> 1
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if ok(mid):
                lo = mid
            else:
                hi = mid
        return lo

    return largest(eps), largest(m * eps)


# -- square-testing scans ----------------------------------------------------


def _scan_py(m: int, n: int, b_max: int) -> list[tuple[int, int]]:
    """All (a, b) with 0 <= b <= b_max, a >= 0 and m*b**2 +- n = a**2."""
    hits = []
    for b in range(b_max + 1):
        v = m * b * b
        for s in (n, -n):
            w = v + s
            if w >= 0:
                a = isqrt(w)
                if a * a == w:
                    hits.append((a, b))
    return hits


def _scan_np(m: int, n: int, b_max: int) -> list[tuple[int, int]]:
    """Sieved numpy version of _scan_py; identical output.

    For each sign, b survives mod 4032 = lcm(64, 63) and mod 65 only if
    m*b**2 + s is a square residue; survivors (a couple of percent) get the
    exact float-sqrt-plus-fixup test.
    """
    import numpy as np

    global _SQ64, _SQ63, _SQ65
    if _SQ64 is None:
        _SQ64, _SQ63, _SQ65 = _build_tables()

    hits = []
    span = np.arange(4032, dtype=np.int64)
    chunk_groups = max(1, (1 << 21) // 4032)
    for s in (n, -n):
        vals = (m * span * span + s) % 4032
        lead = np.flatnonzero(
            _SQ64[vals & 63] & _SQ63[vals % 63]
        ).astype(np.int64)
        if lead.size == 0:
            continue
        for g0 in range(0, b_max // 4032 + 1, chunk_groups):
            g1 = min(g0 + chunk_groups, b_max // 4032 + 1)
            b = (
                np.arange(g0, g1, dtype=np.int64)[:, None] * 4032 + lead
            ).ravel()
            b = b[b <= b_max]
            w = m * b * b + s
            keep = _SQ65[w % 65] & (w >= 0)
            b = b[keep]
            w = w[keep]
            a = np.sqrt(w.astype(np.float64)).astype(np.int64)
            found = np.zeros(b.shape, dtype=bool)
            root = np.zeros_like(a)
            for d in (-1, 0, 1):
                cand = a + d
                ok = (cand >= 0) & (cand * cand == w)
                root = np.where(ok, cand, root)
                found |= ok
            for i in np.flatnonzero(found):
                hits.append((int(root[i]), int(b[i])))
    hits.sort(key=lambda h: (h[1], h[0]))
    return hits


def _build_tables():
    import numpy as np

    def table(mod):
        t = np.zeros(mod, dtype=bool)
        for i in range(mod):
            t[(i * i) % mod] = True
        return t

    return table(64), table(63), table(65)


_SQ64 = _SQ63 = _SQ65 = None


def _scan(m: int, n: int, b_max: int) -> list[tuple[int, int]]:
    if b_max >= _NUMPY_CUTOFF and m * (b_max + 1) ** 2 + n < _INT64_LIMIT:
        try:
            return _scan_np(m, n, b_max)
        except ImportError:
            pass
    return _scan_py(m, n, b_max)


# -- solution sets -----------------------------------------------------------


def canonical_rep(alpha: QuadInt, eps: QuadInt) -> QuadInt:
    """Deterministic representative of the orbit {+-alpha * eps**j}."""
    return reduce_window(alpha, eps).alpha


def _sort_key(x: QuadInt):
    return (abs(x.b), abs(x.a), -_sign(x.b), -_sign(x.a))


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class SolutionSet:
    """Canonical orbit representatives of |x**2 - m*y**2| = n."""

    m: int
    n: int
    eps: QuadInt
    reps: tuple[QuadInt, ...]

    def __len__(self) -> int:
        return len(self.reps)

    def to_json(self) -> dict:
        return {
            "m": str(self.m),
            "n": str(self.n),
            "reps": [{"a": str(r.a), "b": str(r.b)} for r in self.reps],
            "count": len(self.reps),
        }


def solve_norm(
    m: int,
    n: int,
    primitive_only: bool = False,
    fold_conjugates: bool = False,
    eps: QuadInt | None = None,
) -> SolutionSet:
    """Solve |x**2 - m*y**2| = n completely, up to units and sign.

    Every solution is associate to exactly one returned representative.
    With primitive_only, orbits whose coordinates share a factor are
    dropped (the gcd test runs on the raw candidate, which is equivalent
    on the whole orbit since units are primitive).  With fold_conjugates,
    an orbit and its conjugate orbit count once.
    """
    check_radicand(m)
    if n < 1:
        raise ValueError("n must be positive")
    if eps is None:
        eps = fundamental_unit(m)
    _, b_bound = coeff_bounds(m, n, eps)
    reps: dict[tuple[int, int], QuadInt] = {}
    for a, b in _scan(m, n, b_bound):
        if primitive_only and gcd(a, b) != 1:
            continue
        for x in (a, -a) if a else (0,):
            rep = canonical_rep(QuadInt(x, b, m), eps)
            reps[(rep.a, rep.b)] = rep
    if fold_conjugates:
        folded: dict[tuple[int, int], QuadInt] = {}
        for rep in reps.values():
            twin = canonical_rep(rep.conj(), eps)
            best = min(rep, twin, key=_sort_key)
            folded[(best.a, best.b)] = best
        reps = folded
    ordered = sorted(reps.values(), key=_sort_key)
    return SolutionSet(m=m, n=n, eps=eps, reps=tuple(ordered))


def is_representable(m: int, n: int, eps: QuadInt | None = None) -> bool:
    """True iff |x**2 - m*y**2| = n has an integer solution."""
    return len(solve_norm(m, n, eps=eps)) > 0


def brute_oracle(m: int, n: int, x_max: int, y_max: int) -> list[tuple[int, int]]:
    """All (x, y), |x| <= x_max, 0 <= y <= y_max, with |x**2 - m*y**2| = n.

    Plain double loop with no unit-group logic; the independent reference
    the solver is checked against.
    """
    if x_max < 0 or y_max < 0:
        raise ValueError("bounds must be nonnegative")
    out = []
    for y in range(y_max + 1):
        myy = m * y * y
        for x in range(-x_max, x_max + 1):
            if abs(x * x - myy) == n:
                out.append((x, y))
    return out
