"""Radicand classification m = t**2 + r, exclusion rules for which n the
equation |x**2 - m*y**2| = n can represent, exhaustive verification sweeps,
and class-number-nontriviality certificates.

The exclusion rules are treated as hypotheses: sweeps report every
representable n (or solution orbit) the rule fails to cover, with a
re-checkable witness, instead of asserting the rule is true.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import gcd, isqrt
from warnings import warn

from .pell import fundamental_unit
from .qint import QuadInt, check_radicand, is_square
from .solve import canonical_rep, is_representable, solve_norm

PROP_IDS = ("2.3", "2.4", "2.5", "2.6")


@dataclass(frozen=True)
class RDForm:
    """Decomposition m = t**2 + r with |r| <= t and r | 4t."""

    t: int
    r: int
    m: int


def rd_classify(m: int) -> RDForm | None:
    """Canonical (t, r) decomposition of m, or None if m is not of that shape.

    t is the integer nearest sqrt(m), which fixes the decomposition when
    several could work.
    """
    check_radicand(m)
    t = isqrt(m)
    if m - t * t > (t + 1) ** 2 - m:
        t += 1
    r = m - t * t
    if r == 0 or abs(r) > t or (4 * t) % r != 0:
        return None
    return RDForm(t=t, r=r, m=m)


@dataclass(frozen=True)
class NormClassifier:
    """Which n < threshold an exclusion rule allows to be representable.

    listed is the rule's explicit finite set; square_escape admits perfect
    squares, double_square_escape admits n with 2n square.  Rule 2.6
    additionally constrains individual solution orbits (handled by
    verify_prop, not expressible as a predicate on n alone).
    """

    prop_id: str
    t: int
    threshold: int
    listed: tuple[int, ...]
    square_escape: bool = False
    double_square_escape: bool = False
    orbit_clause: bool = False

    def allows(self, n: int) -> bool:
        if n >= self.threshold or n in self.listed:
            return True
        if self.square_escape and is_square(n):
            return True
        if self.double_square_escape and is_square(2 * n):
            return True
        return False


_VALIDITY = {"2.3": 2, "2.4": 2, "2.5": 12, "2.6": 12}


def allowed_set(prop_id: str, t: int) -> NormClassifier:
    """Classifier for one exclusion rule at parameter t."""
    if prop_id not in PROP_IDS:
        raise ValueError(f"unknown rule id {prop_id!r}")
    if t < _VALIDITY[prop_id]:
        warn(f"rule {prop_id} is stated for t >= {_VALIDITY[prop_id]}, got t={t}",
             stacklevel=2)
    if prop_id == "2.3":
        return NormClassifier("2.3", t, 2 * t, (), square_escape=True)
    if prop_id == "2.4":
        return NormClassifier("2.4", t, 4 * t + 3, (4 * t - 3, 2 * t),
                              square_escape=True)
    if prop_id == "2.5":
        return NormClassifier(
            "2.5", t, 4 * t + 2,
            (2 * t - 1, 2 * t + 1, 4 * t - 7, 4 * t - 2),
            square_escape=True, double_square_escape=True)
    return NormClassifier(
        "2.6", t, 4 * t + 6,
        (2 * t - 3, 2 * t + 3, 4 * t - 9, 4 * t - 6, 4 * t + 6),
        square_escape=True, orbit_clause=True)


def prop_radicand(prop_id: str, t: int) -> int:
    """Radicand family a rule speaks about: t**2+1, t**2+2 or t**2-2."""
    if prop_id in ("2.3", "2.4"):
        return t * t + 1
    if prop_id == "2.5":
        return t * t + 2
    if prop_id == "2.6":
        return t * t - 2
    raise ValueError(f"unknown rule id {prop_id!r}")


def prop26_generators(t: int) -> list[QuadInt]:
    """The generator list of rule 2.6 for m = t**2 - 2.

    t+-1+-sqrt(m), t+-2+-sqrt(m), 2t-1+-2*sqrt(m), 2t+-2+-2*sqrt(m).
    The first ten are primitive with |norm| in {2t+-3, 4t-9, 4t+-6}; the
    last four equal 2*(t+-1+-sqrt(m)) and have |norm| 4*(2t+-3).
    """
    if t < 2:
        raise ValueError("t must be >= 2")
    m = t * t - 2
    check_radicand(m)
    gens = [QuadInt(t + e, s, m) for e in (1, -1, 2, -2) for s in (1, -1)]
    gens += [QuadInt(2 * t - 1, s, m) for s in (2, -2)]
    gens += [QuadInt(2 * t + e, s, m) for e in (2, -2) for s in (2, -2)]
    return gens


@dataclass(frozen=True)
class Counterexample:
    """A solution the rule's classifier fails to cover; always re-checkable:
    |x**2 - m*y**2| = n with m = prop_radicand(prop, t)."""

    t: int
    n: int
    x: int
    y: int


@dataclass(frozen=True)
class VerificationReport:
    prop_id: str
    t_min: int
    t_max: int
    checked_count: int
    exceptions: tuple[Counterexample, ...]

    @property
    def clean(self) -> bool:
        return not self.exceptions

    def to_json(self) -> dict:
        return {
            "prop": self.prop_id,
            "t_range": [self.t_min, self.t_max],
            "checked": self.checked_count,
            "exceptions": [
                {"t": e.t, "n": str(e.n), "x": str(e.x), "y": str(e.y)}
                for e in self.exceptions
            ],
        }


def _is_integer_times_unit(rep: QuadInt) -> bool:
    """True iff rep = k * eta for an integer k and a unit eta.

    Equivalent to: rep divided by the gcd of its coordinates is a unit.
    The content is orbit-invariant, so testing any orbit member suffices.
    """
    g = gcd(rep.a, rep.b)
    return (rep.a // g) ** 2 - rep.m * (rep.b // g) ** 2 in (1, -1)


def _verify_single_t(prop_id: str, t: int) -> tuple[int, list[Counterexample]]:
    import warnings

    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        cls = allowed_set(prop_id, t)
    m = prop_radicand(prop_id, t)
    eps = fundamental_unit(m)
    checked = 0
    exceptions: list[Counterexample] = []

    if prop_id != "2.6":
        for n in range(1, cls.threshold):
            checked += 1
            if cls.allows(n):
                continue
            sols = solve_norm(m, n, eps=eps)
            if sols.reps:
                rep = sols.reps[0]
                exceptions.append(Counterexample(t, n, rep.a, rep.b))
        return checked, exceptions

    # 2.6: every orbit must be an integer times a unit or associate to a
    # listed generator (norms force n into the listed set for the latter).
    gen_reps = {
        (g.a, g.b)
        for g in (canonical_rep(g, eps) for g in prop26_generators(t))
    }
    for n in range(1, cls.threshold):
        checked += 1
        for rep in solve_norm(m, n, eps=eps).reps:
            if _is_integer_times_unit(rep):
                continue
            if (rep.a, rep.b) in gen_reps:
                continue
            exceptions.append(Counterexample(t, n, rep.a, rep.b))
    return checked, exceptions


def verify_prop(
    prop_id: str, t_min: int, t_max: int, jobs: int | None = None
) -> VerificationReport:
    """Exhaustively test one exclusion rule for every t in [t_min, t_max].

    For each t the full range n < threshold is solved and every solution
    not covered by the rule is reported with a witness.  jobs > 1 fans the
    per-t work out to processes; results are merged in t order either way.
    """
    if prop_id not in PROP_IDS:
        raise ValueError(f"unknown rule id {prop_id!r}")
    if t_min > t_max:
        raise ValueError("t_min must not exceed t_max")
    ts = list(range(t_min, t_max + 1))
    if jobs is None:
        jobs = 1
    if jobs < 1:
        raise ValueError("jobs must be a positive integer")
    jobs = min(jobs, len(ts), os.cpu_count() or 1)

    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_verify_single_t, [prop_id] * len(ts), ts))
    else:
        results = [_verify_single_t(prop_id, t) for t in ts]

    checked = sum(c for c, _ in results)
    exceptions: list[Counterexample] = []
    for _, exc in results:
        exceptions.extend(exc)
    return VerificationReport(prop_id, t_min, t_max, checked, tuple(exceptions))


# -- class-number witness -----------------------------------------------------

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond 64-bit inputs."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Witness:
    """Certificate that the class number of Q(sqrt(m)) exceeds 1.

    m = (2*l*q)**2 + 1 with q prime and l > 1: q splits, and the named
    checks rule out |x**2 - m*y**2| = 4q and = q, so no prime above q is
    principal.  All checks true <=> the certificate is valid.
    """

    l: int
    q: int
    t: int
    m: int
    checks: dict[str, bool] = field(compare=False)

    @property
    def valid(self) -> bool:
        return all(self.checks.values())

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "q": str(self.q),
            "t": str(self.t),
            "m": str(self.m),
            "checks": dict(self.checks),
            "valid": self.valid,
        }


def class_number_witness(l: int, q: int) -> Witness:
    """Assemble the nontriviality certificate for t = 2*l*q, m = t**2 + 1.

    The solver confirms both n = 4q and n = q unrepresentable; the n = q
    branch closes the descent case where x and y are both even.
    """
    if l <= 1:
        raise ValueError("l must exceed 1")
    if not is_prime(q):
        raise ValueError(f"q = {q} is not prime")
    t = 2 * l * q
    m = t * t + 1
    split = m % q == 1 if q != 2 else m % 8 == 1
    checks = {
        "q_prime": True,
        "l_greater_1": True,
        "q_splits": split,
        "4q_below_2t": 4 * q < 2 * t,
        "4q_nonsquare": not is_square(4 * q),
        "norm_4q_unsolvable": not is_representable(m, 4 * q),
        "norm_q_unsolvable": not is_representable(m, q),
    }
    return Witness(l=l, q=q, t=t, m=m, checks=checks)
