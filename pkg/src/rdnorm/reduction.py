"""Placing an element of Z[sqrt(m)] into a multiplicative window.

Every nonzero xi has a unique associate +-xi*eps**j that is positive and
lies in [c, c*eps) with c = sqrt(n/eps), n = |norm(xi)|.  The window tests
are carried out on squared (or fourth-power) quantities so that they stay
inside Z[sqrt(m)] and are decided exactly by sign_real.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .pell import is_unit
from .qint import QuadInt


def cassels_bound(s: Fraction | int, t: Fraction | int) -> Fraction:
    """s + t/s.

    Contract: any x, y with x <= s, y <= s and x*y <= t satisfy
    x + y <= s + t/s (expand (x-s)*(y-s) >= 0).
    """
    s = Fraction(s)
    t = Fraction(t)
    if s <= 0:
        raise ValueError("s must be positive")
    return s + t / s


@dataclass(frozen=True)
class ReductionResult:
    """Outcome of a window reduction.

    j is the exponent applied to the unit, alpha the positive reduced
    associate, and n the absolute norm of alpha.
    """

    j: int
    alpha: QuadInt
    n: int


def unit_inverse(eps: QuadInt) -> QuadInt:
    """eps**-1 as +-conj(eps), staying inside Z[sqrt(m)]."""
    nrm = eps.norm()
    if nrm == 1:
        return eps.conj()
    if nrm == -1:
        return -eps.conj()
    raise ValueError(f"{eps} is not a unit (norm {nrm})")


def _check_reducer(eps: QuadInt) -> None:
    if not is_unit(eps):
        raise ValueError(f"{eps} is not a unit")
    if (eps - 1).sign_real() <= 0:
        raise ValueError(f"unit {eps} must exceed 1")


def in_window(alpha: QuadInt, eps: QuadInt, n: int) -> bool:
    """Exact test for sqrt(n/eps) <= alpha < sqrt(n*eps), alpha > 0 assumed."""
    sq = alpha * alpha
    return (sq * eps - n).sign_real() >= 0 and (n * eps - sq).sign_real() > 0


def reduce_window(xi: QuadInt, eps: QuadInt) -> ReductionResult:
    """Reduce xi to its canonical positive associate in [c, c*eps).

    The exponent is found by exact iteration: eps > 1 guarantees that
    multiplying or dividing by eps terminates, and the half-open window
    makes the exponent unique.
    """
    if xi.is_zero():
        raise ValueError("cannot reduce zero")
    _check_reducer(eps)
    n = abs(xi.norm())
    alpha = abs(xi)
    inv = unit_inverse(eps)
    j = 0
    # too large: alpha**2 >= n*eps
    while (n * eps - alpha * alpha).sign_real() <= 0:
        alpha = alpha * inv
        j -= 1
    # too small: alpha**2 < n/eps
    while (alpha * alpha * eps - n).sign_real() < 0:
        alpha = alpha * eps
        j += 1
    return ReductionResult(j, alpha, n)


def reduce_half(
    xi: QuadInt, delta: QuadInt, eps: QuadInt
) -> tuple[ReductionResult, str]:
    """Half-window reduction for radicands m = t**2 + 2, where delta = t + sqrt(m)
    satisfies delta**2 = 2*eps.

    xi is first moved into [sqrt(n*sqrt(eps))/eps, sqrt(n*sqrt(eps))) by unit
    powers.  If the result already sits in the upper half
    [sqrt(n/sqrt(eps)), sqrt(n*sqrt(eps))), the case is "direct"; otherwise
    it is multiplied once by delta, doubling the absolute norm and landing
    in [sqrt(2n/sqrt(eps)), sqrt(2n*sqrt(eps))).  All comparisons use exact
    fourth-power forms.
    """
    if xi.is_zero():
        raise ValueError("cannot reduce zero")
    _check_reducer(eps)
    t = delta.a
    if delta.b != 1 or t < 1 or delta.m != t * t + 2:
        raise ValueError(f"delta must be t + sqrt(t**2+2), got {delta}")
    if delta * delta != 2 * eps:
        raise ValueError("delta**2 != 2*eps")

    n = abs(xi.norm())
    nn = n * n
    alpha = abs(xi)
    inv = unit_inverse(eps)
    j = 0

    def fourth(x: QuadInt) -> QuadInt:
        sq = x * x
        return sq * sq

    # upper edge: alpha < sqrt(n*sqrt(eps))  <=>  alpha**4 < n**2 * eps
    while (nn * eps - fourth(alpha)).sign_real() <= 0:
        alpha = alpha * inv
        j -= 1
    # lower edge: alpha >= sqrt(n*sqrt(eps))/eps  <=>  alpha**4 * eps**3 >= n**2
    eps3 = eps * eps * eps
    while (fourth(alpha) * eps3 - nn).sign_real() < 0:
        alpha = alpha * eps
        j += 1

    # upper half-window: alpha >= sqrt(n/sqrt(eps))  <=>  alpha**4 * eps >= n**2
    if (fourth(alpha) * eps - nn).sign_real() >= 0:
        return ReductionResult(j, alpha, n), "direct"
    alpha = alpha * delta
    return ReductionResult(j, alpha, abs(alpha.norm())), "delta-multiplied"
