import random

import pytest

from rdnorm import (
    QuadInt,
    brute_oracle,
    canonical_rep,
    coeff_bounds,
    fundamental_unit,
    is_representable,
    is_square,
    solve_norm,
)
from rdnorm.solve import _scan_np, _scan_py


def collapse(pairs, m, eps):
    """Orbit-collapse raw (x, y) solutions onto canonical representatives."""
    reps = set()
    for x, y in pairs:
        if (x, y) != (0, 0):
            r = canonical_rep(QuadInt(x, y, m), eps)
            reps.add((r.a, r.b))
    return reps


def oracle_box(m, n, eps):
    """A box guaranteed to contain the window box, plus one eps-multiple
    when that stays affordable for the double-loop oracle."""
    from math import isqrt

    a_max, b_max = coeff_bounds(m, n, eps)
    corner = QuadInt(a_max, b_max, m) * eps + QuadInt(1, 1, m)
    if corner.b <= 40:
        return corner.a, corner.b
    return isqrt(m * (b_max + 1) ** 2 + n), b_max + 1


class TestCoeffBounds:
    def test_frozen_values(self):
        eps = fundamental_unit(10)
        assert coeff_bounds(10, 6, eps) == (3, 1)
        assert coeff_bounds(10, 1, eps) == (1, 0)

    def test_bound_attained_with_equality(self):
        # m=146, n=2: the representative -12 + sqrt(146) has |b| = 1, and
        # 4*1*m*eps = n*(eps+1)**2 exactly; a strict cut-off would lose it
        eps = fundamental_unit(146)
        assert 4 * 146 * eps == 2 * (eps + 1) ** 2
        assert coeff_bounds(146, 2, eps)[1] == 1

    def test_small_norm_on_t_squared_plus_1_family(self):
        for t in range(2, 50):
            m = t * t + 1
            eps = fundamental_unit(m)
            for n in range(1, 2 * t):
                assert coeff_bounds(m, n, eps)[1] <= 1

    def test_rejects_zero_n(self):
        with pytest.raises(ValueError):
            coeff_bounds(10, 0, fundamental_unit(10))


class TestSolveNorm:
    def test_two_conjugate_orbits(self):
        sols = solve_norm(10, 6)
        assert len(sols) == 2
        eps = fundamental_unit(10)
        got = {(r.a, r.b) for r in sols.reps}
        expect = collapse([(4, 1), (4, -1)], 10, eps)
        assert got == expect
        assert all(abs(r.norm()) == 6 for r in sols.reps)

    def test_empty(self):
        assert len(solve_norm(10, 2)) == 0
        assert len(solve_norm(10, 3)) == 0

    def test_units(self):
        assert solve_norm(10, 1).reps == (QuadInt(1, 0, 10),)
        # 3 + sqrt(10) is associate to 1
        eps = fundamental_unit(10)
        assert canonical_rep(QuadInt(3, 1, 10), eps) == QuadInt(1, 0, 10)

    def test_norm_two_in_t_squared_plus_2_family(self):
        sols = solve_norm(146, 2)
        assert len(sols) >= 1
        rep = canonical_rep(QuadInt(12, 1, 146), fundamental_unit(146))
        assert rep in sols.reps

    def test_primitive_filter(self):
        # every solution of |x^2 - 10 y^2| = 36 has a common factor
        assert len(solve_norm(10, 36)) > 0
        assert len(solve_norm(10, 36, primitive_only=True)) == 0
        # primitive orbits survive
        assert len(solve_norm(10, 6, primitive_only=True)) == 2

    def test_fold_conjugates(self):
        assert len(solve_norm(10, 6, fold_conjugates=True)) == 1

    def test_sorted_deterministically(self):
        reps = solve_norm(79, 15).reps
        keys = [(abs(r.b), abs(r.a)) for r in reps]
        assert keys == sorted(keys)

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            solve_norm(10, 0)
        with pytest.raises(ValueError):
            solve_norm(9, 5)

    def test_conjugate_symmetry(self):
        for n in (1, 6, 9, 10, 15, 41):
            sols = solve_norm(79, n) if is_representable(79, n) else None
            if sols is None:
                continue
            eps = sols.eps
            got = {(r.a, r.b) for r in sols.reps}
            for r in sols.reps:
                c = canonical_rep(r.conj(), eps)
                assert (c.a, c.b) in got


class TestIsRepresentable:
    def test_examples(self):
        assert is_representable(10, 6)
        assert not is_representable(10, 3)
        for m in (2, 3, 10, 146, 145):
            assert is_representable(m, 1)


class TestCanonicalRep:
    def test_orbit_invariance(self):
        eps = fundamental_unit(10)
        alpha = QuadInt(4, 1, 10)
        base = canonical_rep(alpha, eps)
        for j in range(-8, 9):
            scaled = alpha * (eps**j if j >= 0 else (-eps.conj()) ** (-j))
            assert canonical_rep(scaled, eps) == base
            assert canonical_rep(-scaled, eps) == base

    def test_window_member_is_fixed(self):
        eps = fundamental_unit(10)
        rep = canonical_rep(QuadInt(4, 1, 10), eps)
        assert canonical_rep(rep, eps) == rep


class TestBruteOracle:
    def test_examples(self):
        hits = brute_oracle(10, 6, 10, 3)
        assert (4, 1) in hits and (-4, 1) in hits
        hits = brute_oracle(10, 1, 10, 3)
        assert (1, 0) in hits and (3, 1) in hits

    def test_no_unit_logic_needed_for_empty(self):
        assert brute_oracle(10, 3, 50, 15) == []

    def test_rejects_negative_bounds(self):
        with pytest.raises(ValueError):
            brute_oracle(10, 6, -1, 3)


class TestOracleEquivalence:
    def test_small_grid(self):
        for m in (2, 3, 5, 6, 7, 10, 13, 17, 23, 79, 146):
            eps = fundamental_unit(m)
            for n in range(1, 21):
                x_max, y_max = oracle_box(m, n, eps)
                raw = brute_oracle(m, n, x_max, y_max)
                got = {(r.a, r.b) for r in solve_norm(m, n, eps=eps).reps}
                assert got == collapse(raw, m, eps), (m, n)


class TestScanPaths:
    def test_numpy_matches_python(self):
        rng = random.Random(7)
        cases = [(rng.randrange(2, 400), rng.randrange(1, 120)) for _ in range(40)]
        for m, n in cases:
            if is_square(m):
                continue
            b_max = rng.randrange(0, 30000)
            assert sorted(_scan_np(m, n, b_max)) == sorted(_scan_py(m, n, b_max))


class TestSolutionSetJSON:
    def test_schema(self):
        doc = solve_norm(10, 6).to_json()
        assert doc["m"] == "10" and doc["n"] == "6"
        assert doc["count"] == 2 == len(doc["reps"])
        for rep in doc["reps"]:
            assert set(rep) == {"a", "b"}
            int(rep["a"]), int(rep["b"])  # decimal strings
