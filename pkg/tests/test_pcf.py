import pytest

from critorbit import (
    PeriodType,
    check_condition_star,
    check_condition_star_star,
    condition_star_star_failures,
    correspondence_report,
    discriminant_mod_p,
    enumerate_pcf,
    gleason_poly,
    primes_up_to,
)

from oracles import orbit_walk


class TestEnumeratePcf:
    def test_cubic_at_five(self):
        census = enumerate_pcf(3, 5)
        assert census.periodic == {
            0: PeriodType(0, 1),
            1: PeriodType(0, 4),
            4: PeriodType(0, 4),
            2: PeriodType(0, 2),
            3: PeriodType(0, 2),
        }
        assert census.preperiodic == {}
        assert census.periodic_count_by_period == {1: 1, 2: 2, 4: 2}

    def test_quadratic_at_two(self):
        census = enumerate_pcf(2, 2)
        assert census.periodic == {0: PeriodType(0, 1), 1: PeriodType(0, 2)}

    def test_quadratic_at_three(self):
        census = enumerate_pcf(2, 3)
        for c in range(3):
            tail, period = orbit_walk(2, c, 3)
            expected = PeriodType(tail, period)
            if tail == 0:
                assert census.periodic[c] == expected
            else:
                assert census.preperiodic[c] == expected

    def test_census_totals(self):
        # every residue is classified; nothing wanders in a finite field
        for d in (2, 3):
            for p in (2, 3, 5, 7, 11, 13, 31):
                census = enumerate_pcf(d, p)
                assert len(census.periodic) + len(census.preperiodic) == p


class TestConditionStar:
    def test_holds_at_five_period_three(self):
        assert check_condition_star(2, 5, 3) == (True, [])

    def test_fails_at_thirteen_period_five(self):
        ok, witnesses = check_condition_star(2, 13, 5)
        assert not ok
        assert witnesses == [3]

    def test_at_23_period_three_double_root(self):
        # c = 15 = -8 has exact period 3 and is a double root of G_{2,3} mod
        # 23, so the simple-root condition fails there even though the other
        # periodic parameter c = 14 = -9 is fine
        ok, witnesses = check_condition_star(2, 23, 3)
        assert not ok
        assert witnesses == [15]

    def test_range_validation(self):
        with pytest.raises(ValueError):
            check_condition_star(2, 5, 6)


class TestConditionStarStar:
    def test_fails_at_thirteen(self):
        assert not check_condition_star_star(2, 13)
        assert condition_star_star_failures(2, 13) == [(3, 5)]

    def test_holds_at_five(self):
        assert check_condition_star_star(2, 5)

    def test_holds_at_two(self):
        assert check_condition_star_star(2, 2)

    def test_unbounded_failures_first_50_primes(self):
        # the complete check over every arising period: exactly four of the
        # first 50 primes fail, the documented 13 among them; the failure at
        # 211 only shows at period 12
        failures = [p for p in primes_up_to(229) if not check_condition_star_star(2, p)]
        assert failures == [13, 23, 137, 211]

    def test_bounded_check_reproduces_small_period_surveys(self):
        # capping the examined period at 11 (the survey-computable range)
        # hides the period-12 failure at 211
        assert not check_condition_star_star(2, 137, max_period=11)
        assert check_condition_star_star(2, 211, max_period=11)
        assert not check_condition_star_star(2, 211, max_period=12)


class TestDiscCriterionConsistency:
    def test_clean_disc_implies_condition_star(self):
        # if p does not divide disc G_{d,n}, the simple-root condition holds
        # at period n (d = 2, 3; p < 200; period range kept polynomial-feasible)
        for d, max_n in ((2, 8), (3, 5)):
            for n in range(1, max_n + 1):
                poly = gleason_poly(d, n)
                if poly.degree < 1:
                    continue
                for p in primes_up_to(199):
                    if p <= d or n > p:
                        continue
                    if discriminant_mod_p(poly, p) != 0:
                        ok, witnesses = check_condition_star(d, p, n)
                        assert ok, (d, n, p, witnesses)


class TestCorrespondence:
    def test_cubic_at_five(self):
        report = correspondence_report(3, 5, precision=4)
        assert report.guaranteed
        assert report.strictly_preperiodic_excluded
        assert len(report.entries) == 5
        assert report.counts_by_period == {1: 1, 2: 2, 4: 2}
        for entry in report.entries:
            assert entry.lift is not None
            lifted = entry.lift.lifted_value
            assert lifted.modulus == 5**4
            assert lifted.value % 5 == entry.base_c
            x = 0
            for _ in range(entry.period):
                x = (pow(x, 3, 5**4) + lifted.value) % 5**4
            assert x == 0

    def test_includes_16_above_one(self):
        report = correspondence_report(2, 5, precision=3)
        values = {e.base_c: e.lift.lifted_value.value for e in report.entries}
        assert values[1] == 16

    def test_three_lifts_each_base(self):
        report = correspondence_report(2, 3, precision=2)
        assert report.guaranteed
        for entry in report.entries:
            assert entry.lift is not None
            assert entry.lift.lifted_value.value % 3 == entry.base_c

    def test_not_guaranteed_at_thirteen(self):
        report = correspondence_report(2, 13, precision=2)
        assert not report.guaranteed
        errored = [e for e in report.entries if e.error is not None]
        assert errored and errored[0].base_c == 3
        assert all(e.lift is not None for e in report.entries if e.error is None)

    def test_small_prime_hypothesis(self):
        report = correspondence_report(2, 2, precision=2)
        assert not report.guaranteed
        assert not report.strictly_preperiodic_excluded
