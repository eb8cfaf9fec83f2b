"""Formula builders vs enumeration oracles, report machinery, the registry."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qrafts import identities as idn
from qrafts.identities import (
    REGISTRY,
    FirstDiff,
    IdentityCheck,
    first_difference,
    run_check,
    run_many,
)
from qrafts.partitions import Partition, enumerate_designations, enumerate_distinct
from qrafts.rafts import enumerate_minimal, enumerate_rafted
from qrafts.series import QSeries, XQSeries


@pytest.mark.parametrize("name", list(REGISTRY))
def test_registry_check_passes(name):
    rep = run_check(REGISTRY[name], 25)
    assert rep.passed, rep.first_diff
    assert rep.first_diff is None
    assert rep.q_trunc == 25
    if REGISTRY[name].bivariate:
        assert rep.x_trunc == 25
    else:
        assert rep.x_trunc is None


def test_registry_names_are_kebab_case():
    for name in REGISTRY:
        assert name == name.lower()
        assert " " not in name and "_" not in name


class TestFrozenValues:
    def test_gap2_series_head(self):
        lhs = idn.slater19_sum(10)
        rhs = idn.rr_product((1, 4), 5, 10)
        want = (1, 1, 1, 1, 2, 2, 3, 3, 4, 5, 6)
        assert lhs.coeffs == want
        assert rhs.coeffs == want
        assert idn.d_distinct_q(2, 10).coeffs == want

    def test_order_zero(self):
        rep = run_check(REGISTRY["slater-19"], 0)
        assert rep.passed
        assert idn.slater19_sum(0).coeffs == (1,)

    def test_complementary_product_head(self):
        assert idn.rr_product((2, 3), 5, 7).coeffs == (1, 0, 1, 1, 1, 1, 2, 2)

    def test_alt_sum_head(self):
        s = idn.slater15_alt_sum(6)
        assert s.coeffs == (1, 0, 1, 1, 1, 1, 2)

    def test_minimal_exponent(self):
        assert [idn.minimal_exponent(k, 0) for k in (1, 2, 3)] == [3, 12, 27]
        for k in (1, 2, 3):
            diffs = [idn.minimal_exponent(k, m + 1) - idn.minimal_exponent(k, m)
                     for m in range(8)]
            assert all(d > 0 for d in diffs)
            assert diffs == [2 * k + m + 1 for m in range(8)]

    def test_gf_leading_terms(self):
        for k in (1, 2, 3):
            for f in (idn.minimal_gf, idn.rafted_gf):
                s = f(k, 30)
                assert all(c == 0 for c in s.coeffs[: 3 * k * k])
                assert s.coefficient(3 * k * k) == 1

    def test_minimal_gf_empty_below_threshold(self):
        assert idn.minimal_gf(1, 2).is_zero()
        assert idn.minimal_oracle(1, 2).is_zero()

    def test_rafted_single_raft_weight5(self):
        # only {2,3} among weight-5 partitions carries a raft
        assert idn.rafted_oracle(1, 5).coefficient(5) == 1
        assert idn.rafted_gf(1, 5).coefficient(5) == 1


class TestSignedDesignations:
    def test_per_partition_indicator(self):
        for p in enumerate_distinct(18):
            total = sum((-1) ** len(d) for d in enumerate_designations(p))
            expect = 0 if p.has_k_sequence(2) else 1
            assert total == expect, p.parts

    def test_examples(self):
        run_free = Partition.of(1, 3, 5)
        assert sum((-1) ** len(d) for d in enumerate_designations(run_free)) == 1
        consec = Partition.of(1, 2, 3, 4)
        assert sum((-1) ** len(d) for d in enumerate_designations(consec)) == 0

    def test_aggregate_matches_formula(self):
        assert idn.signed_designation_oracle(30) == idn.no_raft_gf(30)

    def test_sweep_rafted_matches_bruteforce(self):
        for k in (1, 2):
            got = idn.rafted_oracle(k, 16)
            want = [0] * 17
            for rp in enumerate_rafted(k, 16):
                want[rp.weight] += 1
            assert got.coeffs == tuple(want)

    def test_sweep_domain(self):
        with pytest.raises(ValueError):
            idn.rafted_oracle(4, 10)
        with pytest.raises(ValueError):
            idn.no_kseq_oracle(5, 10, 10)


class TestCutoffSlack:
    @pytest.mark.parametrize("build", [
        idn.slater19_sum, idn.slater15_sum, idn.slater15_alt_sum, idn.no_raft_gf,
    ])
    def test_univariate(self, build):
        assert build(28) == build(28, _slack=3)

    def test_parametrized_builders(self):
        assert idn.minimal_gf(2, 28) == idn.minimal_gf(2, 28, _slack=3)
        assert idn.rafted_gf(3, 28) == idn.rafted_gf(3, 28, _slack=3)
        assert idn.qgauss_lhs(1, 2, 4, 28) == idn.qgauss_lhs(1, 2, 4, 28, _slack=3)
        assert idn.gauss_step_lhs(2, 28) == idn.gauss_step_lhs(2, 28, _slack=3)

    def test_bivariate(self):
        assert idn.master_lhs(18, 18) == idn.master_lhs(18, 18, _slack=2)
        assert idn.master_rhs(18, 18) == idn.master_rhs(18, 18, _slack=2)
        assert idn.bmn_gf(2, 18, 18) == idn.bmn_gf(2, 18, 18, _slack=2)
        assert idn.staircase_gf(1, 18, 18) == idn.staircase_gf(1, 18, 18, _slack=2)


class TestCrossWeb:
    def test_three_way_product(self):
        N = 40
        rr1 = idn.rr_product((1, 4), 5, N)
        assert idn.no_raft_gf(N) == rr1
        assert idn.d_distinct_q(2, N) == rr1

    def test_bmn2_at_x1_is_gap2_sum(self):
        N = 36
        assert idn.bmn_gf(2, N, N).substitute_x_power(0) == idn.slater19_sum(N)

    def test_staircase0_x1_counts_gap2(self):
        N = 28
        got = idn.staircase_gf(0, N, N).substitute_x_power(0)
        assert got == idn.d_distinct_q(2, N)

    def test_master_x1_equals_staircase0_x1(self):
        N = 24
        a = idn.master_lhs(N, N).substitute_x_power(0)
        b = idn.staircase_gf(0, N, N).substitute_x_power(0)
        assert a == b

    def test_master_slice_structure(self):
        f = idn.master_rhs(12, 12)
        assert f.slice(0) == QSeries.one(12)
        # slice n starts at q^(n^2)
        for n in (1, 2, 3):
            s = f.slice(n)
            assert all(c == 0 for c in s.coeffs[: n * n])
            assert s.coefficient(n * n) == 1

    def test_x_refined_rafted(self):
        N = 22
        for k in (1, 2):
            acc = {}
            for rp in enumerate_rafted(k, N):
                d = len(rp.partition.parts)
                acc.setdefault(d, [0] * (N + 1))[rp.weight] += 1
            want = XQSeries(N, N, {d: QSeries(N, tuple(b)) for d, b in acc.items()})
            assert idn.rafted_gf_x(k, N, N) == want

    def test_x_refined_minimal(self):
        N = 22
        for k in (1, 2):
            acc = {}
            for rp in enumerate_minimal(k, N):
                d = len(rp.partition.parts)
                acc.setdefault(d, [0] * (N + 1))[rp.weight] += 1
            want = XQSeries(N, N, {d: QSeries(N, tuple(b)) for d, b in acc.items()})
            assert idn.minimal_gf_x(k, N, N) == want


class TestDomains:
    def test_qgauss_rejects_tight_or_bad_exponents(self):
        with pytest.raises(ValueError):
            idn.qgauss_lhs(1, 1, 2, 10)  # no exponent gap, series diverges
        with pytest.raises(ValueError):
            idn.qgauss_lhs(0, 1, 3, 10)

    def test_k_domains(self):
        with pytest.raises(ValueError):
            idn.minimal_gf(0, 10)
        with pytest.raises(ValueError):
            idn.gauss_step_lhs(0, 10)
        with pytest.raises(ValueError):
            idn.bmn_gf(1, 10, 10)
        with pytest.raises(ValueError):
            idn.staircase_gf(-1, 10, 10)


class TestReports:
    def test_first_difference_none(self):
        a = QSeries.from_coeffs([1, 2, 3], 5)
        assert first_difference(a, a) is None

    def test_first_difference_univariate(self):
        a = QSeries.from_coeffs([1, 2, 3], 5)
        b = QSeries.from_coeffs([1, 2, 4, 9], 5)
        fd = first_difference(a, b)
        assert fd == FirstDiff(x=None, q=2, lhs="3", rhs="4")

    def test_first_difference_bivariate_scans_q_first(self):
        a = XQSeries.monomial(0, 3, 4, 6) + XQSeries.monomial(3, 1, 4, 6)
        b = XQSeries.monomial(0, 3, 4, 6)
        fd = first_difference(a, b)
        assert (fd.x, fd.q, fd.lhs, fd.rhs) == (3, 1, "1", "0")
        # a difference at lower q wins even on a higher x-degree
        c = b + XQSeries.monomial(1, 5, 4, 6)
        fd2 = first_difference(a, c)
        assert (fd2.x, fd2.q) == (3, 1)

    def test_first_difference_type_mismatch(self):
        with pytest.raises(TypeError):
            first_difference(QSeries.one(3), XQSeries.one(3, 3))
        with pytest.raises(ValueError):
            first_difference(QSeries.one(3), QSeries.one(4))

    def test_swap_symmetry(self):
        a = idn.slater19_sum(15)
        b = a + QSeries.monomial(7, 15)
        fd = first_difference(a, b)
        swapped = first_difference(b, a)
        assert (fd.x, fd.q) == (swapped.x, swapped.q)
        assert (fd.lhs, fd.rhs) == (swapped.rhs, swapped.lhs)

    def test_perturbed_check_fails_with_location(self):
        broken = IdentityCheck(
            "broken", False,
            lambda N: idn.slater19_sum(N) + QSeries.monomial(9, N),
            lambda N: idn.rr_product((1, 4), 5, N),
            "fixture",
        )
        rep = run_check(broken, 20)
        assert not rep.passed
        assert rep.first_diff.q == 9
        assert int(rep.first_diff.lhs) == int(rep.first_diff.rhs) + 1

    def test_perturbed_bivariate_check(self):
        broken = IdentityCheck(
            "broken-xq", True,
            lambda Nx, Nq: idn.master_lhs(Nx, Nq) + XQSeries.monomial(2, 9, Nx, Nq),
            idn.master_rhs,
            "fixture",
        )
        rep = run_check(broken, 14)
        assert not rep.passed
        assert (rep.first_diff.x, rep.first_diff.q) == (2, 9)

    def test_report_json_schema(self):
        rep = run_check(REGISTRY["bmn-k2"], 10)
        d = rep.to_json_dict()
        assert set(d) == {"name", "q_trunc", "x_trunc", "passed", "first_diff",
                          "millis"}
        assert d["passed"] is True and d["first_diff"] is None
        assert d["x_trunc"] == 10
        assert isinstance(d["millis"], int)

    def test_run_many_validates_and_orders(self):
        with pytest.raises(ValueError):
            run_many(["nope"], 5)
        assert run_many([], 5) == []
        reps = run_many(["slater-15", "slater-19"], 10)
        assert [r.name for r in reps] == ["slater-19", "slater-15"]

    def test_run_check_x_order_override(self):
        rep = run_check(REGISTRY["master-identity"], 12, x_trunc=4)
        assert rep.passed and rep.x_trunc == 4


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 3), st.integers(0, 24))
def test_minimal_formula_coefficient_matches_enumeration(k, w):
    count = sum(1 for rp in enumerate_minimal(k, w) if rp.weight == w)
    assert idn.minimal_gf(k, w).coefficient(w) == count


@settings(max_examples=15, deadline=None)
@given(
    st.integers(1, 3), st.integers(1, 3), st.integers(0, 3), st.integers(10, 30),
)
def test_qgauss_random_valid_triples(a, b, extra, N):
    c = a + b + 1 + extra
    assert idn.qgauss_lhs(a, b, c, N) == idn.qgauss_rhs(a, b, c, N)
