#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcontinuum/corpus.hpp"
#include "bcontinuum/series_expr.hpp"
#include "bcontinuum/sumtheorem.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace bcontinuum;

namespace {
FilterSemantics fs_default() { return FilterSemantics(100000, 64, ParityChoice::EvensInFilter); }
FilterSemantics fs_fast() { return FilterSemantics(20000, 64, ParityChoice::EvensInFilter); }

bool grid_all_hold(const std::vector<PointVerdict>& pvs) {
    for (const PointVerdict& pv : pvs)
        if (!pv.verdict.holds()) return false;
    return true;
}
} // namespace

TEST_CASE("partial sums follow the i = 1 indexing convention") {
    const Series& geo = corpus_series("geometric");
    CHECK(partial_sum(geo, 3, 0.5) == doctest::Approx(0.875).epsilon(1e-15));
    CHECK(partial_sum(geo, 1, 0.5) == doctest::Approx(0.5).epsilon(1e-15)); // no i = 0 term

    const Series& abel = corpus_series("abel");
    CHECK(partial_sum(abel, 1, M_PI / 2) == doctest::Approx(1.0).epsilon(1e-15));

    const double direct = oracles::direct_sum(abel.term, 100, 1.0);
    CHECK(std::fabs(partial_sum(abel, 100, 1.0) - direct) <= 1e-12);
}

TEST_CASE("remainder windows require n' > n") {
    CHECK_THROWS_AS(RemainderWindow::make(10, 10), Error);
    const RemainderWindow w = RemainderWindow::make(10, 20);
    const Series& abel = corpus_series("abel");
    CHECK(w.value_at(abel, 1.0) ==
          doctest::Approx(oracles::direct_window(abel.term, 10, 20, 1.0)).epsilon(1e-15));
}

TEST_CASE("pointwise hypothesis holds for the convergent cases") {
    const FilterSemantics fs = fs_default();

    const auto geo = hypothesis_1821(corpus_series("geometric"), {Rational(1, 2)}, fs);
    CHECK(geo[0].verdict.holds());

    const auto abel = hypothesis_1821(corpus_series("abel"), {Rational(0), Rational(1)}, fs);
    CHECK(abel[0].verdict.holds());
    CHECK(abel[1].verdict.holds());

    // independent tail-bound oracle at x = 1: |s_2n - s_n| <= 2/(n sin(1/2))
    const Series& S = corpus_series("abel");
    for (std::uint64_t n : {100, 1000, 10000}) {
        const double window = std::fabs(oracles::direct_window(S.term, n, 2 * n, 1.0));
        CHECK(window <= 2.0 / (n * std::sin(0.5)) + 1e-12);
    }

    CHECK_THROWS_AS(hypothesis_1821(S, {Rational(2)}, fs), DomainViolation);
}

TEST_CASE("the <1/n> diagonal defeats the sin(ix)/i series") {
    const FilterSemantics fs = fs_default();
    const Series& S = corpus_series("abel");
    const Hyperreal probe(seq_reciprocal(), fs);

    const Seq d = diagonal_difference_seq(S, probe);
    const NullCertificate nc = certify_null(d, fs, kSeriesLadderDepth);
    CHECK(nc.verdict.fails());
    CHECK(nc.bound > 0.25);

    // the diagonal value approaches the integral of sin(t)/t over [1, 2]
    const double integral = oracles::sine_integral(1.0, 2.0);
    CHECK(integral == doctest::Approx(0.6593299064355118).epsilon(1e-10));
    CHECK(d.at_double(10000) == doctest::Approx(integral).epsilon(2e-3));
    CHECK(std::fabs(d.at_double(10000) - 0.6593) <= 1e-3);
}

TEST_CASE("always-hypothesis verdicts per probe and in aggregate") {
    const FilterSemantics fs = fs_default();

    const Hypothesis1853Report abel =
        hypothesis_1853(corpus_series("abel"), {Hyperreal(seq_reciprocal(), fs)}, fs);
    CHECK(grid_all_hold(abel.clause_a));
    REQUIRE(abel.clause_b.size() == 1);
    CHECK(abel.clause_b[0].verdict.fails());
    CHECK(abel.aggregate.fails());

    const Hypothesis1853Report geo =
        hypothesis_1853(corpus_series("geometric"), {Hyperreal(seq_reciprocal(), fs)}, fs);
    CHECK(geo.aggregate.holds());

    // a probe sitting at 0 sees only vanishing terms
    const Hypothesis1853Report at_zero =
        hypothesis_1853(corpus_series("abel"), {hr_from_rational(Rational(0), fs)}, fs);
    CHECK(at_zero.clause_b[0].verdict.holds());
}

TEST_CASE("a constant probe reduces the diagonal to the pointwise check") {
    const FilterSemantics fs = fs_fast();
    const Series& S = corpus_series("abel");
    const Rational x(1, 2);

    const auto pointwise = hypothesis_1821(S, {x}, fs);
    const Hypothesis1853Report diag = hypothesis_1853(S, {hr_from_rational(x, fs)}, fs);
    CHECK(pointwise[0].verdict.value == diag.clause_b[0].verdict.value);
    CHECK(pointwise[0].verdict.witness == diag.clause_b[0].verdict.witness);
}

TEST_CASE("integral-comparison bound encloses the diagonal from below") {
    const Series& S = corpus_series("abel");

    const double b100 = integral_comparison_bound(S, 100);
    CHECK(b100 >= 0.5);
    CHECK(b100 <= 0.66);

    const double b10000 = integral_comparison_bound(S, 10000);
    CHECK(std::fabs(b10000 - 0.6593) <= 1e-3);
    CHECK(std::fabs(b10000 - oracles::sine_integral(1.0, 2.0)) <= 1e-3);

    const double b2 = integral_comparison_bound(S, 2);
    CHECK(b2 >= 0.0);

    // d_k >= bound(k) across scales, by direct summation
    for (std::uint64_t k : {2, 5, 17, 100, 1000, 20000}) {
        const double d_k =
            std::fabs(oracles::direct_window(S.term, k, 2 * k, 1.0 / static_cast<double>(k)));
        CHECK(d_k >= integral_comparison_bound(S, k));
    }

    CHECK_THROWS_AS(integral_comparison_bound(corpus_series("geometric"), 100), UnsupportedSeries);
    CHECK_THROWS_AS(integral_comparison_bound(S, 1), Error);
}

TEST_CASE("uniform oracle separates the corpus the same way") {
    const FilterSemantics fs = fs_default();

    const UniformOracleResult geo =
        uniform_cauchy_oracle(corpus_series("geometric"), 101, default_eps_ladder(), fs);
    CHECK(geo.verdict.holds());

    const UniformOracleResult zero =
        uniform_cauchy_oracle(corpus_series("zero"), 101, default_eps_ladder(), fs);
    CHECK(zero.verdict.holds());

    const UniformOracleResult abel =
        uniform_cauchy_oracle(corpus_series("abel"), 101, default_eps_ladder(), fs);
    CHECK(abel.verdict.fails());
    CHECK(abel.witness_point <= 0.05); // failures accumulate near 0
    CHECK(abel.witness_point > 0.0);
}

TEST_CASE("sum continuity at a point, through certified truncations") {
    const FilterSemantics fs = fs_default();

    const SumContinuityReport geo = sum_continuity_check(corpus_series("geometric"), Rational(0), fs);
    CHECK(geo.verdict.holds());

    const SumContinuityReport abel = sum_continuity_check(corpus_series("abel"), Rational(0), fs);
    CHECK(abel.verdict.fails());
    bool diagonal_failed = false;
    for (const ProbeVerdict& pv : abel.probes)
        if (pv.verdict.fails() && pv.label.find("diagonal") != std::string::npos) diagonal_failed = true;
    CHECK(diagonal_failed);
    // the diagonal at x0 = 0 sees the partial sums at 1/k, which approach the
    // integral of sin(t)/t over [0, 1], far from s(0) = 0
    const Series& S = corpus_series("abel");
    const double at_recip = partial_sum(S, 20000, 1.0 / 20000.0);
    CHECK(at_recip == doctest::Approx(oracles::sine_integral(0.0, 1.0)).epsilon(1e-3));
    // while the sum itself tends to (pi - x)/2 away from 0, by direct summation
    const double near_zero = partial_sum(S, 200000, 0.01);
    CHECK(std::fabs(near_zero - (M_PI - 0.01) / 2) <= 2e-3);

    const SumContinuityReport smooth =
        sum_continuity_check(corpus_series("sin-over-i-squared"), Rational(1, 2), fs);
    CHECK(smooth.verdict.holds());

    // at the right endpoint the probes approach from inside
    const SumContinuityReport endpoint =
        sum_continuity_check(corpus_series("geometric"), Rational(1, 2), fs);
    CHECK(endpoint.verdict.holds());

    CHECK_THROWS_AS(sum_continuity_check(S, Rational(2), fs), DomainViolation);
}

TEST_CASE("theorem shape: an always-holds verdict implies a continuous sum") {
    const FilterSemantics fs = fs_fast();
    for (const std::string& label : corpus_labels()) {
        const Series& S = corpus_series(label);
        const Hypothesis1853Report h = hypothesis_1853(S, default_b_probes(S.interval, fs), fs);
        if (!h.aggregate.holds()) continue;
        const Rational mid = (S.interval.lo + S.interval.hi) / 2;
        CHECK(sum_continuity_check(S, mid, fs).verdict.holds());
        CHECK(sum_continuity_check(S, S.interval.lo, fs).verdict.holds());
    }
}

TEST_CASE("widening the window to n' = 3n never rescues a failing verdict") {
    const FilterSemantics fs = fs_fast();
    for (const std::string& label : corpus_labels()) {
        const Series& S = corpus_series(label);
        const Hyperreal probe(seq_reciprocal(), fs);
        const NullCertificate two = certify_null(diagonal_difference_seq(S, probe, 2), fs, 8);
        const NullCertificate three = certify_null(diagonal_difference_seq(S, probe, 3), fs, 8);
        if (two.verdict.fails()) CHECK_FALSE(three.verdict.holds());
    }
}

TEST_CASE("expression grammar parses series terms") {
    const Interval unit{Rational(0), Rational(1), {}};
    const Series parsed = parse_series("sin(i*x)/i", unit);
    const Series& abel = corpus_series("abel");
    for (Index i : {1, 7, 100})
        for (double x : {0.1, 0.5, 1.0})
            CHECK(parsed.term(i, x) == doctest::Approx(abel.term(i, x)).epsilon(1e-15));

    const Series powers = parse_series("x^i/i", unit);
    CHECK(powers.term(3, 0.5) == doctest::Approx(std::pow(0.5, 3) / 3).epsilon(1e-15));

    const Series precedence = parse_series("1 - 2*x + x^2", unit);
    CHECK(precedence.term(1, 0.25) == doctest::Approx(0.5625).epsilon(1e-15));

    const Series unary = parse_series("-x^2", unit);
    CHECK(unary.term(1, 3.0) == doctest::Approx(-9.0)); // tighter than (-x)^2

    CHECK_THROWS_AS(parse_series("sin(i*x", unit), ParseError);
    CHECK_THROWS_AS(parse_series("foo(x)", unit), ParseError);
    CHECK_THROWS_AS(parse_series("x + ", unit), ParseError);
    try {
        parse_series("x @ i", unit);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
}

TEST_CASE("a parsed series runs through the analyzer") {
    const FilterSemantics fs = fs_fast();
    const Series S = parse_series("sin(i*x)/(i*i)", Interval{Rational(0), Rational(1), {}});
    const Hypothesis1853Report h = hypothesis_1853(S, {Hyperreal(seq_reciprocal(), fs)}, fs);
    CHECK(h.aggregate.holds());
}

TEST_CASE("corpus registry lookups and extension") {
    CHECK(corpus_labels().size() >= 6);
    CHECK_THROWS_AS(corpus_series("nonexistent"), UnsupportedSeries);
    CHECK(corpus_listing().size() == corpus_labels().size());
    CHECK_THROWS_AS(register_series(Series{"abel", Interval{Rational(0), Rational(1), {}},
                                           [](Index, double) { return 0.0; }},
                                    "duplicate"),
                    Error);
}
