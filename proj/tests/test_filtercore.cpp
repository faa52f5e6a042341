#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bcontinuum/certificates.hpp"
#include "bcontinuum/filter.hpp"
#include "bcontinuum/seq.hpp"

#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

using namespace bcontinuum;

namespace {
FilterSemantics fs_default() { return FilterSemantics(100000, 64, ParityChoice::EvensInFilter); }
FilterSemantics fs_frechet() { return FilterSemantics(100000, 64, ParityChoice::None); }
} // namespace

TEST_CASE("seq_eval matches the generator definitions") {
    const Seq recip = seq_reciprocal();
    CHECK(seq_eval(recip, 4) == Value{Rational(1, 4)});

    const Seq swapped = seq_swapped_reciprocals();
    CHECK(seq_eval(swapped, 1) == Value{Rational(1, 4)});
    CHECK(seq_eval(swapped, 2) == Value{Rational(1, 3)});
    CHECK(seq_eval(swapped, 3) == Value{Rational(1, 6)});
    CHECK(seq_eval(swapped, 4) == Value{Rational(1, 5)});
    CHECK(seq_eval(swapped, 5) == Value{Rational(1, 8)});
    CHECK(seq_eval(swapped, 6) == Value{Rational(1, 7)});

    const Seq alt = seq_alternating_reciprocal();
    CHECK(seq_eval(alt, 3) == Value{Rational(-1, 3)});
    CHECK(seq_eval(alt, 2) == Value{Rational(1, 2)});
}

TEST_CASE("seq memoization is deterministic and never rewrites a value") {
    std::atomic<int> calls{0};
    Seq s([&calls](Index n) { ++calls; return Value{Rational(n)}; }, ValueKind::Exact);
    CHECK(s.at(7) == Value{Rational(7)});
    CHECK(s.at(7) == Value{Rational(7)});
    CHECK(calls.load() == 1);
}

TEST_CASE("concurrent evaluation of a shared seq is safe and consistent") {
    const Seq s = seq_swapped_reciprocals();
    std::vector<Value> baseline;
    for (Index n = 1; n <= 512; ++n) baseline.push_back(s.at(n));

    const Seq shared = seq_swapped_reciprocals();
    std::atomic<bool> mismatch{false};
    std::vector<std::thread> workers;
    for (int t = 0; t < 8; ++t)
        workers.emplace_back([&shared, &baseline, &mismatch] {
            for (Index n = 1; n <= 512; ++n)
                if (!(shared.at(n) == baseline[n - 1])) mismatch = true;
        });
    for (auto& w : workers) w.join();
    CHECK_FALSE(mismatch.load());
}

TEST_CASE("eventually certifies a monotone predicate with the earliest witness") {
    const FilterSemantics fs(1000, 64, ParityChoice::EvensInFilter);
    const Verdict3 v = eventually([](Index n) { return 1.0 / n < 0.1; }, fs);
    CHECK(v.holds());
    CHECK(v.witness == 11);
}

TEST_CASE("eventually leaves an unresolvable oscillation undetermined under the pure cofinite policy") {
    const Verdict3 v = eventually([](Index n) { return n % 2 == 0; }, fs_frechet());
    CHECK(v.undetermined());
    CHECK(v.witness == 100000);
}

TEST_CASE("eventually resolves an oscillation through the parity oracle") {
    const Verdict3 v = eventually([](Index n) { return n % 2 == 0; }, fs_default());
    CHECK(v.holds());
    CHECK(v.witness == 2);

    const FilterSemantics odds(100000, 64, ParityChoice::OddsInFilter);
    const Verdict3 w = eventually([](Index n) { return n % 2 == 0; }, odds);
    CHECK(w.fails());
}

TEST_CASE("eventually fails a predicate that settles to false") {
    const Verdict3 v = eventually([](Index n) { return 1.0 / n > 0.1; }, fs_default());
    CHECK(v.fails());
    CHECK(v.witness >= 10);
}

TEST_CASE("filter_member on the supported index-class family") {
    const FilterSemantics fs = fs_default();
    CHECK(filter_member(IndexClass::cofinite_complement_of({1, 2, 3}), fs).holds());
    CHECK(filter_member(IndexClass::finite_set({5}), fs).fails());

    const FilterSemantics odds(100000, 64, ParityChoice::OddsInFilter);
    CHECK(filter_member(IndexClass::evens(), odds).fails());
    CHECK(filter_member(IndexClass::evens(), fs).holds());
    CHECK(filter_member(IndexClass::odds(), fs_frechet()).undetermined());

    CHECK_THROWS_AS(filter_member(IndexClass::unsupported("primes"), fs), UnsupportedIndexClass);
}

TEST_CASE("filter consistency: a class and its complement never both hold") {
    for (ParityChoice p : {ParityChoice::EvensInFilter, ParityChoice::OddsInFilter, ParityChoice::None}) {
        const FilterSemantics fs(100000, 64, p);
        const Verdict3 e = filter_member(IndexClass::evens(), fs);
        const Verdict3 o = filter_member(IndexClass::odds(), fs);
        CHECK_FALSE((e.holds() && o.holds()));
    }
}

TEST_CASE("monotone-horizon soundness on the generator family") {
    // Holds verdicts persist and never flip to Fails as the horizon grows.
    const std::vector<std::function<bool(Index)>> family = {
        [](Index n) { return 1.0 / n < 0.01; },
        [](Index n) { return 1.0 / (static_cast<double>(n) * n) < 1e-4; },
        [](Index n) { return n % 2 == 0; },
        [](Index n) { return 7.0 + 1.0 / n > 6.5; },
    };
    for (const auto& p : family) {
        Truth prev = Truth::Undetermined;
        for (Index h : {2000, 10000, 50000, 200000}) {
            const Verdict3 v = eventually(p, FilterSemantics(h, 64, ParityChoice::EvensInFilter));
            if (prev == Truth::Holds) CHECK(v.holds());
            if (prev == Truth::Fails) CHECK(v.fails());
            prev = v.value;
        }
    }
}

TEST_CASE("identical inputs give identical verdicts and witnesses") {
    const auto p = [](Index n) { return std::sin(static_cast<double>(n)) < 0.99; };
    const Verdict3 a = eventually(p, fs_default());
    const Verdict3 b = eventually(p, fs_default());
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK(a.horizon_used == b.horizon_used);
}

TEST_CASE("filter semantics validates its invariants") {
    CHECK_THROWS_AS(FilterSemantics(10, 20, ParityChoice::None), ConfigError);
    CHECK_THROWS_AS(FilterSemantics(10, 0, ParityChoice::None), ConfigError);
}

TEST_CASE("null certificate routes: exact limit, direct rungs, decaying envelope") {
    const FilterSemantics fs = fs_default();

    // exact accelerated limit
    const NullCertificate recip = certify_null(seq_reciprocal(), fs, 12);
    CHECK(recip.verdict.holds());
    CHECK(recip.via_limit);

    // oscillating sign, smooth magnitude
    const NullCertificate alt = certify_null(seq_alternating_reciprocal(), fs, 12);
    CHECK(alt.verdict.holds());

    // oscillating magnitude with decaying envelope
    Seq osc([](Index n) { return Value{std::sin(static_cast<double>(n)) / n}; }, ValueKind::Float);
    const NullCertificate o = certify_null(osc, fs, 12);
    CHECK(o.verdict.holds());

    // a constant is not null; the recurring bound is half its magnitude
    const NullCertificate c = certify_null(seq_constant(Value{Rational(1)}), fs, 12);
    CHECK(c.verdict.fails());
    CHECK(c.bound == doctest::Approx(0.5));
}

TEST_CASE("growth certificate: <n> is unbounded, <1/n> is not") {
    const FilterSemantics fs = fs_default();
    CHECK(certify_unbounded(seq_naturals(), fs, 12).verdict.holds());
    CHECK_FALSE(certify_unbounded(seq_reciprocal(), fs, 12).verdict.holds());
}

TEST_CASE("recurring lower bound ignores decaying envelopes") {
    const FilterSemantics fs = fs_default();
    CHECK_FALSE(recurring_lower_bound(seq_reciprocal(), fs).has_value());

    Seq flat([](Index n) { return Value{0.5 + 1.0 / n}; }, ValueKind::Float);
    const auto rb = recurring_lower_bound(flat, fs);
    REQUIRE(rb.has_value());
    CHECK(rb->bound > 0.2);
    CHECK(rb->count > 100);
}
