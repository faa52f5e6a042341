// Acceptance suite: every criterion is exercised end to end at its stated
// tolerance, one [PASS]/[FAIL] line per criterion, nonzero exit on failure.

#include "bcontinuum/analysis.hpp"
#include "bcontinuum/casebook.hpp"
#include "bcontinuum/corpus.hpp"
#include "bcontinuum/hyperreal.hpp"
#include "bcontinuum/sumtheorem.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

using namespace bcontinuum;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FilterSemantics fs_default() { return FilterSemantics(100000, 64, ParityChoice::EvensInFilter); }

// shared with the hyperreal property tests: sums and products over the
// generator family, seeded
Hyperreal random_limited(std::mt19937_64& rng, const FilterSemantics& fs, int depth = 2) {
    std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 3);
    switch (pick(rng)) {
    case 0: {
        std::uniform_int_distribution<int> num(-9, 9);
        return hr_from_rational(Rational(num(rng)), fs);
    }
    case 1: return Hyperreal(seq_reciprocal(), fs);
    case 2: return Hyperreal(seq_reciprocal_squared(), fs);
    case 3: return Hyperreal(seq_alternating_reciprocal(), fs);
    case 4: return random_limited(rng, fs, depth - 1) + random_limited(rng, fs, depth - 1);
    default: return random_limited(rng, fs, depth - 1) * random_limited(rng, fs, depth - 1);
    }
}

void criterion1_parabola_derivative() {
    const auto t0 = std::chrono::steady_clock::now();
    const FilterSemantics fs = fs_default();
    const HFunction F = hf_square(Interval{Rational(-2), Rational(2), {}});
    const RobustDerivative d = derivative_robust(
        F, Value{Rational(1)},
        {Hyperreal(seq_reciprocal(), fs), Hyperreal(seq_reciprocal_squared(), fs),
         Hyperreal(seq_alternating_reciprocal(), fs)});
    const double elapsed = seconds_since(t0);
    const bool ok = d.uniform && d.value.has_value() && std::fabs(*d.value - 2.0) <= 1e-9 && elapsed < 1.0;
    char buf[160];
    std::snprintf(buf, sizeof buf, "parabola derivative = %.12f, uniform = %s, %.3f s",
                  d.value.value_or(0.0), d.uniform ? "true" : "false", elapsed);
    report(1, ok, buf);
}

void criterion2_wallis_area() {
    const auto t0 = std::chrono::steady_clock::now();
    const WallisReport w = wallis_area_report(Rational(3), Rational(4), fs_default());
    const double elapsed = seconds_since(t0);
    const bool ok = w.area == Rational(6) && w.unit_product_equal_one.holds() &&
                    w.area_equal_constant.holds() && elapsed < 1.0;
    report(2, ok,
           "wallis area = " + w.area.str() + " exact, unit product certified " +
               to_string(w.unit_product_equal_one.value) + ", " + std::to_string(elapsed) + " s");
}

void criterion3_abel_separation() {
    const auto t0 = std::chrono::steady_clock::now();
    const FilterSemantics fs = fs_default();
    const Series& S = corpus_series("abel");

    std::vector<Rational> grid;
    for (int g = 1; g <= 9; ++g) grid.push_back(Rational(g, 10));
    bool grid_holds = true;
    for (const PointVerdict& pv : hypothesis_1821(S, grid, fs)) grid_holds &= pv.verdict.holds();

    const Hypothesis1853Report h53 = hypothesis_1853(S, {Hyperreal(seq_reciprocal(), fs)}, fs);
    const bool probe_fails = h53.clause_b.size() == 1 && h53.clause_b[0].verdict.fails();

    bool bound_ok = true;
    for (Index k : {100, 316, 1000, 10000, 100000}) bound_ok &= integral_comparison_bound(S, k) >= 0.5;

    // independent direct-summation oracle for the diagonal at k = 10^4
    const double diagonal =
        std::fabs(oracles::direct_window(S.term, 10000, 20000, 1.0 / 10000.0));
    const double integral = oracles::sine_integral(1.0, 2.0); // Si(2) - Si(1)
    const bool value_ok = std::fabs(diagonal - 0.6593) <= 1e-3 && std::fabs(integral - 0.6593) <= 5e-5;

    const double elapsed = seconds_since(t0);
    const bool ok = grid_holds && probe_fails && bound_ok && value_ok && elapsed < 10.0;
    char buf[240];
    std::snprintf(buf, sizeof buf,
                  "pointwise grid %s, diagonal probe %s, bound(k=100) = %.4f, d(10^4) = %.6f "
                  "(oracle integral %.6f), %.2f s",
                  grid_holds ? "holds" : "fails", probe_fails ? "fails" : "holds",
                  integral_comparison_bound(S, 100), diagonal, integral, elapsed);
    report(3, ok, buf);
}

void criterion4_sin1x_b_failure() {
    const auto t0 = std::chrono::steady_clock::now();
    const FilterSemantics fs = fs_default();
    const HFunction F = hf_sin_reciprocal();

    const ContinuityProbe b = make_probe(Hyperreal(seq_reciprocal(), fs),
                                         Hyperreal(seq_reciprocal(), fs), "B <1/n>", true);
    const ContinuityVerdict bv = cauchy_continuous_at(F, b);

    // brute recount of witnesses: |sin(n/2) - sin(n)| > 0.5 for n <= 1e5
    const std::uint64_t witnesses = oracles::count_exceeding(
        [](std::uint64_t n) { return std::sin(n / 2.0) - std::sin(static_cast<double>(n)); }, 100000,
        0.5);

    bool a_points_hold = true;
    for (const ContinuityProbe& probe : default_probe_family(F.domain(), fs)) {
        if (probe.is_b_point) continue;
        a_points_hold &= cauchy_continuous_at(F, probe).verdict.holds();
    }

    const double elapsed = seconds_since(t0);
    const bool ok = bv.verdict.fails() && bv.witness_count >= 100 && witnesses >= 100 &&
                    a_points_hold && elapsed < 5.0;
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "B-probe %s (bound %.3f, %llu witnesses; brute count %llu), A-points %s, %.2f s",
                  bv.verdict.fails() ? "fails" : "holds", bv.bound,
                  static_cast<unsigned long long>(bv.witness_count),
                  static_cast<unsigned long long>(witnesses), a_points_hold ? "hold" : "fail", elapsed);
    report(4, ok, buf);
}

void criterion5_parity_oracle() {
    Config cfg;
    std::vector<std::string> emitted;
    std::vector<std::string> relations;
    for (ParityChoice p : {ParityChoice::EvensInFilter, ParityChoice::OddsInFilter, ParityChoice::None}) {
        cfg.parity_choice = p;
        const CaseReport once = run_case("signed-infinitesimal", cfg);
        const CaseReport twice = run_case("signed-infinitesimal", cfg);
        if (!reports_equal_ignoring_elapsed(once, twice)) {
            report(5, false, "report not deterministic under " + to_string(p));
            return;
        }
        emitted.push_back(emit_report(once, OutputFormat::Json));
        for (const LabeledVerdict& lv : once.verdicts)
            if (lv.label.rfind("sign", 0) == 0) relations.push_back(lv.label);
    }
    const bool distinct = emitted[0] != emitted[1] && emitted[0] != emitted[2] && emitted[1] != emitted[2];
    const bool signs_ok = relations.size() == 3 && relations[0].back() == '>' &&
                          relations[1].back() == '<' && relations[2].back() == '?';
    report(5, distinct && signs_ok,
           "verdicts: evens '" + relations[0] + "', odds '" + relations[1] + "', none '" + relations[2] +
               "'; three distinct deterministic reports");
}

void criterion6_st_homomorphism() {
    const FilterSemantics fs = fs_default();
    std::mt19937_64 rng(424242);
    int converged_pairs = 0, violations = 0, trials = 0;
    while (converged_pairs < 200 && trials < 2000) {
        ++trials;
        const Hyperreal a = random_limited(rng, fs);
        const Hyperreal b = random_limited(rng, fs);
        double sa, sb, sum;
        try {
            sa = to_double(st(a));
            sb = to_double(st(b));
            sum = to_double(st(a + b));
        } catch (const Error&) {
            continue;
        }
        ++converged_pairs;
        if (std::fabs(sum - (sa + sb)) > 2e-9) ++violations;
    }
    const bool ok = converged_pairs >= 200 && violations == 0;
    report(6, ok,
           std::to_string(converged_pairs) + " converged pairs, " + std::to_string(violations) +
               " violations of |st(a+b) - (st(a)+st(b))| <= 2e-9");
}

void criterion7_oracle_equivalence() {
    const FilterSemantics fs = fs_default();
    const std::vector<double> ladder = {1e-1, 1e-2, 1e-3, 1e-4};
    bool all_agree = true;
    std::string detail;
    const std::vector<std::string> labels = corpus_labels();
    for (const std::string& label : labels) {
        const Series& S = corpus_series(label);
        const Hypothesis1853Report h = hypothesis_1853(S, default_b_probes(S.interval, fs), fs);
        const UniformOracleResult o = uniform_cauchy_oracle(S, 101, ladder, fs);
        const bool agree = h.aggregate.value == o.verdict.value;
        all_agree &= agree;
        detail += label + "=" + to_string(h.aggregate.value) + "/" + to_string(o.verdict.value) + " ";
    }
    report(7, all_agree && labels.size() >= 6,
           std::to_string(labels.size()) + " series, hypothesis/oracle: " + detail);
}

void criterion8_1821_classification() {
    const auto t0 = std::chrono::steady_clock::now();
    const Classification c = classify(Hyperreal(seq_swapped_reciprocals(), fs_default()));
    const double elapsed = seconds_since(t0);
    const bool ok = c.kind == HKind::Infinitesimal && elapsed < 1.0;
    report(8, ok,
           "swapped-pairs sequence classifies " + to_string(c.kind) + ", " + std::to_string(elapsed) +
               " s");
}

void criterion9_determinism() {
    Config cfg;
    bool all_identical = true;
    std::string detail;
    for (const CaseInfo& info : list_cases()) {
        CaseReport a = run_case(info.name, cfg);
        CaseReport b = run_case(info.name, cfg);
        a.elapsed_ms = b.elapsed_ms = 0;
        const bool same = emit_report(a, OutputFormat::Json) == emit_report(b, OutputFormat::Json);
        all_identical &= same;
        if (!same) detail += info.name + " differs! ";
    }
    report(9, all_identical,
           detail.empty() ? "all 8 cases byte-identical across reruns (elapsed_ms excluded)" : detail);
}

} // namespace

int main() {
    criterion1_parabola_derivative();
    criterion2_wallis_area();
    criterion3_abel_separation();
    criterion4_sin1x_b_failure();
    criterion5_parity_oracle();
    criterion6_st_homomorphism();
    criterion7_oracle_equivalence();
    criterion8_1821_classification();
    criterion9_determinism();
    if (failures) {
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("ACCEPTANCE: all 9 criteria passed\n");
    return 0;
}
