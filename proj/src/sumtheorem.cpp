#include "bcontinuum/sumtheorem.hpp"

#include "bcontinuum/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace bcontinuum {

double partial_sum(const Series& S, Index n, double x) {
    double sum = 0;
    for (Index i = 1; i <= n; ++i) sum += S.term(i, x);
    return sum;
}

double window_sum(const Series& S, Index n, Index n_prime, double x) {
    double sum = 0;
    for (Index i = n + 1; i <= n_prime; ++i) sum += S.term(i, x);
    return sum;
}

RemainderWindow RemainderWindow::make(Index n, Index n_prime) {
    if (n_prime <= n) throw Error("remainder window requires n' > n");
    return RemainderWindow{n, n_prime};
}

namespace {

// Prefix sums of one series at a fixed input, with bounded storage: a single
// ascending accumulation pass records every stride-th partial sum, and a
// query re-sums forward from the nearest checkpoint (at most stride terms).
class PrefixSums {
public:
    PrefixSums(Series s, double x) : s_(std::move(s)), x_(x) { checkpoints_.push_back(0.0); }

    double upto(Index n) {
        std::lock_guard<std::mutex> lk(mu_);
        const Index j = n / kStride;
        while (checkpoints_.size() <= j) {
            const Index reached = (checkpoints_.size() - 1) * kStride;
            double sum = checkpoints_.back();
            for (Index i = reached + 1; i <= reached + kStride; ++i) sum += s_.term(i, x_);
            checkpoints_.push_back(sum);
        }
        double sum = checkpoints_[j];
        for (Index i = j * kStride + 1; i <= n; ++i) sum += s_.term(i, x_);
        return sum;
    }

private:
    static constexpr Index kStride = 256;
    Series s_;
    double x_;
    std::mutex mu_;
    std::vector<double> checkpoints_; // checkpoints_[j] = s_{j * stride}
};

} // namespace

Seq cauchy_difference_seq(const Series& S, double x, unsigned window_factor) {
    auto prefix = std::make_shared<PrefixSums>(S, x);
    const Index f = window_factor;
    return Seq(
        [prefix, f](Index n) {
            return Value{std::fabs(prefix->upto(f * n) - prefix->upto(n))};
        },
        ValueKind::Float, "|s_" + std::to_string(f) + "n - s_n| at x=" + std::to_string(x));
}

Seq diagonal_difference_seq(const Series& S, const Hyperreal& probe, unsigned window_factor) {
    const Seq rep = probe.rep();
    const Interval dom = S.interval;
    const Verdict3 member = eventually([&rep, &dom](Index n) { return dom.contains(rep.at(n)); }, probe.fs());
    if (!member.holds())
        throw DomainViolation("probe " + rep.tag() + " not eventually inside the interval of " + S.label);

    Series series = S;
    const Index f = window_factor;
    return Seq(
        [series, rep, dom, f](Index k) -> Value {
            const Value xv = rep.at(k);
            if (!dom.contains(xv)) return Value{0.0};
            return Value{std::fabs(window_sum(series, k, f * k, to_double(xv)))};
        },
        ValueKind::Float, "diag |s_" + std::to_string(f) + "k - s_k| at " + rep.tag());
}

// --- hypotheses ----------------------------------------------------------------

std::vector<Rational> default_point_grid(const Interval& interval) {
    std::vector<Rational> grid;
    const Rational span = interval.hi - interval.lo;
    grid.push_back(interval.lo);
    for (int g = 1; g <= 9; ++g) grid.push_back(Rational(interval.lo + span * g / 10));
    grid.push_back(interval.hi);
    return grid;
}

std::vector<PointVerdict> hypothesis_1821(const Series& S, const std::vector<Rational>& fixed_points,
                                          const FilterSemantics& fs) {
    std::vector<PointVerdict> out;
    out.reserve(fixed_points.size());
    for (const Rational& x : fixed_points) {
        if (x < S.interval.lo || x > S.interval.hi)
            throw DomainViolation("fixed point " + x.str() + " outside the interval of " + S.label);
        const Seq d = cauchy_difference_seq(S, x.convert_to<double>());
        const NullCertificate nc = certify_null(d, fs, kSeriesLadderDepth);
        out.push_back({x, nc.verdict, nc.bound});
    }
    return out;
}

std::vector<Hyperreal> default_b_probes(const Interval& interval, const FilterSemantics& fs) {
    std::vector<Hyperreal> probes;
    auto scaled = [&fs](const Rational& c) {
        Rational cc = c;
        return Hyperreal(Seq([cc](Index n) { return Value{Rational(cc / n)}; }, ValueKind::Exact,
                             "<" + cc.str() + "/n>"),
                         fs);
    };
    probes.push_back(scaled(Rational(1)));
    probes.push_back(scaled(Rational(1, 2)));
    probes.push_back(scaled(Rational(2)));
    probes.push_back(Hyperreal(seq_reciprocal_squared(), fs));
    if (interval.lo != 0) {
        const Rational lo = interval.lo;
        probes.push_back(Hyperreal(Seq([lo](Index n) { return Value{Rational(lo + Rational(1, n))}; },
                                       ValueKind::Exact, "<" + lo.str() + "+1/n>"),
                                   fs));
    }
    return probes;
}

Hypothesis1853Report hypothesis_1853(const Series& S, const std::vector<Hyperreal>& b_probes,
                                     const FilterSemantics& fs) {
    Hypothesis1853Report report;
    report.clause_a = hypothesis_1821(S, default_point_grid(S.interval), fs);

    for (const Hyperreal& probe : b_probes) {
        const Seq d = diagonal_difference_seq(S, probe);
        const NullCertificate nc = certify_null(d, fs, kSeriesLadderDepth);
        report.clause_b.push_back({probe.rep().tag(), nc.verdict, nc.bound, nc.witness_count});
    }
    std::stable_sort(report.clause_b.begin(), report.clause_b.end(),
                     [](const ProbeVerdict& a, const ProbeVerdict& b) { return a.label < b.label; });

    bool any_fails = false, any_undet = false;
    double fail_bound = 0;
    std::size_t checks = 0;
    for (const PointVerdict& pv : report.clause_a) {
        ++checks;
        if (pv.verdict.fails()) {
            any_fails = true;
            if (fail_bound == 0) fail_bound = pv.bound;
        } else if (!pv.verdict.holds())
            any_undet = true;
    }
    for (const ProbeVerdict& pv : report.clause_b) {
        ++checks;
        if (pv.verdict.fails()) {
            any_fails = true;
            if (fail_bound == 0) fail_bound = pv.bound;
        } else if (!pv.verdict.holds())
            any_undet = true;
    }
    if (any_fails)
        report.aggregate = Verdict3::make_fails(fail_bound, fs.horizon);
    else if (any_undet)
        report.aggregate = Verdict3::make_undetermined(fs.horizon);
    else
        report.aggregate = Verdict3::make_holds(static_cast<double>(checks), fs.horizon);
    return report;
}

// --- integral comparison ---------------------------------------------------------

namespace {
// Frozen enclosure data for sum over (k, 2k] of sin(i/k)/i, which is the
// right Riemann sum of sin(t)/t on [1, 2] at step 1/k. The integrand
// decreases there, so the sum underestimates the integral by at most
// (g(1) - g(2))/k.
constexpr double kWindowIntegralLow = 0.659329906; // rounded-down integral of sin(t)/t over [1,2]
constexpr double kEndpointDropHigh = 0.386822272;  // rounded-up sin(1) - sin(2)/2
} // namespace

double integral_comparison_bound(const Series& S, Index k) {
    if (S.label != "abel") throw UnsupportedSeries(S.label);
    if (k < 2) throw Error("integral comparison bound requires k >= 2");
    return std::max(0.0, kWindowIntegralLow - kEndpointDropHigh / static_cast<double>(k));
}

// --- uniform oracle ---------------------------------------------------------------

std::vector<double> default_eps_ladder() { return {1e-1, 1e-2, 1e-3, 1e-4}; }

UniformOracleResult uniform_cauchy_oracle(const Series& S, std::size_t grid_density,
                                          const std::vector<double>& eps_ladder,
                                          const FilterSemantics& fs) {
    if (grid_density < 2) throw Error("uniform oracle requires grid_density >= 2");

    const double lo = S.interval.lo.convert_to<double>();
    const double span = (S.interval.hi - S.interval.lo).convert_to<double>();
    auto grid_point = [lo, span, grid_density](std::size_t g) {
        return lo + span * static_cast<double>(g) / static_cast<double>(grid_density - 1);
    };

    auto prefixes = std::make_shared<std::vector<std::unique_ptr<PrefixSums>>>();
    for (std::size_t g = 0; g < grid_density; ++g)
        prefixes->push_back(std::make_unique<PrefixSums>(S, grid_point(g)));

    // m_n = max over the grid of |s_2n - s_n|; the paired argmax sequence
    // records which grid point achieves it.
    auto argmax = std::make_shared<std::map<Index, std::size_t>>();
    auto argmax_mu = std::make_shared<std::mutex>();
    const Seq m(
        [prefixes, argmax, argmax_mu](Index n) -> Value {
            double best = -1;
            std::size_t best_g = 0;
            for (std::size_t g = 0; g < prefixes->size(); ++g) {
                const double w = std::fabs((*prefixes)[g]->upto(2 * n) - (*prefixes)[g]->upto(n));
                if (w > best) {
                    best = w;
                    best_g = g;
                }
            }
            std::lock_guard<std::mutex> lk(*argmax_mu);
            argmax->emplace(n, best_g);
            return Value{best};
        },
        ValueKind::Float, "grid max |s_2n - s_n|");

    UniformOracleResult out;
    bool any_undet = false;
    double deepest_witness = 0;
    for (const double eps : eps_ladder) {
        const Verdict3 v = eventually([&m, eps](Index n) { return m.at_double(n) < eps; }, fs);
        if (v.holds()) {
            deepest_witness = v.witness;
            continue;
        }
        if (v.undetermined()) {
            any_undet = true;
            continue;
        }
        // recurring failure: report the grid points achieving the max at the
        // trailing failing samples
        out.witness_eps = eps;
        std::vector<Index> failing;
        for (Index n : decision_schedule(fs))
            if (m.at_double(n) >= eps) failing.push_back(n);
        for (std::size_t i = failing.size() > 24 ? failing.size() - 24 : 0; i < failing.size(); ++i) {
            const double x = grid_point((*argmax)[failing[i]]);
            if (std::find(out.recurring_points.begin(), out.recurring_points.end(), x) ==
                out.recurring_points.end())
                out.recurring_points.push_back(x);
        }
        std::sort(out.recurring_points.begin(), out.recurring_points.end());
        out.witness_point = failing.empty() ? 0.0 : grid_point((*argmax)[failing.back()]);
        out.verdict = Verdict3::make_fails(eps, fs.horizon);
        return out;
    }
    out.verdict = any_undet ? Verdict3::make_undetermined(fs.horizon)
                            : Verdict3::make_holds(deepest_witness, fs.horizon);
    return out;
}

// --- conclusion check --------------------------------------------------------------

SumContinuityReport sum_continuity_check(const Series& S, const Rational& x0, const FilterSemantics& fs) {
    if (x0 < S.interval.lo || x0 > S.interval.hi)
        throw DomainViolation("x0 " + x0.str() + " outside the interval of " + S.label);

    const double x0d = x0.convert_to<double>();
    const Seq d0 = cauchy_difference_seq(S, x0d);

    // Certify the pointwise tail at x0 and pick the deepest certified rung as
    // the truncation level for the fixed-point probes.
    Index truncation = 0;
    double level_used = 0;
    for (int k = kSeriesLadderDepth; k >= 1; --k) {
        const double level = std::pow(10.0, -k);
        const Verdict3 v = eventually([&d0, level](Index n) { return d0.at_double(n) < level; }, fs);
        if (v.holds()) {
            truncation = static_cast<Index>(v.witness);
            level_used = level;
            break;
        }
    }
    if (truncation == 0) {
        const NullCertificate nc = certify_null(d0, fs, kSeriesLadderDepth);
        if (!nc.verdict.holds())
            throw Error("pointwise tail certification failed at x0 = " + x0.str() + " for " + S.label);
        truncation = fs.horizon / 2; // null by extrapolation only; fall back to a deep truncation
        level_used = std::pow(10.0, -kSeriesLadderDepth);
    }

    SumContinuityReport report;
    report.truncation = truncation;
    report.truncation_level = level_used;

    // Fixed-truncation probes at x0 itself.
    Series series = S;
    const Index N = truncation;
    HFunction s_N("s_" + std::to_string(N) + " of " + S.label, S.interval,
                  [series, N](double x) { return partial_sum(series, N, x); });
    const bool at_lo = x0 == S.interval.lo, at_hi = x0 == S.interval.hi;
    const Hyperreal inc_pos(seq_reciprocal(), fs);
    const Hyperreal inc_neg(seq_map(seq_reciprocal(), value_neg, ValueKind::Exact, "-1/n"), fs);
    std::vector<std::pair<Hyperreal, std::string>> incs;
    if (!at_hi) incs.emplace_back(inc_pos, "+1/n");
    if (!at_lo) incs.emplace_back(inc_neg, "-1/n");
    for (const auto& [inc, lab] : incs) {
        const ContinuityVerdict cv =
            cauchy_continuous_at(s_N, make_probe(hr_from_rational(x0, fs), inc, lab, false));
        report.probes.push_back({"truncated at x0 inc=" + lab, cv.verdict, cv.bound, cv.witness_count});
    }

    // Diagonal probes: the partial-sum family applied at scale k to the k-th
    // term of the point and of the shifted point.
    const int dir = at_hi ? -1 : 1;
    auto diag_probe = [&](Rational pc, Rational ic, const std::string& label) {
        Series ser = S;
        const Interval dom = S.interval;
        Rational base = x0;
        Seq d(
            [ser, dom, base, pc, ic, dir](Index k) -> Value {
                const Rational p = base + Rational(dir) * pc / k;
                const Rational q = base + Rational(dir) * (pc + ic) / k;
                if (!dom.contains(Value{p}) || !dom.contains(Value{q})) return Value{0.0};
                const double sp = partial_sum(ser, k, p.convert_to<double>());
                const double sq = partial_sum(ser, k, q.convert_to<double>());
                return Value{std::fabs(sq - sp)};
            },
            ValueKind::Float, label);
        const NullCertificate nc = certify_null(d, fs, kSeriesLadderDepth);
        report.probes.push_back({label, nc.verdict, nc.bound, nc.witness_count});
    };
    diag_probe(Rational(0), Rational(1), "diagonal from x0, step 1/k");
    diag_probe(Rational(1), Rational(1), "diagonal at x0 + 1/k, step 1/k");

    bool any_fails = false, any_undet = false;
    double bound = 0;
    for (const ProbeVerdict& pv : report.probes) {
        if (pv.verdict.fails()) {
            any_fails = true;
            if (bound == 0) bound = pv.bound;
        } else if (!pv.verdict.holds())
            any_undet = true;
    }
    if (any_fails)
        report.verdict = Verdict3::make_fails(bound, fs.horizon);
    else if (any_undet)
        report.verdict = Verdict3::make_undetermined(fs.horizon);
    else
        report.verdict = Verdict3::make_holds(static_cast<double>(report.probes.size()), fs.horizon);
    return report;
}

} // namespace bcontinuum
