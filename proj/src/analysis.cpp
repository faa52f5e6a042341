#include "bcontinuum/analysis.hpp"

#include "bcontinuum/errors.hpp"

#include <algorithm>
#include <cmath>

namespace bcontinuum {

bool Interval::is_excluded(const Rational& q) const {
    return std::find(excluded.begin(), excluded.end(), q) != excluded.end();
}

bool Interval::contains(const Value& v) const {
    if (const auto* q = std::get_if<Rational>(&v)) {
        if (*q < lo || *q > hi) return false;
        return !is_excluded(*q);
    }
    const double x = std::get<double>(v);
    if (x < lo.convert_to<double>() || x > hi.convert_to<double>()) return false;
    for (const Rational& e : excluded)
        if (x == e.convert_to<double>()) return false;
    return true;
}

Value HFunction::eval(const Value& x) const {
    if (f_exact_ && is_exact(x)) return Value{f_exact_(std::get<Rational>(x))};
    return Value{f_(to_double(x))};
}

Hyperreal HFunction::lift(const Hyperreal& x) const {
    const Seq rep = x.rep();
    const Interval dom = domain_;
    const Verdict3 member = eventually([&rep, &dom](Index n) { return dom.contains(rep.at(n)); }, x.fs());
    if (!member.holds())
        throw DomainViolation("representative of " + rep.tag() + " not eventually in the domain of " + label_);

    const bool exact = f_exact_ != nullptr && rep.kind() == ValueKind::Exact;
    auto f = f_;
    auto fe = f_exact_;
    Seq lifted(
        [rep, dom, f, fe](Index n) -> Value {
            const Value v = rep.at(n);
            if (!dom.contains(v)) return is_exact(v) ? Value{Rational(0)} : Value{0.0};
            if (fe && is_exact(v)) return Value{fe(std::get<Rational>(v))};
            return Value{f(to_double(v))};
        },
        exact ? ValueKind::Exact : ValueKind::Float, label_ + "(" + rep.tag() + ")");
    return Hyperreal(std::move(lifted), x.fs());
}

ContinuityProbe make_probe(Hyperreal point, Hyperreal increment, std::string label, bool is_b_point) {
    require_shared_fs(point, increment);
    const Seq inc = increment.rep();
    const Verdict3 nonzero = eventually([&inc](Index n) { return !value_is_zero(inc.at(n)); }, increment.fs());
    if (!nonzero.holds()) throw Error("probe increment must be certified nonzero: " + label);
    if (classify(increment).kind != HKind::Infinitesimal)
        throw Error("probe increment must classify as infinitesimal: " + label);
    return ContinuityProbe{std::move(point), std::move(increment), std::move(label), is_b_point};
}

// --- derivative --------------------------------------------------------------

double derivative(const HFunction& F, const Value& x0, const Hyperreal& eps, double st_tolerance) {
    const Interval& dom = F.domain();
    if (!dom.contains(x0) || value_cmp(x0, Value{dom.lo}) == 0 || value_cmp(x0, Value{dom.hi}) == 0)
        throw DomainViolation("derivative point must be interior to the domain of " + F.label());

    const FilterSemantics& fs = eps.fs();
    const Hyperreal x0_h(seq_constant(x0), fs);
    const Hyperreal fx0(seq_constant(F.eval(x0)), fs);
    const Hyperreal quotient = (F.lift(x0_h + eps) - fx0) / eps;
    return to_double(st(quotient, st_tolerance));
}

RobustDerivative derivative_robust(const HFunction& F, const Value& x0,
                                   const std::vector<Hyperreal>& generators, double derivative_tolerance,
                                   double st_tolerance) {
    RobustDerivative out;
    out.per_generator.reserve(generators.size());
    for (const Hyperreal& eps : generators)
        out.per_generator.push_back(derivative(F, x0, eps, st_tolerance));

    out.uniform = true;
    for (std::size_t i = 0; i < out.per_generator.size(); ++i)
        for (std::size_t j = i + 1; j < out.per_generator.size(); ++j)
            if (std::fabs(out.per_generator[i] - out.per_generator[j]) > derivative_tolerance) {
                out.uniform = false;
                out.witnesses.push_back({i, j, out.per_generator[i], out.per_generator[j]});
            }
    if (out.uniform && !out.per_generator.empty()) out.value = out.per_generator.front();
    return out;
}

// --- continuity --------------------------------------------------------------

ContinuityVerdict cauchy_continuous_at(const HFunction& F, const ContinuityProbe& probe,
                                       double st_tolerance) {
    (void)st_tolerance;
    require_shared_fs(probe.point, probe.increment);
    const FilterSemantics& fs = probe.point.fs();

    const Hyperreal shifted = probe.point + probe.increment;
    const Hyperreal diff = F.lift(shifted) - F.lift(probe.point);

    ContinuityVerdict out;
    const NullCertificate nc = certify_null(diff.rep(), fs, kClassifyLadderDepth);
    if (nc.verdict.holds()) {
        out.verdict = nc.verdict;
        return out;
    }
    if (nc.verdict.fails()) {
        out.verdict = nc.verdict;
        out.bound = nc.bound;
        out.witness_count = nc.witness_count;
        return out;
    }
    const NullCertificate growth = certify_unbounded(diff.rep(), fs, kClassifyLadderDepth);
    if (growth.verdict.holds()) {
        const auto blocks = abs_block_stats(seq_abs(diff.rep()), fs);
        out.bound = blocks.empty() ? 0.0 : blocks.back().min_abs / 2;
        out.verdict = Verdict3::make_fails(out.bound, fs.horizon);
        return out;
    }
    out.verdict = Verdict3::make_undetermined(fs.horizon);
    return out;
}

ContinuityReport cauchy_continuous_on(const HFunction& F, const Interval& interval,
                                      const std::vector<ContinuityProbe>& probe_family,
                                      double st_tolerance) {
    (void)interval;
    ContinuityReport report;
    bool any_b_failure = false, any_undetermined = false;
    for (const ContinuityProbe& probe : probe_family) {
        ContinuityVerdict v = cauchy_continuous_at(F, probe, st_tolerance);
        if (v.verdict.fails()) (probe.is_b_point ? any_b_failure : report.a_point_failure) = true;
        if (v.verdict.undetermined()) any_undetermined = true;
        report.probes.push_back({probe.label, probe.is_b_point, std::move(v)});
    }
    std::stable_sort(report.probes.begin(), report.probes.end(),
                     [](const ProbeResult& a, const ProbeResult& b) { return a.label < b.label; });
    report.b_only_failure = any_b_failure && !report.a_point_failure;
    if (report.a_point_failure || any_b_failure)
        report.aggregate = Truth::Fails;
    else if (any_undetermined)
        report.aggregate = Truth::Undetermined;
    else
        report.aggregate = Truth::Holds;
    return report;
}

std::vector<ContinuityProbe> default_probe_family(const Interval& interval, const FilterSemantics& fs) {
    std::vector<ContinuityProbe> probes;
    const Hyperreal inc_pos(seq_reciprocal(), fs);
    const Hyperreal inc_neg(seq_map(seq_reciprocal(), value_neg, ValueKind::Exact, "-1/n"), fs);
    const Hyperreal inc_sq(seq_reciprocal_squared(), fs);

    auto a_probe = [&](const Rational& x, const Hyperreal& inc, const std::string& inc_label) {
        probes.push_back(make_probe(hr_from_rational(x, fs), inc, "A x=" + x.str() + " inc=" + inc_label,
                                    /*is_b_point=*/false));
    };

    const Rational span = interval.hi - interval.lo;
    for (int g = 1; g <= 9; ++g) {
        const Rational x = interval.lo + span * g / 10;
        if (interval.is_excluded(x)) continue;
        a_probe(x, inc_pos, "1/n");
        a_probe(x, inc_neg, "-1/n");
        a_probe(x, inc_sq, "1/n^2");
    }
    if (!interval.is_excluded(interval.lo)) a_probe(interval.lo, inc_pos, "1/n");
    if (!interval.is_excluded(interval.hi)) a_probe(interval.hi, inc_neg, "-1/n");

    // B-points: the left-endpoint approach <lo + (hi-lo)/n>, plus <1/n> when 0
    // is an excluded left endpoint (then the approach itself is the only way in).
    std::vector<std::pair<Seq, std::string>> b_points;
    const Rational lo = interval.lo;
    b_points.emplace_back(Seq([lo, span](Index n) { return Value{Rational(lo + span / n)}; },
                              ValueKind::Exact, "lo+(hi-lo)/n"),
                          "<" + lo.str() + "+(" + span.str() + ")/n>");
    if (interval.lo == 0 && interval.is_excluded(Rational(0)) && span != 1)
        b_points.emplace_back(seq_reciprocal(), "<1/n>");

    for (const auto& [pt_seq, pt_label] : b_points) {
        const Hyperreal pt(pt_seq, fs);
        probes.push_back(make_probe(pt, inc_pos, "B x=" + pt_label + " inc=1/n", true));
        probes.push_back(make_probe(pt, inc_sq, "B x=" + pt_label + " inc=1/n^2", true));
    }
    return probes;
}

// --- stock functions -----------------------------------------------------------

HFunction hf_square(Interval domain) {
    return HFunction("x^2", std::move(domain), [](double x) { return x * x; },
                     [](const Rational& q) { return Rational(q * q); });
}

HFunction hf_cube(Interval domain) {
    return HFunction("x^3", std::move(domain), [](double x) { return x * x * x; },
                     [](const Rational& q) { return Rational(q * q * q); });
}

HFunction hf_abs(Interval domain) {
    return HFunction("|x|", std::move(domain), [](double x) { return std::fabs(x); },
                     [](const Rational& q) { return Rational(abs(q)); });
}

HFunction hf_sine(Interval domain) {
    return HFunction("sin(x)", std::move(domain), [](double x) { return std::sin(x); });
}

HFunction hf_exp(Interval domain) {
    return HFunction("exp(x)", std::move(domain), [](double x) { return std::exp(x); });
}

HFunction hf_sin_reciprocal() {
    return HFunction("sin(1/x)", Interval{Rational(0), Rational(1), {Rational(0)}},
                     [](double x) { return std::sin(1.0 / x); });
}

HFunction hf_step_at(const Rational& c, Interval domain) {
    const double cd = c.convert_to<double>();
    return HFunction("step at " + c.str(), std::move(domain),
                     [cd](double x) { return x < cd ? 0.0 : 1.0; },
                     [c](const Rational& q) { return Rational(q < c ? 0 : 1); });
}

} // namespace bcontinuum
