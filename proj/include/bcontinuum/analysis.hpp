#pragma once

// Infinitesimal calculus over the enriched continuum: termwise-lifted real
// functions, the adequality derivative st((F(x0+eps) - F(x0))/eps), and the
// continuity test "an infinitely small increment of the variable produces an
// infinitely small increment of the function", probed both at fixed points
// (A-points) and at variable-quantity points such as <1/n> (B-points).

#include "bcontinuum/hyperreal.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bcontinuum {

inline constexpr double kDefaultDerivativeTolerance = 1e-6;

struct Interval {
    Rational lo, hi;
    std::vector<Rational> excluded; // typically an endpoint like 0 for sin(1/x)

    bool contains(const Value& v) const;
    bool is_excluded(const Rational& q) const;
};

class HFunction {
public:
    // f must be total on the domain; f_exact, when given, must agree with f
    // at every rational point of the domain.
    HFunction(std::string label, Interval domain, std::function<double(double)> f,
              std::function<Rational(const Rational&)> f_exact = nullptr)
        : label_(std::move(label)), domain_(std::move(domain)), f_(std::move(f)),
          f_exact_(std::move(f_exact)) {}

    double operator()(double x) const { return f_(x); }
    Value eval(const Value& x) const;

    // Termwise application to the representative. Requires certified eventual
    // domain membership (DomainViolation otherwise); terms outside the
    // certified head are assigned placeholder 0.
    Hyperreal lift(const Hyperreal& x) const;

    const Interval& domain() const { return domain_; }
    const std::string& label() const { return label_; }

private:
    std::string label_;
    Interval domain_;
    std::function<double(double)> f_;
    std::function<Rational(const Rational&)> f_exact_;
};

struct ContinuityProbe {
    Hyperreal point;
    Hyperreal increment;
    std::string label;
    bool is_b_point = false;
};

// Validates that the increment is a certified nonzero infinitesimal.
ContinuityProbe make_probe(Hyperreal point, Hyperreal increment, std::string label, bool is_b_point);

// --- derivative --------------------------------------------------------------

// st of the infinitesimal difference quotient. eps must be a nonzero
// infinitesimal, x0 interior to the domain. Propagates StNotConverged when
// the quotient is not adequal to any real for this generator.
double derivative(const HFunction& F, const Value& x0, const Hyperreal& eps,
                  double st_tolerance = kDefaultStTolerance);

struct RobustDerivative {
    std::optional<double> value; // present iff uniform
    bool uniform = false;
    struct Divergence {
        std::size_t i, j;
        double vi, vj;
    };
    std::vector<Divergence> witnesses;
    std::vector<double> per_generator;
};

// One derivative per generator; uniform iff all agree within the tolerance.
// Disagreement is a result, not an error.
RobustDerivative derivative_robust(const HFunction& F, const Value& x0,
                                   const std::vector<Hyperreal>& generators,
                                   double derivative_tolerance = kDefaultDerivativeTolerance,
                                   double st_tolerance = kDefaultStTolerance);

// --- continuity --------------------------------------------------------------

struct ContinuityVerdict {
    Verdict3 verdict;
    double bound = 0;                // Fails: recurring lower bound on |F(x+i)-F(x)|
    std::uint64_t witness_count = 0; // Fails: schedule samples at or above bound
};

ContinuityVerdict cauchy_continuous_at(const HFunction& F, const ContinuityProbe& probe,
                                       double st_tolerance = kDefaultStTolerance);

struct ProbeResult {
    std::string label;
    bool is_b_point = false;
    ContinuityVerdict result;
};

struct ContinuityReport {
    std::vector<ProbeResult> probes;
    Truth aggregate = Truth::Undetermined;
    bool a_point_failure = false;
    bool b_only_failure = false; // every A-probe held, some B-probe failed
};

ContinuityReport cauchy_continuous_on(const HFunction& F, const Interval& interval,
                                      const std::vector<ContinuityProbe>& probe_family,
                                      double st_tolerance = kDefaultStTolerance);

// A-points at nine interior grid points (with +/-<1/n> and <1/n^2> increments)
// plus one-sided endpoint probes; B-points <lo + (hi-lo)/n> (and <1/n> when 0
// is an excluded left endpoint) with increments <1/n> and <1/n^2>.
std::vector<ContinuityProbe> default_probe_family(const Interval& interval, const FilterSemantics& fs);

// --- stock functions -----------------------------------------------------------

HFunction hf_square(Interval domain);
HFunction hf_cube(Interval domain);
HFunction hf_abs(Interval domain);
HFunction hf_sine(Interval domain);
HFunction hf_exp(Interval domain);
HFunction hf_sin_reciprocal(); // sin(1/x) on (0, 1]: domain [0,1] with 0 excluded
HFunction hf_step_at(const Rational& c, Interval domain); // 0 below c, 1 from c on

} // namespace bcontinuum
