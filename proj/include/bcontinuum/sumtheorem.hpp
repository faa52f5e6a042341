#pragma once

// Partial-sum engine and the sum-theorem analyzer. The pointwise hypothesis
// tests the Cauchy difference s_2n - s_n at fixed reals; the "always"
// hypothesis additionally feeds n-indexed inputs through the diagonal rule
// (scale k evaluates s_2k - s_k at the k-th term of the input), and a modern
// uniform-Cauchy oracle provides the two-variable reading for comparison.

#include "bcontinuum/analysis.hpp"
#include "bcontinuum/hyperreal.hpp"

#include <functional>
#include <string>
#include <vector>

namespace bcontinuum {

inline constexpr int kSeriesLadderDepth = 8;

struct Series {
    std::string label;
    Interval interval;
    std::function<double(Index, double)> term; // u_i(x), i >= 1, continuous on the interval
};

// s_n(x) = sum of the first n terms (indexing starts at i = 1).
double partial_sum(const Series& S, Index n, double x);

// s_{n'}(x) - s_n(x) summed directly over (n, n'].
double window_sum(const Series& S, Index n, Index n_prime, double x);

struct RemainderWindow {
    Index n = 0, n_prime = 0; // n' > n

    static RemainderWindow make(Index n, Index n_prime);
    double value_at(const Series& S, double x) const { return window_sum(S, n, n_prime, x); }
};

// <|s_{fn}(x) - s_n(x)|> at a fixed real, backed by resumable prefix sums.
Seq cauchy_difference_seq(const Series& S, double x, unsigned window_factor = 2);

// Diagonal rule: d_k = |s_{fk}(x_k) - s_k(x_k)| with the single shared index
// k. Requires the probe's representative eventually inside the interval;
// terms outside the certified head are placeholder 0.
Seq diagonal_difference_seq(const Series& S, const Hyperreal& probe, unsigned window_factor = 2);

// --- hypotheses ----------------------------------------------------------------

struct PointVerdict {
    Rational x;
    Verdict3 verdict;
    double bound = 0; // Fails: recurring lower bound on the Cauchy difference
};

// Clause (A): at each given real, certify the Cauchy difference null.
std::vector<PointVerdict> hypothesis_1821(const Series& S, const std::vector<Rational>& fixed_points,
                                          const FilterSemantics& fs);

struct ProbeVerdict {
    std::string label;
    Verdict3 verdict;
    double bound = 0;
    std::uint64_t witness_count = 0;
};

struct Hypothesis1853Report {
    std::vector<PointVerdict> clause_a;  // fixed grid derived from the interval
    std::vector<ProbeVerdict> clause_b;  // diagonal verdicts per probe
    Verdict3 aggregate;                  // "always": every check must hold
};

// Clause (B) on top of clause (A): the difference must also become small at
// the n-indexed inputs, checked through the diagonal.
Hypothesis1853Report hypothesis_1853(const Series& S, const std::vector<Hyperreal>& b_probes,
                                     const FilterSemantics& fs);

// <1/n>, <c/n> for c in {1/2, 2}, <1/n^2>, and <lo + 1/n> (deduplicated).
std::vector<Hyperreal> default_b_probes(const Interval& interval, const FilterSemantics& fs);

// Nine interior rational grid points plus both endpoints.
std::vector<Rational> default_point_grid(const Interval& interval);

// Certified lower bound for the diagonal value of the registered sin(ix)/i
// series: the window at scale k reads as a Riemann sum of sin(t)/t over
// [1, 2], underestimating the integral by at most the endpoint drop over k.
// Only the registered case is supported (UnsupportedSeries otherwise).
double integral_comparison_bound(const Series& S, Index k);

// --- the modern oracle -----------------------------------------------------------

struct UniformOracleResult {
    Verdict3 verdict;
    double witness_eps = 0;              // Fails: the rung that never settles
    double witness_point = 0;            // Fails: recurring grid argmax
    std::vector<double> recurring_points; // distinct trailing argmax points
};

// Holds iff for each eps there is an N at or before the horizon with
// max over the grid of |s_2n - s_n| below eps at every sampled n from N on.
UniformOracleResult uniform_cauchy_oracle(const Series& S, std::size_t grid_density,
                                          const std::vector<double>& eps_ladder,
                                          const FilterSemantics& fs);

std::vector<double> default_eps_ladder(); // 1e-1 .. 1e-4

// --- conclusion check ------------------------------------------------------------

struct SumContinuityReport {
    Verdict3 verdict;
    Index truncation = 0;     // partial-sum level used for the fixed-point probes
    double truncation_level = 0; // certified tail size at the truncation
    std::vector<ProbeVerdict> probes; // fixed-truncation A-probes and diagonal B-probes
};

// Continuity of the sum at x0, stated about certified truncations: the
// A-probes test the certified fixed truncation, the B-probes test the
// partial-sum family through the diagonal. Requires the pointwise
// hypothesis at x0 (throws on tail-certification failure).
SumContinuityReport sum_continuity_check(const Series& S, const Rational& x0, const FilterSemantics& fs);

} // namespace bcontinuum
