#pragma once

// Tail evidence gathered from a sequence at the sampling schedule, and the
// certificates built from it. Ladder levels deeper than the horizon can reach
// directly (|s_n| < 1e-12 is unobservable before n = 1e12) are certified by
// extrapolation: either an accelerated tail limit or a decaying block
// envelope. Both certificates are reproducible functions of (seq, fs).

#include "bcontinuum/filter.hpp"
#include "bcontinuum/seq.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bcontinuum {

// Per dyadic block statistics of |s_n| over the sampling schedule.
struct BlockStat {
    Index lo = 0, hi = 0;
    double max_abs = 0;
    double min_abs = 0;
    Index argmax = 0;
    std::size_t count = 0;
};

std::vector<BlockStat> abs_block_stats(const Seq& s, const FilterSemantics& fs);

// Limit of a tail window after two extrapolation steps (2 s(2n) - s(n),
// then the same step again), which cancels 1/n and 1/n^2 error terms
// exactly. Accelerated estimates must agree across two scales; a plainly
// stable raw tail window is the fallback. Falls back to the chosen parity
// class when the full sequence does not stabilize. Exact inputs with an
// exactly constant window produce an exact limit.
struct TailLimit {
    bool converged = false;
    Value limit = Value{0.0};
    double oscillation = 0; // accelerated-window oscillation actually observed
    bool via_parity = false;
    Index window_start = 0;
};

TailLimit tail_limit(const Seq& s, const FilterSemantics& fs, double tolerance);

// Is <|s_n|> certified null, i.e. eventually below every rung 10^-k,
// k = 1..ladder_depth? Three Holds routes: every rung certified by a direct
// tail window; an accelerated tail limit at or below the deepest rung; or a
// decaying block envelope above at least two directly certified rungs.
// Fails carries a recurring lower bound.
struct NullCertificate {
    Verdict3 verdict;
    int direct_levels = 0; // deepest consecutive rung certified directly
    bool via_limit = false;
    bool via_decay = false;
    double bound = 0;               // Fails: certified recurring lower bound
    std::uint64_t witness_count = 0; // Fails: schedule samples at or above bound
};

NullCertificate certify_null(const Seq& s, const FilterSemantics& fs, int ladder_depth);

// |s_n| eventually above every rung 10^k: the same certificate applied to
// the reciprocal magnitude (zero terms count as unbounded reciprocals).
NullCertificate certify_unbounded(const Seq& s, const FilterSemantics& fs, int ladder_depth);

// Largest recurring-to-the-horizon lower bound on |s_n| claimable from
// trailing block maxima; nullopt when the trailing envelope decays or the
// evidence is too thin. Used for lim-sup style Fails witnesses.
struct RecurringBound {
    double bound = 0;
    std::uint64_t count = 0; // schedule samples with |s_n| >= bound
    Index last_witness = 0;
};

std::optional<RecurringBound> recurring_lower_bound(const Seq& s, const FilterSemantics& fs);

// Convenience views used by the certificates.
Seq seq_abs(const Seq& s);
Seq seq_reciprocal_magnitude(const Seq& s); // 1/|s_n|, +inf at zero terms

} // namespace bcontinuum
