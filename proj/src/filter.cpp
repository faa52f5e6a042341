#include "bcontinuum/filter.hpp"

#include <algorithm>
#include <cmath>

namespace bcontinuum {

std::string to_string(ParityChoice p) {
    switch (p) {
    case ParityChoice::EvensInFilter: return "evens";
    case ParityChoice::OddsInFilter: return "odds";
    case ParityChoice::None: return "none";
    }
    return "none";
}

ParityChoice parity_from_string(const std::string& s) {
    if (s == "evens") return ParityChoice::EvensInFilter;
    if (s == "odds") return ParityChoice::OddsInFilter;
    if (s == "none") return ParityChoice::None;
    throw ConfigError("unknown parity choice: " + s + " (expected evens|odds|none)");
}

std::string to_string(Truth t) {
    switch (t) {
    case Truth::Holds: return "holds";
    case Truth::Fails: return "fails";
    case Truth::Undetermined: return "undetermined";
    }
    return "undetermined";
}

// --- schedule ----------------------------------------------------------------

namespace {

constexpr Index kDenseHead = 256;
constexpr Index kSamplesPerBlock = 48;

void push_block_samples(std::vector<Index>& out, Index lo, Index hi) {
    // hi inclusive; half the samples evenly spaced, half jittered by the
    // golden ratio so periodic integrands cannot align with the stride.
    if (hi < lo) return;
    const Index len = hi - lo + 1;
    if (len <= kSamplesPerBlock) {
        for (Index n = lo; n <= hi; ++n) out.push_back(n);
        return;
    }
    const Index even_count = kSamplesPerBlock / 2;
    for (Index i = 0; i < even_count; ++i)
        out.push_back(lo + static_cast<Index>((static_cast<double>(i) / (even_count - 1)) * (len - 1)));
    constexpr double kGolden = 0.6180339887498949;
    double frac = 0.0;
    for (Index i = 0; i < kSamplesPerBlock - even_count; ++i) {
        frac += kGolden;
        frac -= std::floor(frac);
        out.push_back(lo + static_cast<Index>(frac * (len - 1)));
    }
}

std::vector<Index> schedule_up_to(Index horizon, Index tail_window) {
    std::vector<Index> out;
    const Index head_end = std::min(horizon, kDenseHead);
    for (Index n = 1; n <= head_end; ++n) out.push_back(n);
    Index lo = head_end + 1;
    while (lo <= horizon) {
        // dyadic block [lo, 2*lo - 1], clipped at the horizon
        const Index hi = std::min(horizon, 2 * lo - 1);
        push_block_samples(out, lo, hi);
        lo = hi + 1;
    }
    const Index win_lo = horizon > tail_window ? horizon - tail_window + 1 : 1;
    for (Index n = win_lo; n <= horizon; ++n) out.push_back(n);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::vector<Index> decision_schedule(const FilterSemantics& fs) {
    return schedule_up_to(fs.horizon, fs.tail_window);
}

std::vector<Index> decision_schedule_on_parity(const FilterSemantics& fs, bool evens) {
    // m-th class member is 2m (evens) or 2m - 1 (odds); schedule over m.
    const Index members = evens ? fs.horizon / 2 : (fs.horizon + 1) / 2;
    if (members == 0) return {};
    std::vector<Index> ms = schedule_up_to(members, std::min(fs.tail_window, members));
    for (Index& m : ms) m = evens ? 2 * m : 2 * m - 1;
    return ms;
}

// --- eventually --------------------------------------------------------------

namespace {

// Certificate that p holds on a tail of the given sampled index set:
// earliest sample point N whose sampled suffix is all-true, confirmed by a
// contiguous run of `window` class-consecutive indices starting at N.
// `step` is 1 for the full index line, 2 inside one parity class.
std::optional<Index> tail_certificate(const IndexPredicate& p, const std::vector<Index>& samples,
                                      Index window, Index step, Index horizon) {
    if (samples.empty()) return std::nullopt;
    // suffix_true[i]: p holds at every sample from i on
    std::vector<bool> val(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) val[i] = p(samples[i]);
    std::size_t first_all_true = samples.size();
    for (std::size_t i = samples.size(); i-- > 0;) {
        if (!val[i]) break;
        first_all_true = i;
    }
    int retries = 8;
    while (first_all_true < samples.size() && retries-- > 0) {
        const Index cand = samples[first_all_true];
        // the confirming window must fit below the horizon in full
        if (cand > horizon || (window - 1) * step > horizon - cand) return std::nullopt;
        bool ok = true;
        Index bad = 0;
        for (Index k = 0, n = cand; k < window; ++k, n += step) {
            if (!p(n)) {
                ok = false;
                bad = n;
                break;
            }
        }
        if (ok) return cand;
        // sampled suffix was true but the contiguous window was not: advance
        // past the observed failure and retry
        std::size_t next = first_all_true;
        while (next < samples.size() && samples[next] <= bad) ++next;
        first_all_true = next;
        while (first_all_true < samples.size() && !val[first_all_true]) ++first_all_true;
    }
    return std::nullopt;
}

} // namespace

Verdict3 eventually(const IndexPredicate& p, const FilterSemantics& fs) {
    const std::vector<Index> sched = decision_schedule(fs);
    const IndexPredicate not_p = [&p](Index n) { return !p(n); };

    if (auto n = tail_certificate(p, sched, fs.tail_window, 1, fs.horizon))
        return Verdict3::make_holds(static_cast<double>(*n), fs.horizon);
    if (auto n = tail_certificate(not_p, sched, fs.tail_window, 1, fs.horizon))
        return Verdict3::make_fails(static_cast<double>(*n), fs.horizon);

    if (fs.parity_choice != ParityChoice::None) {
        const bool evens = fs.parity_choice == ParityChoice::EvensInFilter;
        const std::vector<Index> class_sched = decision_schedule_on_parity(fs, evens);
        if (auto n = tail_certificate(p, class_sched, fs.tail_window, 2, fs.horizon))
            return Verdict3::make_holds(static_cast<double>(*n), fs.horizon);
        if (auto n = tail_certificate(not_p, class_sched, fs.tail_window, 2, fs.horizon))
            return Verdict3::make_fails(static_cast<double>(*n), fs.horizon);
    }
    return Verdict3::make_undetermined(fs.horizon);
}

// --- filter_member -----------------------------------------------------------

Verdict3 filter_member(const IndexClass& cls, const FilterSemantics& fs) {
    switch (cls.kind) {
    case IndexClass::Kind::CofiniteComplementOf: {
        Index past = 1;
        for (Index e : cls.elements) past = std::max(past, e + 1);
        return Verdict3::make_holds(static_cast<double>(past), fs.horizon);
    }
    case IndexClass::Kind::FiniteSet: {
        Index past = 1;
        for (Index e : cls.elements) past = std::max(past, e + 1);
        return Verdict3::make_fails(static_cast<double>(past), fs.horizon);
    }
    case IndexClass::Kind::Evens:
        switch (fs.parity_choice) {
        case ParityChoice::EvensInFilter: return Verdict3::make_holds(2, fs.horizon);
        case ParityChoice::OddsInFilter: return Verdict3::make_fails(1, fs.horizon);
        case ParityChoice::None: return Verdict3::make_undetermined(fs.horizon);
        }
        break;
    case IndexClass::Kind::Odds:
        switch (fs.parity_choice) {
        case ParityChoice::EvensInFilter: return Verdict3::make_fails(2, fs.horizon);
        case ParityChoice::OddsInFilter: return Verdict3::make_holds(1, fs.horizon);
        case ParityChoice::None: return Verdict3::make_undetermined(fs.horizon);
        }
        break;
    case IndexClass::Kind::Unsupported:
        throw UnsupportedIndexClass(cls.description);
    }
    throw UnsupportedIndexClass(cls.description);
}

} // namespace bcontinuum
