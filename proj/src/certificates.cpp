#include "bcontinuum/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bcontinuum {

Seq seq_abs(const Seq& s) {
    return seq_map(s, [](const Value& v) { return value_abs(v); }, s.kind(), "|" + s.tag() + "|");
}

Seq seq_reciprocal_magnitude(const Seq& s) {
    return seq_map(
        s,
        [](const Value& v) -> Value {
            if (value_is_zero(v)) return Value{std::numeric_limits<double>::infinity()};
            if (is_exact(v)) return Value{Rational(1 / abs(std::get<Rational>(v)))};
            return Value{1.0 / std::fabs(std::get<double>(v))};
        },
        s.kind(), "1/|" + s.tag() + "|");
}

std::vector<BlockStat> abs_block_stats(const Seq& s, const FilterSemantics& fs) {
    std::vector<BlockStat> blocks;
    auto block_of = [&blocks](Index n) -> BlockStat& {
        std::size_t j = 0;
        Index lo = 1;
        while (2 * lo <= n) {
            lo *= 2;
            ++j;
        }
        while (blocks.size() <= j) {
            Index blo = Index{1} << blocks.size();
            blocks.push_back(BlockStat{blo, 2 * blo - 1, 0, std::numeric_limits<double>::infinity(), 0, 0});
        }
        return blocks[j];
    };
    for (Index n : decision_schedule(fs)) {
        double a = std::fabs(s.at_double(n));
        if (std::isnan(a)) a = std::numeric_limits<double>::infinity();
        BlockStat& b = block_of(n);
        if (b.count == 0 || a > b.max_abs) {
            b.max_abs = a;
            b.argmax = n;
        }
        b.min_abs = std::min(b.min_abs, a);
        ++b.count;
    }
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(), [](const BlockStat& b) { return b.count == 0; }),
                 blocks.end());
    return blocks;
}

// --- accelerated tail limit ----------------------------------------------------

namespace {

// (8 s(4n) - 6 s(2n) + s(n)) / 3: two extrapolation steps in one formula,
// cancelling 1/n and 1/n^2 error terms exactly.
Value accelerated_term(const Seq& s, Index n) {
    const Value a = s.at(n), b = s.at(2 * n), c = s.at(4 * n);
    if (is_exact(a) && is_exact(b) && is_exact(c)) {
        const Rational &qa = std::get<Rational>(a), &qb = std::get<Rational>(b), &qc = std::get<Rational>(c);
        return Value{Rational((8 * qc - 6 * qb + qa) / 3)};
    }
    return Value{(8.0 * to_double(c) - 6.0 * to_double(b) + to_double(a)) / 3.0};
}

struct WindowEstimate {
    bool converged = false;
    Value value = Value{0.0};
    double oscillation = std::numeric_limits<double>::infinity();
    Index start = 0;
};

WindowEstimate settle(std::vector<Value> vals, Index start, double tolerance) {
    WindowEstimate out;
    out.start = start;
    if (vals.empty()) return out;
    bool all_exact = true;
    for (const Value& v : vals) all_exact = all_exact && is_exact(v);
    if (all_exact) {
        bool constant = true;
        for (std::size_t i = 1; i < vals.size(); ++i)
            if (!value_eq(vals[i], vals[0])) {
                constant = false;
                break;
            }
        if (constant) {
            out.converged = true;
            out.value = vals[0];
            out.oscillation = 0;
            return out;
        }
    }
    double lo_v = std::numeric_limits<double>::infinity(), hi_v = -lo_v;
    for (const Value& v : vals) {
        const double d = to_double(v);
        if (!std::isfinite(d)) return out; // infinities never stabilize
        lo_v = std::min(lo_v, d);
        hi_v = std::max(hi_v, d);
    }
    out.oscillation = hi_v - lo_v;
    if (out.oscillation <= tolerance) {
        out.converged = true;
        out.value = vals.back();
    }
    return out;
}

WindowEstimate raw_window(const Seq& s, Index horizon, Index window, double tolerance) {
    const Index w = std::min(window, horizon);
    const Index lo = horizon - w + 1;
    std::vector<Value> vals;
    vals.reserve(w);
    for (Index n = lo; n <= horizon; ++n) vals.push_back(s.at(n));
    return settle(std::move(vals), lo, tolerance);
}

WindowEstimate accelerated_window(const Seq& s, Index m, Index window, double tolerance) {
    if (m < 2) return {};
    const Index w = std::min(window, m);
    const Index lo = m - w + 1;
    std::vector<Value> vals;
    vals.reserve(w);
    for (Index n = lo; n <= m; ++n) vals.push_back(accelerated_term(s, n));
    return settle(std::move(vals), lo, tolerance);
}

// Accept an accelerated estimate only when two disjoint scales agree: a lone
// window can be constant at a fabricated value when the sequence jumps
// between its sampling bands, but the bands of m and m/2 do not overlap, so
// one jump cannot fool both. A plainly stable raw tail is accepted as-is.
TailLimit window_limit(const Seq& s, Index horizon, Index window, double tolerance) {
    TailLimit out;
    const WindowEstimate deep = accelerated_window(s, horizon / 4, window, tolerance);
    const WindowEstimate shallow = accelerated_window(s, horizon / 8, window, tolerance);
    if (deep.converged && shallow.converged &&
        std::fabs(to_double(deep.value) - to_double(shallow.value)) <= tolerance) {
        out.converged = true;
        out.limit = deep.value;
        out.oscillation = std::max(deep.oscillation, shallow.oscillation);
        out.window_start = deep.start;
        return out;
    }
    const WindowEstimate raw = raw_window(s, horizon, window, tolerance);
    if (raw.converged) {
        out.converged = true;
        out.limit = raw.value;
        out.oscillation = raw.oscillation;
        out.window_start = raw.start;
        return out;
    }
    out.oscillation = std::min(raw.oscillation, deep.oscillation);
    out.window_start = raw.start;
    return out;
}

} // namespace

TailLimit tail_limit(const Seq& s, const FilterSemantics& fs, double tolerance) {
    TailLimit full = window_limit(s, fs.horizon, fs.tail_window, tolerance);
    if (full.converged || fs.parity_choice == ParityChoice::None) return full;

    // Retry on the chosen parity class: sub(m) is the m-th class member.
    const bool evens = fs.parity_choice == ParityChoice::EvensInFilter;
    Seq sub([s, evens](Index m) { return s.at(evens ? 2 * m : 2 * m - 1); }, s.kind(),
            s.tag() + (evens ? " on evens" : " on odds"));
    TailLimit restricted = window_limit(sub, fs.horizon / 2, fs.tail_window, tolerance);
    if (restricted.converged) {
        restricted.via_parity = true;
        return restricted;
    }
    return full; // report the unrestricted oscillation
}

// --- recurring lower bound ------------------------------------------------------

namespace {
constexpr std::size_t kTrailingBlocks = 6;
constexpr double kFlatnessFloor = 0.75;  // last block vs trailing peak
constexpr double kSpreadFloor = 0.5;     // trailing min vs trailing peak
constexpr double kDecayRatio = 0.9;      // per-block envelope decay certificate
} // namespace

std::optional<RecurringBound> recurring_lower_bound(const Seq& s, const FilterSemantics& fs) {
    const Seq a = seq_abs(s);
    const std::vector<BlockStat> blocks = abs_block_stats(a, fs);
    if (blocks.size() < 3) return std::nullopt;
    const std::size_t take = std::min(kTrailingBlocks, blocks.size());
    const std::size_t start = blocks.size() - take;

    double peak = 0, trough = std::numeric_limits<double>::infinity();
    for (std::size_t i = start; i < blocks.size(); ++i) {
        peak = std::max(peak, blocks[i].max_abs);
        trough = std::min(trough, blocks[i].max_abs);
    }
    if (!(trough > 0) || !std::isfinite(peak)) return std::nullopt;
    if (blocks.back().max_abs < kFlatnessFloor * peak) return std::nullopt;
    if (trough < kSpreadFloor * peak) return std::nullopt;

    RecurringBound rb;
    rb.bound = trough / 2;
    for (Index n : decision_schedule(fs)) {
        const double v = std::fabs(a.at_double(n));
        if (v >= rb.bound) {
            ++rb.count;
            rb.last_witness = n;
        }
    }
    return rb;
}

// --- null certificate -----------------------------------------------------------

NullCertificate certify_null(const Seq& raw, const FilterSemantics& fs, int ladder_depth) {
    const Seq a = seq_abs(raw);
    const double deepest = std::pow(10.0, -ladder_depth);
    NullCertificate out;

    // Route 1: accelerated tail limit. At or below the deepest rung it
    // certifies Holds; stabilization at a nonzero magnitude certifies Fails
    // with half the limit as the recurring bound.
    const TailLimit lt = tail_limit(a, fs, deepest);
    if (lt.converged && std::fabs(to_double(lt.limit)) <= deepest) {
        out.verdict = Verdict3::make_holds(static_cast<double>(lt.window_start), fs.horizon);
        out.via_limit = true;
        return out;
    }
    if (lt.converged && std::fabs(to_double(lt.limit)) / 2 > deepest) {
        out.bound = std::fabs(to_double(lt.limit)) / 2;
        for (Index n : decision_schedule(fs))
            if (std::fabs(a.at_double(n)) >= out.bound) ++out.witness_count;
        out.verdict = Verdict3::make_fails(out.bound, fs.horizon);
        out.via_limit = true;
        return out;
    }

    // Route 2: direct rung-by-rung tail windows, deepest first to break early.
    double deepest_witness = 0;
    for (int k = 1; k <= ladder_depth; ++k) {
        const double level = std::pow(10.0, -k);
        const Verdict3 v = eventually([&a, level](Index n) { return std::fabs(a.at_double(n)) < level; }, fs);
        if (!v.holds()) break;
        out.direct_levels = k;
        deepest_witness = v.witness;
    }
    if (out.direct_levels == ladder_depth) {
        out.verdict = Verdict3::make_holds(deepest_witness, fs.horizon);
        return out;
    }

    // Route 3: decaying block envelope over at least two direct rungs.
    if (out.direct_levels >= 2) {
        const std::vector<BlockStat> blocks = abs_block_stats(a, fs);
        const std::size_t need = kTrailingBlocks;
        if (blocks.size() >= need) {
            bool decaying = true;
            for (std::size_t i = blocks.size() - need; i + 1 < blocks.size(); ++i) {
                if (!(blocks[i].max_abs > 0) || blocks[i + 1].max_abs > kDecayRatio * blocks[i].max_abs) {
                    decaying = false;
                    break;
                }
            }
            if (decaying) {
                out.verdict = Verdict3::make_holds(deepest_witness, fs.horizon);
                out.via_decay = true;
                return out;
            }
        }
    }

    // Fails: a recurring lower bound above the deepest rung.
    if (auto rb = recurring_lower_bound(a, fs); rb && rb->bound > deepest) {
        out.verdict = Verdict3::make_fails(rb->bound, fs.horizon);
        out.bound = rb->bound;
        out.witness_count = rb->count;
        return out;
    }
    out.verdict = Verdict3::make_undetermined(fs.horizon);
    return out;
}

NullCertificate certify_unbounded(const Seq& s, const FilterSemantics& fs, int ladder_depth) {
    return certify_null(seq_reciprocal_magnitude(s), fs, ladder_depth);
}

} // namespace bcontinuum
