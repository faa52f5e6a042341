#pragma once

// Index-set semantics and three-valued decision procedures.
//
// A true free ultrafilter is non-constructive. The stand-in here is the
// Frechet ("cofinite") policy plus one deterministic oracle bit: which parity
// class of indices counts as a filter member. Everything a decision procedure
// certifies is evidence gathered at indices no larger than the horizon, so
// verdicts are of the semi-decision kind: Holds and Fails carry finite
// witnesses, Undetermined carries the exhausted horizon.

#include "bcontinuum/errors.hpp"
#include "bcontinuum/seq.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace bcontinuum {

enum class ParityChoice { EvensInFilter, OddsInFilter, None };

std::string to_string(ParityChoice p);
ParityChoice parity_from_string(const std::string& s);

struct FilterSemantics {
    Index horizon = 100000;   // largest index any decision procedure examines
    Index tail_window = 64;   // consecutive indices required to certify "eventually"
    ParityChoice parity_choice = ParityChoice::EvensInFilter;

    FilterSemantics() = default;
    FilterSemantics(Index horizon, Index tail_window, ParityChoice parity)
        : horizon(horizon), tail_window(tail_window), parity_choice(parity) {
        validate();
    }
    void validate() const {
        if (tail_window < 1 || horizon < tail_window)
            throw ConfigError("filter semantics requires horizon >= tail_window >= 1");
    }
};

enum class Truth { Holds, Fails, Undetermined };

std::string to_string(Truth t);

struct Verdict3 {
    Truth value = Truth::Undetermined;
    double witness = 0; // index or numeric bound substantiating the verdict
    Index horizon_used = 0;

    bool holds() const { return value == Truth::Holds; }
    bool fails() const { return value == Truth::Fails; }
    bool undetermined() const { return value == Truth::Undetermined; }

    static Verdict3 make_holds(double witness, Index horizon) { return {Truth::Holds, witness, horizon}; }
    static Verdict3 make_fails(double witness, Index horizon) { return {Truth::Fails, witness, horizon}; }
    static Verdict3 make_undetermined(Index horizon) {
        return {Truth::Undetermined, static_cast<double>(horizon), horizon};
    }
};

// --- index classes -----------------------------------------------------------

// The supported vocabulary is deliberately tiny: cofinite sets given by their
// finite exception list, finite sets, and the two parity classes.
struct IndexClass {
    enum class Kind { CofiniteComplementOf, FiniteSet, Evens, Odds, Unsupported } kind;
    std::vector<Index> elements; // exceptions (cofinite) or members (finite)
    std::string description;     // used for Unsupported diagnostics

    static IndexClass cofinite_complement_of(std::vector<Index> exceptions) {
        return {Kind::CofiniteComplementOf, std::move(exceptions), {}};
    }
    static IndexClass finite_set(std::vector<Index> members) { return {Kind::FiniteSet, std::move(members), {}}; }
    static IndexClass evens() { return {Kind::Evens, {}, {}}; }
    static IndexClass odds() { return {Kind::Odds, {}, {}}; }
    static IndexClass unsupported(std::string description) {
        return {Kind::Unsupported, {}, std::move(description)};
    }
};

// Throws UnsupportedIndexClass for Kind::Unsupported.
Verdict3 filter_member(const IndexClass& cls, const FilterSemantics& fs);

// --- predicates --------------------------------------------------------------

using IndexPredicate = std::function<bool(Index)>;

// Decides whether {n : p(n)} is certified a member of the filter fs stands
// for. Holds when p settles on a cofinite tail (contiguous window at the
// witness plus spot checks to the horizon) or, with a parity oracle chosen,
// on a tail of the chosen class. Fails symmetrically for the negation.
Verdict3 eventually(const IndexPredicate& p, const FilterSemantics& fs);

// --- sampling schedule -------------------------------------------------------

// Deterministic probe schedule: a dense head, per-dyadic-block samples (half
// evenly spaced, half golden-ratio jittered so oscillations cannot align with
// the stride), and a full contiguous window ending at the horizon.
std::vector<Index> decision_schedule(const FilterSemantics& fs);

// Schedule over the members of one parity class (values are actual indices,
// i.e. even or odd numbers).
std::vector<Index> decision_schedule_on_parity(const FilterSemantics& fs, bool evens);

} // namespace bcontinuum
