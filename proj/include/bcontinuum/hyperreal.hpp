#pragma once

// The enriched continuum: sequences modulo the filter semantics, with
// arithmetic, order, classification, standard part, and adequality.
// Equality here is always "provably equal under fs": certified on a filter
// member of indices, never decided outright.

#include "bcontinuum/certificates.hpp"
#include "bcontinuum/filter.hpp"
#include "bcontinuum/seq.hpp"

#include <optional>
#include <string>

namespace bcontinuum {

class Hyperreal {
public:
    Hyperreal(Seq rep, FilterSemantics fs) : rep_(std::move(rep)), fs_(fs) { fs_.validate(); }

    const Seq& rep() const { return rep_; }
    const FilterSemantics& fs() const { return fs_; }
    Value term(Index n) const { return rep_.at(n); }

private:
    Seq rep_;
    FilterSemantics fs_;
};

inline constexpr int kClassifyLadderDepth = 12;
inline constexpr double kDefaultStTolerance = 1e-9;

// --- embeddings ---------------------------------------------------------------

Hyperreal hr_from_real(double r, const FilterSemantics& fs);
Hyperreal hr_from_rational(const Rational& q, const FilterSemantics& fs);

// --- arithmetic ---------------------------------------------------------------

enum class ArithOp { Add, Sub, Mul, Div };

// Termwise arithmetic on representatives. Division certifies that the
// denominator is eventually nonzero under fs; terms at indices where it
// vanishes anyway are assigned the placeholder 0, which does not change the
// class. Throws DivisionUndetermined / DivisionByProvableZero.
Hyperreal hr_arith(const Hyperreal& a, const Hyperreal& b, ArithOp op);

inline Hyperreal operator+(const Hyperreal& a, const Hyperreal& b) { return hr_arith(a, b, ArithOp::Add); }
inline Hyperreal operator-(const Hyperreal& a, const Hyperreal& b) { return hr_arith(a, b, ArithOp::Sub); }
inline Hyperreal operator*(const Hyperreal& a, const Hyperreal& b) { return hr_arith(a, b, ArithOp::Mul); }
inline Hyperreal operator/(const Hyperreal& a, const Hyperreal& b) { return hr_arith(a, b, ArithOp::Div); }

// --- order --------------------------------------------------------------------

enum class Ordering { Less, Equal, Greater };

std::string to_string(Ordering o);

struct OrderResult {
    std::optional<Ordering> relation; // present iff the verdict holds
    Verdict3 verdict;
};

// Relation certified on a filter member of indices, else Undetermined.
OrderResult hr_compare(const Hyperreal& a, const Hyperreal& b);

// Certified termwise equality on a filter member (the quotient's equality,
// rendered semi-decidably).
Verdict3 provably_equal(const Hyperreal& a, const Hyperreal& b);

// --- classification and standard part ------------------------------------------

enum class HKind { Infinitesimal, Appreciable, Unlimited, Undetermined };

std::string to_string(HKind k);

struct Classification {
    HKind kind = HKind::Undetermined;
    std::optional<Value> st_estimate; // present iff kind is Infinitesimal or Appreciable
};

// Test ladders are 10^-k / 10^k for k = 1..12.
Classification classify(const Hyperreal& a, double st_tolerance = kDefaultStTolerance);

// Limit extraction from the representative's tail (accelerated window
// stabilization, exact short-circuit for exact representatives). Throws
// StUnlimited / StNotConverged.
Value st(const Hyperreal& a, double st_tolerance = kDefaultStTolerance);
double st_double(const Hyperreal& a, double st_tolerance = kDefaultStTolerance);

// Infinitely close: a - b classifies as infinitesimal. Fails carries a
// certified lower bound on the gap.
Verdict3 adequal(const Hyperreal& a, const Hyperreal& b);

// --- the dilatable-parallelogram area -------------------------------------------

struct WallisReport {
    Rational area;
    Verdict3 unit_product_equal_one; // <n> * <1/n> provably equal 1
    Verdict3 area_equal_constant;    // (A/H) * (B*H/2) provably equal A*B/2
};

// Triangle area via an unlimited slice count H = <n>: (A / H) * ((B * H) / 2),
// certified provably equal to the constant A*B/2 and returned exactly.
WallisReport wallis_area_report(const Rational& A, const Rational& B, const FilterSemantics& fs);
Rational wallis_area(const Rational& A, const Rational& B, const FilterSemantics& fs);

// Shared-fs guard used by every binary operation.
void require_shared_fs(const Hyperreal& a, const Hyperreal& b);

} // namespace bcontinuum
