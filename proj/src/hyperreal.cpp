#include "bcontinuum/hyperreal.hpp"

#include "bcontinuum/errors.hpp"

#include <cmath>

namespace bcontinuum {

std::string to_string(Ordering o) {
    switch (o) {
    case Ordering::Less: return "<";
    case Ordering::Equal: return "=";
    case Ordering::Greater: return ">";
    }
    return "?";
}

std::string to_string(HKind k) {
    switch (k) {
    case HKind::Infinitesimal: return "infinitesimal";
    case HKind::Appreciable: return "appreciable";
    case HKind::Unlimited: return "unlimited";
    case HKind::Undetermined: return "undetermined";
    }
    return "undetermined";
}

void require_shared_fs(const Hyperreal& a, const Hyperreal& b) {
    const FilterSemantics &x = a.fs(), &y = b.fs();
    if (x.horizon != y.horizon || x.tail_window != y.tail_window || x.parity_choice != y.parity_choice)
        throw ConfigError("operands must share the same filter semantics");
}

Hyperreal hr_from_real(double r, const FilterSemantics& fs) {
    if (!std::isfinite(r)) throw Error("hr_from_real requires a finite real");
    return Hyperreal(seq_constant(Value{r}), fs);
}

Hyperreal hr_from_rational(const Rational& q, const FilterSemantics& fs) {
    return Hyperreal(seq_constant(Value{q}), fs);
}

// --- arithmetic ---------------------------------------------------------------

Hyperreal hr_arith(const Hyperreal& a, const Hyperreal& b, ArithOp op) {
    require_shared_fs(a, b);
    const Seq &ra = a.rep(), &rb = b.rep();
    switch (op) {
    case ArithOp::Add:
        return Hyperreal(seq_zip(ra, rb, value_add, "(" + ra.tag() + " + " + rb.tag() + ")"), a.fs());
    case ArithOp::Sub:
        return Hyperreal(seq_zip(ra, rb, value_sub, "(" + ra.tag() + " - " + rb.tag() + ")"), a.fs());
    case ArithOp::Mul:
        return Hyperreal(seq_zip(ra, rb, value_mul, "(" + ra.tag() + " * " + rb.tag() + ")"), a.fs());
    case ArithOp::Div: {
        const Verdict3 nonzero = eventually([&rb](Index n) { return !value_is_zero(rb.at(n)); }, a.fs());
        if (!nonzero.holds()) {
            const Verdict3 zero = eventually([&rb](Index n) { return value_is_zero(rb.at(n)); }, a.fs());
            if (zero.holds()) throw DivisionByProvableZero();
            throw DivisionUndetermined();
        }
        auto div = [](const Value& x, const Value& y) -> Value {
            if (value_is_zero(y)) {
                // inside the certified head (or off the certified class):
                // placeholder, legal because representatives agree on a
                // filter member
                if (is_exact(x) && is_exact(y)) return Value{Rational(0)};
                return Value{0.0};
            }
            return value_div(x, y);
        };
        return Hyperreal(seq_zip(ra, rb, div, "(" + ra.tag() + " / " + rb.tag() + ")"), a.fs());
    }
    }
    throw Error("unreachable arithmetic op");
}

// --- order --------------------------------------------------------------------

Verdict3 provably_equal(const Hyperreal& a, const Hyperreal& b) {
    require_shared_fs(a, b);
    const Seq &ra = a.rep(), &rb = b.rep();
    return eventually([&ra, &rb](Index n) { return value_eq(ra.at(n), rb.at(n)); }, a.fs());
}

OrderResult hr_compare(const Hyperreal& a, const Hyperreal& b) {
    require_shared_fs(a, b);
    const Seq &ra = a.rep(), &rb = b.rep();
    auto sign_is = [&ra, &rb](int s) {
        return [&ra, &rb, s](Index n) { return value_cmp(ra.at(n), rb.at(n)) == s; };
    };
    const Verdict3 eq = eventually(sign_is(0), a.fs());
    if (eq.holds()) return {Ordering::Equal, eq};
    const Verdict3 lt = eventually(sign_is(-1), a.fs());
    if (lt.holds()) return {Ordering::Less, lt};
    const Verdict3 gt = eventually(sign_is(1), a.fs());
    if (gt.holds()) return {Ordering::Greater, gt};
    return {std::nullopt, Verdict3::make_undetermined(a.fs().horizon)};
}

// --- classification -------------------------------------------------------------

Classification classify(const Hyperreal& a, double st_tolerance) {
    const FilterSemantics& fs = a.fs();
    const double deepest = std::pow(10.0, -kClassifyLadderDepth);

    const NullCertificate null_cert = certify_null(a.rep(), fs, kClassifyLadderDepth);
    if (null_cert.verdict.holds()) return {HKind::Infinitesimal, Value{Rational(0)}};

    const NullCertificate growth = certify_unbounded(a.rep(), fs, kClassifyLadderDepth);
    if (growth.verdict.holds()) return {HKind::Unlimited, std::nullopt};

    const TailLimit lt = tail_limit(a.rep(), fs, st_tolerance);
    if (lt.converged) {
        if (std::fabs(to_double(lt.limit)) <= deepest) return {HKind::Infinitesimal, Value{Rational(0)}};
        return {HKind::Appreciable, lt.limit};
    }
    return {HKind::Undetermined, std::nullopt};
}

// --- standard part ---------------------------------------------------------------

Value st(const Hyperreal& a, double st_tolerance) {
    const TailLimit lt = tail_limit(a.rep(), a.fs(), st_tolerance);
    if (lt.converged) return lt.limit;
    if (certify_unbounded(a.rep(), a.fs(), kClassifyLadderDepth).verdict.holds()) throw StUnlimited();
    throw StNotConverged(lt.oscillation);
}

double st_double(const Hyperreal& a, double st_tolerance) { return to_double(st(a, st_tolerance)); }

// --- adequality ------------------------------------------------------------------

Verdict3 adequal(const Hyperreal& a, const Hyperreal& b) {
    require_shared_fs(a, b);
    const Hyperreal diff = a - b;
    const FilterSemantics& fs = a.fs();

    const NullCertificate nc = certify_null(diff.rep(), fs, kClassifyLadderDepth);
    if (nc.verdict.holds()) return nc.verdict;
    if (nc.verdict.fails()) return nc.verdict; // recurring gap, bound as witness

    const NullCertificate growth = certify_unbounded(diff.rep(), fs, kClassifyLadderDepth);
    if (growth.verdict.holds()) {
        const auto blocks = abs_block_stats(seq_abs(diff.rep()), fs);
        const double bound = blocks.empty() ? 0.0 : blocks.back().min_abs / 2;
        return Verdict3::make_fails(bound, fs.horizon);
    }
    return Verdict3::make_undetermined(fs.horizon);
}

// --- Wallis area -----------------------------------------------------------------

WallisReport wallis_area_report(const Rational& A, const Rational& B, const FilterSemantics& fs) {
    if (!(A > 0) || !(B > 0)) throw Error("wallis_area requires positive side lengths");

    const Hyperreal H(seq_naturals(), fs);
    const Hyperreal one = hr_from_rational(Rational(1), fs);
    const Hyperreal two = hr_from_rational(Rational(2), fs);

    const Hyperreal inverse = one / H; // <1/n>, a nonzero infinitesimal
    const Hyperreal unit = H * inverse;

    WallisReport out;
    out.unit_product_equal_one = provably_equal(unit, one);

    const Hyperreal width = hr_from_rational(A, fs) / H;      // A/H
    const Hyperreal bases = (hr_from_rational(B, fs) * H) / two; // (B/2)*H
    const Hyperreal area = width * bases;

    out.area = A * B / 2;
    out.area_equal_constant = provably_equal(area, hr_from_rational(out.area, fs));
    if (!out.unit_product_equal_one.holds() || !out.area_equal_constant.holds())
        throw Error("wallis_area: equality certification failed");
    return out;
}

Rational wallis_area(const Rational& A, const Rational& B, const FilterSemantics& fs) {
    return wallis_area_report(A, B, fs).area;
}

} // namespace bcontinuum
