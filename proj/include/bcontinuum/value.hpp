#pragma once

// Term values for sequences: exact rationals where the generator permits,
// doubles otherwise. Mixed arithmetic promotes to double.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <variant>

namespace bcontinuum {

using Rational = boost::multiprecision::cpp_rational;

enum class ValueKind { Exact, Float };

using Value = std::variant<Rational, double>;

inline bool is_exact(const Value& v) { return std::holds_alternative<Rational>(v); }

inline double to_double(const Value& v) {
    if (const auto* q = std::get_if<Rational>(&v)) return q->convert_to<double>();
    return std::get<double>(v);
}

inline Value make_value(Rational q) { return Value{std::move(q)}; }
inline Value make_value(double d) { return Value{d}; }
inline Value rational_value(long long num, long long den = 1) { return Value{Rational(num, den)}; }

namespace detail {
template <typename ExactOp, typename FloatOp>
Value value_binary(const Value& a, const Value& b, ExactOp eop, FloatOp fop) {
    if (is_exact(a) && is_exact(b)) return Value{eop(std::get<Rational>(a), std::get<Rational>(b))};
    return Value{fop(to_double(a), to_double(b))};
}
} // namespace detail

inline Value value_add(const Value& a, const Value& b) {
    return detail::value_binary(a, b, [](const Rational& x, const Rational& y) { return Rational(x + y); },
                                [](double x, double y) { return x + y; });
}

inline Value value_sub(const Value& a, const Value& b) {
    return detail::value_binary(a, b, [](const Rational& x, const Rational& y) { return Rational(x - y); },
                                [](double x, double y) { return x - y; });
}

inline Value value_mul(const Value& a, const Value& b) {
    return detail::value_binary(a, b, [](const Rational& x, const Rational& y) { return Rational(x * y); },
                                [](double x, double y) { return x * y; });
}

// Caller guarantees b != 0; division stays exact for two rationals.
inline Value value_div(const Value& a, const Value& b) {
    return detail::value_binary(a, b, [](const Rational& x, const Rational& y) { return Rational(x / y); },
                                [](double x, double y) { return x / y; });
}

inline Value value_neg(const Value& a) {
    if (const auto* q = std::get_if<Rational>(&a)) return Value{Rational(-*q)};
    return Value{-std::get<double>(a)};
}

inline Value value_abs(const Value& a) {
    if (const auto* q = std::get_if<Rational>(&a)) return Value{Rational(abs(*q))};
    return Value{std::fabs(std::get<double>(a))};
}

inline bool value_is_zero(const Value& a) {
    if (const auto* q = std::get_if<Rational>(&a)) return q->is_zero();
    return std::get<double>(a) == 0.0;
}

// Exact when both sides are exact; bitwise double equality otherwise.
inline bool value_eq(const Value& a, const Value& b) {
    if (is_exact(a) && is_exact(b)) return std::get<Rational>(a) == std::get<Rational>(b);
    return to_double(a) == to_double(b);
}

// -1, 0, +1 of (a - b).
inline int value_cmp(const Value& a, const Value& b) {
    if (is_exact(a) && is_exact(b)) {
        const Rational &x = std::get<Rational>(a), &y = std::get<Rational>(b);
        if (x < y) return -1;
        if (x > y) return 1;
        return 0;
    }
    double x = to_double(a), y = to_double(b);
    if (x < y) return -1;
    if (x > y) return 1;
    return 0;
}

inline std::string value_to_string(const Value& v) {
    if (const auto* q = std::get_if<Rational>(&v)) return q->str();
    return std::to_string(std::get<double>(v));
}

} // namespace bcontinuum
