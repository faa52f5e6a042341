#pragma once

// Lazily evaluated, memoized infinite sequences of exact rationals or doubles:
// the raw representatives of variable quantities.

#include "bcontinuum/value.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>

namespace bcontinuum {

using Index = std::uint64_t; // 1-based

class Seq {
public:
    using Gen = std::function<Value(Index)>;

    Seq(Gen gen, ValueKind kind, std::string tag = {})
        : state_(std::make_shared<State>(std::move(gen), kind, std::move(tag))) {}

    // Memoized evaluation; gen must be deterministic, so concurrent callers
    // racing on the same index store the same value.
    Value at(Index n) const {
        State& st = *state_;
        {
            std::lock_guard<std::mutex> lk(st.mu);
            auto it = st.memo.find(n);
            if (it != st.memo.end()) return it->second;
        }
        Value v = st.gen(n);
        {
            std::lock_guard<std::mutex> lk(st.mu);
            st.memo.emplace(n, v);
            auto it = st.memo.find(n);
            return it->second;
        }
    }

    double at_double(Index n) const { return to_double(at(n)); }

    ValueKind kind() const { return state_->kind; }
    const std::string& tag() const { return state_->tag; }

    // Handles compare equal when they share generator state.
    bool same_state(const Seq& other) const { return state_ == other.state_; }

private:
    struct State {
        State(Gen g, ValueKind k, std::string t) : gen(std::move(g)), kind(k), tag(std::move(t)) {}
        Gen gen;
        ValueKind kind;
        std::string tag;
        std::mutex mu;
        std::unordered_map<Index, Value> memo;
    };
    std::shared_ptr<State> state_;
};

inline Value seq_eval(const Seq& s, Index n) { return s.at(n); }

// --- stock generators -------------------------------------------------------

inline Seq seq_constant(Value v, std::string tag = {}) {
    ValueKind k = is_exact(v) ? ValueKind::Exact : ValueKind::Float;
    return Seq([v](Index) { return v; }, k, tag.empty() ? "const " + value_to_string(v) : std::move(tag));
}

// <n>
inline Seq seq_naturals() {
    return Seq([](Index n) { return Value{Rational(n)}; }, ValueKind::Exact, "n");
}

// <1/n>
inline Seq seq_reciprocal() {
    return Seq([](Index n) { return Value{Rational(1, n)}; }, ValueKind::Exact, "1/n");
}

// <1/n^2>
inline Seq seq_reciprocal_squared() {
    return Seq([](Index n) { return Value{Rational(1, Rational(n) * n)}; }, ValueKind::Exact, "1/n^2");
}

// <(-1)^n / n>; negative at n = 1.
inline Seq seq_alternating_reciprocal() {
    return Seq([](Index n) { return Value{n % 2 == 0 ? Rational(1, n) : Rational(-1, n)}; }, ValueKind::Exact,
               "(-1)^n/n");
}

// <(-1)^n>
inline Seq seq_alternating_sign() {
    return Seq([](Index n) { return Value{Rational(n % 2 == 0 ? 1 : -1)}; }, ValueKind::Exact, "(-1)^n");
}

// 1/4, 1/3, 1/6, 1/5, 1/8, 1/7, ...: adjacent reciprocal pairs swapped, a
// null sequence that is not monotone.
inline Seq seq_swapped_reciprocals() {
    return Seq([](Index n) { return Value{n % 2 == 1 ? Rational(1, n + 3) : Rational(1, n + 1)}; },
               ValueKind::Exact, "swapped reciprocal pairs");
}

// Termwise combination; result is exact only when both inputs are.
inline Seq seq_zip(const Seq& a, const Seq& b, std::function<Value(const Value&, const Value&)> f,
                   std::string tag = {}) {
    ValueKind k = (a.kind() == ValueKind::Exact && b.kind() == ValueKind::Exact) ? ValueKind::Exact
                                                                                 : ValueKind::Float;
    return Seq([a, b, f = std::move(f)](Index n) { return f(a.at(n), b.at(n)); }, k, std::move(tag));
}

inline Seq seq_map(const Seq& a, std::function<Value(const Value&)> f, ValueKind kind, std::string tag = {}) {
    return Seq([a, f = std::move(f)](Index n) { return f(a.at(n)); }, kind, std::move(tag));
}

} // namespace bcontinuum
