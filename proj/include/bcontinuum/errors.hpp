#pragma once

#include <stdexcept>
#include <string>

namespace bcontinuum {

// Base class for every error this library signals deliberately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedIndexClass : Error {
    explicit UnsupportedIndexClass(const std::string& what) : Error("unsupported index class: " + what) {}
};

struct DivisionUndetermined : Error {
    DivisionUndetermined() : Error("division: eventual nonvanishing of the denominator could not be certified at the horizon") {}
};

struct DivisionByProvableZero : Error {
    DivisionByProvableZero() : Error("division: denominator is provably zero on a filter member") {}
};

struct StUnlimited : Error {
    StUnlimited() : Error("st: argument is unlimited") {}
};

struct StNotConverged : Error {
    explicit StNotConverged(double oscillation)
        : Error("st: tail oscillation " + std::to_string(oscillation) + " exceeds tolerance at the horizon"),
          oscillation(oscillation) {}
    double oscillation;
};

struct DomainViolation : Error {
    explicit DomainViolation(const std::string& what) : Error("domain violation: " + what) {}
};

struct UnsupportedSeries : Error {
    explicit UnsupportedSeries(const std::string& label) : Error("unsupported series for this bound: " + label) {}
};

struct UnknownCase : Error {
    explicit UnknownCase(const std::string& name) : Error("unknown case: " + name) {}
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

struct ConfigError : Error {
    using Error::Error;
};

} // namespace bcontinuum
