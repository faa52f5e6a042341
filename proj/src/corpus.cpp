#include "bcontinuum/corpus.hpp"

#include "bcontinuum/errors.hpp"

#include <cmath>
#include <mutex>

namespace bcontinuum {

namespace {

struct Entry {
    Series series;
    std::string description;
};

Interval unit_interval() { return Interval{Rational(0), Rational(1), {}}; }

std::vector<Entry> builtin_corpus() {
    std::vector<Entry> entries;
    entries.push_back({Series{"abel", unit_interval(),
                              [](Index i, double x) { return std::sin(i * x) / static_cast<double>(i); }},
                       "sin(ix)/i: pointwise convergent, fails at the <1/n> diagonal"});
    entries.push_back({Series{"geometric", Interval{Rational(-1, 2), Rational(1, 2), {}},
                              [](Index i, double x) { return std::pow(x, static_cast<double>(i)); }},
                       "x^i on [-1/2, 1/2]: uniformly convergent, sum 1/(1-x)"});
    entries.push_back({Series{"zero", unit_interval(), [](Index, double) { return 0.0; }},
                       "all terms zero"});
    entries.push_back({Series{"exp-taylor", unit_interval(),
                              [](Index i, double x) {
                                  if (x <= 0.0) return 0.0;
                                  return std::exp(i * std::log(x) - std::lgamma(i + 1.0));
                              }},
                       "x^i/i!: entire sum, factorially fast tails"});
    entries.push_back({Series{"sin-over-i-squared", unit_interval(),
                              [](Index i, double x) {
                                  return std::sin(i * x) / (static_cast<double>(i) * static_cast<double>(i));
                              }},
                       "sin(ix)/i^2: absolutely and uniformly convergent"});
    entries.push_back({Series{"alternating-harmonic", unit_interval(),
                              [](Index i, double x) {
                                  const double t = std::pow(x, static_cast<double>(i)) / static_cast<double>(i);
                                  return i % 2 == 0 ? t : -t;
                              }},
                       "(-1)^i x^i / i: alternating tails bounded by the first term"});
    entries.push_back({Series{"dirichlet-odd", unit_interval(),
                              [](Index i, double x) {
                                  const double m = 2.0 * static_cast<double>(i) - 1.0;
                                  return 4.0 * std::sin(m * x) / m;
                              }},
                       "4 sin((2i-1)x)/(2i-1): square-wave partial sums, jump at 0"});
    return entries;
}

std::vector<Entry>& corpus() {
    static std::vector<Entry> entries = builtin_corpus();
    return entries;
}

std::mutex& corpus_mutex() {
    static std::mutex mu;
    return mu;
}

} // namespace

std::vector<std::string> corpus_labels() {
    std::lock_guard<std::mutex> lk(corpus_mutex());
    std::vector<std::string> out;
    for (const Entry& e : corpus()) out.push_back(e.series.label);
    return out;
}

const Series& corpus_series(const std::string& label) {
    std::lock_guard<std::mutex> lk(corpus_mutex());
    for (const Entry& e : corpus())
        if (e.series.label == label) return e.series;
    throw UnsupportedSeries(label);
}

std::vector<std::pair<std::string, std::string>> corpus_listing() {
    std::lock_guard<std::mutex> lk(corpus_mutex());
    std::vector<std::pair<std::string, std::string>> out;
    for (const Entry& e : corpus()) out.emplace_back(e.series.label, e.description);
    return out;
}

void register_series(Series series, std::string description) {
    std::lock_guard<std::mutex> lk(corpus_mutex());
    for (const Entry& e : corpus())
        if (e.series.label == series.label) throw Error("series label already registered: " + series.label);
    corpus().push_back({std::move(series), std::move(description)});
}

} // namespace bcontinuum
