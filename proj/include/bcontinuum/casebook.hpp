#pragma once

// Named case studies, configuration, and report emission. Reports echo the
// full decision-policy configuration because verdicts are meaningless
// without it, and re-running with identical config is byte-identical up to
// the elapsed field.

#include "bcontinuum/filter.hpp"
#include "bcontinuum/value.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bcontinuum {

enum class OutputFormat { Json, Csv, Text };

std::string to_string(OutputFormat f);
OutputFormat output_format_from_string(const std::string& s);

struct Config {
    Index horizon = 100000;
    Index tail_window = 64;
    ParityChoice parity_choice = ParityChoice::EvensInFilter;
    double st_tolerance = 1e-9;
    double derivative_tolerance = 1e-6;
    std::size_t grid_density = 101;
    OutputFormat output_format = OutputFormat::Json;

    FilterSemantics fs() const { return FilterSemantics(horizon, tail_window, parity_choice); }
    void validate() const;

    // Flat key-value file, keys exactly the field names, '#' comments allowed.
    static Config from_file(const std::string& path);
    void apply_key(const std::string& key, const std::string& value);
};

// "p/q", decimal, or integer text into an exact rational.
Rational parse_rational(const std::string& text);

struct LabeledVerdict {
    std::string label;
    Verdict3 verdict;
};

struct CaseReport {
    std::string schema_version = "1";
    std::string case_name;
    Config config;
    std::vector<LabeledVerdict> verdicts;
    std::vector<std::pair<std::string, double>> bounds; // stable insertion order
    double elapsed_ms = 0;
    bool module_error = false; // an error was embedded as a failed verdict entry

    void add(std::string label, Verdict3 v) { verdicts.push_back({std::move(label), v}); }
    void bound(std::string name, double value) { bounds.emplace_back(std::move(name), value); }
    bool any_fails() const;
};

using CaseParams = std::map<std::string, Rational>;

// Executes a registered case; UnknownCase for unregistered names.
CaseReport run_case(const std::string& name, const Config& cfg, const CaseParams& params = {});

struct CaseInfo {
    std::string name;
    std::string description;
    std::string topic;
};

// Stable registration order.
std::vector<CaseInfo> list_cases();

std::string emit_report(const CaseReport& r, OutputFormat format);
CaseReport report_from_json(const std::string& json_text);
bool reports_equal_ignoring_elapsed(const CaseReport& a, const CaseReport& b);

// Report for a user series given through the expression grammar.
CaseReport run_series_check(const std::string& expr, const Rational& lo, const Rational& hi,
                            const Config& cfg);

} // namespace bcontinuum
