#include "bcontinuum/casebook.hpp"

#include "bcontinuum/analysis.hpp"
#include "bcontinuum/corpus.hpp"
#include "bcontinuum/errors.hpp"
#include "bcontinuum/hyperreal.hpp"
#include "bcontinuum/series_expr.hpp"
#include "bcontinuum/sumtheorem.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

namespace bcontinuum {

using ordered_json = nlohmann::ordered_json;

std::string to_string(OutputFormat f) {
    switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Text: return "text";
    }
    return "json";
}

OutputFormat output_format_from_string(const std::string& s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "text") return OutputFormat::Text;
    throw ConfigError("unknown output format: " + s + " (expected json|csv|text)");
}

void Config::validate() const {
    if (st_tolerance <= 0 || derivative_tolerance <= 0)
        throw ConfigError("tolerances must be positive");
    if (grid_density < 2) throw ConfigError("grid_density must be at least 2");
    fs(); // checks horizon >= tail_window >= 1
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ConfigError("empty numeric value");
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            const Rational num(boost::multiprecision::cpp_int(text.substr(0, slash)));
            const Rational den(boost::multiprecision::cpp_int(text.substr(slash + 1)));
            if (den == 0) throw ConfigError("zero denominator in " + text);
            return num / den;
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(boost::multiprecision::cpp_int(text));
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        bool negative = false;
        if (!digits.empty() && (digits[0] == '+' || digits[0] == '-')) {
            negative = digits[0] == '-';
            digits.erase(digits.begin());
        }
        if (digits.empty()) throw ConfigError("bad numeric value: " + text);
        const auto nonzero = digits.find_first_not_of('0');
        digits = nonzero == std::string::npos ? "0" : digits.substr(nonzero); // avoid octal parsing
        Rational q{boost::multiprecision::cpp_int(digits)};
        for (std::size_t i = 0; i < text.size() - dot - 1; ++i) q /= 10;
        return negative ? Rational(-q) : q;
    } catch (const std::exception& e) {
        throw ConfigError("bad numeric value '" + text + "': " + e.what());
    }
}

void Config::apply_key(const std::string& key, const std::string& value) {
    try {
        if (key == "horizon")
            horizon = std::stoull(value);
        else if (key == "tail_window")
            tail_window = std::stoull(value);
        else if (key == "parity_choice")
            parity_choice = parity_from_string(value);
        else if (key == "st_tolerance")
            st_tolerance = std::stod(value);
        else if (key == "derivative_tolerance")
            derivative_tolerance = std::stod(value);
        else if (key == "grid_density")
            grid_density = std::stoull(value);
        else if (key == "output_format")
            output_format = output_format_from_string(value);
        else
            throw ConfigError("unknown config key: " + key);
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception& e) {
        throw ConfigError("bad value for " + key + ": " + e.what());
    }
}

Config Config::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    Config cfg;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + " is not key=value");
        cfg.apply_key(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    cfg.validate();
    return cfg;
}

bool CaseReport::any_fails() const {
    for (const LabeledVerdict& lv : verdicts)
        if (lv.verdict.fails()) return true;
    return false;
}

// --- case implementations -------------------------------------------------------

namespace {

void add_point_verdicts(CaseReport& r, const std::string& prefix, const std::vector<PointVerdict>& pvs) {
    for (const PointVerdict& pv : pvs) r.add(prefix + " x=" + pv.x.str(), pv.verdict);
}

void add_probe_verdicts(CaseReport& r, const std::string& prefix, const std::vector<ProbeVerdict>& pvs) {
    for (const ProbeVerdict& pv : pvs) r.add(prefix + " " + pv.label, pv.verdict);
}

void run_series_suite(CaseReport& r, const Series& S, const Config& cfg) {
    const FilterSemantics fs = cfg.fs();
    const Hypothesis1853Report h53 = hypothesis_1853(S, default_b_probes(S.interval, fs), fs);
    add_point_verdicts(r, "pointwise", h53.clause_a);
    add_probe_verdicts(r, "diagonal", h53.clause_b);
    r.add("always-hypothesis aggregate", h53.aggregate);

    const UniformOracleResult oracle =
        uniform_cauchy_oracle(S, cfg.grid_density, default_eps_ladder(), fs);
    r.add("uniform oracle", oracle.verdict);
    if (oracle.verdict.fails()) {
        r.bound("oracle_witness_eps", oracle.witness_eps);
        r.bound("oracle_witness_point", oracle.witness_point);
    }
}

CaseReport case_abel(const Config& cfg, const CaseParams&) {
    CaseReport r;
    const Series& S = corpus_series("abel");
    run_series_suite(r, S, cfg);

    const Index k_bound = 100, k_deep = 10000;
    r.bound("abel_diagonal_bound", integral_comparison_bound(S, k_bound));
    r.bound("abel_diagonal_bound_k10000", integral_comparison_bound(S, k_deep));
    r.bound("abel_diagonal_value_k100",
            std::fabs(window_sum(S, k_bound, 2 * k_bound, 1.0 / static_cast<double>(k_bound))));
    r.bound("abel_diagonal_value_k10000",
            std::fabs(window_sum(S, k_deep, 2 * k_deep, 1.0 / static_cast<double>(k_deep))));

    const SumContinuityReport cont = sum_continuity_check(S, Rational(0), cfg.fs());
    for (const ProbeVerdict& pv : cont.probes) r.add("sum continuity at 0: " + pv.label, pv.verdict);
    r.add("sum continuity at 0 aggregate", cont.verdict);
    r.bound("sum_truncation_level", static_cast<double>(cont.truncation));
    return r;
}

CaseReport case_geometric(const Config& cfg, const CaseParams&) {
    CaseReport r;
    const Series& S = corpus_series("geometric");
    run_series_suite(r, S, cfg);
    const SumContinuityReport cont = sum_continuity_check(S, Rational(0), cfg.fs());
    for (const ProbeVerdict& pv : cont.probes) r.add("sum continuity at 0: " + pv.label, pv.verdict);
    r.add("sum continuity at 0 aggregate", cont.verdict);
    return r;
}

CaseReport case_sin1x(const Config& cfg, const CaseParams&) {
    CaseReport r;
    const FilterSemantics fs = cfg.fs();
    const HFunction F = hf_sin_reciprocal();
    const ContinuityReport rep =
        cauchy_continuous_on(F, F.domain(), default_probe_family(F.domain(), fs), cfg.st_tolerance);
    double b_bound = 0;
    std::uint64_t b_count = 0;
    for (const ProbeResult& pr : rep.probes) {
        r.add(pr.label, pr.result.verdict);
        if (pr.is_b_point && pr.result.verdict.fails() && b_bound == 0) {
            b_bound = pr.result.bound;
            b_count = pr.result.witness_count;
        }
    }
    r.add("aggregate", Verdict3{rep.aggregate, 0, fs.horizon});
    r.add("failure is B-only",
          rep.b_only_failure ? Verdict3::make_holds(b_bound, fs.horizon)
                             : Verdict3::make_fails(0, fs.horizon));
    r.bound("b_probe_limsup_bound", b_bound);
    r.bound("b_probe_witness_count", static_cast<double>(b_count));
    return r;
}

CaseReport case_wallis(const Config& cfg, const CaseParams& params) {
    CaseReport r;
    Rational A(3), B(4);
    if (auto it = params.find("A"); it != params.end()) A = it->second;
    if (auto it = params.find("B"); it != params.end()) B = it->second;
    const WallisReport w = wallis_area_report(A, B, cfg.fs());
    r.add("unit product <n>*<1/n> equals 1", w.unit_product_equal_one);
    r.add("area equals " + w.area.str() + " exactly", w.area_equal_constant);
    r.bound("area", w.area.convert_to<double>());
    return r;
}

CaseReport case_signed_infinitesimal(const Config& cfg, const CaseParams&) {
    CaseReport r;
    const FilterSemantics fs = cfg.fs();
    const Hyperreal a(seq_alternating_reciprocal(), fs);
    const Hyperreal zero = hr_from_rational(Rational(0), fs);
    const OrderResult cmp = hr_compare(a, zero);
    const std::string rel = cmp.relation ? to_string(*cmp.relation) : "?";
    r.add("sign of <(-1)^n/n> vs 0: " + rel, cmp.verdict);
    const Classification cls = classify(a, cfg.st_tolerance);
    r.add("classifies " + to_string(cls.kind),
          cls.kind == HKind::Infinitesimal ? Verdict3::make_holds(0, fs.horizon)
                                           : Verdict3::make_fails(0, fs.horizon));
    return r;
}

CaseReport case_parabola_derivative(const Config& cfg, const CaseParams&) {
    CaseReport r;
    const FilterSemantics fs = cfg.fs();
    const HFunction F = hf_square(Interval{Rational(-2), Rational(2), {}});
    const std::vector<Hyperreal> gens{Hyperreal(seq_reciprocal(), fs),
                                      Hyperreal(seq_reciprocal_squared(), fs),
                                      Hyperreal(seq_alternating_reciprocal(), fs)};
    const RobustDerivative d =
        derivative_robust(F, Value{Rational(1)}, gens, cfg.derivative_tolerance, cfg.st_tolerance);
    for (std::size_t i = 0; i < gens.size(); ++i)
        r.add("quotient with " + gens[i].rep().tag(),
              Verdict3::make_holds(d.per_generator[i], fs.horizon));
    r.add("uniform across generators", d.uniform ? Verdict3::make_holds(d.value.value_or(0), fs.horizon)
                                                 : Verdict3::make_fails(0, fs.horizon));
    if (d.value) r.bound("derivative_value", *d.value);
    return r;
}

CaseReport case_absval_derivative(const Config& cfg, const CaseParams&) {
    CaseReport r;
    const FilterSemantics fs = cfg.fs();
    const HFunction F = hf_abs(Interval{Rational(-1), Rational(1), {}});
    const Hyperreal right(seq_reciprocal(), fs);
    const Hyperreal left(seq_map(seq_reciprocal(), value_neg, ValueKind::Exact, "-1/n"), fs);
    const RobustDerivative d = derivative_robust(F, Value{Rational(0)}, {right, left},
                                                 cfg.derivative_tolerance, cfg.st_tolerance);
    r.add("quotient with 1/n", Verdict3::make_holds(d.per_generator[0], fs.horizon));
    r.add("quotient with -1/n", Verdict3::make_holds(d.per_generator[1], fs.horizon));
    r.add("uniform across generators", d.uniform ? Verdict3::make_holds(d.value.value_or(0), fs.horizon)
                                                 : Verdict3::make_fails(0, fs.horizon));
    for (const RobustDerivative::Divergence& w : d.witnesses) {
        r.bound("divergent_value_" + std::to_string(w.i), w.vi);
        r.bound("divergent_value_" + std::to_string(w.j), w.vj);
    }
    return r;
}

CaseReport case_cauchy1821_sequence(const Config& cfg, const CaseParams&) {
    CaseReport r;
    const FilterSemantics fs = cfg.fs();
    const Hyperreal a(seq_swapped_reciprocals(), fs);
    const Classification cls = classify(a, cfg.st_tolerance);
    r.add("classifies infinitesimal despite non-monotone start",
          cls.kind == HKind::Infinitesimal ? Verdict3::make_holds(0, fs.horizon)
                                           : Verdict3::make_fails(0, fs.horizon));
    r.add("adequal to 0", adequal(a, hr_from_rational(Rational(0), fs)));
    r.bound("term_1", a.rep().at_double(1));
    r.bound("term_2", a.rep().at_double(2));
    r.bound("term_5", a.rep().at_double(5));
    return r;
}

struct CaseEntry {
    CaseInfo info;
    std::function<CaseReport(const Config&, const CaseParams&)> run;
};

const std::vector<CaseEntry>& case_registry() {
    static const std::vector<CaseEntry> cases = {
        {{"abel", "pointwise hypothesis holds at every grid point while the <1/n> diagonal fails, "
                  "with the integral-comparison lower bound",
          "sum-theorem separation"},
         case_abel},
        {{"sin1x", "B-point continuity failure for sin(1/x); A-point probes on [1/10, 1] hold",
          "infinitesimal continuity"},
         case_sin1x},
        {{"wallis", "triangle area A*B/2 from an unlimited count of infinitesimal slices",
          "infinitesimal area"},
         case_wallis},
        {{"signed-infinitesimal", "the sign of <(-1)^n/n> depends on the parity oracle",
          "parity-dependent sign"},
         case_signed_infinitesimal},
        {{"parabola-derivative", "derivative of x^2 at 1 is 2, uniform across infinitesimal generators",
          "adequality derivative"},
         case_parabola_derivative},
        {{"absval-derivative", "one-sided quotients of |x| at 0 disagree, so no uniform value",
          "adequality derivative"},
         case_absval_derivative},
        {{"geometric", "uniformly convergent benchmark: both hypotheses, the oracle, and the "
                       "sum-continuity check hold",
          "sum-theorem benchmark"},
         case_geometric},
        {{"cauchy1821-sequence", "the swapped-pairs reciprocal sequence is infinitesimal despite "
                                 "non-monotonicity",
          "null sequences"},
         case_cauchy1821_sequence},
    };
    return cases;
}

} // namespace

std::vector<CaseInfo> list_cases() {
    std::vector<CaseInfo> out;
    for (const CaseEntry& e : case_registry()) out.push_back(e.info);
    return out;
}

CaseReport run_case(const std::string& name, const Config& cfg, const CaseParams& params) {
    cfg.validate();
    for (const CaseEntry& entry : case_registry()) {
        if (entry.info.name != name) continue;
        const auto t0 = std::chrono::steady_clock::now();
        CaseReport r;
        try {
            r = entry.run(cfg, params);
        } catch (const Error& e) {
            // propagated module errors stay in the report as failed entries;
            // the exit-code contract reports them separately from Fails verdicts
            r.add(std::string("error: ") + e.what(), Verdict3::make_fails(0, cfg.horizon));
            r.module_error = true;
        }
        const auto t1 = std::chrono::steady_clock::now();
        r.case_name = name;
        r.config = cfg;
        r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        return r;
    }
    throw UnknownCase(name);
}

CaseReport run_series_check(const std::string& expr, const Rational& lo, const Rational& hi,
                            const Config& cfg) {
    cfg.validate();
    if (!(lo < hi)) throw ConfigError("interval requires lo < hi");
    const Series S = parse_series(expr, Interval{lo, hi, {}});
    const auto t0 = std::chrono::steady_clock::now();
    CaseReport r;
    run_series_suite(r, S, cfg);
    const auto t1 = std::chrono::steady_clock::now();
    r.case_name = "series:" + expr;
    r.config = cfg;
    r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

// --- emission -------------------------------------------------------------------

namespace {

ordered_json config_to_json(const Config& cfg) {
    ordered_json j;
    j["horizon"] = cfg.horizon;
    j["tail_window"] = cfg.tail_window;
    j["parity_choice"] = to_string(cfg.parity_choice);
    j["st_tolerance"] = cfg.st_tolerance;
    j["derivative_tolerance"] = cfg.derivative_tolerance;
    j["grid_density"] = cfg.grid_density;
    return j;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string emit_report(const CaseReport& r, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        ordered_json j;
        j["schema_version"] = r.schema_version;
        j["case_name"] = r.case_name;
        j["config"] = config_to_json(r.config);
        j["verdicts"] = ordered_json::array();
        for (const LabeledVerdict& lv : r.verdicts) {
            ordered_json v;
            v["label"] = lv.label;
            v["value"] = to_string(lv.verdict.value);
            v["witness"] = lv.verdict.witness;
            j["verdicts"].push_back(std::move(v));
        }
        j["bounds"] = ordered_json::object();
        for (const auto& [name, value] : r.bounds) j["bounds"][name] = value;
        j["elapsed_ms"] = r.elapsed_ms;
        return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
        std::ostringstream out;
        out << "label,value,witness\n";
        for (const LabeledVerdict& lv : r.verdicts)
            out << csv_escape(lv.label) << ',' << to_string(lv.verdict.value) << ','
                << ordered_json(lv.verdict.witness).dump() << '\n';
        for (const auto& [name, value] : r.bounds)
            out << csv_escape("bounds." + name) << ",bound," << ordered_json(value).dump() << '\n';
        return out.str();
    }
    case OutputFormat::Text: {
        std::ostringstream out;
        out << "case: " << r.case_name << "\n";
        out << "config: horizon=" << r.config.horizon << " tail_window=" << r.config.tail_window
            << " parity=" << to_string(r.config.parity_choice) << " st_tol=" << r.config.st_tolerance
            << " grid=" << r.config.grid_density << "\n";
        bool fails = false, undet = false;
        for (const LabeledVerdict& lv : r.verdicts) {
            out << "  [" << to_string(lv.verdict.value) << "] " << lv.label
                << " (witness " << lv.verdict.witness << ")\n";
            fails = fails || lv.verdict.fails();
            undet = undet || lv.verdict.undetermined();
        }
        for (const auto& [name, value] : r.bounds) out << "  bound " << name << " = " << value << "\n";
        out << "aggregate: " << (fails ? "fails" : undet ? "undetermined" : "holds") << "\n";
        return out.str();
    }
    }
    throw Error("unreachable format");
}

CaseReport report_from_json(const std::string& json_text) {
    const ordered_json j = ordered_json::parse(json_text);
    CaseReport r;
    r.schema_version = j.at("schema_version").get<std::string>();
    r.case_name = j.at("case_name").get<std::string>();
    const ordered_json& c = j.at("config");
    r.config.horizon = c.at("horizon").get<Index>();
    r.config.tail_window = c.at("tail_window").get<Index>();
    r.config.parity_choice = parity_from_string(c.at("parity_choice").get<std::string>());
    r.config.st_tolerance = c.at("st_tolerance").get<double>();
    r.config.derivative_tolerance = c.at("derivative_tolerance").get<double>();
    r.config.grid_density = c.at("grid_density").get<std::size_t>();
    for (const ordered_json& v : j.at("verdicts")) {
        Verdict3 verdict;
        const std::string value = v.at("value").get<std::string>();
        verdict.value = value == "holds" ? Truth::Holds : value == "fails" ? Truth::Fails
                                                                           : Truth::Undetermined;
        verdict.witness = v.at("witness").get<double>();
        verdict.horizon_used = r.config.horizon;
        r.verdicts.push_back({v.at("label").get<std::string>(), verdict});
        if (r.verdicts.back().label.rfind("error: ", 0) == 0) r.module_error = true;
    }
    for (auto it = j.at("bounds").begin(); it != j.at("bounds").end(); ++it)
        r.bounds.emplace_back(it.key(), it.value().get<double>());
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    return r;
}

bool reports_equal_ignoring_elapsed(const CaseReport& a, const CaseReport& b) {
    CaseReport x = a, y = b;
    x.elapsed_ms = y.elapsed_ms = 0;
    return emit_report(x, OutputFormat::Json) == emit_report(y, OutputFormat::Json);
}

} // namespace bcontinuum
