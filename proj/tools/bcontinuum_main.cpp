// Command-line front end: run named case studies, list them, or check a
// user-defined series given through the expression grammar.

#include "bcontinuum/casebook.hpp"
#include "bcontinuum/corpus.hpp"
#include "bcontinuum/errors.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace {

struct CommonFlags {
    std::string config_path;
    std::string out_path;
    CLI::Option* horizon = nullptr;
    CLI::Option* tail_window = nullptr;
    CLI::Option* parity = nullptr;
    CLI::Option* st_tol = nullptr;
    CLI::Option* grid = nullptr;
    CLI::Option* format = nullptr;
    std::uint64_t horizon_v = 0, tail_window_v = 0, grid_v = 0;
    std::string parity_v, format_v;
    double st_tol_v = 0;
};

void add_common_flags(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "flat key=value config file (flags override it)");
    f.horizon = cmd->add_option("--horizon", f.horizon_v, "decision horizon");
    f.tail_window = cmd->add_option("--tail-window", f.tail_window_v, "certification window length");
    f.parity = cmd->add_option("--parity", f.parity_v, "parity oracle: evens|odds|none");
    f.st_tol = cmd->add_option("--st-tol", f.st_tol_v, "standard-part stabilization tolerance");
    f.grid = cmd->add_option("--grid", f.grid_v, "grid density for the uniform oracle");
    f.format = cmd->add_option("--format", f.format_v, "output format: json|csv|text");
    cmd->add_option("--out", f.out_path, "write the report to this path (atomically)");
}

bcontinuum::Config resolve_config(const CommonFlags& f) {
    bcontinuum::Config cfg;
    if (!f.config_path.empty()) cfg = bcontinuum::Config::from_file(f.config_path);
    if (f.horizon->count()) cfg.horizon = f.horizon_v;
    if (f.tail_window->count()) cfg.tail_window = f.tail_window_v;
    if (f.parity->count()) cfg.parity_choice = bcontinuum::parity_from_string(f.parity_v);
    if (f.st_tol->count()) cfg.st_tolerance = f.st_tol_v;
    if (f.grid->count()) cfg.grid_density = f.grid_v;
    if (f.format->count()) cfg.output_format = bcontinuum::output_format_from_string(f.format_v);
    cfg.validate();
    return cfg;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    namespace fs = std::filesystem;
    const fs::path target(out_path);
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw bcontinuum::Error("cannot write " + tmp.string());
        out << text;
    }
    fs::rename(tmp, target);
}

std::pair<bcontinuum::Rational, bcontinuum::Rational> parse_interval(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw bcontinuum::ConfigError("--interval expects a,b (got '" + text + "')");
    return {bcontinuum::parse_rational(text.substr(0, comma)),
            bcontinuum::parse_rational(text.substr(comma + 1))};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computable infinitesimal-enriched continuum workbench"};
    app.require_subcommand(1);

    // case run / case list
    CLI::App* case_cmd = app.add_subcommand("case", "named case studies");
    case_cmd->require_subcommand(1);

    CLI::App* run_cmd = case_cmd->add_subcommand("run", "run one case and emit its report");
    std::string case_name;
    run_cmd->add_option("name", case_name, "case name (see `case list`)")->required();
    CommonFlags run_flags;
    add_common_flags(run_cmd, run_flags);

    CLI::App* list_cmd = case_cmd->add_subcommand("list", "list the registered cases");

    // series check
    CLI::App* series_cmd = app.add_subcommand("series", "user-defined series");
    series_cmd->require_subcommand(1);
    CLI::App* check_cmd = series_cmd->add_subcommand("check", "analyze a series term expression");
    std::string expr, interval_text;
    check_cmd->add_option("expr", expr, "term expression in i and x, e.g. \"sin(i*x)/i\"")->required();
    check_cmd->add_option("--interval", interval_text, "closed interval a,b")->required();
    CommonFlags check_flags;
    add_common_flags(check_cmd, check_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            const bcontinuum::Config cfg = resolve_config(run_flags);
            const bcontinuum::CaseReport report = bcontinuum::run_case(case_name, cfg);
            write_output(bcontinuum::emit_report(report, cfg.output_format), run_flags.out_path);
            return report.module_error ? 1 : 0;
        }
        if (list_cmd->parsed()) {
            for (const bcontinuum::CaseInfo& info : bcontinuum::list_cases())
                std::cout << info.name << ": " << info.description << " [" << info.topic << "]\n";
            return 0;
        }
        if (check_cmd->parsed()) {
            const bcontinuum::Config cfg = resolve_config(check_flags);
            const auto [lo, hi] = parse_interval(interval_text);
            const bcontinuum::CaseReport report = bcontinuum::run_series_check(expr, lo, hi, cfg);
            write_output(bcontinuum::emit_report(report, cfg.output_format), check_flags.out_path);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
