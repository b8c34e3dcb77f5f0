#pragma once

// Batch front end over the library: evaluate, tabulate, verify. Commands
// produce a table (plus findings for `verify`) that the emitters render as
// CSV or JSON; identical configs give byte-identical output.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace besselkit_cli {

/// Invalid parameters (exit code 2). Numerical failures surface as the
/// library's exceptions (exit code 3).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;
    double nu = 0.5;
    bool halfline = false;
    double b = 1.0;
    std::string h;        // number | "inf" | "krein" (spectrum/classify)
    std::string z_grid;   // axis:start..stop:count | axis:value
    std::string t_grid;   // start..stop:count | value (re: prefix tolerated)
    std::string z_point;  // complex literal: "i", "1+2i", "-0.5", "2i"
    std::string b_list;   // comma-separated
    int k = 5;
    int n = 512;          // discretization size (forms)
    double grading = 3.0;
    std::string format = "csv";
    std::string output;   // empty = stdout
    std::optional<double> tol;

    void validate() const;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

struct Finding {
    std::string id;
    double computed = 0.0;
    double printed = 0.0;
    std::string note;
};

struct CommandResult {
    Table table;
    std::vector<Finding> findings;
    bool ok = true;  // verify: all internal consistency checks passed
};

/// Executes the configured command. Throws ConfigError for invalid
/// parameters and the library's evaluation errors for numerical failures.
CommandResult run_command(const RunConfig& cfg);

std::string emit_csv(const Table& table);
Table parse_csv(const std::string& text);
nlohmann::json emit_json(const RunConfig& cfg, const CommandResult& result);

/// Full pipeline: run, render, write to cfg.output or stdout.
/// Returns the process exit code (0 ok, 2 config, 3 numerical).
int run_cli(const RunConfig& cfg);

/// Fixed-format float rendering used in all tables ("%.17g").
std::string render_double(double v);

/// "1+2i", "i", "-0.5", "2i" -> complex
std::pair<double, double> parse_complex(const std::string& text);

/// "axis:start..stop:count", "axis:value" -> list of points on that axis
std::vector<std::pair<double, double>> parse_grid(const std::string& spec);

}  // namespace besselkit_cli
