#pragma once

// Command-line front end: argument and config-file parsing, and the report
// writers behind each subcommand.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nbs/errors.hpp"
#include "nbs/phasespace.hpp"

namespace nbs::cli {

enum class Command { stats, squeeze_scan, qfunc, wigner, sdist, evolve, verify };
enum class Format { csv, json };
enum class Scheme { intensity, parametric };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitNumerical = 2;

struct RunConfig {
    Command command = Command::verify;
    std::optional<double> eta;
    std::optional<std::size_t> m;
    std::optional<double> chi_t;
    GridSpec grid{};
    double s = -0.5;
    double tail_eps = 1e-12;
    std::size_t n_cap = 32768;
    Format format = Format::csv;
    std::string output;  // empty means stdout

    std::vector<double> lambdas{0.5, 1.0};                // stats
    std::size_t m_min = 0, m_max = 10;                    // squeeze-scan
    double eta_min = 0.01, eta_max = 0.999, eta_step = 0.01;
    Scheme scheme = Scheme::intensity;                    // evolve
    std::size_t steps = 20;
    double g_t = 0.05;
    std::vector<int> checks;                              // verify; empty = all
};

// Raised for --help; carries the text to print.
class HelpRequested : public std::exception {
public:
    explicit HelpRequested(std::string text) : text_(std::move(text)) {}
    const char* what() const noexcept override { return text_.c_str(); }

private:
    std::string text_;
};

// Parses `nbs <command> [flags]`.  A `--config FILE` of key=value lines
// (keys are flag names without dashes, '#' starts a comment) supplies values
// that explicit flags override.  NBS_TAIL_EPS replaces the default
// tail_eps.  Throws InvalidArgument naming the offending token.
RunConfig parse_config(const std::vector<std::string>& args);

// Executes a parsed config, writing to config.output or `out`.  Returns the
// process exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// parse_config + run with the exit-code mapping.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nbs::cli
