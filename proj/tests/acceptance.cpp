// Acceptance suite: one PASS/FAIL line per criterion.  Criteria 1-9 share
// their implementation with `nbs verify`; criterion 10 drives the built
// executable.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nbs/verify.hpp"

namespace {

struct Captured {
    int status = -1;
    std::string text;
};

Captured capture(const std::string& command)
{
    Captured c;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return c;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        c.text.append(buf.data(), n);
    }
    const int raw = pclose(pipe);
    c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return c;
}

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    return out;
}

// Value of `column` in a two-line CSV report, or NaN.
double csv_field(const std::string& text, const std::string& column)
{
    std::istringstream in(text);
    std::string header;
    std::string row;
    std::getline(in, header);
    std::getline(in, row);
    const auto names = split(header, ',');
    const auto values = split(row, ',');
    for (std::size_t i = 0; i < names.size() && i < values.size(); ++i) {
        if (names[i] == column) {
            return std::stod(values[i]);
        }
    }
    return std::nan("");
}

}  // namespace

int main()
{
    int failures = 0;
    for (int id = 1; id <= nbs::kCheckCount; ++id) {
        const nbs::CheckResult r = nbs::run_check(id);
        std::printf("criterion %d: %s %s: %s (%.1f s)\n", id, r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.detail.c_str(), r.seconds);
        std::fflush(stdout);
        failures += r.pass ? 0 : 1;
    }

    const std::string exe = NBS_CLI_PATH;
    const Captured verify = capture("'" + exe + "' verify 2>&1");
    const Captured stats = capture("'" + exe + "' stats --eta 0.8 --m 3 2>&1");
    const double q = csv_field(stats.text, "mandel_q");
    char q6[32];
    std::snprintf(q6, sizeof q6, "%.6f", q);
    const bool verify_ok = verify.status == 0;
    const bool stats_ok = stats.status == 0 && std::string(q6) == "-0.687500";
    std::printf("criterion 10: %s command-line tool: verify exit %d, stats mandel_q %s (exit %d)\n",
                verify_ok && stats_ok ? "PASS" : "FAIL", verify.status, q6, stats.status);
    if (!verify_ok) {
        std::istringstream lines(verify.text);
        std::string line;
        while (std::getline(lines, line)) {
            if (line.rfind("FAIL", 0) == 0) {
                std::printf("    verify reported: %s\n", line.c_str());
            }
        }
    }
    failures += verify_ok && stats_ok ? 0 : 1;
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
