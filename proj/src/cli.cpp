#include "nbs/cli.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nbs/dynamics.hpp"
#include "nbs/squeeze.hpp"
#include "nbs/states.hpp"
#include "nbs/stats.hpp"
#include "nbs/verify.hpp"

namespace nbs::cli {
namespace {

using json = nlohmann::ordered_json;

const std::map<std::string, Command> kCommands{
    {"stats", Command::stats},   {"squeeze-scan", Command::squeeze_scan},
    {"qfunc", Command::qfunc},   {"wigner", Command::wigner},
    {"sdist", Command::sdist},   {"evolve", Command::evolve},
    {"verify", Command::verify},
};

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// key=value lines turned into --key=value tokens.
std::vector<std::string> read_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("--config: cannot open '" + path + "'");
    }
    std::vector<std::string> tokens;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidArgument("--config: line " + std::to_string(lineno) + " '" + line +
                                  "' is not of the form key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw InvalidArgument("--config: line " + std::to_string(lineno) + " has an empty key");
        }
        tokens.push_back("--" + key + "=" + value);
    }
    return tokens;
}

template <typename T>
std::vector<T> parse_list(const std::string& flag, const std::string& text)
{
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        T v{};
        std::istringstream is(item);
        if (item.empty() || !(is >> v) || !is.eof()) {
            throw InvalidArgument(flag + ": cannot parse '" + item + "' in '" + text + "'");
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw InvalidArgument(flag + ": empty list");
    }
    return out;
}

struct RawOptions {
    double eta = 0.0;
    std::size_t m = 0;
    double chi_t = 2.0;
    double range = 0.0;
    std::string format = "csv";
    std::string lambdas = "0.5,1";
    std::string scheme = "intensity";
    std::string checks;
};

void require(bool present, const std::string& flag)
{
    if (!present) {
        throw InvalidArgument("missing required parameter " + flag);
    }
}

}  // namespace

RunConfig parse_config(const std::vector<std::string>& args_in)
{
    std::vector<std::string> args;
    std::vector<std::string> file_tokens;
    for (std::size_t i = 0; i < args_in.size(); ++i) {
        const std::string& a = args_in[i];
        if (a == "--config") {
            if (i + 1 >= args_in.size()) {
                throw InvalidArgument("--config: missing file name");
            }
            file_tokens = read_config_file(args_in[++i]);
        } else if (a.rfind("--config=", 0) == 0) {
            file_tokens = read_config_file(a.substr(9));
        } else {
            args.push_back(a);
        }
    }
    if (!args.empty() && kCommands.count(args.front()) != 0) {
        args.insert(args.begin() + 1, file_tokens.begin(), file_tokens.end());
    } else if (!file_tokens.empty()) {
        throw InvalidArgument("--config requires a subcommand");
    }
    if (!args.empty() && !args.front().starts_with("-") && kCommands.count(args.front()) == 0) {
        throw InvalidArgument("unknown subcommand '" + args.front() +
                              "' (expected stats, squeeze-scan, qfunc, wigner, sdist, evolve or verify)");
    }

    RunConfig cfg;
    RawOptions raw;
    CLI::App app{"Negative binomial states: statistics, squeezing, phase space and dynamics", "nbs"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, _] : kCommands) {
        subs[name] = app.add_subcommand(name);
    }
    subs["stats"]->description("Photon statistics report");
    subs["squeeze-scan"]->description("Quadrature variances over (M, eta)");
    subs["qfunc"]->description("Q function on a grid");
    subs["wigner"]->description("Wigner function on a grid");
    subs["sdist"]->description("s-parametrized quasiprobability on a grid");
    subs["evolve"]->description("Fidelity of the generated state against its target versus chi t");
    subs["verify"]->description("Run the identity suite");

    std::map<std::string, CLI::Option*> eta_opt;
    std::map<std::string, CLI::Option*> m_opt;
    std::map<std::string, CLI::Option*> xb_opt;
    for (auto& [name, sub] : subs) {
        sub->add_option("--tail-eps", cfg.tail_eps, "Tail mass tolerance")->envname("NBS_TAIL_EPS");
        sub->add_option("--n-cap", cfg.n_cap, "Hard cap on the Fock basis size");
        sub->add_option("--format", raw.format, "csv or json");
        sub->add_option("-o,--output", cfg.output, "Output file (default stdout)");
        if (name == "verify") {
            sub->add_option("--checks", raw.checks, "Comma-separated check ids (default all)");
            continue;
        }
        if (name == "squeeze-scan") {
            sub->add_option("--m-min", cfg.m_min, "Smallest M (default 0)");
            sub->add_option("--m-max", cfg.m_max, "Largest M (default 10)");
            sub->add_option("--eta-min", cfg.eta_min, "Smallest eta (default 0.01)");
            sub->add_option("--eta-max", cfg.eta_max, "Largest eta (default 0.999)");
            sub->add_option("--eta-step", cfg.eta_step, "Eta spacing (default 0.01)");
            continue;
        }
        m_opt[name] = sub->add_option("--m", raw.m, "Photon offset M");
        if (name == "evolve") {
            sub->add_option("--scheme", raw.scheme, "intensity or parametric");
            sub->add_option("--chi-t", raw.chi_t, "Largest coupling time chi t");
            sub->add_option("--steps", cfg.steps, "Number of chi t intervals");
            sub->add_option("--g-t", cfg.g_t, "Atom coupling for the parametric scheme");
            continue;
        }
        eta_opt[name] = sub->add_option("--eta", raw.eta, "Success probability eta in (0, 1]");
        if (name == "stats") {
            sub->add_option("--lambda", raw.lambdas, "Comma-separated generating function arguments");
            continue;
        }
        sub->add_option("--x-min", cfg.grid.x_min, "Grid lower x bound (default -6)");
        sub->add_option("--x-max", cfg.grid.x_max, "Grid upper x bound (default 6)");
        sub->add_option("--y-min", cfg.grid.y_min, "Grid lower y bound (default -6)");
        sub->add_option("--y-max", cfg.grid.y_max, "Grid upper y bound (default 6)");
        sub->add_option("--nx", cfg.grid.nx, "Points along x (default 201)");
        sub->add_option("--ny", cfg.grid.ny, "Points along y (default 201)");
        xb_opt[name] = sub->add_option("--range", raw.range, "Square grid [-r, r]^2");
        if (name == "sdist") {
            sub->add_option("--s", cfg.s, "Ordering parameter in [-1, 0]");
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw HelpRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw HelpRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::ParseError& e) {
        throw InvalidArgument(e.what());
    }

    const std::string name = app.get_subcommands().front()->get_name();
    cfg.command = kCommands.at(name);
    CLI::App* sub = subs.at(name);

    if (raw.format == "csv") {
        cfg.format = Format::csv;
    } else if (raw.format == "json") {
        cfg.format = Format::json;
    } else {
        throw InvalidArgument("--format: '" + raw.format + "' is not one of csv, json");
    }
    if (!(cfg.tail_eps > 0.0 && cfg.tail_eps < 1.0)) {
        throw InvalidArgument("--tail-eps " + num(cfg.tail_eps) + " is outside the valid range (0, 1)");
    }
    if (cfg.n_cap < 1) {
        throw InvalidArgument("--n-cap must be at least 1");
    }

    if (eta_opt.count(name) != 0) {
        require(eta_opt[name]->count() > 0, "--eta");
        if (!(raw.eta > 0.0 && raw.eta <= 1.0)) {
            throw InvalidArgument("--eta " + num(raw.eta) + " is outside the valid range (0, 1]");
        }
        cfg.eta = raw.eta;
    }
    if (m_opt.count(name) != 0) {
        if (cfg.command != Command::evolve) {
            require(m_opt[name]->count() > 0, "--m");
        }
        cfg.m = raw.m;
    }
    if (xb_opt.count(name) != 0 && xb_opt[name]->count() > 0) {
        if (!(raw.range >= 0.0)) {
            throw InvalidArgument("--range " + num(raw.range) + " must be nonnegative");
        }
        for (const char* flag : {"--x-min", "--x-max", "--y-min", "--y-max"}) {
            if (sub->get_option(flag)->count() > 0) {
                throw InvalidArgument(std::string("--range conflicts with ") + flag);
            }
        }
        cfg.grid.x_min = cfg.grid.y_min = 0.0 - raw.range;
        cfg.grid.x_max = cfg.grid.y_max = raw.range;
    }

    switch (cfg.command) {
    case Command::stats: {
        cfg.lambdas = parse_list<double>("--lambda", raw.lambdas);
        for (const double l : cfg.lambdas) {
            if (!(l * (1.0 - *cfg.eta) < 1.0)) {
                throw InvalidArgument("--lambda " + num(l) + " is outside the domain lambda (1 - eta) < 1");
            }
        }
        break;
    }
    case Command::squeeze_scan:
        if (cfg.m_min > cfg.m_max) {
            throw InvalidArgument("--m-min must not exceed --m-max");
        }
        if (!(cfg.eta_min > 0.0 && cfg.eta_min <= cfg.eta_max && cfg.eta_max <= 1.0)) {
            throw InvalidArgument("--eta-min/--eta-max must satisfy 0 < eta-min <= eta-max <= 1");
        }
        if (!(cfg.eta_step > 0.0)) {
            throw InvalidArgument("--eta-step must be positive");
        }
        break;
    case Command::qfunc:
    case Command::wigner:
    case Command::sdist:
        if (cfg.grid.nx < 1 || cfg.grid.ny < 1) {
            throw InvalidArgument("--nx/--ny must be at least 1");
        }
        if (!(cfg.grid.x_min <= cfg.grid.x_max && cfg.grid.y_min <= cfg.grid.y_max)) {
            throw InvalidArgument("grid bounds must satisfy min <= max");
        }
        if (cfg.command == Command::sdist && !(cfg.s >= -1.0 && cfg.s <= 0.0)) {
            throw InvalidArgument("--s " + num(cfg.s) + " is outside the valid range [-1, 0]");
        }
        break;
    case Command::evolve:
        if (!(raw.chi_t >= 0.0 && raw.chi_t <= 20.0)) {
            throw InvalidArgument("--chi-t " + num(raw.chi_t) + " is outside the valid range [0, 20]");
        }
        cfg.chi_t = raw.chi_t;
        if (cfg.steps < 1) {
            throw InvalidArgument("--steps must be at least 1");
        }
        if (raw.scheme == "intensity") {
            cfg.scheme = Scheme::intensity;
        } else if (raw.scheme == "parametric") {
            cfg.scheme = Scheme::parametric;
        } else {
            throw InvalidArgument("--scheme: '" + raw.scheme + "' is not one of intensity, parametric");
        }
        if (cfg.scheme == Scheme::parametric && raw.m > 0 &&
            !(cfg.g_t > 0.0 && cfg.g_t <= kMaxAtomCoupling)) {
            throw InvalidArgument("--g-t " + num(cfg.g_t) + " is outside the valid range (0, 0.1]");
        }
        break;
    case Command::verify:
        if (!raw.checks.empty()) {
            cfg.checks = parse_list<int>("--checks", raw.checks);
            for (const int id : cfg.checks) {
                if (id < 1 || id > kCheckCount) {
                    throw InvalidArgument("--checks: id " + std::to_string(id) + " is outside 1.." +
                                          std::to_string(kCheckCount));
                }
            }
        }
        break;
    }
    return cfg;
}

namespace {

TruncationPolicy policy_of(const RunConfig& c)
{
    return {c.tail_eps, c.n_cap};
}

void write_stats(const RunConfig& c, std::ostream& out)
{
    const StatsReport r = stats_report(NBSParams(*c.eta, *c.m), c.lambdas, policy_of(c));
    if (c.format == Format::json) {
        json g = json::array();
        for (const auto& [l, v] : r.g_values) {
            g.push_back({{"lambda", l}, {"value", v}});
        }
        const json j{{"eta", r.eta},
                     {"m", r.m},
                     {"n_max", r.n_max},
                     {"tail_mass", r.tail_mass},
                     {"mean_n", r.f1},
                     {"f2", r.f2},
                     {"mandel_q", r.mandel_q_closed},
                     {"mandel_q_degenerate", r.mandel_q_degenerate},
                     {"mandel_q_numeric", r.mandel_q_numeric},
                     {"eta_minus", r.eta_minus},
                     {"sub_poissonian", r.sub_poissonian},
                     {"generating_function", g}};
        out << j.dump(2) << '\n';
        return;
    }
    out << "eta,m,n_max,tail_mass,mean_n,f2,mandel_q,mandel_q_degenerate,mandel_q_numeric,eta_minus,"
           "sub_poissonian";
    for (const auto& gv : r.g_values) {
        out << ",G(" << num(gv.first) << ')';
    }
    out << '\n'
        << num(r.eta) << ',' << r.m << ',' << r.n_max << ',' << num(r.tail_mass) << ',' << num(r.f1) << ','
        << num(r.f2) << ',' << num(r.mandel_q_closed) << ',' << (r.mandel_q_degenerate ? 1 : 0) << ','
        << num(r.mandel_q_numeric) << ',' << num(r.eta_minus) << ',' << (r.sub_poissonian ? 1 : 0);
    for (const auto& gv : r.g_values) {
        out << ',' << num(gv.second);
    }
    out << '\n';
}

void write_scan(const RunConfig& c, std::ostream& out)
{
    const SqueezingScan scan =
        squeezing_scan(c.m_min, c.m_max, uniform_eta_grid(c.eta_min, c.eta_max, c.eta_step), policy_of(c));
    if (c.format == Format::json) {
        json samples = json::array();
        for (const VarianceSample& s : scan.samples) {
            samples.push_back({{"eta", s.eta},
                               {"m", s.m},
                               {"mean_a", s.mean_a},
                               {"mean_a2", s.mean_a2},
                               {"var_x", s.var_x},
                               {"var_y", s.var_y}});
        }
        const auto regions = [](const std::vector<SqueezingRegion>& rs) {
            json a = json::array();
            for (const SqueezingRegion& r : rs) {
                a.push_back({r.eta_lo, r.eta_hi});
            }
            return a;
        };
        json summaries = json::array();
        for (const SqueezingSummary& s : scan.summaries) {
            summaries.push_back({{"m", s.m},
                                 {"min_var_x", s.min_var_x},
                                 {"eta_min_x", s.eta_min_x},
                                 {"min_var_y", s.min_var_y},
                                 {"eta_min_y", s.eta_min_y},
                                 {"x_regions", regions(s.x_regions)},
                                 {"y_regions", regions(s.y_regions)}});
        }
        const SqueezingCriticals crit = squeezing_criticals(scan);
        json j{{"samples", samples}, {"summaries", summaries}};
        j["x_onset"] = crit.x_onset ? json(*crit.x_onset) : json(nullptr);
        j["y_last"] = crit.y_last ? json(*crit.y_last) : json(nullptr);
        out << j.dump(2) << '\n';
        return;
    }
    out << "eta,m,mean_a,mean_a2,var_x,var_y\n";
    for (const VarianceSample& s : scan.samples) {
        out << num(s.eta) << ',' << s.m << ',' << num(s.mean_a) << ',' << num(s.mean_a2) << ',' << num(s.var_x)
            << ',' << num(s.var_y) << '\n';
    }
}

PhaseSpaceGrid evaluate_single_or_grid(const FockVector& state, const GridSpec& spec, Quasiprobability kind)
{
    if (spec.nx >= 2 && spec.ny >= 2 && spec.x_min < spec.x_max && spec.y_min < spec.y_max) {
        return grid_evaluate(state, spec, kind);
    }
    // Degenerate grids (a single point or a line) are evaluated pointwise
    // with zero cell area.
    PhaseSpaceGrid g;
    g.spec = spec;
    g.values.resize(spec.nx * spec.ny);
    const auto coord = [](double lo, double hi, std::size_t n, std::size_t i) {
        return n < 2 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    };
    for (std::size_t iy = 0; iy < spec.ny; ++iy) {
        for (std::size_t ix = 0; ix < spec.nx; ++ix) {
            const PhaseSpacePoint p{coord(spec.x_min, spec.x_max, spec.nx, ix),
                                    coord(spec.y_min, spec.y_max, spec.ny, iy)};
            double v = 0.0;
            switch (kind.kind) {
            case QuasiKind::husimi_q:
                v = q_function(state, p);
                break;
            case QuasiKind::wigner:
                v = wigner(state, p);
                break;
            case QuasiKind::s_parametrized:
                v = s_distribution(state, p, kind.s);
                break;
            }
            g.values[iy * spec.nx + ix] = v;
        }
    }
    g.integral = 0.0;
    return g;
}

void write_grid(const RunConfig& c, std::ostream& out)
{
    Quasiprobability kind = Quasiprobability::w();
    const char* label = "wigner";
    if (c.command == Command::qfunc) {
        kind = Quasiprobability::q();
        label = "qfunc";
    } else if (c.command == Command::sdist) {
        kind = Quasiprobability::s_param(c.s);
        label = "sdist";
    }
    const FockVector state = nbs(NBSParams(*c.eta, *c.m), policy_of(c));
    const PhaseSpaceGrid g = evaluate_single_or_grid(state, c.grid, kind);
    const GridSpec& s = g.spec;
    if (c.format == Format::json) {
        json rows = json::array();
        for (std::size_t iy = 0; iy < s.ny; ++iy) {
            json row = json::array();
            for (std::size_t ix = 0; ix < s.nx; ++ix) {
                row.push_back(g.at(ix, iy));
            }
            rows.push_back(row);
        }
        json j{{"kind", label}, {"eta", *c.eta}, {"m", *c.m}};
        if (c.command == Command::sdist) {
            j["s"] = c.s;
        }
        j["x_min"] = s.x_min;
        j["x_max"] = s.x_max;
        j["y_min"] = s.y_min;
        j["y_max"] = s.y_max;
        j["nx"] = s.nx;
        j["ny"] = s.ny;
        j["integral"] = g.integral;
        j["values"] = rows;
        out << j.dump(2) << '\n';
        return;
    }
    out << "# " << num(s.x_min) << ',' << num(s.x_max) << ',' << num(s.y_min) << ',' << num(s.y_max) << ','
        << s.nx << ',' << s.ny << '\n';
    for (std::size_t iy = 0; iy < s.ny; ++iy) {
        for (std::size_t ix = 0; ix < s.nx; ++ix) {
            out << (ix == 0 ? "" : ",") << num(g.at(ix, iy));
        }
        out << '\n';
    }
}

void write_evolve(const RunConfig& c, std::ostream& out)
{
    struct Row {
        double chi_t, eta, fidelity, norm_squared;
        std::size_t n_max;
    };
    std::vector<Row> rows;
    const TruncationPolicy policy = policy_of(c);
    const std::size_t m = c.m.value_or(0);
    for (std::size_t i = 0; i <= c.steps; ++i) {
        const double chi_t = *c.chi_t * static_cast<double>(i) / static_cast<double>(c.steps);
        const double eta = eta_after(chi_t);
        if (c.scheme == Scheme::intensity) {
            const FockVector evolved = evolve_intensity_dependent({chi_t, m, policy});
            const FockVector target = nbs(NBSParams(eta, m), policy);
            const std::size_t n = std::max(evolved.n_max(), target.n_max());
            rows.push_back({chi_t, eta, fidelity(evolved.resized(n), target.resized(n)), evolved.norm_squared(),
                            evolved.n_max()});
        } else {
            const PairBasisVector pair = evolve_parametric(chi_t, policy);
            if (m == 0) {
                rows.push_back({chi_t, eta, fidelity(pair, two_mode_geometric(eta, policy)), pair.norm_squared(),
                                pair.n_max()});
            } else {
                const AtomPassage a = atom_passage(pair, c.g_t, m);
                rows.push_back({chi_t, eta, fidelity(a.ground_branch, two_mode_nbs(eta, m, policy)),
                                pair.norm_squared(), pair.n_max()});
            }
        }
    }
    if (c.format == Format::json) {
        json a = json::array();
        for (const Row& r : rows) {
            a.push_back({{"chi_t", r.chi_t},
                         {"eta", r.eta},
                         {"fidelity", r.fidelity},
                         {"norm_squared", r.norm_squared},
                         {"n_max", r.n_max}});
        }
        const json j{{"scheme", c.scheme == Scheme::intensity ? "intensity" : "parametric"},
                     {"m", m},
                     {"series", a}};
        out << j.dump(2) << '\n';
        return;
    }
    out << "chi_t,eta,fidelity,norm_squared,n_max\n";
    for (const Row& r : rows) {
        out << num(r.chi_t) << ',' << num(r.eta) << ',' << num(r.fidelity) << ',' << num(r.norm_squared) << ','
            << r.n_max << '\n';
    }
}

bool write_verify(const RunConfig& c, std::ostream& out)
{
    const std::vector<CheckResult> results = run_checks(c.checks);
    std::size_t passed = 0;
    for (const CheckResult& r : results) {
        passed += r.pass ? 1 : 0;
    }
    if (c.format == Format::json) {
        json a = json::array();
        for (const CheckResult& r : results) {
            a.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        const json j{{"checks", a}, {"passed", passed}, {"total", results.size()}};
        out << j.dump(2) << '\n';
    } else {
        for (const CheckResult& r : results) {
            out << format_check(r) << '\n';
        }
        out << passed << '/' << results.size() << " checks passed\n";
    }
    return passed == results.size();
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.output.empty()) {
        file.open(config.output);
        if (!file) {
            err << "nbs: cannot open output file '" << config.output << "'\n";
            return kExitInvalid;
        }
        sink = &file;
    }
    // Render into a buffer so a failure midway leaves no partial output.
    std::ostringstream buf;
    try {
        bool ok = true;
        switch (config.command) {
        case Command::stats:
            write_stats(config, buf);
            break;
        case Command::squeeze_scan:
            write_scan(config, buf);
            break;
        case Command::qfunc:
        case Command::wigner:
        case Command::sdist:
            write_grid(config, buf);
            break;
        case Command::evolve:
            write_evolve(config, buf);
            break;
        case Command::verify:
            ok = write_verify(config, buf);
            break;
        }
        *sink << buf.str();
        sink->flush();
        if (!ok) {
            err << "nbs: verify: at least one check failed\n";
            return kExitNumerical;
        }
        return kExitOk;
    } catch (const InvalidArgument& e) {
        err << "nbs: invalid argument: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const NumericalError& e) {
        err << "nbs: numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    try {
        cfg = parse_config(args);
    } catch (const HelpRequested& h) {
        out << h.what();
        return kExitOk;
    } catch (const InvalidArgument& e) {
        err << "nbs: " << e.what() << '\n';
        return kExitInvalid;
    }
    return run(cfg, out, err);
}

}  // namespace nbs::cli
