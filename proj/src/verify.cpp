#include "nbs/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <sstream>

#include "nbs/dynamics.hpp"
#include "nbs/oracle.hpp"
#include "nbs/phasespace.hpp"
#include "nbs/squeeze.hpp"
#include "nbs/states.hpp"
#include "nbs/stats.hpp"
#include "nbs/su11.hpp"

namespace nbs {
namespace {

std::string sci(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string fixed(double v, int digits)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

double rel_err(double a, double b)
{
    return std::abs(a - b) / std::max(1.0, std::abs(b));
}

// Norm of the components 0..n_max-cut, away from the truncation edge where
// ladder operators lose information.
double interior_norm(const FockVector& v, std::size_t cut)
{
    double s = 0.0;
    for (std::size_t n = 0; n + cut <= v.n_max(); ++n) {
        s += std::norm(v[n]);
    }
    return std::sqrt(s);
}

double common_fidelity(const FockVector& a, const FockVector& b)
{
    const std::size_t n = std::max(a.n_max(), b.n_max());
    return fidelity(a.resized(n), b.resized(n));
}

const std::vector<double> kAlgebraEtas{0.2, 0.5, 0.8};
constexpr std::size_t kAlgebraMaxM = 6;

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome formula_consistency()
{
    const TruncationPolicy policy{1e-20, 32768};
    double worst_f1 = 0.0;
    double worst_f2 = 0.0;
    double worst_q = 0.0;
    double worst_g = 0.0;
    for (int ie = 1; ie <= 9; ++ie) {
        const double eta = 0.1 * ie;
        for (std::size_t m = 0; m <= 10; ++m) {
            const NBSParams params(eta, m);
            const FockVector v = nbs(params, policy);
            const NumericMoments num = photon_moments(v);
            const FactorialMoments closed = factorial_moments(eta, m);
            const double mean_formula = (static_cast<double>(m) + 1.0) / eta - 1.0;
            worst_f1 = std::max({worst_f1, rel_err(num.mean, closed.f1), rel_err(closed.f1, mean_formula)});
            worst_f2 = std::max(worst_f2, rel_err(num.f2, closed.f2));
            worst_q = std::max(worst_q, std::abs(mandel_q_numeric(v) - mandel_q(eta, m).value));
            for (const double lambda : {0.3, 0.7, 1.0}) {
                double g = 0.0;
                double pw = 1.0;
                const std::vector<double> p = v.probabilities();
                for (std::size_t n = 0; n < p.size(); ++n) {
                    g += pw * p[n];
                    pw *= lambda;
                }
                worst_g = std::max(worst_g, rel_err(g, generating_function(lambda, eta, m)));
            }
        }
    }
    const double worst = std::max({worst_f1, worst_f2, worst_q, worst_g});
    return {worst <= 1e-8, "max rel err <N> " + sci(worst_f1) + ", F2 " + sci(worst_f2) + ", Q " +
                               sci(worst_q) + ", G " + sci(worst_g) + " (tol 1e-8)"};
}

Outcome mandel_threshold()
{
    constexpr double step = 1e-4;
    bool ok = true;
    std::ostringstream os;
    for (const std::size_t m : {1, 2, 5, 10}) {
        const double target = eta_threshold(m);
        std::size_t first_negative = 0;
        for (std::size_t i = 1; i <= 10000; ++i) {
            if (mandel_q(static_cast<double>(i) * step, m).value < 0.0) {
                first_negative = i;
                break;
            }
        }
        const double crossing = static_cast<double>(first_negative) * step;
        const double below = crossing - step;
        const double q_below = mandel_q_numeric(nbs(NBSParams(below, m)));
        const double q_above = mandel_q_numeric(nbs(NBSParams(crossing, m)));
        const bool this_ok = first_negative > 0 && std::abs(crossing - target) <= step && q_below >= 0.0 &&
                             q_above < 0.0;
        ok = ok && this_ok;
        os << "M=" << m << " crossing " << fixed(crossing, 4) << " vs " << fixed(target, 6) << "; ";
    }
    const double eta1 = eta_threshold(1);
    const bool exact = std::abs(eta1 - (2.0 - std::numbers::sqrt2)) <= 1e-12;
    ok = ok && exact;
    os << "eta_-(1) = " << fixed(eta1, 6);
    return {ok, os.str()};
}

Outcome su11_algebra()
{
    double worst_comm = 0.0;
    double worst_ladder = 0.0;
    double worst_dis = 0.0;
    for (const double eta : kAlgebraEtas) {
        for (std::size_t m = 0; m <= kAlgebraMaxM; ++m) {
            const FockVector v = nbs(NBSParams(eta, m));
            const FockVector kp = k_plus(v, m);
            const FockVector km = k_minus(v, m);
            const FockVector k0 = k_zero(v, m);
            const FockVector c_plus = k_zero(kp, m) - k_plus(k0, m) - kp;
            const FockVector c_minus = k_zero(km, m) - k_minus(k0, m) + km;
            const FockVector c_cas = k_minus(kp, m) - k_plus(km, m) - complex{2.0} * k0;
            worst_comm = std::max({worst_comm, interior_norm(c_plus, 3), interior_norm(c_minus, 3),
                                   interior_norm(c_cas, 3)});
            worst_ladder = std::max({worst_ladder, ladder_residual(eta, m), ladder_residual_generators(eta, m)});
            worst_dis = std::max(worst_dis, disentangle_check(std::atanh(std::sqrt(1.0 - eta)), m));
        }
    }
    const double worst = std::max({worst_comm, worst_ladder, worst_dis});
    return {worst <= 1e-10, "commutators " + sci(worst_comm) + ", ladder " + sci(worst_ladder) +
                                ", disentangling " + sci(worst_dis) + " (tol 1e-10)"};
}

Outcome triple_construction()
{
    double worst = 0.0;
    for (const double eta : kAlgebraEtas) {
        for (std::size_t m = 0; m <= kAlgebraMaxM; ++m) {
            const FockVector direct = nbs(NBSParams(eta, m));
            const FockVector displaced = su11_displace(std::atanh(std::sqrt(1.0 - eta)), m);
            const FockVector added = excited_geometric(eta, m);
            const double f1 = common_fidelity(direct, displaced);
            const double f2 = common_fidelity(direct, added);
            const double f3 = common_fidelity(displaced, added);
            worst = std::max({worst, 1.0 - f1, 1.0 - f2, 1.0 - f3});
        }
    }
    return {worst <= 1e-10, "max 1 - fidelity " + sci(worst) + " (tol 1e-10)"};
}

Outcome nonlinear_coherent()
{
    double worst = 0.0;
    for (const double eta : kAlgebraEtas) {
        for (std::size_t m = 0; m <= kAlgebraMaxM; ++m) {
            worst = std::max(worst, nonlinear_eigen_residual(eta, m));
        }
    }
    // At M = 0 the relation is E|eta> = sqrt(1-eta)|eta> with the shift
    // (E v)_n = v_{n+1}.
    double worst_geo = 0.0;
    for (const double eta : kAlgebraEtas) {
        const FockVector g = geometric_state(eta);
        const double s = std::sqrt(1.0 - eta);
        double r = 0.0;
        for (std::size_t n = 0; n < g.n_max(); ++n) {
            r += std::norm(g[n + 1] - s * g[n]);
        }
        worst_geo = std::max(worst_geo, std::sqrt(r));
    }
    const bool ok = worst <= 1e-8 && worst_geo <= 1e-8;
    return {ok, "residual M<=6 " + sci(worst) + ", M=0 shift form " + sci(worst_geo) + " (tol 1e-8)"};
}

Outcome squeezing_criticals_check()
{
    const TruncationPolicy policy{1e-12, 32768};
    const std::vector<double> grid = uniform_eta_grid(0.01, 0.999, 0.001);
    const SqueezingScan scan = squeezing_scan(0, 40, grid, policy);

    bool x_ok = true;
    bool y_ok = true;
    std::optional<std::size_t> x_onset;
    std::optional<std::size_t> y_last;
    for (const SqueezingSummary& s : scan.summaries) {
        if (s.m <= 10) {
            const bool expect = s.m >= 7;
            x_ok = x_ok && s.x_squeezed() == expect;
            if (s.x_squeezed() && !x_onset) {
                x_onset = s.m;
            }
        }
        const bool expect_y = s.m <= 31;
        y_ok = y_ok && s.y_squeezed() == expect_y;
        if (s.y_squeezed()) {
            y_last = s.m;
        }
    }
    const auto& s6 = scan.summaries[6];
    const auto& s7 = scan.summaries[7];
    const auto& s32 = scan.summaries[32];
    std::ostringstream os;
    os << "X " << (x_ok ? "ok" : "deviates") << ": onset M=" << (x_onset ? std::to_string(*x_onset) : "none")
       << " (min var_x M=6 " << fixed(s6.min_var_x, 5) << ", M=7 " << fixed(s7.min_var_x, 5) << "); Y "
       << (y_ok ? "ok" : "deviates") << ": last squeezed M in 0..40 is "
       << (y_last ? std::to_string(*y_last) : "none") << " (min var_y M=32 " << fixed(s32.min_var_y, 6)
       << " at eta " << fixed(s32.eta_min_y, 4) << ")";
    return {x_ok && y_ok, os.str()};
}

Outcome phase_space()
{
    std::ostringstream os;
    bool ok = true;

    const complex beta{0.7, 0.4};
    const oracle::DenseMatrix dm = oracle::displacement_matrix(beta, 16);
    const complex ref11 = dm(1, 1);
    const double err_minus = std::abs(chi_element_hypergeometric(1, 1, beta, -1.0) - ref11);
    const double err_plus = std::abs(chi_element_hypergeometric(1, 1, beta, 1.0) - ref11);
    double worst_chi = 0.0;
    for (std::size_t n = 0; n < 16; ++n) {
        for (std::size_t k = 0; k < 16; ++k) {
            worst_chi = std::max(worst_chi, std::abs(chi_element(n, k, beta) - dm(n, k)));
        }
    }
    ok = ok && err_minus <= 1e-10 && err_plus > 1e-10 && worst_chi <= 1e-10;
    os << "chi11 z=-1/|b|^2 err " << sci(err_minus) << " (z=+1/|b|^2 err " << sci(err_plus)
       << "), max chi err " << sci(worst_chi) << "; ";

    const double w1 = wigner(number_state(1, 40), {0.0, 0.0});
    const double w1_err = std::abs(w1 + 2.0 / std::numbers::pi);
    ok = ok && w1_err <= 1e-8;
    os << "W_|1>(0) err " << sci(w1_err) << "; ";

    const FockVector state = nbs(NBSParams(0.5, 1));
    const std::vector<complex> coeffs(state.amplitudes().begin(), state.amplitudes().end());
    double worst_q = 0.0;
    double worst_w = 0.0;
    for (const PhaseSpacePoint p : {PhaseSpacePoint{0.0, 0.0}, PhaseSpacePoint{0.3, 0.2},
                                    PhaseSpacePoint{-1.1, 0.7}, PhaseSpacePoint{1.8, -1.4}}) {
        const double q = q_function(state, p);
        worst_q = std::max({worst_q, std::abs(s_distribution(state, p, -1.0) - q),
                            std::abs(q_function_nbs(NBSParams(0.5, 1), p) - q)});
        worst_w = std::max(worst_w, std::abs(s_distribution(state, p, 0.0) - oracle::wigner_dense(coeffs, p.beta())));
    }
    ok = ok && worst_q <= 1e-10 && worst_w <= 1e-10;
    os << "s=-1 vs Q " << sci(worst_q) << ", s=0 vs W oracle " << sci(worst_w) << "; ";

    const GridSpec spec{-6.0, 6.0, -6.0, 6.0, 121, 121};
    const double iq = grid_evaluate(state, spec, Quasiprobability::q()).integral;
    const double iw = grid_evaluate(state, spec, Quasiprobability::w()).integral;
    const double is = grid_evaluate(state, spec, Quasiprobability::s_param(-0.5)).integral;
    const double worst_norm = std::max({std::abs(iq - 1.0), std::abs(iw - 1.0), std::abs(is - 1.0)});
    ok = ok && worst_norm <= 1e-4;
    os << "grid integrals Q " << fixed(iq, 8) << ", W " << fixed(iw, 8) << ", s=-0.5 " << fixed(is, 8);
    return {ok, os.str()};
}

Outcome wigner_negativity()
{
    const GridSpec spec{-4.0, 4.0, -4.0, 4.0, 81, 81};
    std::ostringstream os;
    bool ok = true;
    double previous = 0.0;
    bool first = true;
    for (const double eta : {0.3, 0.5, 0.9, 1.0}) {
        const double w_min = grid_evaluate(nbs(NBSParams(eta, 1)), spec, Quasiprobability::w()).min();
        if (!first) {
            ok = ok && w_min <= previous;
        }
        os << (first ? "" : ", ") << "eta " << fixed(eta, 1) << " min W " << fixed(w_min, 6);
        previous = w_min;
        first = false;
    }
    return {ok, os.str()};
}

Outcome dynamics()
{
    double worst_single = 0.0;
    double worst_pair = 0.0;
    double worst_atom = 0.0;
    for (const double chi_t : {0.1, 0.5, 1.0, 1.5, 2.0}) {
        const double eta = eta_after(chi_t);
        for (std::size_t m = 0; m <= 3; ++m) {
            const FockVector evolved = evolve_intensity_dependent({chi_t, m, {}});
            worst_single = std::max(worst_single, 1.0 - common_fidelity(evolved, nbs(NBSParams(eta, m))));
        }
        const PairBasisVector pair = evolve_parametric(chi_t);
        worst_pair = std::max(worst_pair, 1.0 - fidelity(pair, two_mode_geometric(eta)));
    }
    for (const double eta : {0.3, 0.6, 0.9}) {
        for (std::size_t m = 1; m <= 4; ++m) {
            const TruncationPolicy tight{1e-14, 32768};
            const PairBasisVector start = two_mode_geometric(eta, tight);
            const AtomPassage out = atom_passage(start, 0.05, m);
            worst_atom = std::max(worst_atom, 1.0 - fidelity(out.ground_branch, two_mode_nbs(eta, m)));
        }
    }
    const double worst = std::max({worst_single, worst_pair, worst_atom});
    return {worst <= 1e-10, "max 1 - fidelity: intensity-dependent " + sci(worst_single) + ", parametric " +
                                sci(worst_pair) + ", atom passage " + sci(worst_atom) + " (tol 1e-10)"};
}

struct CheckDef {
    const char* name;
    Outcome (*fn)();
};

const CheckDef kChecks[kCheckCount] = {
    {"photon statistics closed forms", formula_consistency},
    {"sub-Poissonian threshold", mandel_threshold},
    {"SU(1,1) algebra and ladder relation", su11_algebra},
    {"three equivalent constructions", triple_construction},
    {"nonlinear coherent eigenrelation", nonlinear_coherent},
    {"quadrature squeezing criticals", squeezing_criticals_check},
    {"phase-space identities", phase_space},
    {"Wigner negativity trend", wigner_negativity},
    {"generation dynamics", dynamics},
};

}  // namespace

CheckResult run_check(int id)
{
    if (id < 1 || id > kCheckCount) {
        throw InvalidArgument("run_check: id must be in 1.." + std::to_string(kCheckCount) + ", got " +
                              std::to_string(id));
    }
    const CheckDef& def = kChecks[id - 1];
    CheckResult r;
    r.id = id;
    r.name = def.name;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        const Outcome o = def.fn();
        r.pass = o.pass;
        r.detail = o.detail;
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<CheckResult> run_checks(const std::vector<int>& ids)
{
    std::vector<CheckResult> out;
    if (ids.empty()) {
        for (int id = 1; id <= kCheckCount; ++id) {
            out.push_back(run_check(id));
        }
    } else {
        for (const int id : ids) {
            out.push_back(run_check(id));
        }
    }
    return out;
}

std::string format_check(const CheckResult& r)
{
    return std::string(r.pass ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + ": " +
           r.detail;
}

}  // namespace nbs
