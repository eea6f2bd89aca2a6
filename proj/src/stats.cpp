#include "nbs/stats.hpp"

#include <cmath>

#include "nbs/states.hpp"

namespace nbs {

double generating_function(double lambda, double eta, std::size_t m)
{
    const NBSParams params(eta, m);
    const double base = eta + (1.0 - lambda) * (1.0 - eta);
    if (!(base > 0.0)) {
        throw InvalidArgument("generating_function: lambda (1 - eta) must be below 1, got lambda = " +
                              std::to_string(lambda));
    }
    return std::pow(lambda, static_cast<double>(m)) *
           std::pow(params.eta() / base, static_cast<double>(m) + 1.0);
}

FactorialMoments factorial_moments(double eta, std::size_t m)
{
    const NBSParams params(eta, m);
    const double mp1 = static_cast<double>(m) + 1.0;
    return {
        mp1 / eta - 1.0,
        (mp1 + 1.0) * mp1 / (eta * eta) - 4.0 * mp1 / eta + 2.0,
    };
}

MandelQ mandel_q(double eta, std::size_t m)
{
    const NBSParams params(eta, m);
    if (m == 0 && eta == 1.0) {
        return {0.0, true};
    }
    const double mp1 = static_cast<double>(m) + 1.0;
    return {(eta * eta - 2.0 * mp1 * eta + mp1) / (eta * (mp1 - eta)), false};
}

NumericMoments photon_moments(const FockVector& state)
{
    const std::vector<double> p = state.probabilities();
    double total = 0.0;
    double first = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) {
        total += p[n];
        first += static_cast<double>(n) * p[n];
    }
    if (total == 0.0) {
        throw NumericalError("photon_moments: zero vector");
    }
    const double mean = first / total;
    double var = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n) {
        const double d = static_cast<double>(n) - mean;
        var += d * d * p[n];
    }
    var /= total;
    return {mean, var, var + mean * mean - mean};
}

double mandel_q_numeric(const FockVector& state)
{
    const NumericMoments mom = photon_moments(state);
    if (!(mom.mean > 0.0)) {
        throw NumericalError("mandel_q_numeric: <N> = 0, Q is undefined");
    }
    return (mom.variance - mom.mean) / mom.mean;
}

double eta_threshold(std::size_t m)
{
    const double mp1 = static_cast<double>(m) + 1.0;
    return mp1 / (mp1 + std::sqrt(static_cast<double>(m) * mp1));
}

StatsReport stats_report(const NBSParams& params, const std::vector<double>& lambdas,
                         const TruncationPolicy& policy)
{
    StatsReport r;
    r.eta = params.eta();
    r.m = params.m();
    for (double lambda : lambdas) {
        r.g_values.emplace_back(lambda, generating_function(lambda, r.eta, r.m));
    }
    const FactorialMoments f = factorial_moments(r.eta, r.m);
    r.f1 = f.f1;
    r.f2 = f.f2;
    const MandelQ q = mandel_q(r.eta, r.m);
    r.mandel_q_closed = q.value;
    r.mandel_q_degenerate = q.degenerate;
    r.eta_minus = eta_threshold(r.m);
    r.sub_poissonian = !q.degenerate && q.value < 0.0;

    const FockVector state = nbs(params, policy);
    r.n_max = state.n_max();
    r.tail_mass = state.tail_bound();
    r.mandel_q_numeric = q.degenerate ? 0.0 : mandel_q_numeric(state);
    return r;
}

}  // namespace nbs
