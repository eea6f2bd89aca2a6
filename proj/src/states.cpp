#include "nbs/states.hpp"

#include <algorithm>
#include <cmath>

namespace nbs {

PairBasisVector::PairBasisVector(std::vector<complex> amplitudes, std::size_t offset_m,
                                 double tail_bound)
    : amps_(std::move(amplitudes)), offset_m_(offset_m), tail_bound_(tail_bound)
{
    if (amps_.empty()) {
        throw InvalidArgument("PairBasisVector needs at least one amplitude");
    }
    if (!(tail_bound_ >= 0.0)) {
        throw InvalidArgument("PairBasisVector tail_bound must be nonnegative");
    }
}

double PairBasisVector::norm_squared() const noexcept
{
    double s = 0.0;
    for (const auto& c : amps_) {
        s += std::norm(c);
    }
    return s;
}

PairBasisVector PairBasisVector::normalized() const
{
    const double n2 = norm_squared();
    if (n2 == 0.0) {
        throw NumericalError("cannot normalize the zero vector");
    }
    const double s = 1.0 / std::sqrt(n2);
    std::vector<complex> out(amps_);
    for (auto& c : out) {
        c *= s;
    }
    return PairBasisVector(std::move(out), offset_m_, tail_bound_ / n2);
}

std::vector<double> PairBasisVector::signal_distribution() const
{
    std::vector<double> p(offset_m_ + amps_.size(), 0.0);
    for (std::size_t n = 0; n < amps_.size(); ++n) {
        p[offset_m_ + n] = std::norm(amps_[n]);
    }
    return p;
}

std::vector<double> PairBasisVector::pair_distribution() const
{
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(),
                   [](const complex& c) { return std::norm(c); });
    return p;
}

std::vector<double> nbs_coefficients(const NBSParams& params, std::size_t n_max)
{
    const std::size_t m = params.m();
    const double eta = params.eta();
    std::vector<double> c(n_max + 1, 0.0);
    if (n_max < m) {
        return c;
    }
    const double root_q = std::sqrt(1.0 - eta);

    // The distribution increases while (n+1) eta <= M, so floor(M/eta) is
    // within one step of the mode.  Anchoring there keeps the recursion away
    // from underflow when eta^{(M+1)/2} is tiny.
    const double mode = std::floor(static_cast<double>(m) / eta);
    const std::size_t anchor = std::clamp(static_cast<std::size_t>(std::min(mode, 1e15)), m, n_max);
    c[anchor] = std::exp(0.5 * log_nbs_probability(params, anchor));

    for (std::size_t n = anchor; n < n_max; ++n) {
        c[n + 1] = c[n] * std::sqrt(static_cast<double>(n + 1) / static_cast<double>(n + 1 - m)) *
                   root_q;
    }
    for (std::size_t n = anchor; n > m; --n) {
        // anchor > m implies eta < 1, so root_q > 0.
        c[n - 1] = c[n] / (std::sqrt(static_cast<double>(n) / static_cast<double>(n - m)) * root_q);
    }
    return c;
}

namespace {

std::vector<complex> to_complex(const std::vector<double>& v)
{
    return {v.begin(), v.end()};
}

}  // namespace

FockVector nbs_on(const NBSParams& params, std::size_t n_max)
{
    return FockVector(to_complex(nbs_coefficients(params, n_max)), tail_mass_nbs(params, n_max));
}

FockVector nbs(const NBSParams& params, const TruncationPolicy& policy)
{
    return nbs_on(params, choose_n_max(params, policy));
}

FockVector geometric_state_on(double eta, std::size_t n_max)
{
    const NBSParams params(eta, 0);
    std::vector<complex> out(n_max + 1);
    const double root_q = std::sqrt(1.0 - eta);
    double c = std::sqrt(eta);
    for (std::size_t n = 0; n <= n_max; ++n) {
        out[n] = c;
        c *= root_q;
    }
    return FockVector(std::move(out), tail_mass_nbs(params, n_max));
}

FockVector geometric_state(double eta, const TruncationPolicy& policy)
{
    return geometric_state_on(eta, choose_n_max(NBSParams(eta, 0), policy));
}

namespace {

FockVector raised_geometric(double eta, std::size_t m, const TruncationPolicy& policy)
{
    const std::size_t n_max = choose_n_max(NBSParams(eta, m), policy);
    FockVector v = geometric_state_on(eta, n_max);
    for (std::size_t i = 0; i < m; ++i) {
        v = apply_creation(v);
    }
    return v;
}

}  // namespace

FockVector excited_geometric(double eta, std::size_t m, const TruncationPolicy& policy)
{
    return raised_geometric(eta, m, policy).normalized();
}

double excited_geometric_norm(double eta, std::size_t m, const TruncationPolicy& policy)
{
    return raised_geometric(eta, m, policy).norm();
}

FockVector number_state(std::size_t m, std::size_t n_max)
{
    if (m > n_max) {
        throw InvalidArgument("number_state: m = " + std::to_string(m) + " exceeds n_max = " +
                              std::to_string(n_max));
    }
    std::vector<complex> out(n_max + 1);
    out[m] = 1.0;
    return FockVector(std::move(out), 0.0);
}

std::size_t choose_pair_n_max(const NBSParams& params, const TruncationPolicy& policy)
{
    return choose_n_max(params, policy) - params.m();
}

PairBasisVector two_mode_nbs(double eta, std::size_t m, const TruncationPolicy& policy)
{
    const NBSParams params(eta, m);
    const std::size_t n_max = choose_n_max(params, policy);
    const std::vector<double> c = nbs_coefficients(params, n_max);
    std::vector<complex> pair(c.begin() + static_cast<std::ptrdiff_t>(m), c.end());
    return PairBasisVector(std::move(pair), m, tail_mass_nbs(params, n_max));
}

PairBasisVector two_mode_geometric(double eta, const TruncationPolicy& policy)
{
    const FockVector g = geometric_state(eta, policy);
    return PairBasisVector({g.amplitudes().begin(), g.amplitudes().end()}, 0, g.tail_bound());
}

}  // namespace nbs
