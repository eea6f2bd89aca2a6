#include "nbs/fock.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace nbs {

NBSParams::NBSParams(double eta, std::size_t m) : eta_(eta), m_(m)
{
    if (!(eta > 0.0 && eta <= 1.0)) {
        throw InvalidArgument("eta must lie in (0, 1], got " + std::to_string(eta));
    }
}

FockVector::FockVector(std::size_t n_max) : amps_(n_max + 1) {}

FockVector::FockVector(std::vector<complex> amplitudes, double tail_bound)
    : amps_(std::move(amplitudes)), tail_bound_(tail_bound)
{
    if (amps_.empty()) {
        throw InvalidArgument("FockVector needs at least one amplitude");
    }
    if (!(tail_bound_ >= 0.0)) {
        throw InvalidArgument("FockVector tail_bound must be nonnegative");
    }
}

double FockVector::norm_squared() const noexcept
{
    double s = 0.0;
    for (const auto& c : amps_) {
        s += std::norm(c);
    }
    return s;
}

std::vector<double> FockVector::probabilities() const
{
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(),
                   [](const complex& c) { return std::norm(c); });
    return p;
}

FockVector FockVector::normalized() const
{
    const double n2 = norm_squared();
    if (n2 == 0.0) {
        throw NumericalError("cannot normalize the zero vector");
    }
    FockVector out = scaled(1.0 / std::sqrt(n2));
    out.tail_bound_ = tail_bound_ / n2;
    return out;
}

FockVector FockVector::scaled(complex factor) const
{
    std::vector<complex> out(amps_);
    for (auto& c : out) {
        c *= factor;
    }
    return FockVector(std::move(out), tail_bound_ * std::norm(factor));
}

FockVector FockVector::with_tail_bound(double tail_bound) const
{
    return FockVector(amps_, tail_bound);
}

FockVector FockVector::resized(std::size_t n_max) const
{
    std::vector<complex> out(n_max + 1);
    double dropped = 0.0;
    for (std::size_t n = 0; n < amps_.size(); ++n) {
        if (n <= n_max) {
            out[n] = amps_[n];
        } else {
            dropped += std::norm(amps_[n]);
        }
    }
    return FockVector(std::move(out), tail_bound_ + dropped);
}

std::size_t FockVector::support_begin() const noexcept
{
    for (std::size_t n = 0; n < amps_.size(); ++n) {
        if (amps_[n] != complex{}) {
            return n;
        }
    }
    return 1;
}

std::size_t FockVector::support_end() const noexcept
{
    for (std::size_t n = amps_.size(); n-- > 0;) {
        if (amps_[n] != complex{}) {
            return n;
        }
    }
    return 0;
}

namespace {

void require_same_dimension(const FockVector& a, const FockVector& b, const char* what)
{
    if (a.n_max() != b.n_max()) {
        throw InvalidArgument(std::string(what) + ": dimension mismatch (n_max " +
                              std::to_string(a.n_max()) + " vs " +
                              std::to_string(b.n_max()) + ")");
    }
}

}  // namespace

FockVector operator+(const FockVector& a, const FockVector& b)
{
    require_same_dimension(a, b, "operator+");
    std::vector<complex> out(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        out[n] = a[n] + b[n];
    }
    return FockVector(std::move(out), a.tail_bound() + b.tail_bound());
}

FockVector operator-(const FockVector& a, const FockVector& b)
{
    require_same_dimension(a, b, "operator-");
    std::vector<complex> out(a.size());
    for (std::size_t n = 0; n < a.size(); ++n) {
        out[n] = a[n] - b[n];
    }
    return FockVector(std::move(out), a.tail_bound() + b.tail_bound());
}

FockVector operator*(complex factor, const FockVector& v) { return v.scaled(factor); }

void TruncationPolicy::validate() const
{
    if (!(tail_eps > 0.0 && tail_eps < 1.0)) {
        throw InvalidArgument("tail_eps must lie in (0, 1), got " + std::to_string(tail_eps));
    }
    if (n_hard_cap < 1) {
        throw InvalidArgument("n_hard_cap must be at least 1");
    }
}

complex inner_product(const FockVector& a, const FockVector& b)
{
    require_same_dimension(a, b, "inner_product");
    complex s{};
    for (std::size_t n = 0; n < a.size(); ++n) {
        s += std::conj(a[n]) * b[n];
    }
    return s;
}

double distance(const FockVector& a, const FockVector& b)
{
    require_same_dimension(a, b, "distance");
    double s = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
        s += std::norm(a[n] - b[n]);
    }
    return std::sqrt(s);
}

FockVector apply_annihilation(const FockVector& v)
{
    const std::size_t n_max = v.n_max();
    std::vector<complex> out(v.size());
    for (std::size_t n = 0; n < n_max; ++n) {
        out[n] = std::sqrt(static_cast<double>(n + 1)) * v[n + 1];
    }
    // (a v)_{n_max} needs the unknown v_{n_max+1}.
    const double lost = std::norm(v[n_max]) * static_cast<double>(n_max + 1);
    return FockVector(std::move(out), v.tail_bound() + lost);
}

FockVector apply_creation(const FockVector& v)
{
    const std::size_t n_max = v.n_max();
    std::vector<complex> out(v.size());
    for (std::size_t n = 1; n <= n_max; ++n) {
        out[n] = std::sqrt(static_cast<double>(n)) * v[n - 1];
    }
    const double dropped = std::norm(v[n_max]) * static_cast<double>(n_max + 1);
    return FockVector(std::move(out), v.tail_bound() + dropped);
}

double log_nbs_probability(const NBSParams& params, std::size_t n)
{
    const std::size_t m = params.m();
    if (n < m) {
        return -std::numeric_limits<double>::infinity();
    }
    const auto eta = static_cast<long double>(params.eta());
    const auto k = static_cast<long double>(n - m);
    long double lp = std::lgamma(static_cast<long double>(n) + 1.0L) -
                     std::lgamma(static_cast<long double>(m) + 1.0L) - std::lgamma(k + 1.0L) +
                     (static_cast<long double>(m) + 1.0L) * std::log(eta);
    if (n > m) {
        lp += k * std::log1p(-eta);
    }
    return static_cast<double>(lp);
}

double tail_mass_nbs(const NBSParams& params, std::size_t n_max)
{
    const std::size_t m = params.m();
    if (n_max < m) {
        return 1.0;
    }
    const double eta = params.eta();
    if (eta == 1.0) {
        return 0.0;
    }
    const double q = 1.0 - eta;

    // Forward sum of P(n), n > n_max, driven by the ratio
    // P(n+1)/P(n) = (n+1)/(n+1-M) * (1-eta).  Values are carried relative
    // to exp(log_scale) so that neither a tiny P(n_max+1) nor the growth up
    // to the mode over/underflows.
    std::size_t n = n_max + 1;
    double log_scale = log_nbs_probability(params, n);
    double term = 1.0;
    double sum = 0.0;
    constexpr double kRescale = 1e200;
    constexpr std::size_t kMaxTerms = 50'000'000;
    for (std::size_t iter = 0; iter < kMaxTerms; ++iter, ++n) {
        sum += term;
        const double r = static_cast<double>(n + 1) / static_cast<double>(n + 1 - m) * q;
        if (r < 1.0) {
            // r(n) decreases in n, so the rest is dominated by a geometric series.
            const double rest = term * r / (1.0 - r);
            if (rest <= 1e-17 * sum) {
                sum += rest;
                break;
            }
        }
        term *= r;
        if (term > kRescale) {
            term /= kRescale;
            sum /= kRescale;
            log_scale += std::log(kRescale);
        }
    }
    return std::min(1.0, sum * std::exp(log_scale));
}

std::size_t choose_n_max(const NBSParams& params, const TruncationPolicy& policy)
{
    policy.validate();
    std::size_t n_max = std::min(params.m() + 32, policy.n_hard_cap);
    for (;;) {
        const double tail = tail_mass_nbs(params, n_max);
        if (tail < policy.tail_eps) {
            return n_max;
        }
        if (n_max >= policy.n_hard_cap) {
            throw TruncationError("n_hard_cap = " + std::to_string(policy.n_hard_cap) +
                                      " leaves tail mass " + std::to_string(tail) +
                                      " above tail_eps = " + std::to_string(policy.tail_eps) +
                                      " for eta = " + std::to_string(params.eta()) +
                                      ", M = " + std::to_string(params.m()),
                                  tail);
        }
        n_max = std::min(2 * n_max, policy.n_hard_cap);
    }
}

}  // namespace nbs
