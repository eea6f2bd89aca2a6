#include "nbs/su11.hpp"

#include <algorithm>
#include <cmath>

#include "nbs/states.hpp"

namespace nbs {

namespace {

void require_support_from(const FockVector& v, std::size_t m, const char* what)
{
    const std::size_t limit = std::min(m, v.size());
    for (std::size_t n = 0; n < limit; ++n) {
        if (v[n] != complex{}) {
            throw InvalidArgument(std::string(what) + ": vector has support at n = " +
                                  std::to_string(n) + " below M = " + std::to_string(m));
        }
    }
}

double shifted_root(std::size_t n, std::size_t m)
{
    return std::sqrt(static_cast<double>(n) - static_cast<double>(m));
}

// 1 - tanh^2(xi), evaluated without cancellation.
double sech_squared(double xi)
{
    const double c = std::cosh(xi);
    return 1.0 / (c * c);
}

}  // namespace

FockVector k_plus(const FockVector& v, std::size_t m)
{
    require_support_from(v, m, "k_plus");
    return apply_diag(apply_creation(v), [m](std::size_t n) { return shifted_root(n, m); });
}

FockVector k_minus(const FockVector& v, std::size_t m)
{
    require_support_from(v, m, "k_minus");
    return apply_annihilation(apply_diag(v, [m](std::size_t n) { return shifted_root(n, m); }));
}

FockVector k_zero(const FockVector& v, std::size_t m)
{
    require_support_from(v, m, "k_zero");
    const double shift = (static_cast<double>(m) - 1.0) / 2.0;
    return apply_diag(v, [shift](std::size_t n) { return static_cast<double>(n) - shift; });
}

Tridiagonal su11_generator(double xi, std::size_t m, std::size_t n_max)
{
    if (n_max < m) {
        throw InvalidArgument("su11_generator: n_max below M");
    }
    const std::size_t d = n_max - m + 1;
    std::vector<double> lower(d - 1);
    std::vector<double> upper(d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        // <m+i+1| K+ |m+i> = sqrt((i+1)(m+i+1)) = <m+i| K- |m+i+1>
        const double e = xi * std::sqrt(static_cast<double>(i + 1) * static_cast<double>(m + i + 1));
        lower[i] = e;
        upper[i] = -e;
    }
    return Tridiagonal(std::vector<double>(d, 0.0), std::move(lower), std::move(upper));
}

double ladder_residual(double eta, std::size_t m, const TruncationPolicy& policy)
{
    const FockVector v = nbs(NBSParams(eta, m), policy);
    const FockVector n_v = apply_diag(v, [](std::size_t n) { return static_cast<double>(n); });
    const FockVector raised =
        apply_diag(apply_creation(v), [m](std::size_t n) { return shifted_root(n, m); });
    const FockVector r = n_v - raised.scaled(std::sqrt(1.0 - eta)) - v.scaled(static_cast<double>(m));
    return r.norm();
}

double ladder_residual_generators(double eta, std::size_t m, const TruncationPolicy& policy)
{
    const FockVector v = nbs(NBSParams(eta, m), policy);
    const FockVector r = k_zero(v, m) - k_plus(v, m).scaled(std::sqrt(1.0 - eta)) -
                         v.scaled(bargmann_index(m));
    return r.norm();
}

FockVector su11_displace_on(double xi, std::size_t m, std::size_t n_max)
{
    if (!(xi >= 0.0) || !std::isfinite(xi)) {
        throw InvalidArgument("su11_displace: xi must be finite and nonnegative");
    }
    const Tridiagonal gen = su11_generator(xi, m, n_max);
    std::vector<double> start(gen.dim(), 0.0);
    start[0] = 1.0;
    const std::vector<double> w = expm_action<double>(gen, start);

    std::vector<complex> amps(n_max + 1);
    std::copy(w.begin(), w.end(), amps.begin() + static_cast<std::ptrdiff_t>(m));
    const double eta = sech_squared(xi);
    const double tail = eta > 0.0 ? tail_mass_nbs(NBSParams(eta, m), n_max) : 1.0;
    return FockVector(std::move(amps), tail);
}

FockVector su11_displace(double xi, std::size_t m, const TruncationPolicy& policy)
{
    if (!(xi >= 0.0) || !std::isfinite(xi)) {
        throw InvalidArgument("su11_displace: xi must be finite and nonnegative");
    }
    const double eta = sech_squared(xi);
    if (!(eta > 0.0)) {
        throw TruncationError("su11_displace: xi = " + std::to_string(xi) +
                                  " is beyond any representable truncation",
                              1.0);
    }
    const std::size_t n_max = choose_n_max(NBSParams(eta, m), policy);
    FockVector out = su11_displace_on(xi, m, n_max);

    const std::size_t d = n_max - m + 1;
    const std::size_t edge = n_max - d / 8;
    double boundary = 0.0;
    for (std::size_t n = edge + 1; n <= n_max; ++n) {
        boundary += std::norm(out[n]);
    }
    const double limit = std::max(1e-8, 1e4 * policy.tail_eps);
    if (d >= 8 && boundary > limit) {
        throw TruncationError("su11_displace: mass " + std::to_string(boundary) +
                                  " leaked to the top of the basis for xi = " + std::to_string(xi),
                              boundary);
    }
    return out;
}

FockVector exp_raising_series(double gamma, std::size_t m, std::size_t n_max)
{
    if (n_max < m) {
        throw InvalidArgument("exp_raising_series: n_max below M");
    }
    // gamma^j K+^j |m> / j! = gamma^j sqrt(C(m+j, m)) |m+j>
    std::vector<complex> amps(n_max + 1);
    double t = 1.0;
    amps[m] = t;
    for (std::size_t j = 1; m + j <= n_max; ++j) {
        t *= gamma * std::sqrt(static_cast<double>(m + j) / static_cast<double>(j));
        amps[m + j] = t;
    }
    double tail = 0.0;
    if (std::abs(gamma) < 1.0) {
        const double eta = 1.0 - gamma * gamma;
        tail = tail_mass_nbs(NBSParams(eta, m), n_max) * std::pow(eta, -(static_cast<double>(m) + 1.0));
    }
    return FockVector(std::move(amps), tail);
}

namespace {

// exp(c G) w for a strictly raising or strictly lowering G: the series ends
// once repeated application leaves the truncated basis.
template <typename G>
FockVector exp_nilpotent(const FockVector& w, double c, G&& op)
{
    FockVector sum = w;
    FockVector term = w;
    for (std::size_t j = 1; j <= w.size(); ++j) {
        term = op(term).scaled(c / static_cast<double>(j));
        if (term.norm_squared() == 0.0) {
            break;
        }
        sum = sum + term.with_tail_bound(0.0);
    }
    return sum;
}

}  // namespace

double disentangle_check(double alpha, std::size_t m)
{
    if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
        throw InvalidArgument("disentangle_check: alpha must be finite and nonnegative");
    }
    const double eta = sech_squared(alpha);
    const TruncationPolicy tight{1e-26, 1 << 15};
    const std::size_t n_max = choose_n_max(NBSParams(eta, m), tight);

    const FockVector lhs = su11_displace_on(alpha, m, n_max);

    const double gamma = std::tanh(alpha);
    const FockVector ground = number_state(m, n_max);
    const FockVector lowered = exp_nilpotent(ground, -gamma, [m](const FockVector& v) { return k_minus(v, m); });
    const double shift = (static_cast<double>(m) - 1.0) / 2.0;
    const double base = 1.0 - gamma * gamma;
    const FockVector scaled = apply_diag(lowered, [base, shift](std::size_t n) {
        return std::pow(base, static_cast<double>(n) - shift);
    });
    const FockVector rhs = exp_nilpotent(scaled, gamma, [m](const FockVector& v) { return k_plus(v, m); });
    return distance(lhs, rhs);
}

double nonlinear_eigen_residual(double eta, std::size_t m, const TruncationPolicy& policy)
{
    const FockVector v = nbs(NBSParams(eta, m), policy);
    const FockVector fav = apply_diag(apply_annihilation(v), [m](std::size_t n) {
        return std::sqrt(static_cast<double>(n + 1) - static_cast<double>(m)) /
               static_cast<double>(n + 1);
    });
    const double root_q = std::sqrt(1.0 - eta);
    double s = 0.0;
    for (std::size_t n = 0; n < v.n_max(); ++n) {
        s += std::norm(fav[n] - root_q * v[n]);
    }
    return std::sqrt(s);
}

}  // namespace nbs
