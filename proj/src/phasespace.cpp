#include "nbs/phasespace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nbs/parallel.hpp"

namespace nbs {

namespace {

constexpr double kPi = std::numbers::pi;

// F^{(alpha)}_j = x^{alpha/2} e^{-x/2} sqrt(j!/(j+alpha)!) L_j^{(alpha)}(x) for
// j = 0..j_max, so that <j+alpha|D(beta)|j> = F^{(alpha)}_j e^{i alpha arg beta}.
// Three-term Laguerre recurrence on the normalized functions; the running
// values are kept relative to a log scale so that a vanishing F_0 does not
// flush later, larger entries to zero.
std::vector<double> displacement_diagonal(std::size_t alpha, double x, std::size_t j_max)
{
    std::vector<double> out(j_max + 1, 0.0);
    if (x == 0.0) {
        if (alpha == 0) {
            std::fill(out.begin(), out.end(), 1.0);
        }
        return out;
    }
    const double a = static_cast<double>(alpha);
    const double log_f0 = 0.5 * a * std::log(x) - 0.5 * x - 0.5 * std::lgamma(a + 1.0);
    constexpr double kBig = 1e250;
    const double log_big = std::log(kBig);

    double log_scale = 0.0;
    double factor = std::exp(log_f0);
    double g_prev = 0.0;
    double g = 1.0;
    out[0] = factor;
    for (std::size_t j = 0; j < j_max; ++j) {
        const double jj = static_cast<double>(j);
        const double g_next =
            ((2.0 * jj + 1.0 + a - x) * g - std::sqrt(jj * (jj + a)) * g_prev) /
            std::sqrt((jj + 1.0) * (jj + 1.0 + a));
        g_prev = g;
        g = g_next;
        if (std::abs(g) > kBig) {
            g /= kBig;
            g_prev /= kBig;
            log_scale += log_big;
            factor = std::exp(log_f0 + log_scale);
        }
        out[j + 1] = g * factor;
    }
    return out;
}

// Lazily filled table of displacement diagonals sharing one j range.
class DisplacementTable {
public:
    DisplacementTable(complex beta, std::size_t j_max)
        : x_(std::norm(beta)), j_max_(j_max),
          unit_(std::abs(beta) > 0.0 ? beta / std::abs(beta) : complex{1.0, 0.0})
    {
    }

    const std::vector<double>& diagonal(std::size_t alpha)
    {
        while (diags_.size() <= alpha) {
            diags_.push_back(displacement_diagonal(diags_.size(), x_, j_max_));
        }
        return diags_[alpha];
    }

    // e^{i alpha arg beta}
    complex phase(std::size_t alpha)
    {
        if (phases_.empty()) {
            phases_.push_back(1.0);
        }
        while (phases_.size() <= alpha) {
            phases_.push_back(phases_.back() * unit_);
        }
        return phases_[alpha];
    }

    // <n|D(beta)|k> for n, k with min(n, k) <= j_max.
    complex element(std::size_t n, std::size_t k)
    {
        if (n >= k) {
            return diagonal(n - k)[k] * phase(n - k);
        }
        const std::size_t alpha = k - n;
        const double sign = (alpha % 2 == 0) ? 1.0 : -1.0;
        return sign * diagonal(alpha)[n] * std::conj(phase(alpha));
    }

private:
    double x_;
    std::size_t j_max_;
    complex unit_;
    std::vector<std::vector<double>> diags_;
    std::vector<complex> phases_;
};

// Streams o_k = <beta,k|psi> = sum_n conj(<n|D(beta)|k>) c_n for k = 0, 1, ...
class OverlapStream {
public:
    OverlapStream(std::span<const complex> coeffs, complex beta)
        : c_(coeffs), n_hi_(coeffs.size() - 1), table_(beta, coeffs.size() - 1)
    {
    }

    complex next()
    {
        const std::size_t k = k_++;
        complex o{};
        // n = k + alpha >= k
        if (k <= n_hi_) {
            for (std::size_t alpha = 0; k + alpha <= n_hi_; ++alpha) {
                const complex& cn = c_[k + alpha];
                if (cn != complex{}) {
                    o += table_.diagonal(alpha)[k] * std::conj(table_.phase(alpha)) * cn;
                }
            }
        }
        // n = k - alpha < k
        const std::size_t alpha_lo = k > n_hi_ ? k - n_hi_ : 1;
        for (std::size_t alpha = std::max<std::size_t>(alpha_lo, 1); alpha <= k; ++alpha) {
            const complex& cn = c_[k - alpha];
            if (cn != complex{}) {
                const double sign = (alpha % 2 == 0) ? 1.0 : -1.0;
                o += sign * table_.diagonal(alpha)[k - alpha] * table_.phase(alpha) * cn;
            }
        }
        return o;
    }

private:
    std::span<const complex> c_;
    std::size_t n_hi_;
    std::size_t k_ = 0;
    DisplacementTable table_;
};

// Drops the top amplitudes whose combined weight is below 1e-26 of the norm.
std::span<const complex> effective_support(const FockVector& state)
{
    const auto amps = state.amplitudes();
    const double total = state.norm_squared();
    double suffix = 0.0;
    std::size_t hi = amps.size() - 1;
    while (hi > 0) {
        const double w = std::norm(amps[hi]);
        if (suffix + w > 1e-26 * total) {
            break;
        }
        suffix += w;
        --hi;
    }
    return amps.first(hi + 1);
}

double squared_norm(std::span<const complex> c)
{
    double s = 0.0;
    for (const auto& v : c) {
        s += std::norm(v);
    }
    return s;
}

}  // namespace

complex chi_element(std::size_t n, std::size_t k, complex beta)
{
    const double x = std::norm(beta);
    if (x == 0.0) {
        return n == k ? 1.0 : 0.0;
    }
    // sum_j (-1)^{k-j} sqrt(n! k!) / (j! (n-j)! (k-j)!) |beta|^{n+k-2j}, times
    // e^{-x/2} e^{i(n-k) arg beta}.
    const double nn = static_cast<double>(n);
    const double kk = static_cast<double>(k);
    const double log_x = std::log(x);
    const double base = 0.5 * (std::lgamma(nn + 1.0) + std::lgamma(kk + 1.0)) - 0.5 * x;
    double sum = 0.0;
    double largest = 0.0;
    for (std::size_t j = 0; j <= std::min(n, k); ++j) {
        const double jj = static_cast<double>(j);
        const double mag = std::exp(base - std::lgamma(jj + 1.0) - std::lgamma(nn - jj + 1.0) -
                                    std::lgamma(kk - jj + 1.0) + 0.5 * (nn + kk - 2.0 * jj) * log_x);
        largest = std::max(largest, mag);
        sum += ((k - j) % 2 == 0) ? mag : -mag;
    }
    if (largest > 1e4 * std::abs(sum)) {
        DisplacementTable table(beta, std::min(n, k));
        return table.element(n, k);
    }
    return sum * std::polar(1.0, (nn - kk) * std::arg(beta));
}

complex chi_element_hypergeometric(std::size_t n, std::size_t k, complex beta, double z_sign)
{
    const double x = std::norm(beta);
    if (x == 0.0) {
        throw InvalidArgument("chi_element_hypergeometric: beta = 0 is outside the literal form");
    }
    const double z = z_sign / x;
    double term = 1.0;
    double f = 1.0;
    for (std::size_t j = 0; j < std::min(n, k); ++j) {
        const double jj = static_cast<double>(j);
        term *= (jj - static_cast<double>(n)) * (jj - static_cast<double>(k)) / (jj + 1.0) * z;
        f += term;
    }
    const double norm = std::exp(-0.5 * x - 0.5 * (std::lgamma(static_cast<double>(n) + 1.0) +
                                                   std::lgamma(static_cast<double>(k) + 1.0)));
    return std::pow(beta, static_cast<int>(n)) * std::pow(-std::conj(beta), static_cast<int>(k)) *
           norm * f;
}

FockVector displaced_number_state(complex beta, std::size_t k, std::size_t n_max, double leak_tol)
{
    if (k > n_max) {
        throw InvalidArgument("displaced_number_state: k exceeds n_max");
    }
    DisplacementTable table(beta, k);
    std::vector<complex> amps(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) {
        amps[n] = table.element(n, k);
    }
    FockVector v(std::move(amps), 0.0);
    const double leaked = std::max(0.0, 1.0 - v.norm_squared());
    if (leaked > leak_tol) {
        throw TruncationError("displaced_number_state: n_max = " + std::to_string(n_max) +
                                  " leaves mass " + std::to_string(leaked),
                              leaked);
    }
    return v.with_tail_bound(leaked);
}

FockVector displaced_number_state(complex beta, std::size_t k, const TruncationPolicy& policy)
{
    policy.validate();
    std::size_t n_max = std::min(k + 32, std::max(policy.n_hard_cap, k));
    for (;;) {
        try {
            return displaced_number_state(beta, k, n_max, policy.tail_eps);
        } catch (const TruncationError&) {
            if (n_max >= policy.n_hard_cap) {
                throw;
            }
        }
        n_max = std::min(2 * n_max, policy.n_hard_cap);
    }
}

FockVector coherent_state(complex beta, std::size_t n_max)
{
    std::vector<complex> amps(n_max + 1);
    complex t = std::exp(-0.5 * std::norm(beta));
    for (std::size_t n = 0; n <= n_max; ++n) {
        amps[n] = t;
        t *= beta / std::sqrt(static_cast<double>(n + 1));
    }
    FockVector v(std::move(amps), 0.0);
    return v.with_tail_bound(std::max(0.0, 1.0 - v.norm_squared()));
}

std::vector<complex> displaced_overlaps(const FockVector& state, complex beta, std::size_t count)
{
    OverlapStream stream(state.amplitudes(), beta);
    std::vector<complex> out(count);
    for (auto& o : out) {
        o = stream.next();
    }
    return out;
}

namespace {

complex vacuum_overlap(std::span<const complex> c, complex beta)
{
    // <beta|psi> = e^{-|beta|^2/2} sum_n (beta*)^n / sqrt(n!) c_n
    const complex bc = std::conj(beta);
    complex t = std::exp(-0.5 * std::norm(beta));
    complex s{};
    for (std::size_t n = 0; n < c.size(); ++n) {
        s += t * c[n];
        t *= bc / std::sqrt(static_cast<double>(n + 1));
    }
    return s;
}

}  // namespace

double q_function(const FockVector& state, PhaseSpacePoint p)
{
    return std::norm(vacuum_overlap(state.amplitudes(), p.beta())) / kPi;
}

double q_function_nbs(const NBSParams& params, PhaseSpacePoint p)
{
    const complex beta = p.beta();
    const double x = std::norm(beta);
    const std::size_t m = params.m();
    const double mm = static_cast<double>(m);
    if (m > 0 && x == 0.0) {
        return 0.0;
    }
    const double log_pref = (mm + 1.0) * std::log(params.eta()) - x + (m > 0 ? mm * std::log(x) : 0.0) -
                            std::lgamma(mm + 1.0);

    const complex step = beta * std::sqrt(1.0 - params.eta());
    const double peak = std::norm(step);
    complex t = 1.0;
    complex s{};
    for (std::size_t n = 0; n < 100000; ++n) {
        s += t;
        t *= step / std::sqrt(static_cast<double>(n + 1));
        if (static_cast<double>(n) > peak && std::abs(t) <= 1e-17 * std::abs(s)) {
            break;
        }
    }
    return std::exp(log_pref) * std::norm(s) / kPi;
}

SeriesValue s_distribution_series(const FockVector& state, PhaseSpacePoint p, double s,
                                  std::size_t k_cap)
{
    if (!(s >= -1.0 && s <= 0.0)) {
        throw InvalidArgument("s_distribution: s must lie in [-1, 0], got " + std::to_string(s));
    }
    if (k_cap == 0) {
        k_cap = kDefaultKCap;
    }
    const auto coeffs = effective_support(state);
    const double total = squared_norm(coeffs);
    OverlapStream stream(coeffs, p.beta());

    const double ratio = (1.0 + s) / (1.0 - s);
    double weight = 2.0 / (kPi * (1.0 - s));  // |w_k|
    double partial = 0.0;
    double value = 0.0;
    double bound = total;
    for (std::size_t k = 0; k <= k_cap; ++k) {
        const double mass = std::norm(stream.next());
        partial += mass;
        value += ((k % 2 == 0) ? weight : -weight) * mass;
        weight *= ratio;
        // |w_j| decreases in j and sum_{j > k} |o_j|^2 = total - partial.
        bound = weight * std::max(0.0, total - partial);
        if (bound < kSeriesTolerance) {
            return {value, k, bound};
        }
    }
    throw ConvergenceError("s_distribution: series did not reach " + std::to_string(kSeriesTolerance) +
                               " within k_cap = " + std::to_string(k_cap) + " (bound " +
                               std::to_string(bound) + ")",
                           bound);
}

double s_distribution(const FockVector& state, PhaseSpacePoint p, double s, std::size_t k_cap)
{
    return s_distribution_series(state, p, s, k_cap).value;
}

double wigner(const FockVector& state, PhaseSpacePoint p, std::size_t k_cap)
{
    return s_distribution_series(state, p, 0.0, k_cap).value;
}

void GridSpec::validate() const
{
    if (nx < 2 || ny < 2) {
        throw InvalidArgument("grid needs nx, ny >= 2");
    }
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !std::isfinite(y_min) ||
        !std::isfinite(y_max) || x_min > x_max || y_min > y_max) {
        throw InvalidArgument("grid bounds must be finite with min <= max");
    }
}

double PhaseSpaceGrid::min() const { return *std::min_element(values.begin(), values.end()); }
double PhaseSpaceGrid::max() const { return *std::max_element(values.begin(), values.end()); }

PhaseSpaceGrid grid_evaluate(const FockVector& state, const GridSpec& spec, Quasiprobability kind)
{
    spec.validate();
    const FockVector trimmed = [&] {
        const auto c = effective_support(state);
        return FockVector({c.begin(), c.end()}, state.tail_bound());
    }();

    PhaseSpaceGrid grid{spec, std::vector<double>(spec.nx * spec.ny, 0.0), 0.0};
    detail::parallel_for(spec.ny, [&](std::size_t iy) {
        for (std::size_t ix = 0; ix < spec.nx; ++ix) {
            const PhaseSpacePoint p{spec.x(ix), spec.y(iy)};
            double v = 0.0;
            switch (kind.kind) {
            case QuasiKind::husimi_q:
                v = q_function(trimmed, p);
                break;
            case QuasiKind::wigner:
                v = wigner(trimmed, p);
                break;
            case QuasiKind::s_parametrized:
                v = s_distribution(trimmed, p, kind.s);
                break;
            }
            grid.values[iy * spec.nx + ix] = v;
        }
    });
    double sum = 0.0;
    for (double v : grid.values) {
        sum += v;
    }
    grid.integral = sum * spec.dx() * spec.dy();
    return grid;
}

}  // namespace nbs
