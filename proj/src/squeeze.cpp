#include "nbs/squeeze.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "nbs/parallel.hpp"
#include "nbs/states.hpp"

namespace nbs {

FieldMoments field_moments(const FockVector& state)
{
    FieldMoments out{};
    const std::size_t d = state.size();
    for (std::size_t n = 0; n + 1 < d; ++n) {
        out.mean_a += std::sqrt(static_cast<double>(n + 1)) * std::conj(state[n]) * state[n + 1];
    }
    for (std::size_t n = 0; n + 2 < d; ++n) {
        out.mean_a2 += std::sqrt(static_cast<double>(n + 1) * static_cast<double>(n + 2)) *
                       std::conj(state[n]) * state[n + 2];
    }
    return out;
}

namespace {

double log_choose(double n, double k)
{
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

}  // namespace

RealFieldMoments field_moments_closed(double eta, std::size_t m, const TruncationPolicy& policy)
{
    const NBSParams params(eta, m);
    const std::size_t n_max = choose_n_max(params, policy);
    if (eta == 1.0) {
        return {0.0, 0.0};
    }
    const double mm = static_cast<double>(m);
    const double log_eta = (mm + 1.0) * std::log(eta);
    const double log_q = std::log1p(-eta);

    RealFieldMoments out{0.0, 0.0};
    for (std::size_t n = m; n <= n_max; ++n) {
        const double nn = static_cast<double>(n);
        const double lc = log_choose(nn, mm);
        out.mean_a += std::exp(log_eta + 0.5 * (log_choose(nn + 1.0, mm) + lc) +
                               (nn - mm + 0.5) * log_q + 0.5 * std::log(nn + 1.0));
        out.mean_a2 += std::exp(log_eta + 0.5 * (log_choose(nn + 2.0, mm) + lc) +
                                (nn + 1.0 - mm) * log_q +
                                0.5 * std::log((nn + 2.0) * (nn + 1.0)));
    }
    return out;
}

QuadratureVariances quadrature_variances(const FockVector& state)
{
    const FieldMoments fm = field_moments(state);
    if (std::abs(fm.mean_a.imag()) > 1e-10 || std::abs(fm.mean_a2.imag()) > 1e-10) {
        throw NumericalError("quadrature_variances: <a> or <a^2> has an imaginary part above 1e-10");
    }
    double mean_n = 0.0;
    for (std::size_t n = 0; n < state.size(); ++n) {
        mean_n += static_cast<double>(n) * std::norm(state[n]);
    }
    const double a = fm.mean_a.real();
    const double a2 = fm.mean_a2.real();
    return {
        kVacuumVariance + 0.5 * (mean_n + a2 - 2.0 * a * a),
        kVacuumVariance + 0.5 * (mean_n - a2),
    };
}

VarianceSample variance_sample(double eta, std::size_t m, const TruncationPolicy& policy)
{
    const FockVector state = nbs(NBSParams(eta, m), policy);
    const FieldMoments fm = field_moments(state);
    const QuadratureVariances qv = quadrature_variances(state);
    return {eta, m, fm.mean_a.real(), fm.mean_a2.real(), qv.var_x, qv.var_y};
}

std::vector<double> uniform_eta_grid(double lo, double hi, double step)
{
    if (!(step > 0.0) || !(lo <= hi)) {
        throw InvalidArgument("uniform_eta_grid: need lo <= hi and step > 0");
    }
    std::vector<double> grid;
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid.push_back(std::min(hi, lo + static_cast<double>(i) * step));
    }
    return grid;
}

namespace {

using Curve = std::function<double(double)>;

// Minimum of a locally unimodal curve on [a, b].
std::pair<double, double> golden_minimum(const Curve& f, double a, double b)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > 1e-9) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

// Root of f - 1/4 between a and b, where the signs differ.
double bisect_threshold(const Curve& f, double a, double b)
{
    const bool a_below = f(a) < kVacuumVariance;
    for (int i = 0; i < 60 && b - a > 1e-12; ++i) {
        const double mid = 0.5 * (a + b);
        if ((f(mid) < kVacuumVariance) == a_below) {
            a = mid;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

struct CurveSummary {
    double min_value;
    double eta_at_min;
    std::vector<SqueezingRegion> regions;
};

CurveSummary summarize(const std::vector<double>& grid, const std::vector<double>& values,
                       const Curve& f)
{
    CurveSummary out;
    const auto it = std::min_element(values.begin(), values.end());
    const auto i = static_cast<std::size_t>(it - values.begin());
    out.min_value = *it;
    out.eta_at_min = grid[i];
    if (grid.size() >= 2) {
        const double lo = grid[i == 0 ? 0 : i - 1];
        const double hi = grid[std::min(i + 1, grid.size() - 1)];
        const auto [x, fx] = golden_minimum(f, lo, hi);
        if (fx < out.min_value) {
            out.min_value = fx;
            out.eta_at_min = x;
        }
    }

    std::optional<double> open;
    if (values.front() < kVacuumVariance) {
        open = grid.front();
    }
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
        const bool below_j = values[j] < kVacuumVariance;
        const bool below_next = values[j + 1] < kVacuumVariance;
        if (below_j == below_next) {
            continue;
        }
        const double edge = bisect_threshold(f, grid[j], grid[j + 1]);
        if (below_next) {
            open = edge;
        } else {
            out.regions.push_back({open.value_or(grid[j]), edge});
            open.reset();
        }
    }
    if (open) {
        out.regions.push_back({*open, grid.back()});
    }
    // A dip that sits entirely between two grid points shows up only in the
    // refined minimum.
    if (out.regions.empty() && out.min_value < kVacuumVariance) {
        out.regions.push_back({out.eta_at_min, out.eta_at_min});
    }
    return out;
}

}  // namespace

SqueezingScan squeezing_scan(std::size_t m_lo, std::size_t m_hi, const std::vector<double>& eta_grid,
                             const TruncationPolicy& policy)
{
    if (m_lo > m_hi) {
        throw InvalidArgument("squeezing_scan: empty M range");
    }
    if (eta_grid.empty()) {
        throw InvalidArgument("squeezing_scan: empty eta grid");
    }
    for (std::size_t j = 0; j < eta_grid.size(); ++j) {
        if (!(eta_grid[j] > 0.0 && eta_grid[j] <= 1.0) || (j > 0 && !(eta_grid[j] > eta_grid[j - 1]))) {
            throw InvalidArgument("squeezing_scan: eta grid must be strictly increasing inside (0, 1]");
        }
    }
    policy.validate();

    const std::size_t n_m = m_hi - m_lo + 1;
    const std::size_t n_eta = eta_grid.size();
    SqueezingScan scan;
    scan.samples.resize(n_m * n_eta);
    detail::parallel_for(n_m * n_eta, [&](std::size_t idx) {
        const std::size_t m = m_lo + idx / n_eta;
        scan.samples[idx] = variance_sample(eta_grid[idx % n_eta], m, policy);
    });

    scan.summaries.resize(n_m);
    detail::parallel_for(n_m, [&](std::size_t im) {
        const std::size_t m = m_lo + im;
        std::vector<double> vx(n_eta);
        std::vector<double> vy(n_eta);
        for (std::size_t j = 0; j < n_eta; ++j) {
            vx[j] = scan.samples[im * n_eta + j].var_x;
            vy[j] = scan.samples[im * n_eta + j].var_y;
        }
        const CurveSummary sx = summarize(eta_grid, vx, [&](double eta) {
            return variance_sample(eta, m, policy).var_x;
        });
        const CurveSummary sy = summarize(eta_grid, vy, [&](double eta) {
            return variance_sample(eta, m, policy).var_y;
        });
        scan.summaries[im] = {m, sx.min_value, sx.eta_at_min, sy.min_value, sy.eta_at_min,
                              sx.regions, sy.regions};
    });
    return scan;
}

SqueezingCriticals squeezing_criticals(const SqueezingScan& scan)
{
    SqueezingCriticals out;
    for (const auto& s : scan.summaries) {
        if (s.x_squeezed() && !out.x_onset) {
            out.x_onset = s.m;
        }
        if (s.y_squeezed()) {
            out.y_last = s.m;
        }
    }
    return out;
}

}  // namespace nbs
