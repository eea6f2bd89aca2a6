#pragma once

// Quadrature variances of X = (a + a^dagger)/2 and Y = (a - a^dagger)/(2i)
// and scans of the squeezing regions {Var < 1/4} over (M, eta).

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nbs/fock.hpp"

namespace nbs {

inline constexpr double kVacuumVariance = 0.25;

struct FieldMoments {
    complex mean_a;   // <a>
    complex mean_a2;  // <a^2>
};

// <a> and <a^2> from amplitude sums.
FieldMoments field_moments(const FockVector& state);

struct RealFieldMoments {
    double mean_a;
    double mean_a2;
};

// <a> and <a^2> of |eta, M> from the binomial-coefficient series, summed in
// the log domain up to the policy's n_max.  Independent of the amplitude
// route above.
RealFieldMoments field_moments_closed(double eta, std::size_t m, const TruncationPolicy& policy = {});

struct QuadratureVariances {
    double var_x;
    double var_y;
};

// Requires <a> and <a^2> real to 1e-10; throws NumericalError otherwise.
QuadratureVariances quadrature_variances(const FockVector& state);

struct VarianceSample {
    double eta = 0.0;
    std::size_t m = 0;
    double mean_a = 0.0;
    double mean_a2 = 0.0;
    double var_x = 0.0;
    double var_y = 0.0;
};

VarianceSample variance_sample(double eta, std::size_t m, const TruncationPolicy& policy = {});

// Maximal eta interval on which a variance stays below 1/4, with edges
// refined by bisection between grid points.
struct SqueezingRegion {
    double eta_lo;
    double eta_hi;
};

struct SqueezingSummary {
    std::size_t m = 0;
    double min_var_x = 0.0;
    double eta_min_x = 0.0;
    double min_var_y = 0.0;
    double eta_min_y = 0.0;
    std::vector<SqueezingRegion> x_regions;
    std::vector<SqueezingRegion> y_regions;

    bool x_squeezed() const { return min_var_x < kVacuumVariance; }
    bool y_squeezed() const { return min_var_y < kVacuumVariance; }
};

struct SqueezingScan {
    std::vector<VarianceSample> samples;  // M-major, eta-minor
    std::vector<SqueezingSummary> summaries;
};

// Evaluates every (M, eta) in [m_lo, m_hi] x eta_grid.  Grid minima are
// refined by golden-section search and region edges by bisection.
// eta_grid must be strictly increasing inside (0, 1].
SqueezingScan squeezing_scan(std::size_t m_lo, std::size_t m_hi, const std::vector<double>& eta_grid,
                             const TruncationPolicy& policy = {});

// Uniform grid lo, lo+step, ... not exceeding hi (hi included when it lies
// on the grid up to rounding).
std::vector<double> uniform_eta_grid(double lo, double hi, double step);

// Smallest M in the scan with X squeezing, and largest M with Y squeezing.
struct SqueezingCriticals {
    std::optional<std::size_t> x_onset;
    std::optional<std::size_t> y_last;
};

SqueezingCriticals squeezing_criticals(const SqueezingScan& scan);

}  // namespace nbs
