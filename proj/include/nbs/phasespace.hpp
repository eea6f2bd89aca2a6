#pragma once

// Q function, Wigner function and s-parametrized quasiprobabilities from the
// displaced-number-state series
//     P(beta, s) = (2/pi) sum_k (-1)^k (1+s)^k / (1-s)^{k+1} <beta,k|rho|beta,k>.

#include <cstddef>
#include <vector>

#include "nbs/fock.hpp"

namespace nbs {

struct PhaseSpacePoint {
    double x = 0.0;
    double y = 0.0;

    complex beta() const { return {x, y}; }
};

// <n|D(beta)|k>.  Uses the terminating 2F0 sum with argument -1/|beta|^2,
// rewritten so that beta = 0 gives delta_{nk}; when that alternating sum
// would lose more than four digits the value comes from the normalized
// Laguerre recurrence instead.
complex chi_element(std::size_t n, std::size_t k, complex beta);

// The matrix element in its literal hypergeometric form
//     beta^n (-beta*)^k e^{-|beta|^2/2} 2F0(-n, -k; z) / sqrt(n! k!),
// with z = z_sign / |beta|^2.  Only meaningful for beta != 0 and modest
// n, k; used to settle the sign of z against an independent oracle.
complex chi_element_hypergeometric(std::size_t n, std::size_t k, complex beta, double z_sign);

// D(beta)|k> on {|0>, ..., |n_max>}.  tail_bound is 1 - norm^2; throws
// TruncationError when that exceeds leak_tol.
FockVector displaced_number_state(complex beta, std::size_t k, std::size_t n_max,
                                  double leak_tol = 1e-10);

// Same, with n_max doubled from k + 32 until the leaked mass is below
// policy.tail_eps.
FockVector displaced_number_state(complex beta, std::size_t k, const TruncationPolicy& policy);

FockVector coherent_state(complex beta, std::size_t n_max);

// <beta,k|psi> for k = 0..count-1.
std::vector<complex> displaced_overlaps(const FockVector& state, complex beta, std::size_t count);

// (1/pi) |<beta|psi>|^2.
double q_function(const FockVector& state, PhaseSpacePoint p);

// Closed form for |eta, M> built from the excited-geometric representation:
//     eta^{M+1} e^{-|beta|^2} |beta|^{2M} |sum_n beta^n (1-eta)^{n/2}/sqrt(n!)|^2 / (pi M!).
double q_function_nbs(const NBSParams& params, PhaseSpacePoint p);

struct SeriesValue {
    double value = 0.0;
    std::size_t k_max = 0;      // last k included
    double tail_bound = 0.0;    // bound on the omitted terms
};

inline constexpr double kSeriesTolerance = 1e-12;
inline constexpr std::size_t kDefaultKCap = 16384;

// Series with adaptive cutoff: terms are added until the omitted part is
// bounded by kSeriesTolerance.  k_cap = 0 selects kDefaultKCap.  Throws
// ConvergenceError when the cap is reached first.  Requires -1 <= s <= 0.
SeriesValue s_distribution_series(const FockVector& state, PhaseSpacePoint p, double s,
                                  std::size_t k_cap = 0);

double s_distribution(const FockVector& state, PhaseSpacePoint p, double s, std::size_t k_cap = 0);
double wigner(const FockVector& state, PhaseSpacePoint p, std::size_t k_cap = 0);

enum class QuasiKind { husimi_q, wigner, s_parametrized };

struct Quasiprobability {
    QuasiKind kind = QuasiKind::wigner;
    double s = 0.0;  // used for s_parametrized only

    static Quasiprobability q() { return {QuasiKind::husimi_q, -1.0}; }
    static Quasiprobability w() { return {QuasiKind::wigner, 0.0}; }
    static Quasiprobability s_param(double s) { return {QuasiKind::s_parametrized, s}; }
};

struct GridSpec {
    double x_min = -6.0;
    double x_max = 6.0;
    double y_min = -6.0;
    double y_max = 6.0;
    std::size_t nx = 201;
    std::size_t ny = 201;

    // Throws InvalidArgument unless nx, ny >= 2, bounds finite and ordered.
    void validate() const;
    double dx() const { return (x_max - x_min) / static_cast<double>(nx - 1); }
    double dy() const { return (y_max - y_min) / static_cast<double>(ny - 1); }
    double x(std::size_t ix) const { return x_min + static_cast<double>(ix) * dx(); }
    double y(std::size_t iy) const { return y_min + static_cast<double>(iy) * dy(); }
};

struct PhaseSpaceGrid {
    GridSpec spec;
    std::vector<double> values;  // row-major, values[iy * nx + ix]
    double integral = 0.0;       // Riemann sum of values * dx * dy

    double at(std::size_t ix, std::size_t iy) const { return values[iy * spec.nx + ix]; }
    double min() const;
    double max() const;
};

PhaseSpaceGrid grid_evaluate(const FockVector& state, const GridSpec& spec, Quasiprobability kind);

}  // namespace nbs
