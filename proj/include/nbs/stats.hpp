#pragma once

// Closed-form photon statistics of |eta, M> and their brute-force
// counterparts over a numeric distribution.

#include <cstddef>
#include <utility>
#include <vector>

#include "nbs/fock.hpp"

namespace nbs {

// G(lambda) = lambda^M (eta / (1 + lambda eta - lambda))^{M+1}.
// Throws InvalidArgument when lambda (1 - eta) >= 1.
double generating_function(double lambda, double eta, std::size_t m);

struct FactorialMoments {
    double f1;  // <N>
    double f2;  // <N^2> - <N>
};

FactorialMoments factorial_moments(double eta, std::size_t m);

struct MandelQ {
    double value = 0.0;
    // Set for the vacuum (eta = 1, M = 0), where Q is undefined and value is 0.
    bool degenerate = false;
};

MandelQ mandel_q(double eta, std::size_t m);

// Moments by direct summation over |c_n|^2 (normalized by the vector's
// own norm).  Throws NumericalError for a state with <N> = 0.
double mandel_q_numeric(const FockVector& state);

struct NumericMoments {
    double mean;      // <N>
    double variance;  // <N^2> - <N>^2
    double f2;        // <N^2> - <N>
};

NumericMoments photon_moments(const FockVector& state);

// eta_- = M + 1 - sqrt(M(M+1)), evaluated as (M+1)/(M+1+sqrt(M(M+1))).
double eta_threshold(std::size_t m);

struct StatsReport {
    double eta = 0.0;
    std::size_t m = 0;
    std::vector<std::pair<double, double>> g_values;  // (lambda, G(lambda))
    double f1 = 0.0;
    double f2 = 0.0;
    double mandel_q_closed = 0.0;
    bool mandel_q_degenerate = false;
    double mandel_q_numeric = 0.0;
    double eta_minus = 0.0;
    bool sub_poissonian = false;
    std::size_t n_max = 0;
    double tail_mass = 0.0;
};

StatsReport stats_report(const NBSParams& params, const std::vector<double>& lambdas,
                         const TruncationPolicy& policy = {});

}  // namespace nbs
