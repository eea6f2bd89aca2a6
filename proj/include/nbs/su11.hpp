#pragma once

// SU(1,1) generators in the generalized Holstein-Primakoff realization
//     K0 = N - (M-1)/2,   K+ = sqrt(N-M) a^dagger,   K- = a sqrt(N-M),
// acting on span{|n> : n >= M} with Bargmann index k = (M+1)/2, together with
// the ladder, displacement and nonlinear-coherent characterizations of
// |eta, M>.

#include <cstddef>

#include "nbs/expm.hpp"
#include "nbs/fock.hpp"

namespace nbs {

// Bargmann index k = (M+1)/2 of the representation built on |M>.
constexpr double bargmann_index(std::size_t m) { return (static_cast<double>(m) + 1.0) / 2.0; }

// All three throw InvalidArgument when v has support below m.
FockVector k_plus(const FockVector& v, std::size_t m);
FockVector k_minus(const FockVector& v, std::size_t m);
FockVector k_zero(const FockVector& v, std::size_t m);

// xi (K+ - K-) restricted to {|m>, ..., |n_max>} as a tridiagonal matrix.
// Row/column i corresponds to |m + i>.
Tridiagonal su11_generator(double xi, std::size_t m, std::size_t n_max);

// ||(N - sqrt(1-eta) sqrt(N-M) a^dagger) |eta,M> - M |eta,M>||.
double ladder_residual(double eta, std::size_t m, const TruncationPolicy& policy = {});

// Same residual in generator form, ||(K0 - sqrt(1-eta) K+ - (M+1)/2) |eta,M>||.
double ladder_residual_generators(double eta, std::size_t m, const TruncationPolicy& policy = {});

// exp(xi (K+ - K-)) |M>.  The basis is sized for |1 - tanh^2 xi, M>; mass
// reaching the top eighth of the basis is treated as leakage and throws
// TruncationError.
FockVector su11_displace(double xi, std::size_t m, const TruncationPolicy& policy = {});

// Same evolution on an explicit basis size.
FockVector su11_displace_on(double xi, std::size_t m, std::size_t n_max);

// exp(gamma K+) |M> by its power series, which terminates on the truncated
// basis because K+ only raises.
FockVector exp_raising_series(double gamma, std::size_t m, std::size_t n_max);

// ||exp(alpha(K+ - K-))|M> - exp(gamma K+) (1-gamma^2)^{K0} exp(-gamma K-)|M>||
// with gamma = tanh(alpha).  The basis is sized so the truncation error of
// the left side is far below 1e-10.
double disentangle_check(double alpha, std::size_t m);

// ||f(N) a |eta,M> - sqrt(1-eta) |eta,M>|| with f(n) = sqrt(n+1-M)/(n+1),
// taken over the components where a|eta,M> is determined by the truncated
// amplitudes (all but the top one).
double nonlinear_eigen_residual(double eta, std::size_t m, const TruncationPolicy& policy = {});

}  // namespace nbs
