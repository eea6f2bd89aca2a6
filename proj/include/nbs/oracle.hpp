#pragma once

// Reference computations that share no code path with the library proper.
// Dense matrices, Eigen's matrix exponential, direct closed forms.  Slow
// and only meant for modest dimensions.

#include <complex>
#include <cstddef>
#include <vector>

namespace nbs::oracle {

using complex = std::complex<double>;

// Row-major dim x dim block of exp(beta a^dagger - beta* a), exponentiated on
// a basis of dim + pad states and then cut down to dim.
struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<complex> data;

    complex operator()(std::size_t r, std::size_t c) const { return data[r * dim + c]; }
};

DenseMatrix displacement_matrix(complex beta, std::size_t dim, std::size_t pad = 80);

// [C(n, M) eta^{M+1} (1-eta)^{n-M}]^{1/2} for n = 0..n_max, each term from
// log-gamma in long double.
std::vector<double> nbs_direct(double eta, std::size_t m, std::size_t n_max);

// exp(xi (K+ - K-)) |M> on {|M>, ..., |n_max>} from a dense generator
// assembled from <n+1;k|K+|n;k> = sqrt((n+1)(2k+n)), embedded into 0..n_max.
std::vector<double> su11_displace_dense(double xi, std::size_t m, std::size_t n_max);

// exp(chi_t (a1^dag a2^dag - a1 a2)) |0,0> on pair indices 0..n_max, dense.
std::vector<double> parametric_dense(double chi_t, std::size_t n_max);

// Wigner function at beta from the density-matrix Laguerre expansion
//     W = (2/pi) sum_{m,n} c_m* c_n <m| D(beta) (-1)^N D(beta)^dagger |n>
// computed with the dense displacement matrix.
double wigner_dense(const std::vector<complex>& coeffs, complex beta, std::size_t pad = 120);

}  // namespace nbs::oracle
