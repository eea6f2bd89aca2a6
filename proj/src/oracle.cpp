#include "nbs/oracle.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace nbs::oracle {

DenseMatrix displacement_matrix(complex beta, std::size_t dim, std::size_t pad)
{
    const auto big = static_cast<Eigen::Index>(dim + pad);
    Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(big, big);
    for (Eigen::Index n = 0; n + 1 < big; ++n) {
        const double s = std::sqrt(static_cast<double>(n + 1));
        gen(n + 1, n) += beta * s;             // beta a^dagger
        gen(n, n + 1) -= std::conj(beta) * s;  // -beta* a
    }
    const Eigen::MatrixXcd d = gen.exp();
    DenseMatrix out{dim, std::vector<complex>(dim * dim)};
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            out.data[r * dim + c] = d(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

std::vector<double> nbs_direct(double eta, std::size_t m, std::size_t n_max)
{
    std::vector<double> out(n_max + 1, 0.0);
    const long double e = eta;
    const long double mm = m;
    for (std::size_t n = m; n <= n_max; ++n) {
        const long double nn = n;
        long double lp = std::lgamma(nn + 1.0L) - std::lgamma(mm + 1.0L) - std::lgamma(nn - mm + 1.0L) +
                         (mm + 1.0L) * std::log(e);
        if (n > m) {
            if (eta == 1.0) {
                continue;
            }
            lp += (nn - mm) * std::log1p(-e);
        }
        out[n] = static_cast<double>(std::exp(0.5L * lp));
    }
    return out;
}

std::vector<double> su11_displace_dense(double xi, std::size_t m, std::size_t n_max)
{
    const auto d = static_cast<Eigen::Index>(n_max - m + 1);
    const double two_k = static_cast<double>(m) + 1.0;
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index n = 0; n + 1 < d; ++n) {
        const double e = std::sqrt((static_cast<double>(n) + 1.0) * (two_k + static_cast<double>(n)));
        gen(n + 1, n) = xi * e;
        gen(n, n + 1) = -xi * e;
    }
    const Eigen::MatrixXd u = gen.exp();
    std::vector<double> out(n_max + 1, 0.0);
    for (Eigen::Index i = 0; i < d; ++i) {
        out[m + static_cast<std::size_t>(i)] = u(i, 0);
    }
    return out;
}

std::vector<double> parametric_dense(double chi_t, std::size_t n_max)
{
    const auto d = static_cast<Eigen::Index>(n_max + 1);
    Eigen::MatrixXd gen = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index n = 0; n + 1 < d; ++n) {
        gen(n + 1, n) = chi_t * static_cast<double>(n + 1);
        gen(n, n + 1) = -chi_t * static_cast<double>(n + 1);
    }
    const Eigen::MatrixXd u = gen.exp();
    std::vector<double> out(n_max + 1);
    for (Eigen::Index i = 0; i < d; ++i) {
        out[static_cast<std::size_t>(i)] = u(i, 0);
    }
    return out;
}

double wigner_dense(const std::vector<complex>& coeffs, complex beta, std::size_t pad)
{
    const std::size_t dim = coeffs.size() + pad;
    // phi = D(beta)^dagger psi = D(-beta) psi; W = (2/pi) <phi|(-1)^N|phi>
    const DenseMatrix dm = displacement_matrix(-beta, dim, 80);
    double w = 0.0;
    for (std::size_t k = 0; k < dim; ++k) {
        complex phi{};
        for (std::size_t n = 0; n < coeffs.size(); ++n) {
            phi += dm(k, n) * coeffs[n];
        }
        w += ((k % 2 == 0) ? 1.0 : -1.0) * std::norm(phi);
    }
    return 2.0 / std::numbers::pi * w;
}

}  // namespace nbs::oracle
