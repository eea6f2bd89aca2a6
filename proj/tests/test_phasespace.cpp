#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nbs/oracle.hpp"
#include "nbs/phasespace.hpp"
#include "nbs/states.hpp"

using namespace nbs;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<complex> coeffs_of(const FockVector& v)
{
    return {v.amplitudes().begin(), v.amplitudes().end()};
}

}  // namespace

TEST_CASE("low-order matrix element examples")
{
    for (const complex beta : {complex{0.7, 0.4}, complex{-1.2, 0.3}, complex{0.0, 2.1}}) {
        const double x = std::norm(beta);
        const double g = std::exp(-x / 2.0);
        CHECK(std::abs(chi_element(0, 0, beta) - g) <= 1e-15);
        CHECK(std::abs(chi_element(1, 0, beta) - beta * g) <= 1e-15);
        CHECK(std::abs(chi_element(1, 1, beta) - (1.0 - x) * g) <= 1e-15);
    }
    CHECK(chi_element(3, 3, complex{}) == complex{1.0});
    CHECK(chi_element(3, 2, complex{}) == complex{0.0});
}

TEST_CASE("frozen high-precision matrix elements")
{
    const complex b{0.7, 0.4};
    CHECK(std::abs(chi_element(1, 1, b) - 0.25288457377472527) <= 1e-15);
    CHECK(std::abs(chi_element(3, 5, b) - complex{0.24047831302199126, -0.40808440997671245}) <= 1e-14);
    CHECK(std::abs(chi_element(5, 3, b) - complex{0.24047831302199126, 0.40808440997671245}) <= 1e-14);
    CHECK(std::abs(chi_element(12, 7, b) - complex{-0.23036974216953715, 0.13993262530574297}) <= 1e-14);
    const complex c{2.5, -1.5};
    CHECK(std::abs(chi_element(40, 37, c) - complex{-0.0051132389608163651, -0.10124213142416403}) <= 1e-13);
}

TEST_CASE("matrix elements against the dense displacement oracle")
{
    for (const complex beta : {complex{0.3, -0.2}, complex{1.5, 0.9}, complex{-2.2, 1.7}}) {
        const oracle::DenseMatrix d = oracle::displacement_matrix(beta, 30);
        double err = 0.0;
        for (std::size_t n = 0; n < 30; ++n) {
            for (std::size_t k = 0; k < 30; ++k) {
                err = std::max(err, std::abs(chi_element(n, k, beta) - d(n, k)));
            }
        }
        CHECK(err <= 1e-10);
    }
}

TEST_CASE("sign of the hypergeometric argument is fixed by the oracle")
{
    const complex beta{0.7, 0.4};
    const oracle::DenseMatrix d = oracle::displacement_matrix(beta, 8);
    CHECK(std::abs(chi_element_hypergeometric(1, 1, beta, -1.0) - d(1, 1)) <= 1e-10);
    CHECK(std::abs(chi_element_hypergeometric(1, 1, beta, 1.0) - d(1, 1)) > 1e-3);
    for (std::size_t n = 0; n < 8; ++n) {
        for (std::size_t k = 0; k < 8; ++k) {
            CHECK(std::abs(chi_element_hypergeometric(n, k, beta, -1.0) - d(n, k)) <= 1e-10);
        }
    }
    CHECK_THROWS_AS(chi_element_hypergeometric(1, 1, complex{}, -1.0), InvalidArgument);
}

TEST_CASE("large indices stay accurate and unitary")
{
    const complex beta{2.5, -1.5};
    for (std::size_t k : {0, 5, 10}) {
        double s = 0.0;
        for (std::size_t n = 0; n < 200; ++n) {
            s += std::norm(chi_element(n, k, beta));
        }
        CHECK(std::abs(s - 1.0) <= 1e-10);
    }
    for (const double r : {0.5, 3.0}) {
        const complex b = std::polar(r, 0.6);
        for (std::size_t k = 0; k <= 10; ++k) {
            double s = 0.0;
            for (std::size_t n = 0; n < 200; ++n) {
                s += std::norm(chi_element(n, k, b));
            }
            CHECK(std::abs(s - 1.0) <= 1e-10);
        }
    }
}

TEST_CASE("displaced number states")
{
    const FockVector z = displaced_number_state(complex{}, 3, 10);
    CHECK(z[3] == complex{1.0});
    const complex beta{0.8, -0.5};
    const FockVector c = displaced_number_state(beta, 0, 60);
    for (std::size_t n = 0; n <= 20; ++n) {
        const complex expected = std::pow(beta, static_cast<int>(n)) * std::exp(-std::norm(beta) / 2.0) /
                                 std::sqrt(std::tgamma(static_cast<double>(n) + 1.0));
        CHECK(std::abs(c[n] - expected) <= 1e-14);
    }
    CHECK(distance(coherent_state(beta, 60), c) <= 1e-15);
    for (const double r : {0.5, 1.7, 3.0}) {
        for (std::size_t k = 0; k <= 10; ++k) {
            const FockVector v = displaced_number_state(std::polar(r, 2.0), k, TruncationPolicy{});
            CHECK(std::abs(v.norm_squared() - 1.0) <= 1e-10);
        }
    }
    CHECK_THROWS_AS(displaced_number_state(complex{3.0, 0.0}, 0, 5), TruncationError);
}

TEST_CASE("Q function examples")
{
    const FockVector vac = number_state(0, 20);
    CHECK(q_function(vac, {0.0, 0.0}) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
    const FockVector five = nbs::nbs(NBSParams(1.0, 5));
    for (const PhaseSpacePoint p : {PhaseSpacePoint{0.5, 0.2}, PhaseSpacePoint{-1.3, 1.9}, PhaseSpacePoint{2.0, 0.0}}) {
        const double x = std::norm(p.beta());
        const double expected = std::exp(-x) * std::pow(x, 5) / (kPi * 120.0);
        CHECK(q_function(five, p) == doctest::Approx(expected).epsilon(1e-12));
        CHECK(q_function_nbs(NBSParams(1.0, 5), p) == doctest::Approx(expected).epsilon(1e-12));
    }
    for (std::size_t m = 1; m <= 4; ++m) {
        CHECK(q_function(nbs::nbs(NBSParams(0.4, m)), {0.0, 0.0}) == 0.0);
    }
    // Reference value from 40-digit arithmetic.
    CHECK(q_function(nbs::nbs(NBSParams(0.2, 5)), {1.1, -0.6}) == doctest::Approx(3.2103410331159341e-6).epsilon(1e-10));
}

TEST_CASE("closed-form Q matches the generic path on a spot-check grid")
{
    for (const auto& [eta, m] : {std::pair{0.2, std::size_t{5}}, std::pair{0.6, std::size_t{1}}}) {
        const FockVector v = nbs::nbs(NBSParams(eta, m));
        for (int i = 0; i < 21; ++i) {
            for (int j = 0; j < 21; ++j) {
                const PhaseSpacePoint p{-5.0 + 0.5 * i, -5.0 + 0.5 * j};
                const double q = q_function(v, p);
                CHECK(q >= 0.0);
                CHECK(std::abs(q - q_function_nbs(NBSParams(eta, m), p)) <= 1e-10);
            }
        }
    }
}

TEST_CASE("Wigner function examples")
{
    const FockVector vac = number_state(0, 20);
    for (const PhaseSpacePoint p : {PhaseSpacePoint{0.0, 0.0}, PhaseSpacePoint{0.4, -0.9}, PhaseSpacePoint{1.5, 1.0}}) {
        CHECK(std::abs(wigner(vac, p) - 2.0 / kPi * std::exp(-2.0 * std::norm(p.beta()))) <= 1e-8);
    }
    CHECK(std::abs(wigner(number_state(1, 20), {0.0, 0.0}) + 2.0 / kPi) <= 1e-12);
    const FockVector n1 = nbs::nbs(NBSParams(1.0, 1));
    const FockVector one = number_state(1, n1.n_max());
    for (const PhaseSpacePoint p : {PhaseSpacePoint{0.0, 0.0}, PhaseSpacePoint{0.7, 0.1}, PhaseSpacePoint{-2.0, 1.2}}) {
        CHECK(std::abs(wigner(n1, p) - wigner(one, p)) <= 1e-14);
    }
}

TEST_CASE("frozen Wigner values and the dense parity oracle")
{
    const FockVector v = nbs::nbs(NBSParams(0.5, 1));
    CHECK(std::abs(wigner(v, {0.3, 0.2}) - (-0.13368030821567426)) <= 1e-12);
    CHECK(std::abs(wigner(v, {0.0, 0.0}) - (-0.070735530263064594)) <= 1e-12);
    CHECK(std::abs(wigner(v, {0.0, 0.0}) + 2.0 / kPi * 0.25 / 2.25) <= 1e-12);
    const FockVector w = nbs::nbs(NBSParams(0.3, 2));
    for (const PhaseSpacePoint p : {PhaseSpacePoint{1.0, 0.5}, PhaseSpacePoint{-0.4, 2.2}}) {
        CHECK(std::abs(wigner(w, p) - oracle::wigner_dense(coeffs_of(w), p.beta())) <= 1e-10);
    }
}

TEST_CASE("s-parametrized reductions and interpolation")
{
    const FockVector v = nbs::nbs(NBSParams(0.4, 2));
    for (const PhaseSpacePoint p : {PhaseSpacePoint{0.2, 0.3}, PhaseSpacePoint{-1.5, 0.8}, PhaseSpacePoint{2.5, -2.0}}) {
        CHECK(std::abs(s_distribution(v, p, -1.0) - q_function(v, p)) <= 1e-10);
        CHECK(std::abs(s_distribution(v, p, 0.0) - wigner(v, p)) <= 1e-10);
    }
    const FockVector vac = number_state(0, 10);
    const double mid = s_distribution(vac, {0.0, 0.0}, -0.5);
    CHECK(mid > 1.0 / kPi);
    CHECK(mid < 2.0 / kPi);
    CHECK(mid == doctest::Approx(4.0 / (3.0 * kPi)).epsilon(1e-10));
    CHECK_THROWS_AS(s_distribution(v, {0.0, 0.0}, 0.5), InvalidArgument);
    CHECK_THROWS_AS(s_distribution(v, {0.0, 0.0}, -1.5), InvalidArgument);
}

TEST_CASE("series reports its cutoff and bound")
{
    const FockVector v = nbs::nbs(NBSParams(0.5, 1));
    const SeriesValue s = s_distribution_series(v, {1.0, -0.5}, 0.0);
    CHECK(s.k_max > 0);
    CHECK(s.tail_bound <= kSeriesTolerance);
    CHECK_THROWS_AS(s_distribution_series(nbs::nbs(NBSParams(0.1, 3)), {5.0, 5.0}, 0.0, 3), ConvergenceError);
}

TEST_CASE("grids: layout, normalization and bounds")
{
    const GridSpec spec{-6.0, 6.0, -6.0, 6.0, 121, 121};
    const FockVector vac = number_state(0, 10);
    const PhaseSpaceGrid q = grid_evaluate(vac, spec, Quasiprobability::q());
    CHECK(std::abs(q.integral - 1.0) <= 1e-6);
    CHECK(q.values.size() == 121 * 121);
    CHECK(q.at(60, 60) == doctest::Approx(1.0 / kPi));

    const FockVector v = nbs::nbs(NBSParams(0.3, 1));
    const PhaseSpaceGrid w = grid_evaluate(v, spec, Quasiprobability::w());
    CHECK(std::abs(w.integral - 1.0) <= 1e-4);
    CHECK(w.min() < 0.0);
    for (const double x : w.values) {
        CHECK(std::abs(x) <= 2.0 / kPi + 1e-12);
    }
    // Q is broader than W, so its box has to be wider to hold the mass.
    const GridSpec wide{-10.0, 10.0, -10.0, 10.0, 201, 201};
    const PhaseSpaceGrid qv = grid_evaluate(v, wide, Quasiprobability::q());
    CHECK(std::abs(qv.integral - 1.0) <= 1e-8);
    CHECK(qv.min() >= 0.0);

    // Row index increases with y.
    const GridSpec tilted{-1.0, 1.0, 0.0, 2.0, 3, 5};
    const PhaseSpaceGrid t = grid_evaluate(v, tilted, Quasiprobability::q());
    CHECK(t.at(2, 4) == doctest::Approx(q_function(v, {1.0, 2.0})).epsilon(1e-14));
    CHECK(t.at(0, 1) == doctest::Approx(q_function(v, {-1.0, 0.5})).epsilon(1e-14));

    CHECK_THROWS_AS(GridSpec({0.0, 1.0, 0.0, 1.0, 1, 3}).validate(), InvalidArgument);
    CHECK_THROWS_AS(GridSpec({1.0, 0.0, 0.0, 1.0, 3, 3}).validate(), InvalidArgument);
}

TEST_CASE("Q contours of a Y-squeezed state are compressed along y")
{
    // |0.2, 5> is squeezed in Y and its Q function peaks on the positive
    // real axis, so the half-maximum width along y is the smaller one.
    const FockVector v = nbs::nbs(NBSParams(0.2, 5));
    const GridSpec spec{-8.0, 8.0, -8.0, 8.0, 161, 161};
    const PhaseSpaceGrid q = grid_evaluate(v, spec, Quasiprobability::q());
    std::size_t peak = 0;
    for (std::size_t i = 0; i < q.values.size(); ++i) {
        if (q.values[i] > q.values[peak]) {
            peak = i;
        }
    }
    const std::size_t px = peak % spec.nx;
    const std::size_t py = peak / spec.nx;
    CHECK(py == 80);
    const auto width = [&](bool along_x) {
        std::size_t count = 0;
        for (std::size_t i = 0; i < 161; ++i) {
            const double val = along_x ? q.at(i, py) : q.at(px, i);
            count += val > 0.5 * q.values[peak] ? 1 : 0;
        }
        return count;
    };
    CHECK(width(false) < width(true));
}
