#include <doctest.h>

#include <cmath>

#include "nbs/fock.hpp"
#include "nbs/oracle.hpp"
#include "nbs/states.hpp"

using namespace nbs;

namespace {

FockVector basis(std::size_t n, std::size_t n_max)
{
    return number_state(n, n_max);
}

double factorial(std::size_t n)
{
    return std::tgamma(static_cast<double>(n) + 1.0);
}

}  // namespace

TEST_CASE("inner products of basis and normalized states")
{
    CHECK(inner_product(basis(2, 6), basis(2, 6)) == complex{1.0});
    CHECK(inner_product(basis(2, 6), basis(3, 6)) == complex{0.0});
    const FockVector g = nbs::nbs(NBSParams(0.5, 0));
    CHECK(std::abs(inner_product(g, g).real() - 1.0) <= 1e-12);
    CHECK_THROWS_AS(inner_product(basis(1, 4), basis(1, 5)), InvalidArgument);
}

TEST_CASE("annihilation examples")
{
    const FockVector a0 = apply_annihilation(basis(0, 5));
    CHECK(a0.norm_squared() == 0.0);
    const FockVector a3 = apply_annihilation(basis(3, 5));
    CHECK(std::abs(a3[2] - std::sqrt(3.0)) <= 1e-15);
    CHECK(a3.norm_squared() == doctest::Approx(3.0));
    const FockVector aa2 = apply_annihilation(apply_annihilation(basis(2, 5)));
    CHECK(std::abs(aa2[0] - std::sqrt(2.0)) <= 1e-15);
}

TEST_CASE("creation examples")
{
    const FockVector c2 = apply_creation(basis(2, 6));
    CHECK(std::abs(c2[3] - std::sqrt(3.0)) <= 1e-15);
    const FockVector c0 = apply_creation(basis(0, 6));
    CHECK(c0[1] == complex{1.0});
    const FockVector n1 = apply_creation(apply_annihilation(basis(1, 6)));
    CHECK(distance(n1, basis(1, 6)) <= 1e-15);
}

TEST_CASE("creation at the top of the basis moves mass into the tail bound")
{
    const FockVector top = basis(4, 4);
    const FockVector up = apply_creation(top);
    CHECK(up.norm_squared() == 0.0);
    CHECK(up.tail_bound() == doctest::Approx(5.0));
}

TEST_CASE("diagonal operator examples")
{
    const FockVector g = nbs::nbs(NBSParams(0.4, 2));
    CHECK(distance(apply_diag(g, [](std::size_t) { return 1.0; }), g) == 0.0);
    const FockVector f5 = apply_diag(basis(5, 8), [](std::size_t n) { return static_cast<double>(n); });
    CHECK(f5[5] == complex{5.0});
    const FockVector s5 = apply_diag(basis(5, 8), [](std::size_t n) { return std::sqrt(static_cast<double>(n) - 2.0); });
    CHECK(std::abs(s5[5] - std::sqrt(3.0)) <= 1e-15);
    CHECK_THROWS_AS(apply_diag(basis(1, 4), [](std::size_t n) { return std::sqrt(static_cast<double>(n) - 2.0); }),
                    NumericalError);
}

TEST_CASE("tail mass examples and frozen high-precision values")
{
    CHECK(tail_mass_nbs(NBSParams(1.0, 3), 3) == 0.0);
    CHECK(tail_mass_nbs(NBSParams(0.5, 1), 200) < 1e-12);
    CHECK(tail_mass_nbs(NBSParams(0.5, 0), 0) == doctest::Approx(0.5).epsilon(1e-14));
    // Reference values from 40-digit arithmetic.
    CHECK(tail_mass_nbs(NBSParams(0.5, 1), 200) == doctest::Approx(6.2788036374810297e-59).epsilon(1e-10));
    CHECK(tail_mass_nbs(NBSParams(0.3, 4), 60) == doctest::Approx(7.397355931525092e-6).epsilon(1e-10));
}

TEST_CASE("tail mass matches one minus the summed distribution")
{
    for (const double eta : {0.2, 0.5, 0.9}) {
        for (std::size_t m = 0; m <= 5; ++m) {
            const std::size_t n_max = m + 20;
            const std::vector<double> c = oracle::nbs_direct(eta, m, n_max);
            long double s = 0.0L;
            for (const double x : c) {
                s += static_cast<long double>(x) * x;
            }
            CHECK(std::abs(tail_mass_nbs(NBSParams(eta, m), n_max) - static_cast<double>(1.0L - s)) <= 1e-14);
        }
    }
}

TEST_CASE("adaptive truncation meets the tolerance or throws")
{
    const TruncationPolicy policy{1e-12, 4096};
    const NBSParams p(0.3, 4);
    const std::size_t n = choose_n_max(p, policy);
    CHECK(tail_mass_nbs(p, n) < policy.tail_eps);
    CHECK((n == 36 || n % 36 == 0));
    CHECK_THROWS_AS(choose_n_max(NBSParams(0.001, 10), {1e-12, 256}), TruncationError);
    CHECK_THROWS_AS(TruncationPolicy({0.0, 10}).validate(), InvalidArgument);
    CHECK_THROWS_AS(TruncationPolicy({1.0, 10}).validate(), InvalidArgument);
    CHECK_THROWS_AS(TruncationPolicy({1e-12, 0}).validate(), InvalidArgument);
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(NBSParams(0.0, 1), InvalidArgument);
    CHECK_THROWS_AS(NBSParams(1.5, 1), InvalidArgument);
    CHECK_THROWS_AS(NBSParams(std::nan(""), 1), InvalidArgument);
    CHECK_NOTHROW(NBSParams(1.0, 0));
}

TEST_CASE("canonical commutator on the interior")
{
    const FockVector v = nbs::nbs(NBSParams(0.6, 2)).resized(60);
    // Support ends well below n_max - 2 once the tail is cut at 60.
    std::vector<complex> amps(v.amplitudes().begin(), v.amplitudes().end());
    amps[59] = amps[60] = 0.0;
    const FockVector w(std::move(amps), 0.0);
    const FockVector comm = apply_annihilation(apply_creation(w)) - apply_creation(apply_annihilation(w));
    CHECK(distance(comm, w) <= 1e-14 * w.norm());
}

TEST_CASE("repeated creation reproduces the raising ratios")
{
    for (std::size_t m = 0; m <= 5; ++m) {
        const double eta = 0.4;
        const TruncationPolicy tight{1e-16, 4096};
        const FockVector base = nbs::nbs(NBSParams(eta, m), tight);
        FockVector v = base;
        for (std::size_t n = 1; n <= 3; ++n) {
            v = apply_creation(v);
            const FockVector target = nbs_on(NBSParams(eta, m + n), base.n_max());
            const double expected = std::sqrt(factorial(m + n) / (factorial(m) * std::pow(eta, n)));
            CHECK(std::abs(inner_product(target, v).real() - expected) <= 1e-10 * expected);
        }
    }
}

TEST_CASE("tail bound never decreases under operators")
{
    const FockVector v = nbs_on(NBSParams(0.3, 2), 40);
    const double t0 = v.tail_bound();
    const FockVector a = apply_annihilation(v);
    const FockVector c = apply_creation(v);
    const FockVector d = apply_diag(v, [](std::size_t n) { return 0.5 * static_cast<double>(n); });
    CHECK(a.tail_bound() >= t0);
    CHECK(c.tail_bound() >= t0);
    CHECK(d.tail_bound() >= t0);
    CHECK(apply_creation(c).tail_bound() >= c.tail_bound());
}

TEST_CASE("normalization and resizing bookkeeping")
{
    const FockVector v = nbs::nbs(NBSParams(0.5, 1));
    CHECK(std::abs(v.norm_squared() - 1.0) <= v.tail_bound() + 1e-12);
    const FockVector cut = v.resized(5);
    CHECK(cut.tail_bound() >= v.tail_bound());
    CHECK(std::abs(cut.norm_squared() + cut.tail_bound() - 1.0) <= 1e-12);
    const FockVector padded = v.resized(v.n_max() + 10);
    CHECK(padded.norm_squared() == doctest::Approx(v.norm_squared()).epsilon(1e-15));
    CHECK(v.scaled(2.0).norm_squared() == doctest::Approx(4.0 * v.norm_squared()));
    CHECK(v.scaled(2.0).normalized().norm() == doctest::Approx(1.0).epsilon(1e-15));
}
