#include <doctest.h>

#include <cmath>

#include "nbs/dynamics.hpp"
#include "nbs/oracle.hpp"
#include "nbs/states.hpp"
#include "nbs/stats.hpp"
#include "nbs/su11.hpp"

using namespace nbs;

namespace {

double common_fidelity(const FockVector& a, const FockVector& b)
{
    const std::size_t n = std::max(a.n_max(), b.n_max());
    return fidelity(a.resized(n), b.resized(n));
}

}  // namespace

TEST_CASE("coupling time maps to eta")
{
    CHECK(eta_after(0.0) == 1.0);
    const double t = std::atanh(std::sqrt(0.5));
    CHECK(eta_after(t) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(eta_after(2.0) == doctest::Approx(1.0 - std::tanh(2.0) * std::tanh(2.0)).epsilon(1e-12));
}

TEST_CASE("intensity-dependent coupling examples")
{
    for (std::size_t m = 0; m <= 3; ++m) {
        const FockVector v = evolve_intensity_dependent({0.0, m, {}});
        CHECK(v[m] == complex{1.0});
    }
    const FockVector v = evolve_intensity_dependent({std::atanh(std::sqrt(0.5)), 2, {}});
    CHECK(common_fidelity(v, nbs::nbs(NBSParams(0.5, 2))) >= 1.0 - 1e-10);
    for (int i = 1; i <= 20; ++i) {
        const double chi_t = 0.1 * i;
        for (std::size_t m : {0, 4}) {
            const FockVector e = evolve_intensity_dependent({chi_t, m, {}});
            CHECK(common_fidelity(e, nbs::nbs(NBSParams(eta_after(chi_t), m))) >= 1.0 - 1e-10);
            CHECK(std::abs(e.norm_squared() - 1.0) <= 1e-10);
        }
    }
    CHECK_THROWS_AS(evolve_intensity_dependent({-0.5, 0, {}}), InvalidArgument);
}

TEST_CASE("parametric amplifier examples")
{
    const PairBasisVector z = evolve_parametric(0.0);
    CHECK(z[0] == complex{1.0});
    const PairBasisVector h = evolve_parametric(std::atanh(std::sqrt(0.5)));
    CHECK(fidelity(h, two_mode_geometric(0.5)) >= 1.0 - 1e-10);
    for (const double chi_t : {0.3, 1.1, 2.0}) {
        const PairBasisVector p = evolve_parametric(chi_t);
        const double eta = eta_after(chi_t);
        const std::vector<double> d = p.pair_distribution();
        double mean = 0.0;
        for (std::size_t n = 0; n < d.size(); ++n) {
            mean += static_cast<double>(n) * d[n];
        }
        CHECK(mean == doctest::Approx(1.0 / eta - 1.0).epsilon(1e-9));
        CHECK(std::abs(p.norm_squared() - 1.0) <= 1e-10);
    }
}

TEST_CASE("parametric evolution against the dense oracle")
{
    const PairBasisVector p = evolve_parametric_on(0.8, 150);
    const std::vector<double> ref = oracle::parametric_dense(0.8, 150);
    for (std::size_t n = 0; n <= 150; ++n) {
        CHECK(std::abs(p[n].real() - ref[n]) <= 1e-11);
    }
}

TEST_CASE("both schemes produce the same geometric sequence at M = 0")
{
    for (const double chi_t : {0.2, 0.9, 1.7}) {
        const FockVector single = evolve_intensity_dependent({chi_t, 0, {}});
        const PairBasisVector pair = evolve_parametric(chi_t);
        const std::size_t n = std::min(single.size(), pair.size());
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(std::abs(single[i] - pair[i]) <= 1e-10);
        }
    }
}

TEST_CASE("evolution composes as a one-parameter group")
{
    const double t1 = 0.4;
    const double t2 = 0.7;
    for (std::size_t m : {0, 3}) {
        const std::size_t n_max = 400;
        const FockVector once = su11_displace_on(t1 + t2, m, n_max);
        const FockVector first = su11_displace_on(t1, m, n_max);
        // Apply the second interval to the intermediate state.
        const Tridiagonal gen = su11_generator(t2, m, n_max);
        std::vector<double> mid(gen.dim());
        for (std::size_t i = 0; i < gen.dim(); ++i) {
            mid[i] = first[m + i].real();
        }
        const std::vector<double> w = expm_action<double>(gen, mid);
        std::vector<complex> amps(n_max + 1);
        for (std::size_t i = 0; i < w.size(); ++i) {
            amps[m + i] = w[i];
        }
        CHECK(fidelity(FockVector(std::move(amps), 0.0), once) >= 1.0 - 1e-10);
    }
}

TEST_CASE("atom passage examples")
{
    for (const double eta : {0.3, 0.7}) {
        const PairBasisVector start = two_mode_geometric(eta, {1e-14, 32768});
        const AtomPassage one = atom_passage(start, 0.05, 1);
        CHECK(one.ground_branch.offset_m() == 1);
        CHECK(fidelity(one.ground_branch, two_mode_nbs(eta, 1)) >= 1.0 - 1e-10);
        for (std::size_t m = 2; m <= 5; ++m) {
            const AtomPassage a = atom_passage(start, 0.05, m);
            CHECK(fidelity(a.ground_branch, two_mode_nbs(eta, m)) >= 1.0 - 1e-10);
        }
    }
    const PairBasisVector start = two_mode_geometric(0.5);
    const AtomPassage small = atom_passage(start, 0.01, 1);
    const AtomPassage large = atom_passage(start, 0.1, 1);
    // <eta|_tm a1 a1^dagger |eta>_tm = 1/eta.
    CHECK(1.0 - small.excited_weight == doctest::Approx(1e-4 * 2.0).epsilon(1e-3));
    CHECK(1.0 - large.excited_weight > 1.0 - small.excited_weight);
    CHECK_THROWS_AS(atom_passage(start, 0.2, 1), InvalidArgument);
    CHECK_THROWS_AS(atom_passage(start, 0.0, 1), InvalidArgument);
    CHECK_THROWS_AS(atom_passage(start, 0.05, 0), InvalidArgument);
}

TEST_CASE("fidelity examples")
{
    const FockVector v = nbs::nbs(NBSParams(0.5, 1));
    CHECK(fidelity(v, v) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(fidelity(number_state(0, 3), number_state(1, 3)) == 0.0);
    const FockVector w = nbs_on(NBSParams(0.6, 1), v.n_max());
    const double f = fidelity(v, w);
    CHECK(f > 0.0);
    CHECK(f < 1.0);
    CHECK_THROWS_AS(fidelity(number_state(0, 3), number_state(0, 4)), InvalidArgument);
    CHECK_THROWS_AS(fidelity(two_mode_nbs(0.5, 1), two_mode_nbs(0.5, 2)), InvalidArgument);
}
