#include <doctest.h>

#include <cmath>

#include "nbs/squeeze.hpp"
#include "nbs/states.hpp"

using namespace nbs;

TEST_CASE("number states have vanishing off-diagonal moments")
{
    for (std::size_t m = 0; m <= 5; ++m) {
        const FieldMoments f = field_moments(number_state(m, m + 4));
        CHECK(f.mean_a == complex{0.0});
        CHECK(f.mean_a2 == complex{0.0});
        const QuadratureVariances v = quadrature_variances(number_state(m, m + 4));
        const double expected = (2.0 * static_cast<double>(m) + 1.0) / 4.0;
        CHECK(v.var_x == doctest::Approx(expected));
        CHECK(v.var_y == doctest::Approx(expected));
    }
    const QuadratureVariances n5 = quadrature_variances(nbs::nbs(NBSParams(1.0, 5)));
    CHECK(n5.var_x == doctest::Approx(11.0 / 4.0));
    CHECK(n5.var_y == doctest::Approx(11.0 / 4.0));
}

TEST_CASE("vacuum limit of the geometric state")
{
    const FieldMoments f = field_moments(geometric_state(1.0 - 1e-12));
    CHECK(std::abs(f.mean_a) < 1e-5);
    CHECK(std::abs(f.mean_a2) < 1e-5);
    const QuadratureVariances v = quadrature_variances(geometric_state(1.0));
    CHECK(v.var_x == 0.25);
    CHECK(v.var_y == 0.25);
}

TEST_CASE("frozen high-precision moments and variances")
{
    struct Ref {
        double eta;
        std::size_t m;
        double a, a2, vx, vy;
    };
    // Values from 40-digit arithmetic.
    const Ref refs[] = {
        {0.5, 0, 0.95265226453847347, 1.2185013583597602, 0.45170434204959846, 0.14074932082011991},
        {0.7, 3, 1.9950922678136655, 3.8710410430842307, 0.56227022159509787, 0.67162233560074181},
        {0.2, 5, 5.3330933297026535, 29.366144934482510, 0.99118800392231942, 0.066927532758744751},
    };
    for (const Ref& r : refs) {
        const VarianceSample s = variance_sample(r.eta, r.m);
        CHECK(s.mean_a == doctest::Approx(r.a).epsilon(1e-12));
        CHECK(s.mean_a2 == doctest::Approx(r.a2).epsilon(1e-12));
        CHECK(std::abs(s.var_x - r.vx) <= 1e-11);
        CHECK(std::abs(s.var_y - r.vy) <= 1e-11);
    }
}

TEST_CASE("amplitude sums agree with the binomial series")
{
    for (int ie = 1; ie <= 9; ++ie) {
        const double eta = 0.1 * ie;
        for (std::size_t m = 0; m <= 10; ++m) {
            const FieldMoments f = field_moments(nbs::nbs(NBSParams(eta, m)));
            const RealFieldMoments g = field_moments_closed(eta, m);
            CHECK(std::abs(f.mean_a.real() - g.mean_a) <= 1e-8);
            CHECK(std::abs(f.mean_a2.real() - g.mean_a2) <= 1e-8);
        }
    }
}

TEST_CASE("Heisenberg bound and positivity across a scan")
{
    const SqueezingScan scan = squeezing_scan(0, 12, uniform_eta_grid(0.02, 1.0, 0.02));
    for (const VarianceSample& s : scan.samples) {
        CHECK(s.var_x > 0.0);
        CHECK(s.var_y > 0.0);
        CHECK(s.var_x * s.var_y >= 1.0 / 16.0 - 1e-12);
    }
}

TEST_CASE("eta = 1 column reproduces number-state values")
{
    const SqueezingScan scan = squeezing_scan(0, 6, {0.5, 1.0});
    for (const VarianceSample& s : scan.samples) {
        if (s.eta == 1.0) {
            const double expected = (2.0 * static_cast<double>(s.m) + 1.0) / 4.0;
            CHECK(std::abs(s.var_x - expected) <= 1e-12);
            CHECK(std::abs(s.var_y - expected) <= 1e-12);
        }
    }
}

TEST_CASE("X squeezing sets in at M = 7")
{
    const SqueezingScan scan = squeezing_scan(0, 10, uniform_eta_grid(0.01, 0.999, 0.001), {1e-12, 32768});
    for (const SqueezingSummary& s : scan.summaries) {
        CHECK_MESSAGE(s.x_squeezed() == (s.m >= 7), "M = ", s.m, " min var_x ", s.min_var_x);
        for (const SqueezingRegion& r : s.x_regions) {
            CHECK(r.eta_lo <= r.eta_hi);
        }
    }
    const SqueezingCriticals c = squeezing_criticals(scan);
    REQUIRE(c.x_onset.has_value());
    CHECK(*c.x_onset == 7);
    CHECK(scan.summaries[6].min_var_x == doctest::Approx(0.27454).epsilon(1e-4));
    CHECK(scan.summaries[7].min_var_x == doctest::Approx(0.24935).epsilon(1e-4));
}

TEST_CASE("Y squeezing persists for small eta at every M")
{
    // The measured behavior: var_y dips below 1/4 for small eta at all M
    // scanned, so no cutoff exists in 0..40.
    const std::vector<double> grid{0.01, 0.05, 0.1, 0.3};
    const SqueezingScan scan = squeezing_scan(30, 40, grid, {1e-12, 32768});
    for (const SqueezingSummary& s : scan.summaries) {
        CHECK(s.y_squeezed());
    }
    const VarianceSample s32 = variance_sample(0.01, 32, {1e-12, 32768});
    CHECK(s32.var_y == doctest::Approx(0.002545).epsilon(1e-3));
}

TEST_CASE("region edges sit on the 1/4 level")
{
    const SqueezingScan scan = squeezing_scan(8, 8, uniform_eta_grid(0.05, 0.95, 0.01));
    const SqueezingSummary& s = scan.summaries.front();
    REQUIRE(!s.x_regions.empty());
    for (const SqueezingRegion& r : s.x_regions) {
        for (const double edge : {r.eta_lo, r.eta_hi}) {
            if (edge > 0.05 && edge < 0.95) {
                CHECK(std::abs(variance_sample(edge, 8).var_x - 0.25) <= 1e-9);
            }
        }
    }
}

TEST_CASE("grid construction and validation")
{
    const std::vector<double> g = uniform_eta_grid(0.01, 0.999, 0.001);
    CHECK(g.front() == 0.01);
    CHECK(g.size() == 990);
    CHECK(g.back() == doctest::Approx(0.999));
    CHECK_THROWS_AS(uniform_eta_grid(0.5, 0.4, 0.01), InvalidArgument);
    CHECK_THROWS_AS(uniform_eta_grid(0.1, 0.4, 0.0), InvalidArgument);
    CHECK_THROWS_AS(squeezing_scan(0, 1, {0.5, 0.4}), InvalidArgument);
    CHECK_THROWS_AS(squeezing_scan(0, 1, {0.0, 0.4}), InvalidArgument);
}
