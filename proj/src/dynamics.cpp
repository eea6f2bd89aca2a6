#include "nbs/dynamics.hpp"

#include <cmath>

#include "nbs/expm.hpp"
#include "nbs/su11.hpp"

namespace nbs {

double eta_after(double chi_t)
{
    const double c = std::cosh(chi_t);
    return 1.0 / (c * c);
}

FockVector evolve_intensity_dependent(const EvolutionSpec& spec)
{
    if (!(spec.chi_t >= 0.0)) {
        throw InvalidArgument("evolve_intensity_dependent: chi_t must be nonnegative");
    }
    return su11_displace(spec.chi_t, spec.m, spec.policy);
}

PairBasisVector evolve_parametric_on(double chi_t, std::size_t n_max)
{
    if (!(chi_t >= 0.0) || !std::isfinite(chi_t)) {
        throw InvalidArgument("evolve_parametric: chi_t must be finite and nonnegative");
    }
    // a1^dagger a2^dagger |n,n> = (n+1) |n+1,n+1>, a1 a2 |n+1,n+1> = (n+1) |n,n>
    const std::size_t d = n_max + 1;
    std::vector<double> lower(d - 1);
    std::vector<double> upper(d - 1);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        lower[i] = chi_t * static_cast<double>(i + 1);
        upper[i] = -lower[i];
    }
    const Tridiagonal gen(std::vector<double>(d, 0.0), std::move(lower), std::move(upper));
    std::vector<double> start(d, 0.0);
    start[0] = 1.0;
    const std::vector<double> w = expm_action<double>(gen, start);

    const double eta = eta_after(chi_t);
    const double tail = eta > 0.0 ? tail_mass_nbs(NBSParams(eta, 0), n_max) : 1.0;
    return PairBasisVector({w.begin(), w.end()}, 0, tail);
}

PairBasisVector evolve_parametric(double chi_t, const TruncationPolicy& policy)
{
    if (!(chi_t >= 0.0) || !std::isfinite(chi_t)) {
        throw InvalidArgument("evolve_parametric: chi_t must be finite and nonnegative");
    }
    const double eta = eta_after(chi_t);
    if (!(eta > 0.0)) {
        throw TruncationError("evolve_parametric: chi_t too large for any truncation", 1.0);
    }
    return evolve_parametric_on(chi_t, choose_n_max(NBSParams(eta, 0), policy));
}

AtomPassage atom_passage(const PairBasisVector& state, double g_t, std::size_t m_photon)
{
    if (!(g_t > 0.0 && g_t <= kMaxAtomCoupling)) {
        throw InvalidArgument("atom_passage: g_t must lie in (0, 0.1] for the first-order picture, got " +
                              std::to_string(g_t));
    }
    if (m_photon < 1) {
        throw InvalidArgument("atom_passage: m_photon must be at least 1");
    }
    // (a1^dagger)^m |M0+n, n> = sqrt((M0+n+m)!/(M0+n)!) |M0+m+n, n>; the pair
    // index is untouched, so nothing leaves the basis.
    const std::size_t m0 = state.offset_m();
    std::vector<complex> raised(state.amplitudes().begin(), state.amplitudes().end());
    for (std::size_t n = 0; n < raised.size(); ++n) {
        double f = 1.0;
        for (std::size_t j = 1; j <= m_photon; ++j) {
            f *= std::sqrt(static_cast<double>(m0 + n + j));
        }
        raised[n] *= f;
    }
    const PairBasisVector branch(std::move(raised), m0 + m_photon, state.tail_bound());
    const double kept = state.norm_squared();
    const double moved = g_t * g_t * branch.norm_squared();
    return {branch.normalized(), kept / (kept + moved)};
}

double fidelity(const FockVector& a, const FockVector& b)
{
    const double na = a.norm_squared();
    const double nb = b.norm_squared();
    if (na == 0.0 || nb == 0.0) {
        throw NumericalError("fidelity: zero vector");
    }
    return std::norm(inner_product(a, b)) / (na * nb);
}

double fidelity(const PairBasisVector& a, const PairBasisVector& b)
{
    if (a.offset_m() != b.offset_m()) {
        throw InvalidArgument("fidelity: pair-basis offsets differ (" + std::to_string(a.offset_m()) +
                              " vs " + std::to_string(b.offset_m()) + ")");
    }
    const double na = a.norm_squared();
    const double nb = b.norm_squared();
    if (na == 0.0 || nb == 0.0) {
        throw NumericalError("fidelity: zero vector");
    }
    complex s{};
    for (std::size_t n = 0; n < std::min(a.size(), b.size()); ++n) {
        s += std::conj(a[n]) * b[n];
    }
    return std::norm(s) / (na * nb);
}

}  // namespace nbs
