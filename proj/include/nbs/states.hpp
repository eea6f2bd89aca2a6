#pragma once

// Constructors for the negative binomial state family and its relatives.
// All constructors return nonnegative real amplitudes.

#include <cstddef>
#include <vector>

#include "nbs/fock.hpp"

namespace nbs {

// Two-mode state sum_n c_n |offset_m + n, n>.  Only the pair index n is
// stored; the signal mode carries offset_m extra photons.
class PairBasisVector {
public:
    PairBasisVector(std::vector<complex> amplitudes, std::size_t offset_m, double tail_bound);

    std::size_t n_max() const noexcept { return amps_.size() - 1; }
    std::size_t size() const noexcept { return amps_.size(); }
    std::size_t offset_m() const noexcept { return offset_m_; }
    double tail_bound() const noexcept { return tail_bound_; }

    std::span<const complex> amplitudes() const noexcept { return amps_; }
    const complex& operator[](std::size_t n) const { return amps_[n]; }

    double norm_squared() const noexcept;
    PairBasisVector normalized() const;

    // Photon-number distribution of the signal mode, indexed by signal
    // photon number 0..offset_m + n_max.
    std::vector<double> signal_distribution() const;

    // Distribution over the pair index n.
    std::vector<double> pair_distribution() const;

private:
    std::vector<complex> amps_;
    std::size_t offset_m_;
    double tail_bound_;
};

// C_n(eta, M) for n = 0..n_max, from the ratio recursion
// C_{n+1}/C_n = sqrt((n+1)/(n+1-M)) sqrt(1-eta), anchored at the mode.
std::vector<double> nbs_coefficients(const NBSParams& params, std::size_t n_max);

// |eta, M> truncated per policy.  tail_bound holds the exact tail mass.
FockVector nbs(const NBSParams& params, const TruncationPolicy& policy = {});

// Same state on a caller-chosen basis size.
FockVector nbs_on(const NBSParams& params, std::size_t n_max);

// |eta>_g = sqrt(eta) sum_n (1-eta)^{n/2} |n>.
FockVector geometric_state(double eta, const TruncationPolicy& policy = {});
FockVector geometric_state_on(double eta, std::size_t n_max);

// normalize((a^dagger)^m |eta>_g), built by repeated creation on a geometric
// state sized for |eta, m>.
FockVector excited_geometric(double eta, std::size_t m, const TruncationPolicy& policy = {});

// ||(a^dagger)^m |eta>_g|, the inverse of the closed-form prefactor
// eta^{m/2}/sqrt(m!).  Computed numerically on the truncated basis.
double excited_geometric_norm(double eta, std::size_t m, const TruncationPolicy& policy = {});

FockVector number_state(std::size_t m, std::size_t n_max);

PairBasisVector two_mode_geometric(double eta, const TruncationPolicy& policy = {});
PairBasisVector two_mode_nbs(double eta, std::size_t m, const TruncationPolicy& policy = {});

// Pair-index truncation for the two-mode NBS of (eta, m).
std::size_t choose_pair_n_max(const NBSParams& params, const TruncationPolicy& policy);

}  // namespace nbs
