#pragma once

// Interaction-picture generation schemes for |eta, M>:
//  - single-mode intensity-dependent coupling, U = exp(chi t (K+ - K-)) on |M>;
//  - non-degenerate parametric amplification of |0,0> followed by
//    first-order atom passage, which adds M photons to the signal mode.
// Free-evolution phases are not applied; every reported quantity is
// insensitive to them.

#include <cstddef>

#include "nbs/fock.hpp"
#include "nbs/states.hpp"

namespace nbs {

struct EvolutionSpec {
    double chi_t = 0.0;
    std::size_t m = 0;
    TruncationPolicy policy{};
};

// 1 - tanh^2(chi t), the eta reached after coupling time chi t.
double eta_after(double chi_t);

FockVector evolve_intensity_dependent(const EvolutionSpec& spec);

// exp(chi t (a1^dagger a2^dagger - a1 a2)) |0,0> on the pair basis {|n,n>}.
PairBasisVector evolve_parametric(double chi_t, const TruncationPolicy& policy = {});

// Same generator on an explicit pair-index bound.
PairBasisVector evolve_parametric_on(double chi_t, std::size_t n_max);

inline constexpr double kMaxAtomCoupling = 0.1;

struct AtomPassage {
    // Field state conditioned on finding the atom in |g>, normalized.
    PairBasisVector ground_branch;
    // Weight of the unchanged |e> branch in the normalized first-order state.
    double excited_weight;
};

// First-order passage of an excited atom coupled through a1^{m_photon}:
// |psi>|e> - i g t (a1^dagger)^{m_photon} |psi>|g>.  Requires 0 < g_t <= 0.1
// and m_photon >= 1.
AtomPassage atom_passage(const PairBasisVector& state, double g_t, std::size_t m_photon);

// |<a|b>|^2 / (||a||^2 ||b||^2).
double fidelity(const FockVector& a, const FockVector& b);
// Pair-basis overlap; the offsets must agree and the shorter vector is
// zero-padded.
double fidelity(const PairBasisVector& a, const PairBasisVector& b);

}  // namespace nbs
