#pragma once

// Truncated single-mode Fock space: state vectors, ladder and diagonal
// operators, inner products and truncation-error accounting.

#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nbs/errors.hpp"
#include "nbs/params.hpp"

namespace nbs {

using complex = std::complex<double>;

// Amplitudes c_0..c_{n_max} of a single-mode state in the number basis.
//
// tail_bound is an upper bound on the probability mass the exact state
// carries above n_max.  Operators that push amplitude past the top of the
// basis add the dropped mass to it, so the bound only ever grows.
class FockVector {
public:
    // Zero vector on {|0>, ..., |n_max>}.
    explicit FockVector(std::size_t n_max);
    FockVector(std::vector<complex> amplitudes, double tail_bound);

    std::size_t n_max() const noexcept { return amps_.size() - 1; }
    std::size_t size() const noexcept { return amps_.size(); }
    double tail_bound() const noexcept { return tail_bound_; }

    std::span<const complex> amplitudes() const noexcept { return amps_; }
    const complex& operator[](std::size_t n) const { return amps_[n]; }

    double norm_squared() const noexcept;
    double norm() const noexcept { return std::sqrt(norm_squared()); }

    // Photon-number distribution |c_n|^2.
    std::vector<double> probabilities() const;

    // Rescaled to unit norm; tail_bound is rescaled with the amplitudes.
    FockVector normalized() const;
    FockVector scaled(complex factor) const;
    FockVector with_tail_bound(double tail_bound) const;

    // Zero-padded or cut to a new n_max.  Cut amplitudes go into tail_bound.
    FockVector resized(std::size_t n_max) const;

    // Lowest and highest index with a nonzero amplitude; (1, 0) for the
    // zero vector.
    std::size_t support_begin() const noexcept;
    std::size_t support_end() const noexcept;

private:
    std::vector<complex> amps_;
    double tail_bound_ = 0.0;
};

FockVector operator+(const FockVector& a, const FockVector& b);
FockVector operator-(const FockVector& a, const FockVector& b);
FockVector operator*(complex factor, const FockVector& v);

// Truncation control for adaptively sized states.
struct TruncationPolicy {
    double tail_eps = 1e-12;
    std::size_t n_hard_cap = 4096;

    // Throws InvalidArgument unless 0 < tail_eps < 1 and n_hard_cap >= 1.
    void validate() const;
};

// <a|b>.  Throws InvalidArgument when the truncations differ.
complex inner_product(const FockVector& a, const FockVector& b);

// ||a - b||, same dimension requirement as inner_product.
double distance(const FockVector& a, const FockVector& b);

FockVector apply_annihilation(const FockVector& v);
FockVector apply_creation(const FockVector& v);

// f(N) v for a real function of the photon number.  f is only consulted on
// the support of v; a non-finite value there throws NumericalError.
template <typename F>
    requires std::invocable<F, std::size_t>
FockVector apply_diag(const FockVector& v, F&& f)
{
    std::vector<complex> out(v.size());
    for (std::size_t n = 0; n < v.size(); ++n) {
        if (v[n] == complex{}) {
            continue;
        }
        const double fn = static_cast<double>(f(n));
        if (!std::isfinite(fn)) {
            throw NumericalError("apply_diag: non-finite diagonal value at n = " +
                                 std::to_string(n));
        }
        out[n] = fn * v[n];
    }
    return FockVector(std::move(out), v.tail_bound());
}

// log P(n) for the negative binomial photon distribution of |eta, M>.
// Returns -inf outside the support.
double log_nbs_probability(const NBSParams& params, std::size_t n);

// Sum over n > n_max of the negative binomial photon distribution.
double tail_mass_nbs(const NBSParams& params, std::size_t n_max);

// Smallest n_max on the schedule M+32, 2(M+32), ... (clamped to the hard
// cap) whose tail mass is below policy.tail_eps.  Throws TruncationError
// when the cap is not enough.
std::size_t choose_n_max(const NBSParams& params, const TruncationPolicy& policy);

}  // namespace nbs
