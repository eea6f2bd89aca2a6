#pragma once

// Action of the exponential of a real tridiagonal generator on a vector,
// exp(A) v, by scaling and a truncated Taylor series.
//
// A is split into s equal steps B = A/s with ||B||_1 <= theta, and each step
// sums enough Taylor terms that the remainder
//     theta^{m+1}/(m+1)! / (1 - theta/(m+2))
// stays below tol/s.  For skew-symmetric A (every generator in this library)
// exp(B) is orthogonal and the per-step errors add, so the total error is
// at most tol * ||v||.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "nbs/errors.hpp"

namespace nbs {

class Tridiagonal {
public:
    // diag has length d; lower/upper have length d-1.
    // (A v)_i = lower[i-1] v_{i-1} + diag[i] v_i + upper[i] v_{i+1}.
    Tridiagonal(std::vector<double> diag, std::vector<double> lower, std::vector<double> upper);

    std::size_t dim() const noexcept { return diag_.size(); }

    // Max absolute column sum.
    double norm1() const noexcept;

    template <typename T>
    void apply(std::span<const T> in, std::span<T> out, double scale) const
    {
        const std::size_t d = diag_.size();
        for (std::size_t i = 0; i < d; ++i) {
            T acc = diag_[i] * in[i];
            if (i > 0) {
                acc += lower_[i - 1] * in[i - 1];
            }
            if (i + 1 < d) {
                acc += upper_[i] * in[i + 1];
            }
            out[i] = scale * acc;
        }
    }

private:
    std::vector<double> diag_;
    std::vector<double> lower_;
    std::vector<double> upper_;
};

struct ExpmPlan {
    std::size_t steps = 1;
    std::size_t terms = 0;
};

// Number of steps and Taylor terms needed for exp(A) at tolerance tol.
ExpmPlan plan_expm(double norm1, double tol);

template <typename T>
std::vector<T> expm_action(const Tridiagonal& a, std::span<const T> v, double tol = 1e-12)
{
    if (v.size() != a.dim()) {
        throw InvalidArgument("expm_action: vector length does not match generator");
    }
    const ExpmPlan plan = plan_expm(a.norm1(), tol);
    const double inv_steps = 1.0 / static_cast<double>(plan.steps);

    std::vector<T> w(v.begin(), v.end());
    std::vector<T> term(w.size());
    std::vector<T> next(w.size());
    for (std::size_t step = 0; step < plan.steps; ++step) {
        std::copy(w.begin(), w.end(), term.begin());
        for (std::size_t k = 1; k <= plan.terms; ++k) {
            a.apply<T>(term, next, inv_steps / static_cast<double>(k));
            bool all_zero = true;
            for (std::size_t i = 0; i < w.size(); ++i) {
                w[i] += next[i];
                all_zero = all_zero && next[i] == T{};
            }
            std::swap(term, next);
            if (all_zero) {
                break;
            }
        }
    }
    return w;
}

}  // namespace nbs
