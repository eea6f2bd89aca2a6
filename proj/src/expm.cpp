#include "nbs/expm.hpp"

namespace nbs {

Tridiagonal::Tridiagonal(std::vector<double> diag, std::vector<double> lower,
                         std::vector<double> upper)
    : diag_(std::move(diag)), lower_(std::move(lower)), upper_(std::move(upper))
{
    if (diag_.empty() || lower_.size() + 1 != diag_.size() || upper_.size() + 1 != diag_.size()) {
        throw InvalidArgument("Tridiagonal: inconsistent band lengths");
    }
}

double Tridiagonal::norm1() const noexcept
{
    const std::size_t d = diag_.size();
    double best = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
        double col = std::abs(diag_[j]);
        if (j + 1 < d) {
            col += std::abs(lower_[j]);
        }
        if (j > 0) {
            col += std::abs(upper_[j - 1]);
        }
        best = std::max(best, col);
    }
    return best;
}

ExpmPlan plan_expm(double norm1, double tol)
{
    if (!(tol > 0.0) || !std::isfinite(norm1)) {
        throw InvalidArgument("plan_expm: need tol > 0 and a finite norm");
    }
    constexpr double kTheta = 2.0;
    ExpmPlan plan;
    plan.steps = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(norm1 / kTheta)));
    const double theta = norm1 / static_cast<double>(plan.steps);
    const double per_step = tol / static_cast<double>(plan.steps);
    if (theta == 0.0) {
        return plan;
    }
    // bound_m = theta^{m+1}/(m+1)! / (1 - theta/(m+2))
    double power = theta;  // theta^{m+1}/(m+1)! at m = 0
    for (std::size_t m = 0; m < 200; ++m) {
        const double ratio = theta / static_cast<double>(m + 2);
        if (ratio < 1.0 && power / (1.0 - ratio) <= per_step) {
            plan.terms = m;
            return plan;
        }
        power *= ratio;
    }
    plan.terms = 200;
    return plan;
}

}  // namespace nbs
