#pragma once

#include <cstddef>

namespace nbs {

// The (eta, M) pair labelling a negative binomial state.
// 0 < eta <= 1 is the single-photon detection probability and M >= 0 the
// number of detected photons.
class NBSParams {
public:
    // Throws InvalidArgument for eta outside (0, 1] or non-finite eta.
    NBSParams(double eta, std::size_t m);

    double eta() const noexcept { return eta_; }
    std::size_t m() const noexcept { return m_; }

private:
    double eta_;
    std::size_t m_;
};

}  // namespace nbs
