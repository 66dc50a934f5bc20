#pragma once

// Sign of the adjacent-exchange gain, the one comparison the sequential
// search makes at every node.
//
// For airplane x directly in front of y, with consumption R behind y:
//
//     sign(S(x,y) - S(y,x)) = sign(v_y c_x (c_x + R) - v_x c_y (c_y + R))
//
// The right-hand side is invariant under scaling every v by one positive
// factor and every c by another, so an instance can be brought to integers
// once and compared in 128-bit arithmetic when the magnitudes allow.

#include "arp/model.hpp"

#include <optional>
#include <vector>

namespace arp {

/// Exact rational route.
[[nodiscard]] int preference_sign(const Airplane &x, const Airplane &y, const Rational &behind);

/// Integer route: v scaled by the lcm of the v denominators, c by the lcm of
/// the c denominators. Only built when every product the search can form
/// stays below 2^125.
class ScaledPreference {
public:
    __extension__ typedef __int128 Int;

    [[nodiscard]] static std::optional<ScaledPreference> build(const Instance &inst);

    /// Scaled consumption rate of 1-based `id`.
    [[nodiscard]] Int rate(std::size_t id) const { return rates_[id]; }

    /// `behind` is a sum of scaled rates.
    [[nodiscard]] int sign(std::size_t x, std::size_t y, Int behind) const {
        const Int lhs = cross_[x * stride_ + y] * (rates_[x] + behind);
        const Int rhs = cross_[y * stride_ + x] * (rates_[y] + behind);
        return (lhs > rhs) - (lhs < rhs);
    }

private:
    ScaledPreference() = default;

    std::size_t stride_ = 0;
    std::vector<Int> rates_;
    std::vector<Int> cross_; // cross_[x][y] = V_y * C_x
};

} // namespace arp
