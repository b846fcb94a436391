#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace curvco {

// Bidegree (z, w): cohomological degree z and weight w >= 0.
// Maps of degree d send (z, w) to (z + d, w); w never contributes signs.
struct Bidegree {
    int z = 0;
    int w = 0;

    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;

    Bidegree shifted_z(int d) const { return Bidegree{z + d, w}; }
    Bidegree operator+(const Bidegree& o) const { return Bidegree{z + o.z, w + o.w}; }
};

inline std::ostream& operator<<(std::ostream& os, const Bidegree& b) {
    return os << "(" << b.z << "," << b.w << ")";
}

} // namespace curvco

template <>
struct std::hash<curvco::Bidegree> {
    size_t operator()(const curvco::Bidegree& b) const noexcept {
        return std::hash<int64_t>{}((int64_t(b.z) << 32) ^ uint32_t(b.w));
    }
};
