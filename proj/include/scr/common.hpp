#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace scr {

// All user-facing failures derive from Error so the CLI can map them to exit code 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Mask = std::uint64_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline bool has(Mask m, int i) { return (m >> i) & 1u; }
inline Mask bit(int i) { return Mask{1} << i; }
inline Mask full_mask(int n) { return n >= 64 ? ~Mask{0} : (bit(n) - 1); }

inline std::vector<int> mask_elements(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

}  // namespace scr
