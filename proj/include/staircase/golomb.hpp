#pragma once

#include <span>
#include <vector>

namespace staircase {

// Golomb ruler: strictly increasing marks d_0 = 0 < d_1 < ... < d_M with all
// positive pairwise differences distinct. order() = number of marks.
struct GolombRuler {
    std::vector<int> marks;

    int order() const { return static_cast<int>(marks.size()); }
    int length() const { return marks.empty() ? 0 : marks.back(); }
};

inline constexpr int kMinRulerOrder = 2;
inline constexpr int kMaxRulerOrder = 12;

// Minimal-length ruler of the given order from the built-in table.
// Throws std::out_of_range outside [kMinRulerOrder, kMaxRulerOrder].
GolombRuler optimal_ruler(int order);

// True iff marks start at 0, strictly increase, and all positive pairwise
// differences are distinct. Malformed input returns false, never throws.
bool verify_ruler(std::span<const int> marks);

inline bool verify_ruler(const GolombRuler& r) { return verify_ruler(std::span<const int>(r.marks)); }

} // namespace staircase
