#include "staircase/golomb.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>

namespace staircase {

namespace {

// Minimal-length rulers, orders 2..12, generated and verified by the
// branch-and-bound search in tests/support/golomb_search.hpp.
const std::vector<int> kOptimalRulers[] = {
    {0, 1},
    {0, 1, 3},
    {0, 1, 4, 6},
    {0, 1, 4, 9, 11},
    {0, 1, 4, 10, 12, 17},
    {0, 1, 4, 10, 18, 23, 25},
    {0, 1, 4, 9, 15, 22, 32, 34},
    {0, 1, 5, 12, 25, 27, 35, 41, 44},
    {0, 1, 6, 10, 23, 26, 34, 41, 53, 55},
    {0, 1, 4, 13, 28, 33, 47, 54, 64, 70, 72},
    {0, 2, 6, 24, 29, 40, 43, 55, 68, 75, 76, 85},
};

} // namespace

GolombRuler optimal_ruler(int order) {
    if (order < kMinRulerOrder || order > kMaxRulerOrder)
        throw std::out_of_range("optimal_ruler: order " + std::to_string(order) +
                                " outside supported range [" + std::to_string(kMinRulerOrder) +
                                ", " + std::to_string(kMaxRulerOrder) + "]");
    return GolombRuler{kOptimalRulers[order - kMinRulerOrder]};
}

bool verify_ruler(std::span<const int> marks) {
    if (marks.empty() || marks[0] != 0)
        return false;
    for (size_t i = 1; i < marks.size(); ++i)
        if (marks[i] <= marks[i - 1])
            return false;
    std::unordered_set<int> diffs;
    for (size_t j = 1; j < marks.size(); ++j)
        for (size_t i = 0; i < j; ++i)
            if (!diffs.insert(marks[j] - marks[i]).second)
                return false;
    return true;
}

} // namespace staircase
