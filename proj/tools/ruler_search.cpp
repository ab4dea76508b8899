// Regenerates the minimal Golomb ruler table embedded in src/golomb.cpp.
// Order 12 takes around a minute; higher orders grow quickly.

#include "../tests/support/golomb_search.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv) {
    int max_order = argc > 1 ? std::atoi(argv[1]) : 12;
    for (int order = 2; order <= max_order; ++order) {
        auto r = staircase::oracle::minimal_golomb_ruler(order);
        std::printf("order %2d length %3d  {", order, r.back());
        for (size_t i = 0; i < r.size(); ++i)
            std::printf("%s%d", i ? ", " : "", r[i]);
        std::printf("}\n");
        std::fflush(stdout);
    }
    return 0;
}
