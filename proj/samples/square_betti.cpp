// Betti numbers of the Cech and Rips complexes of a square's corners.
#include <cstdio>

#include <betti_thermo/betti_thermo.hpp>

int main()
{
    using namespace bthermo;
    const auto square = PointCloud::from_points({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, 2);
    for (double r : {0.9, 1.05, 1.45}) {
        const auto cech = betti_numbers(build_cech(square, r, 2), 1);
        const auto rips = betti_numbers(build_rips(square, r, 2), 1);
        std::printf("r=%.2f  cech beta=(%zu,%zu)  rips beta=(%zu,%zu)\n", r, cech[0], cech[1], rips[0], rips[1]);
    }
}
