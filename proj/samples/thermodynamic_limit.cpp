// E[beta_1]/n for a two-level density next to its thermodynamic limit.
#include <cmath>
#include <cstdio>

#include <betti_thermo/betti_thermo.hpp>

int main()
{
    using namespace bthermo;
    const DensityGrid density(CellGrid(Window::unit_cube(2), {2, 1}), {1.5, 0.5});

    CurveConfig cc;
    cc.s_grid = uniform_grid(1.3, 0.1);
    cc.reps = 100;
    const auto curve = build_limit_curve(cc, RngStream(1));
    const auto target = thermodynamic_integral(density, 1.0, 1, curve);
    std::printf("limit %.5f +- %.5f\n", target.value, target.std_error);

    ExpectationConfig ec;
    ec.r = 1.0;
    ec.k = 1;
    ec.reps = 100;
    const auto table = convergence_experiment(SampleProcess::binomial, density, {200, 800, 3200}, ec, target.value,
                                              target.std_error, RngStream(2));
    for (const auto& row : table.rows)
        std::printf("n=%-5zu E[beta_1]/n = %.5f +- %.5f  gap %.5f\n", row.n, row.mean, row.std_error, row.gap);
}
