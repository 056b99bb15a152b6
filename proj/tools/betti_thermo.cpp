// Command-line front end: betti_thermo <command> [flags] [--config file.json]
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <betti_thermo/cli.hpp>

int main(int argc, char** argv)
{
    using namespace bthermo;
    cli::ExperimentConfig defaults;
    CLI::App app{"Betti numbers of random geometric complexes in the thermodynamic regime"};
    app.set_help_flag("-h,--help", "Print this help message and exit");

    std::string command, config_file, density, points, boundary, kind, quantity, process, out;
    int dim = 0, k = 0, max_dim = 0;
    double r = 0, lambda = 0, L = 0, s_max = 0, s_step = 0, curve_L = 0;
    std::size_t n = 0, reps = 0, curve_reps = 0, boxes = 0;
    std::vector<std::size_t> schedule;
    std::vector<double> thetas;
    std::uint64_t seed = 0;
    unsigned workers = 0;

    app.add_option("command", command, "sample | complex | betti | rate | curve | converge | gap | checks");
    app.add_option("--config", config_file, "JSON experiment description; flags override it");
    auto* o_dim = app.add_option("--dim", dim, "ambient dimension d");
    auto* o_k = app.add_option("--k", k, "homology degree (simplex dimension for --quantity simplex)");
    auto* o_max_dim = app.add_option("--max-dim", max_dim, "top simplex dimension for complex/betti");
    auto* o_r = app.add_option("--r", r, "connectivity radius");
    auto* o_lambda = app.add_option("--lambda", lambda, "Poisson intensity");
    auto* o_L = app.add_option("--L", L, "window volume");
    auto* o_n = app.add_option("--n", n, "sample size");
    auto* o_schedule = app.add_option("--n-schedule", schedule, "sample sizes for converge/gap")->delimiter(',');
    auto* o_reps = app.add_option("--reps", reps, "Monte Carlo replicates");
    auto* o_density = app.add_option("--density", density, "piecewise-constant density (JSON)");
    auto* o_points = app.add_option("--points", points, "point cloud file (CSV or whitespace)");
    auto* o_seed = app.add_option("--seed", seed, "master seed");
    auto* o_boundary = app.add_option("--boundary", boundary, "plain | torus")->check(CLI::IsMember({"plain", "torus"}));
    auto* o_kind = app.add_option("--complex", kind, "cech | rips")->check(CLI::IsMember({"cech", "rips"}));
    auto* o_quantity = app.add_option("--quantity", quantity, "betti | simplex (rate)");
    auto* o_process = app.add_option("--process", process, "binomial | poisson | poissonized");
    auto* o_s_max = app.add_option("--s-max", s_max, "largest curve argument");
    auto* o_s_step = app.add_option("--s-step", s_step, "curve grid step");
    auto* o_curve_L = app.add_option("--curve-L", curve_L, "torus volume for curve estimates");
    auto* o_curve_reps = app.add_option("--curve-reps", curve_reps, "replicates per curve point");
    auto* o_thetas = app.add_option("--theta", thetas, "scaling factors for checks")->delimiter(',');
    auto* o_boxes = app.add_option("--boxes", boxes, "sub-box count for the boundary-strip check");
    auto* o_workers = app.add_option("--workers", workers, "worker threads");
    auto* o_out = app.add_option("--out", out, "output prefix");

    CLI11_PARSE(app, argc, argv);

    cli::ExperimentConfig cfg = defaults;
    try {
        if (!config_file.empty())
            cfg = cli::load_config(config_file);
        if (!command.empty()) cfg.command = command;
        if (*o_dim) cfg.dim = dim;
        if (*o_k) cfg.k = k;
        if (*o_max_dim) cfg.max_dim = max_dim;
        if (*o_r) cfg.r = r;
        if (*o_lambda) cfg.lambda = lambda;
        if (*o_L) cfg.L = L;
        if (*o_n) cfg.n = n;
        if (*o_schedule) cfg.n_schedule = schedule;
        if (*o_reps) cfg.reps = reps;
        if (*o_density) cfg.density_file = density;
        if (*o_points) cfg.points_file = points;
        if (*o_seed) cfg.seed = seed;
        if (*o_boundary) cfg.boundary = boundary_mode_from_string(boundary);
        if (*o_kind) cfg.kind = cli::complex_kind_from_string(kind);
        if (*o_quantity) cfg.quantity = quantity;
        if (*o_process) cfg.process = process;
        if (*o_s_max) cfg.s_max = s_max;
        if (*o_s_step) cfg.s_step = s_step;
        if (*o_curve_L) cfg.curve_L = curve_L;
        if (*o_curve_reps) cfg.curve_reps = curve_reps;
        if (*o_thetas) cfg.thetas = thetas;
        if (*o_boxes) cfg.boxes = boxes;
        if (*o_workers) cfg.workers = workers;
        if (*o_out) cfg.output_prefix = out;
    } catch (const std::exception& e) {
        std::cerr << "betti_thermo: error: " << e.what() << "\n";
        return 2;
    }
    if (cfg.command.empty()) {
        std::cerr << "betti_thermo: error: no command given\n" << app.help();
        return 2;
    }
    return cli::run(cfg, std::cout, std::cerr);
}
