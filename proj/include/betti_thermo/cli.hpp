/**
 * Experiment runner behind the `betti_thermo` command-line tool.
 *
 * A run is described by an ExperimentConfig, read from an optional JSON
 * document and then overridden by command-line flags.  Artifacts are written
 * as <prefix>.<command>.{csv,json,dat} (the `complex` command also writes a
 * .txt simplex dump), each through a temporary file and a rename.
 */
#ifndef BETTI_THERMO_CLI_HPP
#define BETTI_THERMO_CLI_HPP

#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cech.hpp"
#include "density.hpp"
#include "homology.hpp"
#include "io.hpp"
#include "limits.hpp"
#include "pointproc.hpp"

namespace bthermo::cli {

struct ExperimentConfig
{
    std::string command;
    int dim = 2;
    int k = 1;
    std::optional<int> max_dim;
    double r = 1.0;
    double lambda = 1.0;
    double L = 400.0;
    std::size_t n = 1000;
    std::vector<std::size_t> n_schedule{200, 400, 800, 1600};
    std::size_t reps = 100;
    std::optional<std::string> density_file;
    std::optional<std::string> points_file;
    std::uint64_t seed = 1;
    BoundaryMode boundary = BoundaryMode::plain;
    ComplexKind kind = ComplexKind::cech;
    std::string quantity = "betti";     // rate: betti | simplex
    std::string process = "binomial";   // sample/complex/betti/converge: binomial | poisson | poissonized
    double s_max = 0.0;                 // curve: 0 means r * sup(f)^{1/d}
    double s_step = 0.1;
    double curve_L = 400.0;
    std::optional<std::size_t> curve_reps;
    std::vector<double> thetas{2.0, 4.0};
    std::size_t boxes = 4;
    unsigned workers = 1;
    std::string output_prefix = "betti_thermo";
};

inline const std::set<std::string>& commands()
{
    static const std::set<std::string> c{"sample", "complex", "betti", "rate", "curve", "converge", "gap", "checks"};
    return c;
}

inline ComplexKind complex_kind_from_string(const std::string& s)
{
    if (s == "cech")
        return ComplexKind::cech;
    if (s == "rips")
        return ComplexKind::rips;
    throw std::invalid_argument("unknown complex kind '" + s + "' (expected cech or rips)");
}

/// Fields present in the JSON document replace the defaults.
inline void apply_json(ExperimentConfig& c, const nlohmann::json& j)
{
    static const std::set<std::string> known{
        "command", "dim",     "k",       "max_dim",  "r",          "lambda",   "L",      "n",
        "n_schedule", "reps", "density", "points",   "seed",       "boundary", "complex", "quantity",
        "process", "s_max",   "s_step",  "curve_L",  "curve_reps", "thetas",   "boxes",  "workers",
        "out"};
    if (!j.is_object())
        throw std::invalid_argument("config: top level must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!known.count(it.key()))
            throw std::invalid_argument("config: unknown key '" + it.key() + "'");
    try {
        if (j.contains("command")) c.command = j["command"].get<std::string>();
        if (j.contains("dim")) c.dim = j["dim"].get<int>();
        if (j.contains("k")) c.k = j["k"].get<int>();
        if (j.contains("max_dim")) c.max_dim = j["max_dim"].get<int>();
        if (j.contains("r")) c.r = j["r"].get<double>();
        if (j.contains("lambda")) c.lambda = j["lambda"].get<double>();
        if (j.contains("L")) c.L = j["L"].get<double>();
        if (j.contains("n")) c.n = j["n"].get<std::size_t>();
        if (j.contains("n_schedule")) c.n_schedule = j["n_schedule"].get<std::vector<std::size_t>>();
        if (j.contains("reps")) c.reps = j["reps"].get<std::size_t>();
        if (j.contains("density")) c.density_file = j["density"].get<std::string>();
        if (j.contains("points")) c.points_file = j["points"].get<std::string>();
        if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("boundary")) c.boundary = boundary_mode_from_string(j["boundary"].get<std::string>());
        if (j.contains("complex")) c.kind = complex_kind_from_string(j["complex"].get<std::string>());
        if (j.contains("quantity")) c.quantity = j["quantity"].get<std::string>();
        if (j.contains("process")) c.process = j["process"].get<std::string>();
        if (j.contains("s_max")) c.s_max = j["s_max"].get<double>();
        if (j.contains("s_step")) c.s_step = j["s_step"].get<double>();
        if (j.contains("curve_L")) c.curve_L = j["curve_L"].get<double>();
        if (j.contains("curve_reps")) c.curve_reps = j["curve_reps"].get<std::size_t>();
        if (j.contains("thetas")) c.thetas = j["thetas"].get<std::vector<double>>();
        if (j.contains("boxes")) c.boxes = j["boxes"].get<std::size_t>();
        if (j.contains("workers")) c.workers = j["workers"].get<unsigned>();
        if (j.contains("out")) c.output_prefix = j["out"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
}

inline ExperimentConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open config file '" + path.string() + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config file '" + path.string() + "': " + e.what());
    }
    ExperimentConfig c;
    apply_json(c, j);
    return c;
}

namespace detail {

inline void require(bool ok, const std::string& what)
{
    if (!ok)
        throw std::invalid_argument(what);
}

inline DensityGrid density_of(const ExperimentConfig& c)
{
    if (c.density_file)
        return load_density(*c.density_file);
    return DensityGrid::uniform(Window::unit_cube(c.dim));
}

inline std::size_t curve_reps(const ExperimentConfig& c) { return c.curve_reps.value_or(c.reps); }

inline CurveConfig curve_config(const ExperimentConfig& c, double needed_s)
{
    CurveConfig cc;
    cc.dim = c.dim;
    cc.k = c.k;
    cc.s_grid = uniform_grid(c.s_max > 0.0 ? c.s_max : needed_s, c.s_step);
    cc.L = c.curve_L;
    cc.reps = curve_reps(c);
    cc.boundary = BoundaryMode::torus;
    cc.kind = c.kind;
    cc.workers = c.workers;
    return cc;
}

inline RateConfig rate_config(const ExperimentConfig& c)
{
    RateConfig rc;
    rc.dim = c.dim;
    rc.lambda = c.lambda;
    rc.r = c.r;
    rc.L = c.L;
    rc.k = c.k;
    rc.reps = c.reps;
    rc.boundary = c.boundary;
    rc.kind = c.kind;
    rc.workers = c.workers;
    return rc;
}

inline ExpectationConfig expectation_config(const ExperimentConfig& c)
{
    ExpectationConfig e;
    e.n = c.n;
    e.r = c.r;
    e.k = c.k;
    e.reps = c.reps;
    e.kind = c.kind;
    e.workers = c.workers;
    return e;
}

}  // namespace detail

/// Checks every precondition of the downstream operations; nothing is
/// sampled or written before this passes.
inline void validate(const ExperimentConfig& c)
{
    using detail::require;
    require(commands().count(c.command) == 1, "unknown command '" + c.command + "'");
    require(c.dim >= 1, "--dim must be >= 1");
    require(c.r > 0.0 && std::isfinite(c.r), "--r must be > 0");
    require(c.lambda >= 0.0 && std::isfinite(c.lambda), "--lambda must be >= 0");
    require(c.workers >= 1, "--workers must be >= 1");
    require(!c.output_prefix.empty(), "--out must not be empty");
    require(c.process == "binomial" || c.process == "poisson" || c.process == "poissonized",
            "--process must be binomial, poisson or poissonized");
    if (c.density_file) {
        require(std::filesystem::exists(*c.density_file), "density file '" + *c.density_file + "' does not exist");
        require(load_density(*c.density_file).dim() == c.dim, "density dimension differs from --dim");
    }
    if (c.points_file)
        require(std::filesystem::exists(*c.points_file), "point file '" + *c.points_file + "' does not exist");

    const bool needs_cloud = c.command == "sample" || c.command == "complex" || c.command == "betti";
    if (needs_cloud && !c.points_file) {
        if (c.process == "poisson")
            require(c.L > 0.0, "--L must be > 0");
        else
            require(c.n >= (c.process == "poissonized" ? 1u : 0u), "--n must be >= 1 for poissonized samples");
    }
    if (c.command == "complex" || c.command == "betti") {
        require(c.k >= 0, "--k must be >= 0");
        if (c.max_dim)
            require(*c.max_dim >= (c.command == "betti" ? c.k + 1 : 0), "--max-dim must be >= k+1");
    }
    if (c.command == "rate") {
        require(c.quantity == "betti" || c.quantity == "simplex", "--quantity must be betti or simplex");
        require(c.L > std::pow(3.0 * c.r, c.dim), "window too small: need L > (3r)^d");
        require(c.reps >= 2, "--reps must be >= 2");
        if (c.quantity == "betti")
            require(c.k >= 1 && c.k <= c.dim - 1, "--k must satisfy 1 <= k <= d-1");
        else
            require(c.k >= 0, "--k (simplex dimension) must be >= 0");
    }
    if (c.command == "curve" || c.command == "converge") {
        require(c.k >= 1 && c.k <= c.dim - 1, "--k must satisfy 1 <= k <= d-1");
        require(c.s_step > 0.0, "--s-step must be > 0");
        require(c.s_max >= 0.0, "--s-max must be >= 0");
        require(c.curve_L > 0.0, "--curve-L must be > 0");
        require(detail::curve_reps(c) >= 2, "--curve-reps must be >= 2");
        double needed = c.s_max;
        if (c.command == "converge") {
            const double sup = detail::density_of(c).sup_value();
            needed = std::max(needed, std::pow(sup, 1.0 / c.dim) * c.r);
            require(c.s_max == 0.0 || c.s_max >= std::pow(sup, 1.0 / c.dim) * c.r,
                    "--s-max does not cover sup(f)^{1/d} r");
        }
        require(needed > 0.0, "curve: --s-max must be > 0");
        require(c.curve_L > std::pow(3.0 * needed, c.dim), "curve window too small: need curve-L > (3 s_max)^d");
    }
    if (c.command == "converge" || c.command == "gap") {
        require(c.reps >= 2, "--reps must be >= 2");
        require(c.k >= 0, "--k must be >= 0");
        validate_schedule(c.n_schedule);
        require(c.process != "poisson", "--process must be binomial or poissonized here");
    }
    if (c.command == "checks") {
        require(c.k >= 1 && c.k <= c.dim - 1, "--k must satisfy 1 <= k <= d-1");
        require(c.reps >= 2, "--reps must be >= 2");
        require(c.L > std::pow(3.0 * c.r, c.dim), "window too small: need L > (3r)^d");
        for (double t : c.thetas)
            require(t > 0.0, "--theta values must be > 0");
        const Window w = Window::centered_cube(c.dim, c.L);
        const auto boxes = partition_window(w, c.boxes);
        require(boxes.front().side(0) > 2.0 * c.r, "sub-box side must exceed 2r");
    }
}

namespace detail {

inline std::filesystem::path artifact(const ExperimentConfig& c, const std::string& ext)
{
    return c.output_prefix + "." + c.command + "." + ext;
}

inline PointCloud cloud_of(const ExperimentConfig& c)
{
    if (c.points_file)
        return io::read_points(*c.points_file);
    const RngStream rng(c.seed);
    if (c.process == "poisson")
        return sample_poisson_homogeneous(c.lambda, Window::centered_cube(c.dim, c.L), rng);
    const DensityGrid density = density_of(c);
    if (c.process == "poissonized")
        return poissonize(density, c.n, rng);
    return sample_binomial(density, c.n, rng);
}

inline std::string fmt(double x) { return io::fmt_real(x, 6); }

inline int run_sample(const ExperimentConfig& c, std::ostream& out)
{
    const PointCloud cloud = cloud_of(c);
    io::write_atomic(artifact(c, "csv"), io::points_csv(cloud));
    nlohmann::ordered_json meta{{"process", c.points_file ? "file" : c.process},
                                {"dim", cloud.dim()},
                                {"count", cloud.size()},
                                {"seed", c.seed}};
    io::write_atomic(artifact(c, "json"), meta.dump(2) + "\n");
    out << "sample: " << (c.points_file ? "file" : c.process) << " count=" << cloud.size() << "\n";
    return 0;
}

inline SimplicialComplex complex_of(const ExperimentConfig& c, const PointCloud& cloud, int max_dim)
{
    return build_complex(c.kind, cloud, c.r, max_dim, EuclideanSpace{});
}

inline int run_complex(const ExperimentConfig& c, std::ostream& out)
{
    const PointCloud cloud = cloud_of(c);
    const auto complex = complex_of(c, cloud, c.max_dim.value_or(c.k + 1));
    std::vector<std::size_t> counts;
    for (int j = 0; j <= complex.max_dim(); ++j)
        counts.push_back(complex.count(j));
    io::write_atomic(artifact(c, "txt"), io::complex_dump(complex));
    std::string csv = "j,count\n";
    for (std::size_t j = 0; j < counts.size(); ++j)
        csv += std::to_string(j) + "," + std::to_string(counts[j]) + "\n";
    io::write_atomic(artifact(c, "csv"), csv);
    nlohmann::ordered_json meta{{"complex", c.kind == ComplexKind::cech ? "cech" : "rips"},
                                {"r", c.r},
                                {"max_dim", complex.max_dim()},
                                {"simplex_counts", counts}};
    io::write_atomic(artifact(c, "json"), meta.dump(2) + "\n");
    out << "complex: S =";
    for (auto s : counts)
        out << ' ' << s;
    out << "\n";
    return 0;
}

inline int run_betti(const ExperimentConfig& c, std::ostream& out)
{
    const PointCloud cloud = cloud_of(c);
    const int max_k = c.k;
    const auto complex = complex_of(c, cloud, c.max_dim.value_or(max_k + 1));
    const auto betti = betti_numbers(complex, max_k);
    std::string csv = "k,beta\n";
    for (int k = 0; k <= max_k; ++k)
        csv += std::to_string(k) + "," + std::to_string(betti[k]) + "\n";
    io::write_atomic(artifact(c, "csv"), csv);
    nlohmann::ordered_json meta{{"complex", c.kind == ComplexKind::cech ? "cech" : "rips"},
                                {"r", c.r},
                                {"vertices", cloud.size()},
                                {"betti", betti.values}};
    io::write_atomic(artifact(c, "json"), meta.dump(2) + "\n");
    out << "beta:";
    for (auto b : betti.values)
        out << ' ' << b;
    out << "\n";
    return 0;
}

inline int run_rate(const ExperimentConfig& c, std::ostream& out)
{
    const RateConfig rc = rate_config(c);
    const RngStream rng(c.seed);
    const EstimateRecord rec = c.quantity == "betti" ? estimate_betti_rate(rc, rng) : estimate_simplex_rate(rc, rng);
    io::write_atomic(artifact(c, "csv"), io::records_csv({rec}));
    io::write_atomic(artifact(c, "json"), io::to_json(rec).dump(2) + "\n");
    out << to_string(rec.quantity) << ": " << fmt(rec.mean) << " +- " << fmt(rec.std_error) << "\n";
    return 0;
}

inline LimitCurve cached_curve(const ExperimentConfig& c, double needed_s, std::ostream& out)
{
    const CurveConfig cc = curve_config(c, needed_s);
    const CurveCache cache = CurveCache::from_environment();
    bool cached = false;
    auto curve = cache.get_or_build(cc, RngStream(c.seed), &cached);
    out << "curve: " << (cached ? "loaded " : "stored ") << cache.path_for(cc, RngStream(c.seed)).string() << "\n";
    return curve;
}

inline int run_curve(const ExperimentConfig& c, std::ostream& out)
{
    const LimitCurve curve = cached_curve(c, c.s_max, out);
    io::write_atomic(artifact(c, "csv"), io::curve_csv(curve));
    io::write_atomic(artifact(c, "json"), io::to_json(curve).dump(2) + "\n");
    io::emit_plot_data(curve, artifact(c, "dat"));
    out << "curve: " << curve.s_grid.size() << " points, beta_" << curve.k << "(1, " << fmt(curve.s_max())
        << ") = " << fmt(curve.values.back()) << " +- " << fmt(curve.stderrs.back()) << "\n";
    return 0;
}

inline int run_converge(const ExperimentConfig& c, std::ostream& out)
{
    const DensityGrid density = density_of(c);
    const double needed = std::pow(density.sup_value(), 1.0 / c.dim) * c.r;
    const LimitCurve curve = cached_curve(c, needed, out);
    const auto target = thermodynamic_integral(density, c.r, c.k, curve);
    const SampleProcess process = c.process == "poissonized" ? SampleProcess::poissonized : SampleProcess::binomial;
    const auto table = convergence_experiment(process, density, c.n_schedule, expectation_config(c), target.value,
                                              target.std_error, RngStream(c.seed));
    io::write_atomic(artifact(c, "csv"), io::convergence_csv(table));
    io::write_atomic(artifact(c, "json"), io::to_json(table).dump(2) + "\n");
    io::emit_plot_data(table, artifact(c, "dat"));
    const auto& last = table.rows.back();
    const double tol = 3.0 * std::hypot(last.std_error, target.std_error) + 0.1 * target.value;
    out << "converge: n=" << last.n << " mean=" << fmt(last.mean) << " +- " << fmt(last.std_error)
        << " target=" << fmt(target.value) << " +- " << fmt(target.std_error) << " gap=" << fmt(last.gap)
        << " tol=" << fmt(tol) << (last.gap <= tol ? " PASS" : " FAIL") << "\n";
    return 0;
}

inline int run_gap(const ExperimentConfig& c, std::ostream& out)
{
    const DensityGrid density = density_of(c);
    const auto table = poissonization_gap(density, c.n_schedule, expectation_config(c), RngStream(c.seed));
    io::write_atomic(artifact(c, "csv"), io::gap_csv(table));
    io::write_atomic(artifact(c, "json"), io::to_json(table).dump(2) + "\n");
    io::emit_plot_data(table, artifact(c, "dat"));
    const auto& first = table.rows.front();
    const auto& last = table.rows.back();
    out << "gap: g(" << first.n << ")=" << fmt(first.gap) << " g(" << last.n << ")=" << fmt(last.gap)
        << " g*sqrt(n): " << fmt(first.scaled_gap()) << " -> " << fmt(last.scaled_gap()) << "\n";
    return 0;
}

inline int run_checks(const ExperimentConfig& c, std::ostream& out)
{
    const RngStream rng(c.seed);
    std::string csv = "check,param,lhs,rhs,tolerance,pass\n";
    bool all = true;
    std::uint64_t stream = 0;
    for (double theta : c.thetas) {
        const auto rep = scaling_check(rate_config(c), theta, rng.derive(stream++));
        csv += "scaling,theta=" + io::fmt_real(theta) + "," + io::fmt_real(rep.lhs, 17) + "," +
               io::fmt_real(rep.rhs, 17) + "," + io::fmt_real(3.0 * rep.combined_stderr, 17) + "," +
               (rep.pass ? "1" : "0") + "\n";
        all = all && rep.pass;
    }
    StripConfig sc;
    sc.dim = c.dim;
    sc.lambda = c.lambda;
    sc.r = c.r;
    sc.L = c.L;
    sc.sub_box_count = c.boxes;
    sc.k = c.k;
    sc.reps = c.reps;
    sc.workers = c.workers;
    const auto strip = boundary_strip_check(sc, rng.derive(stream++));
    csv += "boundary_strip,boxes=" + std::to_string(c.boxes) + "," + std::to_string(strip.min_slack) + "," +
           std::to_string(strip.max_slack) + ",0," + (strip.all_hold ? "1" : "0") + "\n";
    all = all && strip.all_hold;
    io::write_atomic(artifact(c, "csv"), csv);
    nlohmann::ordered_json meta{{"all_pass", all}, {"boundary_strip_min_slack", strip.min_slack}};
    io::write_atomic(artifact(c, "json"), meta.dump(2) + "\n");
    out << "checks: " << (all ? "pass" : "fail") << "\n";
    return all ? 0 : 1;
}

}  // namespace detail

/// Validates, runs, and reports.  Returns the process exit status.
inline int run(const ExperimentConfig& c, std::ostream& out, std::ostream& err)
{
    try {
        validate(c);
        if (c.command == "sample") return detail::run_sample(c, out);
        if (c.command == "complex") return detail::run_complex(c, out);
        if (c.command == "betti") return detail::run_betti(c, out);
        if (c.command == "rate") return detail::run_rate(c, out);
        if (c.command == "curve") return detail::run_curve(c, out);
        if (c.command == "converge") return detail::run_converge(c, out);
        if (c.command == "gap") return detail::run_gap(c, out);
        return detail::run_checks(c, out);
    } catch (const std::exception& e) {
        err << "betti_thermo " << c.command << ": error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace bthermo::cli

#endif
