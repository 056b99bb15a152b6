/**
 * Monte Carlo estimators for thermodynamic-regime limits of Betti numbers
 * and simplex counts, and the experiments built on them.
 *
 * Conventions:
 *  - per-volume rates sample P_L(lambda) on W_L = [-L^{1/d}/2, L^{1/d}/2)^d;
 *  - per-n expectations use r_n = r n^{-1/d}, realized by scaling the cloud
 *    by n^{1/d} and building at radius r;
 *  - replicate i of every estimator runs on rng.derive(i).
 */
#ifndef BETTI_THERMO_LIMITS_HPP
#define BETTI_THERMO_LIMITS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cech.hpp"
#include "density.hpp"
#include "homology.hpp"
#include "metric.hpp"
#include "point_cloud.hpp"
#include "pointproc.hpp"
#include "records.hpp"
#include "replicates.hpp"
#include "rng.hpp"

namespace bthermo {

/// Calls fn(space) with the ambient space matching the boundary mode.
template <typename Fn>
decltype(auto) with_space(BoundaryMode mode, const Window& window, Fn&& fn)
{
    if (mode == BoundaryMode::torus)
        return fn(FlatTorus(window));
    return fn(EuclideanSpace{});
}

struct RateConfig
{
    int dim = 2;
    double lambda = 1.0;
    double r = 1.0;
    double L = 400.0;
    int k = 1;  // Betti index, or simplex dimension j for simplex rates
    std::size_t reps = 100;
    BoundaryMode boundary = BoundaryMode::plain;
    ComplexKind kind = ComplexKind::cech;
    unsigned workers = 1;
};

namespace detail {

inline void validate_rate_config(const RateConfig& c, bool betti)
{
    if (c.dim < 1)
        throw std::invalid_argument("dim must be >= 1");
    if (!(c.lambda >= 0.0) || !std::isfinite(c.lambda))
        throw std::invalid_argument("lambda must be finite and >= 0");
    if (!(c.r > 0.0))
        throw std::invalid_argument("r must be > 0");
    if (!(c.L > std::pow(3.0 * c.r, c.dim)))
        throw std::invalid_argument("window too small: need L > (3r)^d");
    if (c.reps < 2)
        throw std::invalid_argument("reps must be >= 2");
    if (betti && (c.k < 1 || c.k > c.dim - 1))
        throw std::invalid_argument("Betti index k must satisfy 1 <= k <= d-1");
    if (!betti && c.k < 0)
        throw std::invalid_argument("simplex dimension j must be >= 0");
}

inline EstimateRecord make_record(Quantity q, const RateConfig& c, const RngStream& rng, const SampleSummary& s)
{
    EstimateRecord rec;
    rec.quantity = q;
    rec.k_or_j = c.k;
    rec.lambda = c.lambda;
    rec.r = c.r;
    rec.L_or_n = c.L;
    rec.mean = s.mean;
    rec.std_error = s.std_error;
    rec.reps = s.count;
    rec.master_seed = rng.master_seed();
    rec.boundary_mode = c.boundary;
    return rec;
}

}  // namespace detail

/// Mean of beta_k(C(P_L(lambda), r)) / L over replicates.
inline EstimateRecord estimate_betti_rate(const RateConfig& c, const RngStream& rng)
{
    detail::validate_rate_config(c, true);
    const Window window = Window::centered_cube(c.dim, c.L);
    const auto samples = run_replicates(c.reps, rng, c.workers, [&](RngStream s, std::size_t) {
        const PointCloud cloud = sample_poisson_homogeneous(c.lambda, window, s);
        return with_space(c.boundary, window, [&](const auto& space) {
            const auto complex = build_complex(c.kind, cloud, c.r, c.k + 1, space);
            return static_cast<double>(betti_number(complex, c.k)) / c.L;
        });
    });
    return detail::make_record(Quantity::betti_rate, c, rng, summarize(samples));
}

/// Mean of S_j(lambda, r; L) / L, with j = c.k.
inline EstimateRecord estimate_simplex_rate(const RateConfig& c, const RngStream& rng)
{
    detail::validate_rate_config(c, false);
    const Window window = Window::centered_cube(c.dim, c.L);
    const auto samples = run_replicates(c.reps, rng, c.workers, [&](RngStream s, std::size_t) {
        const PointCloud cloud = sample_poisson_homogeneous(c.lambda, window, s);
        return with_space(c.boundary, window, [&](const auto& space) {
            const auto complex = build_complex(c.kind, cloud, c.r, c.k, space);
            return static_cast<double>(complex.count(c.k)) / c.L;
        });
    });
    return detail::make_record(Quantity::simplex_rate, c, rng, summarize(samples));
}

struct CurveConfig
{
    int dim = 2;
    int k = 1;
    std::vector<double> s_grid;
    double L = 400.0;
    std::size_t reps = 100;
    BoundaryMode boundary = BoundaryMode::torus;
    ComplexKind kind = ComplexKind::cech;
    unsigned workers = 1;
};

/// Evenly spaced grid 0, step, 2 step, ... reaching at least s_max.
inline std::vector<double> uniform_grid(double s_max, double step)
{
    if (!(step > 0.0) || !(s_max >= 0.0))
        throw std::invalid_argument("uniform_grid: need step > 0 and s_max >= 0");
    const auto m = static_cast<std::size_t>(std::ceil(s_max / step - 1e-9));
    std::vector<double> g(m + 1);
    for (std::size_t i = 0; i <= m; ++i)
        g[i] = static_cast<double>(i) * step;
    return g;
}

/// Estimates beta_k(1, s) on every grid point; grid point i uses rng.derive(i).
inline LimitCurve build_limit_curve(const CurveConfig& c, const RngStream& rng)
{
    LimitCurve curve;
    curve.dim = c.dim;
    curve.k = c.k;
    curve.L = c.L;
    curve.reps = c.reps;
    curve.master_seed = rng.master_seed();
    curve.boundary_mode = c.boundary;
    curve.s_grid = c.s_grid;
    if (c.s_grid.empty())
        throw std::invalid_argument("build_limit_curve: empty s grid");
    for (std::size_t i = 0; i < c.s_grid.size(); ++i) {
        if (c.s_grid[i] < 0.0 || (i > 0 && !(c.s_grid[i] > c.s_grid[i - 1])))
            throw std::invalid_argument("build_limit_curve: s grid must be non-negative and increasing");
    }
    for (std::size_t i = 0; i < c.s_grid.size(); ++i) {
        const double s = c.s_grid[i];
        if (s == 0.0) {
            curve.values.push_back(0.0);
            curve.stderrs.push_back(0.0);
            curve.provenance.push_back("zero:s=0");
            continue;
        }
        RateConfig rc;
        rc.dim = c.dim;
        rc.lambda = 1.0;
        rc.r = s;
        rc.L = c.L;
        rc.k = c.k;
        rc.reps = c.reps;
        rc.boundary = c.boundary;
        rc.kind = c.kind;
        rc.workers = c.workers;
        const auto rec = estimate_betti_rate(rc, rng.derive(i));
        curve.values.push_back(rec.mean);
        curve.stderrs.push_back(rec.std_error);
        curve.provenance.push_back(rec.id() + ":stream=" + std::to_string(i));
    }
    return curve;
}

struct ScalingReport
{
    EstimateRecord direct;  // beta_k(lambda, r)
    EstimateRecord scaled;  // beta_k(lambda theta, r theta^{-1/d})
    double theta = 1.0;
    double lhs = 0.0;       // direct.mean
    double rhs = 0.0;       // scaled.mean / theta
    double combined_stderr = 0.0;
    bool pass = false;      // |lhs - rhs| <= 3 combined stderr
};

/**
 * Both sides of beta_k(lambda, r) = beta_k(lambda theta, r / theta^{1/d}) / theta,
 * each estimated on a window of volume L from the same stream.
 */
inline ScalingReport scaling_check(const RateConfig& c, double theta, const RngStream& rng)
{
    if (!(theta > 0.0))
        throw std::invalid_argument("scaling_check: theta must be > 0");
    ScalingReport rep;
    rep.theta = theta;
    rep.direct = estimate_betti_rate(c, rng);
    RateConfig other = c;
    other.lambda = c.lambda * theta;
    other.r = c.r / std::pow(theta, 1.0 / c.dim);
    rep.scaled = estimate_betti_rate(other, rng);
    rep.lhs = rep.direct.mean;
    rep.rhs = rep.scaled.mean / theta;
    rep.combined_stderr = std::hypot(rep.direct.std_error, rep.scaled.std_error / theta);
    rep.pass = std::abs(rep.lhs - rep.rhs) <= 3.0 * rep.combined_stderr;
    return rep;
}

struct IntegralEstimate
{
    double value = 0.0;
    double std_error = 0.0;
};

/**
 * Integral of beta_k(f(x), r) dx = sum_cells vol * f_c * curve(f_c^{1/d} r),
 * exact for a piecewise-constant density.  The error propagates the
 * independent grid-point standard errors through the interpolation weights.
 */
inline IntegralEstimate thermodynamic_integral(const DensityGrid& density, double r, int k, const LimitCurve& curve)
{
    curve.validate();
    if (curve.k != k)
        throw std::invalid_argument("thermodynamic_integral: curve was built for a different k");
    if (curve.dim != density.dim())
        throw std::invalid_argument("thermodynamic_integral: curve dimension differs from density dimension");
    if (!(r > 0.0))
        throw std::invalid_argument("thermodynamic_integral: r must be > 0");
    const int d = density.dim();
    const double needed = std::pow(density.sup_value(), 1.0 / d) * r;
    if (needed > curve.s_max() * (1.0 + 1e-12)) {
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "thermodynamic_integral: curve covers s in [0, %.12g] but s in (%.12g, %.12g] is needed",
                      curve.s_max(), curve.s_max(), needed);
        throw std::out_of_range(buf);
    }
    const double vol = density.cell_volume();
    std::vector<double> weight(curve.s_grid.size(), 0.0);
    IntegralEstimate out;
    for (double f : density.values()) {
        if (f <= 0.0)
            continue;
        const double s = std::min(std::pow(f, 1.0 / d) * r, curve.s_max());
        const double w = vol * f;
        out.value += w * curve(s);
        const auto [i, t] = curve.locate(s);
        if (i == static_cast<std::size_t>(-1))
            continue;
        weight[i] += w * (1.0 - t);
        if (t > 0.0)
            weight[i + 1] += w * t;
    }
    double var = 0.0;
    for (std::size_t i = 0; i < weight.size(); ++i)
        var += weight[i] * weight[i] * curve.stderrs[i] * curve.stderrs[i];
    out.std_error = std::sqrt(var);
    return out;
}

enum class SampleProcess { binomial, poissonized };

inline const char* to_string(SampleProcess p) noexcept
{
    return p == SampleProcess::binomial ? "binomial" : "poissonized";
}

struct ExpectationConfig
{
    std::size_t n = 1;
    double r = 1.0;
    int k = 1;
    std::size_t reps = 100;
    ComplexKind kind = ComplexKind::cech;
    unsigned workers = 1;
};

namespace detail {

inline void validate_expectation(const DensityGrid& density, const ExpectationConfig& c)
{
    density.validate();
    if (c.n < 1)
        throw std::invalid_argument("n must be >= 1");
    if (!(c.r > 0.0))
        throw std::invalid_argument("r must be > 0");
    if (c.k < 0)
        throw std::invalid_argument("k must be >= 0");
    if (c.reps < 2)
        throw std::invalid_argument("reps must be >= 2");
}

/// beta_k(C(cloud, r_n)) / n computed on the cloud scaled by n^{1/d}.
inline double scaled_betti_per_n(const PointCloud& cloud, std::size_t n, double r, int k, ComplexKind kind)
{
    const double nn = static_cast<double>(n);
    const PointCloud scaled = scale_points(cloud, std::pow(nn, 1.0 / cloud.dim()));
    const auto complex = build_complex(kind, scaled, r, k + 1, EuclideanSpace{});
    return static_cast<double>(betti_number(complex, k)) / nn;
}

inline PointCloud sample_process(SampleProcess p, const DensityGrid& density, std::size_t n, RngStream s)
{
    return p == SampleProcess::binomial ? sample_binomial(density, n, s) : poissonize(density, n, s);
}

}  // namespace detail

inline EstimateRecord estimate_expectation(SampleProcess process, const DensityGrid& density,
                                           const ExpectationConfig& c, const RngStream& rng)
{
    detail::validate_expectation(density, c);
    const auto samples = run_replicates(c.reps, rng, c.workers, [&](RngStream s, std::size_t) {
        return detail::scaled_betti_per_n(detail::sample_process(process, density, c.n, s), c.n, c.r, c.k, c.kind);
    });
    EstimateRecord rec;
    rec.quantity = Quantity::expectation_per_n;
    rec.k_or_j = c.k;
    rec.lambda = 0.0;
    rec.r = c.r;
    rec.L_or_n = static_cast<double>(c.n);
    const auto s = summarize(samples);
    rec.mean = s.mean;
    rec.std_error = s.std_error;
    rec.reps = s.count;
    rec.master_seed = rng.master_seed();
    rec.boundary_mode = BoundaryMode::plain;
    return rec;
}

/// E[beta_k(C(X_n, r_n))] / n.
inline EstimateRecord estimate_binomial_expectation(const DensityGrid& density, const ExpectationConfig& c,
                                                    const RngStream& rng)
{
    return estimate_expectation(SampleProcess::binomial, density, c, rng);
}

/// E[beta_k(C(Pbar_n, r_n))] / n.
inline EstimateRecord estimate_poissonized_expectation(const DensityGrid& density, const ExpectationConfig& c,
                                                       const RngStream& rng)
{
    return estimate_expectation(SampleProcess::poissonized, density, c, rng);
}

/// Row n of the schedule uses rng.derive(n), shared by every experiment.
inline RngStream schedule_stream(const RngStream& rng, std::size_t n) { return rng.derive(n); }

inline void validate_schedule(const std::vector<std::size_t>& schedule)
{
    if (schedule.empty())
        throw std::invalid_argument("n schedule must be non-empty");
    for (std::size_t i = 0; i < schedule.size(); ++i)
        if (schedule[i] < 1 || (i > 0 && schedule[i] <= schedule[i - 1]))
            throw std::invalid_argument("n schedule must be positive and strictly increasing");
}

/// E[beta_k]/n along the schedule against a fixed target.
inline ConvergenceTable convergence_experiment(SampleProcess process, const DensityGrid& density,
                                               const std::vector<std::size_t>& schedule, const ExpectationConfig& base,
                                               double target, double target_stderr, const RngStream& rng)
{
    validate_schedule(schedule);
    ConvergenceTable t;
    t.k = base.k;
    t.r = base.r;
    t.target = target;
    t.target_stderr = target_stderr;
    t.process = to_string(process);
    for (std::size_t n : schedule) {
        ExpectationConfig c = base;
        c.n = n;
        const auto rec = estimate_expectation(process, density, c, schedule_stream(rng, n));
        t.rows.push_back({n, rec.mean, rec.std_error, std::abs(rec.mean - target)});
    }
    return t;
}

/**
 * Binomial against Poissonized expectations.  Replicate i of row n draws both
 * clouds from the same substream, so they share their first min(n, N) points.
 */
inline GapTable poissonization_gap(const DensityGrid& density, const std::vector<std::size_t>& schedule,
                                   const ExpectationConfig& base, const RngStream& rng)
{
    validate_schedule(schedule);
    GapTable table;
    table.k = base.k;
    table.r = base.r;
    for (std::size_t n : schedule) {
        ExpectationConfig c = base;
        c.n = n;
        detail::validate_expectation(density, c);
        const auto pairs = run_replicates(c.reps, schedule_stream(rng, n), c.workers, [&](RngStream s, std::size_t) {
            const double b = detail::scaled_betti_per_n(sample_binomial(density, n, s), n, c.r, c.k, c.kind);
            const double p = detail::scaled_betti_per_n(poissonize(density, n, s), n, c.r, c.k, c.kind);
            return std::pair<double, double>(b, p);
        });
        std::vector<double> bs, ps, diff, absdiff;
        for (const auto& [b, p] : pairs) {
            bs.push_back(b);
            ps.push_back(p);
            diff.push_back(b - p);
            absdiff.push_back(std::abs(b - p));
        }
        const auto sb = summarize(bs), sp = summarize(ps), sd = summarize(diff), sa = summarize(absdiff);
        GapRow row;
        row.n = n;
        row.binomial_mean = sb.mean;
        row.binomial_stderr = sb.std_error;
        row.poissonized_mean = sp.mean;
        row.poissonized_stderr = sp.std_error;
        row.gap = std::abs(sb.mean - sp.mean);
        row.gap_stderr = sd.std_error;
        row.abs_gap = sa.mean;
        row.abs_gap_stderr = sa.std_error;
        table.rows.push_back(row);
    }
    return table;
}

struct StripConfig
{
    int dim = 2;
    double lambda = 1.0;
    double r = 1.0;
    double L = 100.0;
    std::size_t sub_box_count = 4;
    int k = 1;
    std::size_t reps = 100;
    unsigned workers = 1;
};

struct StripRealization
{
    long long betti_gap = 0;       // |beta_k(whole) - sum_i beta_k(box i)|
    std::size_t lost = 0;          // (k, k+1)-simplices of the whole complex missing from every box complex
    std::size_t touching = 0;      // (k, k+1)-simplices with a vertex in the strips
    bool holds() const noexcept { return static_cast<std::size_t>(betti_gap) <= lost && lost <= touching; }
};

struct StripReport
{
    std::vector<StripRealization> realizations;
    bool all_hold = true;
    long long min_slack = 0;  // min over realizations of touching - betti_gap
    long long max_slack = 0;
};

/// Congruent sub-boxes of a window, m per axis with m^d == count.
inline std::vector<Window> partition_window(const Window& w, std::size_t count)
{
    const int d = w.dim();
    const auto m = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(count), 1.0 / d)));
    std::size_t total = 1;
    for (int a = 0; a < d; ++a)
        total *= m;
    if (m < 1 || total != count)
        throw std::invalid_argument("partition: sub_box_count must be a perfect d-th power");
    std::vector<Window> boxes;
    std::vector<std::size_t> idx(d, 0);
    for (std::size_t b = 0; b < count; ++b) {
        std::size_t rest = b;
        for (int a = d - 1; a >= 0; --a) {
            idx[a] = rest % m;
            rest /= m;
        }
        std::vector<double> lo(d), hi(d);
        for (int a = 0; a < d; ++a) {
            const double width = w.side(a) / static_cast<double>(m);
            lo[a] = w.lower(a) + width * static_cast<double>(idx[a]);
            hi[a] = idx[a] + 1 == m ? w.upper(a) : w.lower(a) + width * static_cast<double>(idx[a] + 1);
        }
        boxes.emplace_back(std::move(lo), std::move(hi));
    }
    return boxes;
}

/// Closed slabs of half-width r around every internal face of the partition.
inline std::vector<Window> internal_strips(const Window& w, std::size_t count, double r)
{
    const int d = w.dim();
    const auto m = static_cast<std::size_t>(std::llround(std::pow(static_cast<double>(count), 1.0 / d)));
    std::vector<Window> strips;
    for (int a = 0; a < d; ++a)
        for (std::size_t i = 1; i < m; ++i) {
            const double cut = w.lower(a) + w.side(a) * static_cast<double>(i) / static_cast<double>(m);
            std::vector<double> lo = w.lower(), hi = w.upper();
            lo[a] = cut - r;
            hi[a] = cut + r;
            strips.emplace_back(std::move(lo), std::move(hi));
        }
    return strips;
}

/**
 * Per realization of P_L(lambda): the Betti number of the whole Čech complex
 * differs from the sum over the sub-box complexes by at most the number of
 * k- and (k+1)-simplices touching the r-strips around internal box faces.
 */
inline StripReport boundary_strip_check(const StripConfig& c, const RngStream& rng)
{
    if (c.k < 1)
        throw std::invalid_argument("boundary_strip_check: k must be >= 1");
    if (!(c.r > 0.0) || !(c.lambda >= 0.0) || !(c.L > 0.0))
        throw std::invalid_argument("boundary_strip_check: need r > 0, lambda >= 0, L > 0");
    const Window window = Window::centered_cube(c.dim, c.L);
    const auto boxes = partition_window(window, c.sub_box_count);
    if (!(boxes.front().side(0) > 2.0 * c.r))
        throw std::invalid_argument("boundary_strip_check: sub-box side must exceed 2r");
    const auto strips = internal_strips(window, c.sub_box_count, c.r);

    StripReport report;
    report.realizations = run_replicates(c.reps, rng, c.workers, [&](RngStream s, std::size_t) {
        const PointCloud cloud = sample_poisson_homogeneous(c.lambda, window, s);
        const auto whole = build_cech(cloud, c.r, c.k + 1);
        StripRealization out;
        long long parts = 0;
        std::size_t kept = 0;
        for (const auto& box : boxes) {
            const auto piece = build_cech(cloud.restricted_to(box), c.r, c.k + 1);
            parts += static_cast<long long>(betti_number(piece, c.k));
            kept += piece.count(c.k) + piece.count(c.k + 1);
        }
        out.betti_gap = std::llabs(static_cast<long long>(betti_number(whole, c.k)) - parts);
        out.lost = whole.count(c.k) + whole.count(c.k + 1) - kept;
        for (int j = c.k; j <= c.k + 1; ++j)
            out.touching += simplices_touching(whole, cloud, strips, j);
        return out;
    });
    bool first = true;
    for (const auto& r : report.realizations) {
        report.all_hold = report.all_hold && r.holds();
        const long long slack = static_cast<long long>(r.touching) - r.betti_gap;
        report.min_slack = first ? slack : std::min(report.min_slack, slack);
        report.max_slack = first ? slack : std::max(report.max_slack, slack);
        first = false;
    }
    return report;
}

struct PerturbationReport
{
    double mean_f = 0.0;
    double mean_g = 0.0;
    double gap = 0.0;          // |E beta_k(P(f)) - E beta_k(P(g))|
    double gap_stderr = 0.0;   // paired
    double l1 = 0.0;           // integral |f - g|
    double ratio = 0.0;        // gap / l1, 0 when l1 == 0
    std::size_t nested_checked = 0;
    std::size_t bound_violations = 0;
};

/**
 * Compares Poisson processes with intensities f and g under the coupling
 * P(f) = P(min) + P(f - min), P(g) = P(min) + P(g - min) with independent
 * increments.  When one intensity dominates the other the complexes nest
 * and the Betti difference bound is checked realization by realization.
 */
inline PerturbationReport intensity_perturbation_check(const IntensityGrid& f, const IntensityGrid& g, double r,
                                                       int k, std::size_t reps, const RngStream& rng,
                                                       unsigned workers = 1)
{
    if (!(f.grid() == g.grid()))
        throw std::invalid_argument("intensity_perturbation_check: intensities must share one grid and window");
    if (!(r > 0.0) || k < 1 || reps < 2)
        throw std::invalid_argument("intensity_perturbation_check: need r > 0, k >= 1, reps >= 2");
    std::vector<double> lo(f.values().size()), fx(lo.size()), gx(lo.size());
    bool f_le_g = true, g_le_f = true;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        lo[i] = std::min(f.value(i), g.value(i));
        fx[i] = f.value(i) - lo[i];
        gx[i] = g.value(i) - lo[i];
        f_le_g = f_le_g && f.value(i) <= g.value(i);
        g_le_f = g_le_f && g.value(i) <= f.value(i);
    }
    const IntensityGrid base(f.grid(), lo), extra_f(f.grid(), fx), extra_g(f.grid(), gx);

    struct Sample
    {
        double bf = 0.0, bg = 0.0;
        bool nested = false, bound_ok = true;
    };
    const auto samples = run_replicates(reps, rng, workers, [&](RngStream s, std::size_t) {
        const PointCloud common = sample_poisson_intensity(base, s.derive(0));
        const PointCloud pf = superpose(common, sample_poisson_intensity(extra_f, s.derive(1)));
        const PointCloud pg = superpose(common, sample_poisson_intensity(extra_g, s.derive(2)));
        const auto cf = build_cech(pf, r, k + 1);
        const auto cg = build_cech(pg, r, k + 1);
        Sample out;
        out.bf = static_cast<double>(betti_number(cf, k));
        out.bg = static_cast<double>(betti_number(cg, k));
        if (f_le_g || g_le_f) {
            out.nested = true;
            out.bound_ok = f_le_g ? betti_diff_bound_check(cf, cg, k) : betti_diff_bound_check(cg, cf, k);
        }
        return out;
    });
    std::vector<double> vf, vg, diff;
    PerturbationReport rep;
    for (const auto& s : samples) {
        vf.push_back(s.bf);
        vg.push_back(s.bg);
        diff.push_back(s.bf - s.bg);
        rep.nested_checked += s.nested ? 1 : 0;
        rep.bound_violations += s.bound_ok ? 0 : 1;
    }
    rep.mean_f = summarize(vf).mean;
    rep.mean_g = summarize(vg).mean;
    const auto sd = summarize(diff);
    rep.gap = std::abs(sd.mean);
    rep.gap_stderr = sd.std_error;
    rep.l1 = l1_distance(f, g);
    rep.ratio = rep.l1 > 0.0 ? rep.gap / rep.l1 : 0.0;
    return rep;
}

}  // namespace bthermo

#endif
