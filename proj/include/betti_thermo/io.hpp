/**
 * Text artifacts: CSV and JSON records, plot data, point and complex files,
 * and the on-disk cache of limit curves.
 *
 * All numbers are printed with fixed formats so that equal inputs give
 * byte-identical files.
 */
#ifndef BETTI_THERMO_IO_HPP
#define BETTI_THERMO_IO_HPP

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "complex.hpp"
#include "limits.hpp"
#include "point_cloud.hpp"
#include "records.hpp"

namespace bthermo {

namespace io {

inline std::string fmt_real(double x, int digits = 12)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

/// Writes to a sibling temporary file, then renames it over `path`.
inline void write_atomic(const std::filesystem::path& path, const std::string& content)
{
    const auto dir = path.parent_path();
    if (!dir.empty())
        std::filesystem::create_directories(dir);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << content;
        out.flush();
        if (!out)
            throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot move '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
    }
}

inline constexpr const char* kRecordHeader = "quantity,k,lambda,r,L_or_n,mean,stderr,reps,seed,boundary_mode";

inline std::string csv_row(const EstimateRecord& r)
{
    std::ostringstream o;
    o << to_string(r.quantity) << ',' << r.k_or_j << ',' << fmt_real(r.lambda, 17) << ',' << fmt_real(r.r, 17) << ','
      << fmt_real(r.L_or_n, 17) << ',' << fmt_real(r.mean, 17) << ',' << fmt_real(r.std_error, 17) << ',' << r.reps
      << ',' << r.master_seed << ',' << to_string(r.boundary_mode);
    return o.str();
}

inline std::string records_csv(const std::vector<EstimateRecord>& records)
{
    std::string s = std::string(kRecordHeader) + "\n";
    for (const auto& r : records)
        s += csv_row(r) + "\n";
    return s;
}

inline nlohmann::ordered_json to_json(const EstimateRecord& r)
{
    return {{"quantity", to_string(r.quantity)},
            {"k", r.k_or_j},
            {"lambda", r.lambda},
            {"r", r.r},
            {"L_or_n", r.L_or_n},
            {"mean", r.mean},
            {"stderr", r.std_error},
            {"reps", r.reps},
            {"seed", r.master_seed},
            {"boundary_mode", to_string(r.boundary_mode)}};
}

inline nlohmann::ordered_json to_json(const LimitCurve& c)
{
    return {{"dim", c.dim},
            {"k", c.k},
            {"L", c.L},
            {"reps", c.reps},
            {"seed", c.master_seed},
            {"boundary_mode", to_string(c.boundary_mode)},
            {"s_grid", c.s_grid},
            {"values", c.values},
            {"stderrs", c.stderrs},
            {"provenance", c.provenance}};
}

inline LimitCurve curve_from_json(const nlohmann::json& j)
{
    LimitCurve c;
    c.dim = j.at("dim").get<int>();
    c.k = j.at("k").get<int>();
    c.L = j.at("L").get<double>();
    c.reps = j.at("reps").get<std::size_t>();
    c.master_seed = j.at("seed").get<std::uint64_t>();
    c.boundary_mode = boundary_mode_from_string(j.at("boundary_mode").get<std::string>());
    c.s_grid = j.at("s_grid").get<std::vector<double>>();
    c.values = j.at("values").get<std::vector<double>>();
    c.stderrs = j.at("stderrs").get<std::vector<double>>();
    c.provenance = j.at("provenance").get<std::vector<std::string>>();
    c.validate();
    return c;
}

inline std::string curve_csv(const LimitCurve& c)
{
    std::string s = "s,value,stderr\n";
    for (std::size_t i = 0; i < c.s_grid.size(); ++i)
        s += fmt_real(c.s_grid[i], 17) + "," + fmt_real(c.values[i], 17) + "," + fmt_real(c.stderrs[i], 17) + "\n";
    return s;
}

inline std::string convergence_csv(const ConvergenceTable& t)
{
    std::string s = "n,mean,stderr,target,target_stderr,gap\n";
    for (const auto& r : t.rows)
        s += std::to_string(r.n) + "," + fmt_real(r.mean, 17) + "," + fmt_real(r.std_error, 17) + "," +
             fmt_real(t.target, 17) + "," + fmt_real(t.target_stderr, 17) + "," + fmt_real(r.gap, 17) + "\n";
    return s;
}

inline nlohmann::ordered_json to_json(const ConvergenceTable& t)
{
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"n", r.n}, {"mean", r.mean}, {"stderr", r.std_error}, {"gap", r.gap}});
    return {{"k", t.k}, {"r", t.r}, {"process", t.process}, {"target", t.target},
            {"target_stderr", t.target_stderr}, {"rows", rows}};
}

inline std::string gap_csv(const GapTable& t)
{
    std::string s = "n,binomial_mean,binomial_stderr,poissonized_mean,poissonized_stderr,gap,gap_stderr,"
                    "gap_sqrt_n,abs_gap,abs_gap_stderr,abs_gap_sqrt_n\n";
    for (const auto& r : t.rows)
        s += std::to_string(r.n) + "," + fmt_real(r.binomial_mean, 17) + "," + fmt_real(r.binomial_stderr, 17) +
             "," + fmt_real(r.poissonized_mean, 17) + "," + fmt_real(r.poissonized_stderr, 17) + "," +
             fmt_real(r.gap, 17) + "," + fmt_real(r.gap_stderr, 17) + "," + fmt_real(r.scaled_gap(), 17) + "," +
             fmt_real(r.abs_gap, 17) + "," + fmt_real(r.abs_gap_stderr, 17) + "," +
             fmt_real(r.scaled_abs_gap(), 17) + "\n";
    return s;
}

inline nlohmann::ordered_json to_json(const GapTable& t)
{
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"n", r.n},
                        {"binomial_mean", r.binomial_mean},
                        {"binomial_stderr", r.binomial_stderr},
                        {"poissonized_mean", r.poissonized_mean},
                        {"poissonized_stderr", r.poissonized_stderr},
                        {"gap", r.gap},
                        {"gap_stderr", r.gap_stderr},
                        {"gap_sqrt_n", r.scaled_gap()},
                        {"abs_gap", r.abs_gap},
                        {"abs_gap_stderr", r.abs_gap_stderr},
                        {"abs_gap_sqrt_n", r.scaled_abs_gap()}});
    return {{"k", t.k}, {"r", t.r}, {"rows", rows}};
}

struct PlotPoint
{
    double x = 0.0;
    double y = 0.0;
    std::optional<double> yerr;
};

/// Whitespace-separated "x y [yerr]" lines, 12 significant digits.
inline std::string plot_data(const std::vector<PlotPoint>& pts)
{
    if (pts.empty())
        throw std::invalid_argument("plot data: nothing to emit");
    std::string s;
    for (const auto& p : pts) {
        s += fmt_real(p.x) + " " + fmt_real(p.y);
        if (p.yerr)
            s += " " + fmt_real(*p.yerr);
        s += "\n";
    }
    return s;
}

inline std::vector<PlotPoint> plot_points(const ConvergenceTable& t)
{
    std::vector<PlotPoint> pts;
    for (const auto& r : t.rows)
        pts.push_back({static_cast<double>(r.n), r.gap, std::nullopt});
    return pts;
}

inline std::vector<PlotPoint> plot_points(const GapTable& t)
{
    std::vector<PlotPoint> pts;
    for (const auto& r : t.rows)
        pts.push_back({static_cast<double>(r.n), r.gap, r.gap_stderr});
    return pts;
}

inline std::vector<PlotPoint> plot_points(const LimitCurve& c)
{
    std::vector<PlotPoint> pts;
    for (std::size_t i = 0; i < c.s_grid.size(); ++i)
        pts.push_back({c.s_grid[i], c.values[i], c.stderrs[i]});
    return pts;
}

template <typename Table>
void emit_plot_data(const Table& table, const std::filesystem::path& path)
{
    write_atomic(path, plot_data(plot_points(table)));
}

inline std::string points_csv(const PointCloud& cloud)
{
    std::string s;
    for (int a = 0; a < cloud.dim(); ++a)
        s += (a ? ",x" : "x") + std::to_string(a);
    s += "\n";
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        for (int a = 0; a < cloud.dim(); ++a)
            s += (a ? "," : "") + fmt_real(cloud.coord(i, a), 17);
        s += "\n";
    }
    return s;
}

/// Reads comma or whitespace separated coordinates, one point per line.
/// Lines starting with a letter or '#' are skipped (headers, comments).
inline PointCloud read_points(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open point file '" + path.string() + "'");
    std::vector<double> coords;
    int dim = -1;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        for (char& ch : line)
            if (ch == ',' || ch == ';' || ch == '\t')
                ch = ' ';
        const auto first = line.find_first_not_of(' ');
        if (first == std::string::npos || line[first] == '#' || std::isalpha(static_cast<unsigned char>(line[first])))
            continue;
        std::istringstream ls(line);
        std::vector<double> p;
        double x;
        while (ls >> x)
            p.push_back(x);
        if (!ls.eof())
            throw std::invalid_argument("point file '" + path.string() + "' line " + std::to_string(lineno) +
                                        ": not a number");
        if (dim < 0)
            dim = static_cast<int>(p.size());
        if (static_cast<int>(p.size()) != dim)
            throw std::invalid_argument("point file '" + path.string() + "' line " + std::to_string(lineno) +
                                        ": expected " + std::to_string(dim) + " coordinates");
        coords.insert(coords.end(), p.begin(), p.end());
    }
    if (dim < 1)
        throw std::invalid_argument("point file '" + path.string() + "' holds no points");
    return PointCloud(dim, std::move(coords));
}

inline std::string complex_dump(const SimplicialComplex& c)
{
    std::ostringstream o;
    c.dump(o);
    return o.str();
}

}  // namespace io

/**
 * Limit curves persisted as JSON, one file per (d, k, L, reps, stream,
 * boundary mode, grid).  The directory defaults to ".betti_thermo_cache" and
 * is overridden by the BETTI_THERMO_CACHE environment variable.
 */
class CurveCache
{
  public:
    explicit CurveCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    static CurveCache from_environment(const std::filesystem::path& fallback = ".betti_thermo_cache")
    {
        if (const char* env = std::getenv("BETTI_THERMO_CACHE"); env && *env)
            return CurveCache(env);
        return CurveCache(fallback);
    }

    const std::filesystem::path& directory() const noexcept { return dir_; }

    std::filesystem::path path_for(const CurveConfig& c, const RngStream& rng) const
    {
        // FNV-1a over the printed grid
        std::uint64_t grid_hash = 0xcbf29ce484222325ULL;
        for (double s : c.s_grid)
            for (char ch : io::fmt_real(s, 17) + ";") {
                grid_hash ^= static_cast<unsigned char>(ch);
                grid_hash *= 0x100000001b3ULL;
            }
        char name[256];
        std::snprintf(name, sizeof name, "curve_d%d_k%d_L%s_reps%zu_seed%llu.%llu_%s_%s_%016llx.json", c.dim, c.k,
                      io::fmt_real(c.L).c_str(), c.reps, static_cast<unsigned long long>(rng.master_seed()),
                      static_cast<unsigned long long>(rng.stream_index()), to_string(c.boundary),
                      c.kind == ComplexKind::cech ? "cech" : "rips", static_cast<unsigned long long>(grid_hash));
        return dir_ / name;
    }

    std::optional<LimitCurve> load(const CurveConfig& c, const RngStream& rng) const
    {
        const auto p = path_for(c, rng);
        std::ifstream in(p);
        if (!in)
            return std::nullopt;
        try {
            nlohmann::json j;
            in >> j;
            auto curve = io::curve_from_json(j);
            if (curve.s_grid != c.s_grid || curve.k != c.k || curve.dim != c.dim)
                return std::nullopt;
            return curve;
        } catch (const std::exception&) {
            return std::nullopt;  // corrupt entry: recompute
        }
    }

    void store(const CurveConfig& c, const RngStream& rng, const LimitCurve& curve) const
    {
        io::write_atomic(path_for(c, rng), io::to_json(curve).dump(2) + "\n");
    }

    /// Cached curve, computing and storing it on a miss.
    LimitCurve get_or_build(const CurveConfig& c, const RngStream& rng, bool* was_cached = nullptr) const
    {
        if (auto hit = load(c, rng)) {
            if (was_cached)
                *was_cached = true;
            return *hit;
        }
        if (was_cached)
            *was_cached = false;
        auto curve = build_limit_curve(c, rng);
        store(c, rng, curve);
        return curve;
    }

  private:
    std::filesystem::path dir_;
};

}  // namespace bthermo

#endif
