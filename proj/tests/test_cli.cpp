#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <betti_thermo/cli.hpp>

using namespace bthermo;
namespace fs = std::filesystem;

namespace {
const std::string kFixtures = BETTI_THERMO_FIXTURES;

fs::path scratch()
{
    const auto dir = fs::temp_directory_path() / "bthermo_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

struct Outcome
{
    int status;
    std::string out, err;
};

Outcome run(const cli::ExperimentConfig& c)
{
    std::ostringstream out, err;
    const int status = cli::run(c, out, err);
    return {status, out.str(), err.str()};
}

cli::ExperimentConfig config(const std::string& command, const std::string& name)
{
    cli::ExperimentConfig c;
    c.command = command;
    c.output_prefix = (scratch() / name).string();
    return c;
}
}  // namespace

TEST_CASE("betti on the square fixture")
{
    auto c = config("betti", "square");
    c.points_file = kFixtures + "/square.csv";
    c.r = 1.05;
    const auto o = run(c);
    CHECK(o.status == 0);
    CHECK(o.out == "beta: 1 1\n");
    CHECK(slurp(c.output_prefix + ".betti.csv") == "k,beta\n0,1\n1,1\n");
    CHECK(fs::exists(c.output_prefix + ".betti.json"));
}

TEST_CASE("betti on the triangle fixture")
{
    auto c = config("betti", "triangle");
    c.points_file = kFixtures + "/triangle.csv";
    c.r = 1.1;
    CHECK(run(c).out == "beta: 1 1\n");
    c.r = 1.2;
    CHECK(run(c).out == "beta: 1 0\n");
}

TEST_CASE("rate with zero intensity")
{
    auto c = config("rate", "zero");
    c.lambda = 0.0;
    c.reps = 5;
    const auto o = run(c);
    REQUIRE(o.status == 0);
    const auto csv = slurp(c.output_prefix + ".rate.csv");
    CHECK(csv.find("betti_rate,1,0,1,400,0,0,5,1,plain") != std::string::npos);
}

TEST_CASE("validation happens before any output")
{
    auto c = config("rate", "invalid");
    c.L = 5.0;
    fs::remove(c.output_prefix + ".rate.csv");
    const auto o = run(c);
    CHECK(o.status != 0);
    CHECK(o.err.find("window too small") != std::string::npos);
    CHECK_FALSE(fs::exists(c.output_prefix + ".rate.csv"));

    auto u = config("bogus", "bogus");
    CHECK(run(u).status != 0);
    auto d = config("converge", "nodensity");
    d.density_file = "/nonexistent/density.json";
    CHECK(run(d).err.find("does not exist") != std::string::npos);
    auto k = config("curve", "badk");
    k.k = 2;
    CHECK(run(k).status != 0);
    auto s = config("gap", "badschedule");
    s.n_schedule = {400, 200};
    CHECK(run(s).status != 0);
}

TEST_CASE("config file with command-line style overrides")
{
    const auto path = scratch() / "cfg.json";
    {
        std::ofstream out(path);
        out << R"({"command":"sample","dim":3,"n":25,"seed":9,"process":"binomial"})";
    }
    auto c = cli::load_config(path);
    CHECK(c.dim == 3);
    CHECK(c.n == 25);
    c.output_prefix = (scratch() / "sample").string();
    c.n = 30;  // a flag would override the file the same way
    const auto o = run(c);
    REQUIRE(o.status == 0);
    CHECK(o.out == "sample: binomial count=30\n");
    const auto cloud = io::read_points(c.output_prefix + ".sample.csv");
    CHECK(cloud.size() == 30);
    CHECK(cloud.dim() == 3);
    {
        std::ofstream out(path);
        out << R"({"command":"sample","dimension":3})";
    }
    CHECK_THROWS_AS(cli::load_config(path), std::invalid_argument);
    {
        std::ofstream out(path);
        out << "{ broken";
    }
    CHECK_THROWS_AS(cli::load_config(path), std::invalid_argument);
}

TEST_CASE("curve command uses the cache directory from the environment")
{
    const auto cache = scratch() / "cache";
    fs::remove_all(cache);
    setenv("BETTI_THERMO_CACHE", cache.c_str(), 1);
    auto c = config("curve", "curve");
    c.s_max = 0.5;
    c.s_step = 0.25;
    c.reps = 5;
    c.curve_L = 100.0;
    const auto first = run(c);
    REQUIRE(first.status == 0);
    CHECK(first.out.find("stored") != std::string::npos);
    const auto csv = slurp(c.output_prefix + ".curve.csv");
    const auto second = run(c);
    CHECK(second.out.find("loaded") != std::string::npos);
    CHECK(slurp(c.output_prefix + ".curve.csv") == csv);
    std::size_t n = 0;
    for (const auto& e : fs::directory_iterator(cache))
        n += e.is_regular_file() ? 1 : 0;
    CHECK(n == 1);
    const auto dat = slurp(c.output_prefix + ".curve.dat");
    CHECK(std::count(dat.begin(), dat.end(), '\n') == 3);
    unsetenv("BETTI_THERMO_CACHE");
}

TEST_CASE("gap and converge artifacts")
{
    const auto cache = scratch() / "cache2";
    setenv("BETTI_THERMO_CACHE", cache.c_str(), 1);
    auto g = config("gap", "gap");
    g.n_schedule = {50, 100};
    g.reps = 10;
    REQUIRE(run(g).status == 0);
    CHECK(slurp(g.output_prefix + ".gap.csv").rfind("n,binomial_mean", 0) == 0);
    auto c = config("converge", "conv");
    c.n_schedule = {50, 100};
    c.reps = 10;
    c.curve_L = 100.0;
    c.curve_reps = 5;
    c.s_step = 0.5;
    const auto o = run(c);
    REQUIRE(o.status == 0);
    CHECK(o.out.find("converge: n=100") != std::string::npos);
    const auto dat = slurp(c.output_prefix + ".converge.dat");
    std::istringstream in(dat);
    std::string line;
    std::getline(in, line);
    std::istringstream cols(line);
    std::string a, b, extra;
    cols >> a >> b;
    CHECK(a == "50");
    CHECK_FALSE(cols >> extra);
    unsetenv("BETTI_THERMO_CACHE");
}

TEST_CASE("command-line tool")
{
    const char* exe = std::getenv("BETTI_THERMO_CLI");
    if (!exe)
        SKIP("BETTI_THERMO_CLI not set");
    const auto out = scratch() / "tool_out.txt";
    const std::string prefix = (scratch() / "tool").string();
    const std::string cmd = std::string(exe) + " betti --points " + kFixtures + "/square.csv --r 1.05 --out " +
                            prefix + " > " + out.string();
    CHECK(std::system(cmd.c_str()) == 0);
    CHECK(slurp(out) == "beta: 1 1\n");
    const std::string bad = std::string(exe) + " rate --L 5 --out " + prefix + " > /dev/null 2>&1";
    CHECK(std::system(bad.c_str()) != 0);
    const std::string unknown = std::string(exe) + " frobnicate > /dev/null 2>&1";
    CHECK(std::system(unknown.c_str()) != 0);
}
