#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

const std::string bin = PCD_BIN;
const fs::path data = PCD_DATA_DIR;

fs::path scratch() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() / ("pcd_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::string& args, const std::string& env = "") {
  const fs::path o = scratch() / "stdout", e = scratch() / "stderr";
  const std::string cmd = env + " " + bin + " " + args + " > " + o.string() + " 2> " + e.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(o), slurp(e)};
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

}  // namespace

TEST_CASE("golden outputs") {
  const Run t = run("test --x " + q(data / "sample.csv") + " --y " + q(data / "anchors.csv") + " --r 2 --kind and");
  CHECK(t.code == 0);
  CHECK(t.out == slurp(data / "golden" / "test_and_r2.json"));

  const Run a = run("analyze --x " + q(data / "sample.csv") + " --y " + q(data / "anchors.csv") + " --r 1.5");
  CHECK(a.code == 0);
  CHECK(a.out == slurp(data / "golden" / "analyze_r1.5.json"));

  const Run d = run("delaunay --y " + q(data / "anchors.csv"));
  CHECK(d.code == 0);
  CHECK(d.out == slurp(data / "golden" / "delaunay.json"));
}

TEST_CASE("curves") {
  const Run c = run("curves --r 2 --r 1");
  REQUIRE(c.code == 0);
  CHECK(c.out.find("\n2,0.45833333333333331,0.79166666666666663,") != std::string::npos);
  CHECK(c.out.find("\n1,0,0.34259259259259262,0,0.22522290809327847,0,0.00030864197530864197\n") != std::string::npos);
  const Run grid = run("curves --from 1 --to 5 --points 500");
  CHECK(grid.code == 0);
  CHECK(std::count(grid.out.begin(), grid.out.end(), '\n') == 501);
  CHECK(run("curves --r 0.5").code == 2);
}

TEST_CASE("exit codes and diagnostics") {
  const fs::path one = scratch() / "one.csv";
  std::ofstream(one) << "x,y\n0.5,0.2\n";
  const Run r1 = run("analyze --x " + q(one));
  CHECK(r1.code == 2);
  CHECK(r1.err.find("TooFewVertices") != std::string::npos);

  const fs::path outside = scratch() / "outside.csv";
  std::ofstream(outside) << "0.5,0.2\n0.4,0.1\n5,5\n";
  const Run r2 = run("analyze --x " + q(outside));
  CHECK(r2.code == 2);
  CHECK(r2.err.find("OutsideDomain") != std::string::npos);
  CHECK(r2.err.find("point 2") != std::string::npos);
  const Run dropped = run("analyze --drop-outside --x " + q(outside));
  CHECK(dropped.code == 0);
  CHECK(Json::parse(dropped.out)["excluded"] == 1);

  const fs::path bad = scratch() / "bad.csv";
  std::ofstream(bad) << "0.5,0.2\n0.4;0.1\n";
  const Run r3 = run("analyze --x " + q(bad));
  CHECK(r3.code == 2);
  CHECK(r3.err.find(":2") != std::string::npos);

  const Run r4 = run("test --x " + q(data / "sample.csv") + " --y " + q(data / "anchors.csv") + " --r 1 --kind and");
  CHECK(r4.code == 3);
  CHECK(r4.err.find("DegenerateLimit") != std::string::npos);

  CHECK(run("simulate --bogus 1").code == 2);
  CHECK(run("simulate --kind xor --reps 2").code == 2);
  CHECK(run("nosuchcommand").code == 2);
}

TEST_CASE("simulate") {
  const Run inf = run("simulate --n 20 --reps 5 --r inf --kind and --values");
  REQUIRE(inf.code == 0);
  const Json j = Json::parse(inf.out);
  for (const Json& v : j["statistics"][0]["values"]) CHECK(v.get<double>() == 1.0);

  // thread count and repeated runs do not change the output
  const Run a = run("simulate --n 30 --reps 40 --seed 5 --threads 1");
  const Run b = run("simulate --n 30 --reps 40 --seed 5 --threads 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("simulate --n 30 --reps 40 --seed 5 --threads 1").out == a.out);

  // PCD_SEED is the default seed; an explicit flag wins
  CHECK(run("simulate --n 30 --reps 40", "PCD_SEED=5").out == a.out);
  CHECK(run("simulate --n 30 --reps 40 --seed 6", "PCD_SEED=5").out != a.out);

  // config file supplies defaults, flags override
  const fs::path cfg = scratch() / "sim.cfg";
  std::ofstream(cfg) << "# defaults\nn = 30\nreps=40\nseed=5\n";
  CHECK(run("--config " + q(cfg) + " simulate").out == a.out);
  CHECK(run("--config " + q(cfg) + " simulate --seed 6").out != a.out);
  const fs::path bad_cfg = scratch() / "bad.cfg";
  std::ofstream(bad_cfg) << "nonsense=1\n";
  CHECK(run("--config " + q(bad_cfg) + " simulate").code == 2);

  // histogram files
  const fs::path hist = scratch() / "hist";
  fs::create_directories(hist);
  CHECK(run("simulate --n 30 --reps 40 --kind or --bins 5 --histogram-dir " + q(hist)).code == 0);
  const std::string h = slurp(hist / "hist_or.csv");
  CHECK(h.rfind("bin_left,bin_right,count\n", 0) == 0);
  CHECK(std::count(h.begin(), h.end(), '\n') == 6);
}

TEST_CASE("a dumped sample reproduces its densities") {
  const fs::path sample = scratch() / "dump.csv";
  const Run s = run("simulate --n 50 --reps 3 --seed 12 --r 1.7 --values --dump-sample " + q(sample));
  REQUIRE(s.code == 0);
  const Json sim = Json::parse(s.out);
  const Run a = run("analyze --r 1.7 --x " + q(sample));
  REQUIRE(a.code == 0);
  const Json an = Json::parse(a.out);
  CHECK(an["rho_a"] == sim["statistics"][0]["values"][0]);
  CHECK(an["rho_and"] == sim["statistics"][1]["values"][0]);
  CHECK(an["rho_or"] == sim["statistics"][2]["values"][0]);
}

TEST_CASE("region") {
  const Run r = run("region --tri 0,0,1,0,0.5,0.8660254037844386 --r 2 --x 0.25,0");
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j["vertex_region"] == 1);
  CHECK(j["area"].get<double>() == doctest::Approx(0.25 * j["triangle_area"].get<double>()));
  CHECK(run("region --tri 0,0,1,0,0.5,0.8660254037844386 --r 2 --x 3,3").code == 2);
}
