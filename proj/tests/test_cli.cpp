#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <sys/wait.h>

#include "cli.hpp"
#include "doctest.h"
#include "gchp/constructors.hpp"
#include "json.hpp"

using namespace gchp;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gchp");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> matrix_rows(const json& doc) {
  std::vector<std::vector<double>> rows(doc["rows"].get<std::size_t>());
  const std::size_t cols = doc["cols"];
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < cols; ++k) rows[i].push_back(doc["coeffs"][i * cols + k][0]);
  return rows;
}

int shell(const std::string& command) {
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("matrix") {
  Run r = run({"matrix", "2", "2", "--nu", "1", "--xi", "2", "0"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(matrix_rows(doc) == std::vector<std::vector<double>>{{2, 0, 0}, {-4, -4, 0}, {1, 2, 1}});
  CHECK(doc["xi"] == json::array({2.0, 0.0}));

  doc = json::parse(run({"matrix", "0", "0"}).out);
  CHECK(matrix_rows(doc) == std::vector<std::vector<double>>{{1}});

  doc = json::parse(run({"matrix", "3", "3", "--nu", "1", "--xi", "2", "0"}).out);
  CHECK(matrix_rows(doc) == std::vector<std::vector<double>>{
                                {-6, 0, 0, 0}, {18, 18, 0, 0}, {-9, -18, -9, 0}, {1, 3, 3, 1}});

  r = run({"matrix", "1", "1", "--nu", "1/4", "--xi", "0", "-1", "--output", "pretty"});
  CHECK(r.out.find("nu=1/4,xi=-i") != std::string::npos);
  CHECK(r.out.find("i/2") != std::string::npos);
}

TEST_CASE("matrix JSON round-trips") {
  const Params p = Params::exact(Rational(1, 2), 1, -3);
  const Run r = run({"matrix", "4", "3", "--nu", "0.5", "--xi", "1", "-3"});
  const json doc = json::parse(r.out);
  const std::size_t rows = doc["rows"], cols = doc["cols"];
  BiPoly::Grid grid(rows);
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t k = 0; k < cols; ++k) {
      const auto& c = doc["coeffs"][j * cols + k];
      grid[j].push_back(Coefficient::floating({c[0].get<double>(), c[1].get<double>()}));
    }
  const BiPoly reread = BiPoly::from_grid(grid, Mode::floating);
  const BiPoly original = gchp::gchp(4, 3, p).to_mode(Mode::floating);
  for (std::complex<double> z : {std::complex<double>(0.3, 0.2), std::complex<double>(-1.2, 0.9)})
    CHECK(eval(reread, z) == eval(original, z));
  REQUIRE(doc.contains("coeffs_exact"));
  CHECK(doc["coeffs_exact"][(rows - 1) * cols + cols - 1] == "1/8");
}

TEST_CASE("eval") {
  json doc = json::parse(run({"eval", "1", "1", "0", "0", "--xi", "2", "0"}).out);
  CHECK(doc["value"] == json::array({-1.0, 0.0}));
  CHECK(doc["value_exact"] == "-1");
  doc = json::parse(run({"eval", "2", "1", "1", "1", "--nu", "1", "--xi", "0", "0"}).out);
  CHECK(doc["value_exact"] == "0");
  doc = json::parse(run({"eval", "3", "0", "1/2", "1"}).out);
  CHECK(doc["value_exact"] == "-11/8-i/4");
  const Run csv = run({"eval", "1", "1", "0", "0", "--xi", "2", "0", "--output", "csv"});
  CHECK(csv.out == "re,im\n-1,0\n");
}

TEST_CASE("inner") {
  constexpr double pi = std::numbers::pi;
  Run r = run({"inner", "0", "0", "0", "0"});
  REQUIRE(r.code == 0);
  json doc = json::parse(r.out);
  for (const char* key : {"exact", "quadrature", "moments"})
    CHECK(doc[key][0].get<double>() == doctest::Approx(pi).epsilon(1e-12));
  doc = json::parse(run({"inner", "2", "3", "2", "3"}).out);
  CHECK(doc["exact"][0].get<double>() == doctest::Approx(12 * pi).epsilon(1e-12));
  r = run({"inner", "1", "0", "0", "0", "--nu", "1", "--xi", "2", "0"});
  doc = json::parse(r.out);
  CHECK(doc["exact"][0].get<double>() == doctest::Approx(-pi * std::numbers::e).epsilon(1e-12));
  CHECK(doc["within_tolerance"] == true);
  // an under-resolved quadrature disagrees: verification failure
  r = run({"inner", "5", "5", "5", "5", "--xi", "2", "0", "--quad-order", "2"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["within_tolerance"] == false);
}

TEST_CASE("verify") {
  Run r = run({"verify", "--max-degree", "0"});
  CHECK(r.code == 0);
  json doc = json::parse(r.out);
  CHECK(doc["passed"] == true);
  r = run({"verify", "--max-degree", "3"});
  CHECK(r.code == 0);
  doc = json::parse(r.out);
  CHECK(doc["errata"].size() == 2);
  for (const auto& c : doc["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("status"));
    CHECK(c.contains("residual"));
  }
  r = run({"verify", "--max-degree", "2", "--corrupt"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["passed"] == false);
}

TEST_CASE("params set file") {
  const auto path = std::filesystem::temp_directory_path() / "gchp_params_test.json";
  {
    std::ofstream f(path);
    f << R"([{"nu": "9/4", "xi": ["1/2", -3]}, {"nu": 1}])";
  }
  Run r = run({"verify", "--max-degree", "2", "--params-set", path.string()});
  CHECK(r.code == 0);
  {
    std::ofstream f(path);
    f << R"([{"nu": "-1"}])";
  }
  CHECK(run({"verify", "--params-set", path.string()}).code == 2);
  {
    std::ofstream f(path);
    f << "not json";
  }
  CHECK(run({"verify", "--params-set", path.string()}).code == 2);
  std::filesystem::remove(path);
  CHECK(run({"verify", "--params-set", "/nonexistent/params.json"}).code == 2);
}

TEST_CASE("usage and configuration errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"matrix", "1"}).code == 2);
  CHECK(run({"matrix", "65", "0"}).code == 2);
  CHECK(run({"matrix", "1", "1", "--nu", "0"}).code == 2);
  CHECK(run({"matrix", "1", "1", "--nu", "-2"}).code == 2);
  CHECK(run({"matrix", "1", "1", "--nu", "abc"}).code == 2);
  CHECK(run({"matrix", "1", "1", "--xi", "1"}).code == 2);
  CHECK(run({"matrix", "1", "1", "--mode", "fuzzy"}).code == 2);
  CHECK(run({"matrix", "1", "1", "--output", "xml"}).code == 2);
  CHECK(run({"inner", "0", "0", "0", "0", "--tol", "0"}).code == 2);
  CHECK(run({"verify", "--max-degree", "11"}).code == 2);
  CHECK(run({"matrix", "1", "1", "--out", "/nonexistent/dir/out.json"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("mode selection and output file") {
  setenv("GCHP_MODE", "float", 1);
  json doc = json::parse(run({"matrix", "1", "1"}).out);
  CHECK(doc["mode"] == "float");
  CHECK_FALSE(doc.contains("coeffs_exact"));
  doc = json::parse(run({"matrix", "1", "1", "--mode", "exact"}).out);
  CHECK(doc["mode"] == "exact");
  setenv("GCHP_MODE", "nonsense", 1);
  CHECK(run({"matrix", "1", "1"}).code == 2);
  unsetenv("GCHP_MODE");

  const auto path = std::filesystem::temp_directory_path() / "gchp_out_test.json";
  const Run r = run({"matrix", "2", "2", "--xi", "2", "0", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  CHECK(matrix_rows(json::parse(in)) ==
        std::vector<std::vector<double>>{{2, 0, 0}, {-4, -4, 0}, {1, 2, 1}});
  std::filesystem::remove(path);
}

TEST_CASE("installed binary exit codes") {
  const std::string bin = GCHP_BINARY;
  CHECK(shell(bin + " matrix 1 1 > /dev/null") == 0);
  CHECK(shell(bin + " matrix 1 > /dev/null 2>&1") == 2);
  CHECK(shell(bin + " verify --max-degree 1 --corrupt > /dev/null") == 1);
  CHECK(shell("GCHP_MODE=float " + bin + " eval 2 1 1 1 --output csv > /dev/null") == 0);
}
