#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "ebmono/commands.hpp"

using namespace ebmono;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("ebmono_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("ingest parses plain and csv files") {
  const fs::path dir = fresh_dir("ingest");
  {
    write(dir / "plain.txt", "1.0\n3.0\n");
    const Sample s = ingest((dir / "plain.txt").string());
    REQUIRE(s.size() == 2);
    CHECK(s.values()[0] == 1.0);
    CHECK(s.values()[1] == 3.0);
  }
  {
    write(dir / "header.csv", "loss\n2.5\n0.7\n");
    const Sample s = ingest((dir / "header.csv").string());
    REQUIRE(s.size() == 2);
    CHECK(s.values()[0] == 0.7);
    CHECK(s.values()[1] == 2.5);
  }
  {
    write(dir / "columns.csv", "x,y\n1.5,9\n2.5,8\n");
    const Sample s = ingest((dir / "columns.csv").string());
    REQUIRE(s.size() == 2);
    CHECK(s.values()[1] == 2.5);
  }
  {
    write(dir / "negative.txt", "2.0\n-1.0\n");
    try {
      ingest((dir / "negative.txt").string());
      FAIL("expected error");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  {
    write(dir / "garbage.txt", "1.0\nxyz\n");
    try {
      ingest((dir / "garbage.txt").string());
      FAIL("expected error");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  {
    write(dir / "empty.txt", "");
    CHECK_THROWS_AS(ingest((dir / "empty.txt").string()), std::runtime_error);
  }
  CHECK_THROWS_AS(ingest((dir / "missing.txt").string()), std::runtime_error);
}

TEST_CASE("fit writes the exact golden grenander.csv") {
  const fs::path dir = fresh_dir("fit_golden");
  write(dir / "data.txt", "1.0\n3.0\n");

  RunConfig config;
  config.command = "fit";
  config.data_path = (dir / "data.txt").string();
  config.out_dir = (dir / "out").string();
  config.burn_in = 1;
  config.iterations = 1;
  config.seed = 7;
  CHECK(run_command(config) == 0);

  CHECK(slurp(dir / "out" / "grenander.csv") ==
        "component,knot,height,weight,location\n"
        "1,1,0.5,0.25,1\n"
        "2,3,0.25,0.75,3\n");
  CHECK(fs::exists(dir / "out" / "band.csv"));
  CHECK(fs::exists(dir / "out" / "meta.json"));
  CHECK_FALSE(fs::exists(dir / "out" / "draws.csv"));
}

TEST_CASE("fit is byte-identical under a fixed seed") {
  const fs::path dir = fresh_dir("fit_seed");
  write(dir / "data.txt", "0.3\n1.1\n0.8\n2.2\n1.7\n0.4\n0.9\n1.3\n");

  RunConfig config;
  config.command = "fit";
  config.data_path = (dir / "data.txt").string();
  config.burn_in = 20;
  config.iterations = 50;
  config.grid = 64;
  config.seed = 99;
  config.emit_draws = true;

  config.out_dir = (dir / "a").string();
  REQUIRE(run_command(config) == 0);
  config.out_dir = (dir / "b").string();
  REQUIRE(run_command(config) == 0);

  CHECK(slurp(dir / "a" / "band.csv") == slurp(dir / "b" / "band.csv"));
  CHECK(slurp(dir / "a" / "draws.csv") == slurp(dir / "b" / "draws.csv"));
  CHECK(slurp(dir / "a" / "grenander.csv") ==
        slurp(dir / "b" / "grenander.csv"));
}

TEST_CASE("missing data file leaves no partial outputs") {
  const fs::path dir = fresh_dir("fit_missing");
  RunConfig config;
  config.command = "fit";
  config.data_path = (dir / "nope.txt").string();
  config.out_dir = (dir / "out").string();
  CHECK(run_command(config) != 0);
  CHECK_FALSE(fs::exists(dir / "out" / "grenander.csv"));
  CHECK_FALSE(fs::exists(dir / "out" / "meta.json"));
}

TEST_CASE("grenander command writes only the fit") {
  const fs::path dir = fresh_dir("gren_cmd");
  write(dir / "data.txt", "2.0\n3.0\n");
  RunConfig config;
  config.command = "grenander";
  config.data_path = (dir / "data.txt").string();
  config.out_dir = (dir / "out").string();
  CHECK(run_command(config) == 0);
  CHECK(slurp(dir / "out" / "grenander.csv") ==
        "component,knot,height,weight,location\n"
        "1,3,0.33333333333333331,1,3\n");
  CHECK_FALSE(fs::exists(dir / "out" / "band.csv"));
}

TEST_CASE("simulate writes a coverage csv with one row per cell") {
  const fs::path dir = fresh_dir("simulate");
  RunConfig config;
  config.command = "simulate";
  config.truth = "exponential";
  config.n_list = {30};
  config.x_list = {1.0};
  config.reps = 4;
  config.burn_in = 20;
  config.iterations = 40;
  config.seed = 7;
  config.out_dir = (dir / "out").string();
  REQUIRE(run_command(config) == 0);

  const std::string csv = slurp(dir / "out" / "coverage.csv");
  CHECK(csv.find("truth,n,x,coverage,mean_length,replications,mc_std_err") ==
        0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);  // header + 1 row
  CHECK(csv.find("exponential,30,1,") != std::string::npos);

  config.truth = "cauchy";
  CHECK(run_command(config) != 0);
}

TEST_CASE("rate command writes one row per n") {
  const fs::path dir = fresh_dir("rate");
  RunConfig config;
  config.command = "rate";
  config.truth = "exponential";
  config.n_list = {20, 40, 80};
  config.reps = 2;
  config.burn_in = 10;
  config.iterations = 30;
  config.seed = 7;
  config.out_dir = (dir / "out").string();
  REQUIRE(run_command(config) == 0);
  const std::string csv = slurp(dir / "out" / "rate.csv");
  CHECK(csv.find("truth,n,epsilon_n,mean_l1,mass_beyond,replications") == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows
}
