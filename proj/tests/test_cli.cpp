#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#ifndef BLASCHKE_CLI_PATH
#error "BLASCHKE_CLI_PATH must be defined"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("blaschke_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + (env.empty() ? "" : " ") + BLASCHKE_CLI_PATH + " " + args + " >" +
                          (scratch() / "stdout").string() + " 2>" + (scratch() / "stderr").string();
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::vector<double>> read_csv(const fs::path& p, std::vector<std::string>& header) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  header.clear();
  for (std::stringstream ss(line); std::getline(ss, line, ',');) header.push_back(line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("expand a monomial") {
  const auto out = scratch() / "expand.json";
  REQUIRE(run("expand --func poly:0,0,1 --seq harmonic-shifted --nterms 32 --samples 1024 --out " + out.string()) == 0);
  const auto j = json::parse(slurp(out));
  CHECK(j["coefficients"].size() == 32);
  const auto& res = j["residual_sup_norms"];
  REQUIRE(res.size() == 32);
  // Anchors from direct Newton-form interpolation; the sequence rises at n = 3, 4.
  const double anchor[] = {1.44444444444, 1.26388888889, 1.455, 1.49111111111};
  for (std::size_t n = 0; n < 4; ++n) CHECK(res[n].get<double>() == doctest::Approx(anchor[n]).epsilon(1e-10));
  for (std::size_t n = 4; n < res.size(); ++n) CHECK(res[n].get<double>() < res[n - 1].get<double>());
  CHECK(res[31].get<double>() < 0.7);
  CHECK(fs::exists(out.string() + ".meta.json"));
  CHECK(j["meta"]["sample_count"] == 1024);
}

TEST_CASE("two-point example prints (0, 1)") {
  REQUIRE(run("expand --func blaschke:0.5 --seq 'explicit:[0.5,0.7]' --nterms 2 --samples 256") == 0);
  const auto j = json::parse(slurp(scratch() / "stdout"));
  CHECK(std::abs(j["coefficients"][0][0].get<double>()) < 1e-12);
  CHECK(j["coefficients"][1][0].get<double>() == doctest::Approx(1.0));
  CHECK(std::abs(j["coefficients"][1][1].get<double>()) < 1e-12);
}

TEST_CASE("output is byte-identical across runs") {
  const auto a = scratch() / "a.json", b = scratch() / "b.json";
  REQUIRE(run("expand --func kernel:0.3+0.1i --nterms 10 --samples 512 --out " + a.string()) == 0);
  REQUIRE(run("expand --func kernel:0.3+0.1i --nterms 10 --samples 512 --out " + b.string()) == 0);
  CHECK(slurp(a) == slurp(b));
}

TEST_CASE("usage and precondition failures exit 2") {
  CHECK(run("expand --func kernel:0.3 --seq geometric:0.5 --nterms 8") == 2);
  CHECK(run("expand --func spline:1 --nterms 8") == 2);
  CHECK(slurp(scratch() / "stderr").find("--func") != std::string::npos);
  CHECK(run("expand --func poly:1 --seq spiral --nterms 8") == 2);
  CHECK(slurp(scratch() / "stderr").find("--seq") != std::string::npos);
  CHECK(run("expand --nterms 8") == 2);
  CHECK(run("expand --func poly:1 --samples 100") == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("convergence --func poly:1,1 --norms lp:3 --nterms 4") == 2);
  CHECK(run("convergence --func poly:1,1 --bound kernel --nterms 4") == 2);
  CHECK(run("tmw witness --seq 'explicit:[0.1,0.2,0.3,0.4]' --kmax 4") == 2);
}

TEST_CASE("sample count from the environment") {
  REQUIRE(run("expand --func poly:1,2 --nterms 2", "BLASCHKE_SAMPLES=128") == 0);
  CHECK(json::parse(slurp(scratch() / "stdout"))["meta"]["sample_count"] == 128);
  CHECK(run("expand --func poly:1,2 --nterms 2", "BLASCHKE_SAMPLES=abc") == 2);
}

TEST_CASE("kernel bound column dominates the sup column") {
  const auto out = scratch() / "conv.csv";
  REQUIRE(run("convergence --func kernel:0.3 --nterms 30 --norms sup,hardy:2,bergman:2:0 --bound kernel --out " +
              out.string()) == 0);
  std::vector<std::string> header;
  const auto rows = read_csv(out, header);
  CHECK(header == std::vector<std::string>{"n", "sup", "hardy:2", "bergman:2:0", "bound"});
  REQUIRE(rows.size() == 30);
  for (const auto& r : rows) {
    CHECK(r[4] >= r[1]);
    CHECK(r[2] <= r[1] + 1e-10);
    CHECK(r[3] <= r[1] + 1e-10);
  }
}

TEST_CASE("hardy 1 column stays below sup") {
  const auto out = scratch() / "h1.csv";
  REQUIRE(run("convergence --func poly:1,-2,0.5,3 --nterms 20 --norms sup,hardy:1 --out " + out.string()) == 0);
  std::vector<std::string> header;
  for (const auto& r : read_csv(out, header)) CHECK(r[2] <= r[1] + 1e-10);
}

TEST_CASE("finite product rows vanish past its degree") {
  const auto out = scratch() / "b3.csv";
  REQUIRE(run("convergence --func 'blaschke:0.1;0.2i;-0.3' --seq 'explicit:[0.1,0.2i,-0.3,0.5,0.6]' --nterms 5 --out " +
              out.string()) == 0);
  std::vector<std::string> header;
  const auto rows = read_csv(out, header);
  REQUIRE(rows.size() == 5);
  for (std::size_t n = 3; n < 5; ++n) CHECK(rows[n][1] <= 1e-10);
}

TEST_CASE("tmw subcommands") {
  REQUIRE(run("tmw functional --seq 'explicit:[0,0.5]' --n 1 --samples 256") == 0);
  auto j = json::parse(slurp(scratch() / "stdout"));
  CHECK(j["quadrature"].get<double>() == doctest::Approx(1.0));
  CHECK(j["closed_form"].get<double>() == 1.0);

  REQUIRE(run("tmw gram --seq harmonic --k 12 --samples 4096") == 0);
  j = json::parse(slurp(scratch() / "stdout"));
  CHECK(j["max_off_diagonal"].get<double>() <= 1e-8);

  REQUIRE(run("tmw witness --seq harmonic-shifted --support pow2 --kmax 32 --exponent 0.25 --samples 4096") == 0);
  j = json::parse(slurp(scratch() / "stdout"));
  CHECK(j["strictly_increasing"].get<bool>());
  CHECK(j["values"].size() == 5);
  CHECK(j["l2_partial_sum"].get<double>() <= 2.0);
  CHECK(run("tmw witness --seq harmonic-shifted --kmax 32 --samples 2048") == 3);

  REQUIRE(run("tmw functional --seq harmonic-shifted --n 1 --n-end 5 --samples 1024") == 0);
  CHECK(json::parse(slurp(scratch() / "stdout")).size() == 5);
}

TEST_CASE("selftest filtering and forced under-resolution") {
  CHECK(run("selftest --filter toeplitz --samples 512") == 0);
  const auto out = slurp(scratch() / "stdout");
  CHECK(out.find("toeplitz:") != std::string::npos);
  CHECK(out.find("fnspace:") == std::string::npos);
  CHECK(run("selftest --samples 16") != 0);
  CHECK(slurp(scratch() / "stderr").find("first failing invariant") != std::string::npos);
  CHECK(run("selftest --filter nosuchmodule") == 2);
}

}  // TEST_SUITE
