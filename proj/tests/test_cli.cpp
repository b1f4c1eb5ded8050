#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

#include "punct/series.hpp"

namespace fs = std::filesystem;
using punct::Rat;
using punct::RationalPolynomial;

namespace {
struct Result {
  int status;
  std::string out;
};

Result cli(const std::string& args) {
  const std::string cmd = std::string(PUNCT_CLI) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf;
  while (size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

fs::path scratch() {
  auto d = fs::temp_directory_path() / ("punct_cli_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}
}  // namespace

TEST_CASE("bad invocations print usage and fail") {
  auto r = cli("ratios --bogus 3");
  CHECK(r.status != 0);
  CHECK(r.out.find("--bogus") != std::string::npos);
  CHECK(r.out.find("Usage:") != std::string::npos);
  CHECK(cli("").status != 0);
  CHECK(cli("frobnicate").status != 0);
  CHECK(cli("tm --mmax 500").status != 0);
  CHECK(cli("--help").status == 0);
}

TEST_CASE("ratios column") {
  auto r = cli("ratios --r 0 --kmax 10");
  REQUIRE(r.status == 0);
  CHECK(r.out.rfind("k,value,exact\n", 0) == 0);
  CHECK(r.out.find("\n2,0.530516476973,5/(3*pi)\n") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 12);
}

TEST_CASE("tm then reconstruct gives the once-punctured closed forms") {
  auto d = scratch();
  auto t = cli("tm --mmax 40 --rmax 1 --kmax 1 --out-dir " + d.string());
  REQUIRE(t.status == 0);
  REQUIRE(fs::exists(d / "tm_r1_k0.series"));
  auto r0 = cli("reconstruct --in " + (d / "tm_r1_k0.series").string());
  REQUIRE(r0.status == 0);
  auto j0 = nlohmann::json::parse(r0.out);
  const Rat half(1, 2);
  CHECK(j0["A"] == (RationalPolynomial::from_ints({1, -8, 20, -16, 2}) * half).to_string());
  CHECK(j0["B"] == (RationalPolynomial::from_ints({-1, 6, -10, 4}) * half).to_string());
  CHECK(j0["A_at_xc"] == "1/256");
  CHECK(j0["gamma"] == "1");

  auto r1 = cli("reconstruct --in " + (d / "tm_r1_k1.series").string());
  REQUIRE(r1.status == 0);
  auto j1 = nlohmann::json::parse(r1.out);
  CHECK(j1["gamma"] == "5/2");
  CHECK(j1["A"] == RationalPolynomial::from_ints({1, -14, 72, -162, 145, -34, 2}).to_string());
  CHECK(j1["B"] == RationalPolynomial::from_ints({-1, 12, -50, 82, -43, 4}).to_string());
  fs::remove_all(d);
}

TEST_CASE("manifests are reproducible") {
  auto d = scratch();
  const std::string base = "--manifest " + (d / "m1.json").string() + " qfe --mmax 30 --kmax 2 --out-dir " +
                           (d / "a").string();
  REQUIRE(cli(base).status == 0);
  REQUIRE(cli("--manifest " + (d / "m2.json").string() + " qfe --mmax 30 --kmax 2 --out-dir " + (d / "b").string())
              .status == 0);
  auto m1 = nlohmann::json::parse(slurp(d / "m1.json")), m2 = nlohmann::json::parse(slurp(d / "m2.json"));
  CHECK(m1["command"] == "qfe");
  CHECK(m1["parameters"] == m2["parameters"]);
  REQUIRE(m1["outputs"].size() == 3);
  for (size_t i = 0; i < 3; ++i) CHECK(m1["outputs"][i]["sha256"] == m2["outputs"][i]["sha256"]);
  CHECK(m1["working_digits"].get<int>() >= 50);

  auto m3 = d / "m3.json";
  REQUIRE(cli("--manifest " + m3.string() + " reconstruct --in " + (d / "a" / "qfe_r0_k1.series").string() +
              " --out " + (d / "rec.json").string())
              .status == 0);
  auto j3 = nlohmann::json::parse(slurp(m3));
  CHECK(j3["inputs"][0]["sha256"] == m1["outputs"][1]["sha256"]);
  CHECK(j3["outputs"].size() == 1);
  fs::remove_all(d);
}

TEST_CASE("fit, partial sums and approximants from series files") {
  auto d = scratch();
  REQUIRE(cli("qfe --mmax 200 --out-dir " + d.string()).status == 0);
  const std::string in = (d / "qfe_r0_k0.series").string();

  auto ps = cli("fit --in " + in + " --form partial-sum --first-exponent 1/2 --Ks 4 --Ms 200");
  REQUIRE(ps.status == 0);
  CHECK(ps.out.find("200,4,0.25000000000") != std::string::npos);

  auto lad = cli("fit --in " + in + " --form ladder --lead -3/2 --K 3 --mlo 195");
  REQUIRE(lad.status == 0);
  CHECK(lad.out.rfind("M,", 0) == 0);
  CHECK(std::count(lad.out.begin(), lad.out.end(), '\n') == 7);

  auto da = cli("da --in " + in + " --K 2 --degrees 5,5,5 --xc 1/4");
  REQUIRE(da.status == 0);
  CHECK(da.out.find("[5 5 5],") != std::string::npos);
  CHECK(da.out.find(",0.5,") != std::string::npos);
  auto neg = cli("da --in " + in + " --K 2 --degrees 5,5,5 --xc 0.25 --negate --exact");
  REQUIRE(neg.status == 0);
  CHECK(neg.out.find(",-0.5,") != std::string::npos);
  auto scan = cli("da --in " + in + " --K 2 --scan --lo 4 --hi 6");
  CHECK(std::count(scan.out.begin(), scan.out.end(), '\n') == 1 + 15);
  fs::remove_all(d);
}

TEST_CASE("amplitudes, scaling and oracle") {
  auto a = cli("amplitudes --r 2 --puncture arbitrary --kmax 0");
  REQUIRE(a.status == 0);
  CHECK(nlohmann::json::parse(a.out)["amplitudes"][0]["exact"] == "5/(3072*sqrt(pi))");
  auto s = cli("scaling --from 1 --to 2 --step 0.5");
  REQUIRE(s.status == 0);
  CHECK(std::count(s.out.begin(), s.out.end(), '\n') == 4);
  auto o = cli("oracle --family sap --mmax 8 --r 1");
  REQUIRE(o.status == 0);
  CHECK(o.out.find("\n8 1\n") != std::string::npos);
}

TEST_CASE("quick verification") {
  const auto t0 = std::chrono::steady_clock::now();
  auto v = cli("verify --quick");
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(secs < 60);
  int lines = 0;
  std::istringstream in(v.out);
  for (std::string l; std::getline(in, l);)
    if (l.rfind("[", 0) == 0) ++lines;
  CHECK(lines == 12);
  for (const char* id : {"1.", "3.", "5.", "10.", "12."})
    CHECK(v.out.find(std::string("[PASS] ") + id) != std::string::npos);
  CHECK(v.out.find("[SKIP] 2.") != std::string::npos);
}
