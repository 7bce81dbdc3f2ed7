#include <doctest.h>

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "bernmean/cli.hpp"

namespace {

struct CliRun {
  int status;
  std::string out;
  std::string err;
};

CliRun run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"bernmean"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out;
  std::ostringstream err;
  const int status =
      bernmean::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char ch : text) lines += ch == '\n' ? 1 : 0;
  return lines;
}

}  // namespace

TEST_CASE("bound prints the golden value for f and g") {
  const auto r = run({"bound", "--n", "20", "--k", "1", "--alpha", "0.05",
                      "--methods", "f,g"});
  CHECK(r.status == 0);
  CHECK(r.out == "method,side,value\n"
                 "f,lower,0.00250000000000\n"
                 "g,lower,0.00250000000000\n");
}

TEST_CASE("bound handles zero successes and the clamped hoeffding case") {
  const auto zero = run({"bound", "--n", "5", "--k", "0", "--alpha", "0.1",
                         "--methods", "f"});
  CHECK(zero.status == 0);
  CHECK(zero.out.find("f,lower,0.0000") != std::string::npos);

  const auto clamped = run({"bound", "--n", "100", "--k", "10", "--alpha",
                            "0.05", "--methods", "hoeffding"});
  CHECK(clamped.status == 0);
  CHECK(clamped.out.find("hoeffding,lower,0.0000") != std::string::npos);
}

TEST_CASE("bound jsonl output and advisory note") {
  const auto r = run({"bound", "--n", "10", "--k", "3", "--alpha", "0.7",
                      "--methods", "binomlike,cp", "--format", "jsonl"});
  CHECK(r.status == 0);
  CHECK(r.out.find("\"method\":\"binomlike\"") != std::string::npos);
  CHECK(r.out.find("\"advisory\":true") != std::string::npos);
  CHECK(r.err.find("warning:") != std::string::npos);
}

TEST_CASE("bound argument validation exits 2") {
  CHECK(run({"bound", "--n", "4", "--k", "9", "--alpha", "0.1"}).status == 2);
  CHECK(run({"bound", "--n", "4", "--k", "1", "--alpha", "1.5"}).status == 2);
  CHECK(run({"bound", "--n", "4", "--k", "1", "--alpha", "0.1", "--methods",
             "bogus"}).status == 2);
  CHECK(run({"bound", "--n", "4"}).status == 2);  // missing required options
}

TEST_CASE("figure panel a emits one row per k") {
  const auto r =
      run({"figure", "--panel", "a", "--n", "20", "--alpha", "0.05"});
  CHECK(r.status == 0);
  CHECK(count_lines(r.out) == 22);  // header + k = 0..20
  CHECK(r.out.find("k,q_f,q_g,q_binomlike,q_hoeffding\n") == 0);
  // Row k = 1 carries the 1/400 value in both the f and g columns.
  {
    std::istringstream is(r.out.substr(r.out.find("\n1,") + 1));
    std::string cell;
    std::getline(is, cell, ',');
    std::getline(is, cell, ',');
    CHECK(std::stod(cell) == doctest::Approx(0.0025).epsilon(1e-12));
    std::getline(is, cell, ',');
    CHECK(std::stod(cell) == doctest::Approx(0.0025).epsilon(1e-12));
  }

  const auto tiny = run({"figure", "--panel", "a", "--n", "1", "--alpha",
                         "0.5"});
  CHECK(count_lines(tiny.out) == 3);
  CHECK(tiny.out.find("\n0,0,0,0,0\n") != std::string::npos);
  CHECK(tiny.out.find("\n1,0.5,") != std::string::npos);
}

TEST_CASE("figure panel b: hoeffding is clamped to 0 up to alpha ~ 0.14") {
  const auto r = run({"figure", "--panel", "b", "--n", "100", "--k", "10",
                      "--points", "200"});
  CHECK(r.status == 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  CHECK(line == "alpha,q_f,q_g,q_binomlike,q_hoeffding");
  // Exact switch point: 0.1 = sqrt(-log(alpha)/200) at alpha = e^-2.
  while (std::getline(is, line)) {
    const auto comma = line.find(',');
    const double alpha = std::stod(line.substr(0, comma));
    const auto last = line.rfind(',');
    const double h = std::stod(line.substr(last + 1));
    if (alpha <= 0.135) CHECK(h == 0.0);
    if (alpha >= 0.136) CHECK(h > 0.0);
  }
}

TEST_CASE("figure output is byte-deterministic") {
  const auto a = run({"figure", "--panel", "b", "--n", "30", "--k", "7"});
  const auto b = run({"figure", "--panel", "b", "--n", "30", "--k", "7"});
  CHECK(a.out == b.out);
  CHECK(run({"figure", "--panel", "c", "--n", "5"}).status == 2);
  CHECK(run({"figure", "--panel", "a", "--n", "5"}).status == 2);  // no alpha
}

TEST_CASE("tables passes on the golden data and fails when perturbed") {
  const auto ok = run({"tables"});
  CHECK(ok.status == 0);
  CHECK(count_lines(ok.out) == 1 + 120 + 6);
  CHECK(ok.out.find(",0\n") == std::string::npos);  // no failing cell

  // Spot value: n=10, d=5 is 0.376953125 and rounds to 0.377.
  CHECK(ok.out.find("1,10,5,0.37695312") != std::string::npos);

  const auto bad = run({"tables", "--self-test-perturb"});
  CHECK(bad.status == 1);
  CHECK(bad.err.find("mismatch") != std::string::npos);
}

TEST_CASE("verify lemmas suite passes") {
  const auto r = run({"verify", "--suite", "lemmas", "--n-max", "100"});
  CHECK(r.status == 0);
  CHECK(r.out.find("linear-bounds:") != std::string::npos);
  CHECK(r.out.find("binomial-products:") != std::string::npos);
  CHECK(r.out.find("alpha-dagger floor:") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify coverage suite (exact only, reduced model count)") {
  const auto r = run({"verify", "--suite", "coverage", "--n-max", "10",
                      "--trials", "0", "--models", "60"});
  CHECK(r.status == 0);
  CHECK(r.out.find("coverage: models=60") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("verify tightness suite passes") {
  const auto r = run({"verify", "--suite", "tightness", "--n-max", "12"});
  CHECK(r.status == 0);
  CHECK(r.out.find("tightness:") != std::string::npos);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(run({"verify", "--suite", "bogus"}).status == 2);
}

TEST_CASE("sequential subcommand") {
  const auto r = run({"sequential", "--policy", "constant:0", "--n", "10",
                      "--alpha", "0.1", "--runs", "50", "--seed", "7"});
  CHECK(r.status == 0);
  CHECK(count_lines(r.out) == 1 + 50 + 1);  // header, runs, summary
  CHECK(r.out.find("run,qbar,successes,qhat_f,covered\n") == 0);
  CHECK(r.out.find("fraction=1 ") != std::string::npos);
  CHECK(r.out.find("pass=1") != std::string::npos);

  const auto again = run({"sequential", "--policy", "constant:0", "--n", "10",
                          "--alpha", "0.1", "--runs", "50", "--seed", "7"});
  CHECK(again.out == r.out);  // byte determinism

  CHECK(run({"sequential", "--policy", "unknown"}).status == 2);
}

TEST_CASE("help exits 0") {
  CHECK(run({"--help"}).status == 0);
  CHECK(run({"bound", "--help"}).status == 0);
}
