#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

// End-to-end checks of the command-line front end: exit codes, report
// contents and byte-identical output across runs.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  std::string tmp = std::string(COVERCERT_TMPDIR) + "/cli_out.txt";
  std::string cmd = std::string(COVERCERT_BIN) + " " + args + " > " + tmp + " 2>&1";
  int rc = std::system(cmd.c_str());
  RunResult res;
  res.exit_code = WEXITSTATUS(rc);
  std::ifstream is(tmp);
  std::stringstream ss;
  ss << is.rdbuf();
  res.output = ss.str();
  return res;
}

std::string fixture(const std::string& name) { return std::string(COVERCERT_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("verify passes on the shipped fixtures") {
  auto e0 = run("verify " + fixture("e0.json"));
  CHECK(e0.exit_code == 0);
  CHECK(e0.output.find("verdict: pass") != std::string::npos);

  auto e1 = run("verify " + fixture("e1.json") + " --json");
  CHECK(e1.exit_code == 0);
  CHECK(e1.output.find("\"omega\": 15") != std::string::npos);
  CHECK(e1.output.find("\"passed\": true") != std::string::npos);

  auto e2 = run("verify " + fixture("e2_sqrt3.json"));
  CHECK(e2.exit_code == 0);
}

TEST_CASE("analyze and vset emit reports") {
  auto an = run("analyze " + fixture("e0.json"));
  CHECK(an.exit_code == 0);
  CHECK(an.output.find("\"omega\": 10") != std::string::npos);

  auto vs = run("vset " + fixture("e0.json"));
  CHECK(vs.exit_code == 0);
  CHECK(vs.output.find("\"Theta_1_1\"") != std::string::npos);
  CHECK(vs.output.find("\"first_failure\": \"\"") != std::string::npos);

  std::string eqfile = std::string(COVERCERT_TMPDIR) + "/equations.json";
  auto emitted = run("vset " + fixture("e0.json") + " --emit " + eqfile);
  CHECK(emitted.exit_code == 0);
  std::ifstream is(eqfile);
  std::stringstream ss;
  ss << is.rdbuf();
  CHECK(ss.str().find("\"monomials\"") != std::string::npos);
}

TEST_CASE("engineered corruption fails with the discriminant block first") {
  auto bad = run("verify " + fixture("e0.json") + " --set-phi Theta_0_0=1/3 --json");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("\"first_failure\": \"V[disc]") != std::string::npos);

  auto w1 = run("verify " + fixture("e0.json") + " --set-phi Delta=0 --json");
  CHECK(w1.exit_code == 1);
  CHECK(w1.output.find("V[disc]") != std::string::npos);
  // W1 fires as well: the report marks it not-ok.
  CHECK(w1.output.find("\"label\": \"W1 W1\"") != std::string::npos);
  CHECK(w1.output.find("\"note\": \"predicate holds\"") != std::string::npos);
}

TEST_CASE("input errors exit 2 without a partial report") {
  auto missing = run("verify /nonexistent/input.json");
  CHECK(missing.exit_code == 2);
  CHECK(missing.output.find("\"analysis\"") == std::string::npos);

  std::string badfile = std::string(COVERCERT_TMPDIR) + "/garbage.json";
  {
    std::ofstream os(badfile);
    os << "this is not json";
  }
  auto garbage = run("verify " + badfile);
  CHECK(garbage.exit_code == 2);
}

TEST_CASE("analysis failures on a well-formed model exit 1") {
  std::string curve = std::string(COVERCERT_TMPDIR) + "/underdeclared.json";
  {
    std::ofstream os(curve);
    os << R"({"f": [["1/4", "0", "1"], ["0", "-1", "0"]], "declared_branch_points": ["1"]})";
  }
  auto res = run("verify " + curve);
  CHECK(res.exit_code == 1);
  CHECK(res.output.find("RamifiedAtDeclaredBeta") != std::string::npos);
}

TEST_CASE("byte-identical output across runs") {
  auto a = run("verify " + fixture("e0.json") + " --json --seed 7");
  auto b = run("verify " + fixture("e0.json") + " --json --seed 7");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  auto c = run("vset " + fixture("e1.json"));
  auto d = run("vset " + fixture("e1.json"));
  CHECK(c.output == d.output);
}

TEST_CASE("bounds command") {
  auto b = run("bounds --genus 0 --degree 2 --json");
  CHECK(b.exit_code == 0);
  CHECK(b.output.find("\"lambda\": \"4722366482869645213696\"") != std::string::npos);
  CHECK(b.output.find("\"lambda_prime\": \"9223372036854775808\"") != std::string::npos);
  CHECK(b.output.find("\"lambda_prime_dominated\": true") != std::string::npos);

  auto bad = run("bounds --genus -1 --degree 2");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("lemma suite clean run and injected fault") {
  auto ok = run("lemma-suite --seed 0 --count 25");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("verdict: pass") != std::string::npos);

  // Fast path.
  auto one = run("lemma-suite --seed 0 --count 1");
  CHECK(one.exit_code == 0);

  // The deliberately broken product bound must fail with a counterexample.
  auto faulty = run("lemma-suite --seed 0 --count 25 --inject-fault product-bound");
  CHECK(faulty.exit_code == 1);
  CHECK(faulty.output.find("counterexample") != std::string::npos);

  // Determinism of the suite output for a fixed seed.
  auto r1 = run("lemma-suite --seed 3 --count 10 --json");
  auto r2 = run("lemma-suite --seed 3 --count 10 --json");
  CHECK(r1.output == r2.output);
}
