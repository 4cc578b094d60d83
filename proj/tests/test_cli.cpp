#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fa/cli.hpp"
#include "fa/seq.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  json doc; // parsed stdout when it is JSON
};

Run run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = fa::cli::run(args, out, err);
  Run r{code, out.str(), err.str(), json()};
  if (!r.out.empty() && (r.out[0] == '{' || r.out[0] == '[')) {
    r.doc = json::parse(r.out, nullptr, false);
  }
  return r;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("classify emits the documented flags") {
  Run r = run_cli({"classify", "EX y <= x . y + y = x"});
  REQUIRE(r.code == 0);
  REQUIRE(!r.doc.is_discarded());
  CHECK(r.doc["result"]["sharp"] == false);
  CHECK(r.doc["result"]["sigma_b1"] == true);
  CHECK(r.doc["result"]["pi_b1"] == false);
  CHECK(r.doc["class"] == r.doc["result"]);
  CHECK(r.doc.contains("input"));
  CHECK(r.doc.contains("cost"));
}

TEST_CASE("eval returns the value and the cost") {
  Run r = run_cli({"eval", "3 # 3"});
  REQUIRE(r.code == 0);
  CHECK(r.doc["result"]["value"] == "16");
  CHECK(r.doc["cost"]["steps"].get<std::uint64_t>() > 0);
  CHECK(r.doc["class"].is_null());
}

TEST_CASE("realize reports witness and realizer") {
  Run r = run_cli({"realize", "EX y <= x . y + y = x", "--let", "x=4"});
  REQUIRE(r.code == 0);
  CHECK(r.doc["result"]["realized"] == true);
  CHECK(r.doc["result"]["witness"] == "2");
  CHECK(r.doc["result"]["realizer"] ==
        fa::encode_seq({fa::Nat(2), fa::Nat(0)}).value.to_decimal());
  // An absent realizer is still a success.
  Run absent = run_cli({"realize", "EX y <= x . y + y = x", "--let", "x=5"});
  CHECK(absent.code == 0);
  CHECK(absent.doc["result"]["realized"] == false);
  CHECK(absent.doc["result"]["realizer"].is_null());
}

TEST_CASE("check accepts the built realizer and rejects junk") {
  Run built = run_cli({"realize", "EX y <= x . y + y = x", "--let", "x=4"});
  std::string realizer = built.doc["result"]["realizer"].get<std::string>();
  Run ok = run_cli({"check", "EX y <= x . y + y = x", "--let", "x=4",
                    "--realizer", realizer});
  REQUIRE(ok.code == 0);
  CHECK(ok.doc["result"]["accepted"] == true);
  Run bad = run_cli({"check", "EX y <= x . y + y = x", "--let", "x=4",
                     "--realizer", "0"});
  REQUIRE(bad.code == 0);
  CHECK(bad.doc["result"]["accepted"] == false);
}

TEST_CASE("pind reports the full record") {
  Run r = run_cli({"pind", "x = 0", "--bound", "10"});
  REQUIRE(r.code == 0);
  CHECK(r.doc["result"]["base_ok"] == true);
  CHECK(r.doc["result"]["first_step_failure"] == "1");
  CHECK(r.doc["result"]["conclusion_ok_up_to"] == "0");
  CHECK(r.doc["result"]["checked_bound"] == "10");
}

TEST_CASE("extract-fn returns the least output") {
  Run r = run_cli({"extract-fn", "y = half(x)", "--let", "x=19", "--bound", "x"});
  REQUIRE(r.code == 0);
  CHECK(r.doc["result"]["found"] == true);
  CHECK(r.doc["result"]["value"] == "9");
  Run none = run_cli({"extract-fn", "y + y = x", "--let", "x=5", "--bound", "x"});
  REQUIRE(none.code == 0);
  CHECK(none.doc["result"]["found"] == false);
  CHECK(none.doc["result"]["value"].is_null());
}

TEST_CASE("corpus generates parseable text and sweeps agreement") {
  Run plain = run_cli({"corpus", "--count", "10", "--seed", "3", "--plain"});
  REQUIRE(plain.code == 0);
  int formulas = 0;
  std::istringstream lines(plain.out);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    ++formulas;
    CHECK_NOTHROW(fa::parse_formula(line));
  }
  CHECK(formulas == 10);

  Run swept = run_cli({"corpus", "--count", "8", "--seed", "3", "--cap", "6"});
  REQUIRE(swept.code == 0);
  CHECK(swept.doc["result"]["agreement"]["passed"] == 8);
  CHECK(swept.doc["result"]["agreement"]["failures"].empty());
}

TEST_CASE("corpus files can be read back for an agreement sweep") {
  std::string path = "cli_corpus_roundtrip.fa";
  Run gen = run_cli({"corpus", "--count", "6", "--seed", "5", "--plain"});
  REQUIRE(gen.code == 0);
  {
    std::ofstream out(path);
    out << gen.out;
  }
  Run swept = run_cli({"corpus", "--file", path, "--cap", "4"});
  std::remove(path.c_str());
  REQUIRE(swept.code == 0);
  CHECK(swept.doc["result"]["count"] == 6);
  CHECK(swept.doc["result"]["agreement"]["passed"] == 6);
}

TEST_CASE("exit codes: usage and syntax errors are 2") {
  CHECK(run_cli({"classify", "EX y <= . y = 0"}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli({"classify"}).code == 2);              // missing input
  CHECK(run_cli({"eval", "0", "--nonsense"}).code == 2);
  CHECK(run_cli({"check", "0 <= x"}).code == 2);       // missing --realizer
  CHECK(run_cli({"eval", "0", "--let", "x"}).code == 2);
  CHECK(run_cli({"pind", "x = 0"}).code == 2);         // missing --bound
  Run syn = run_cli({"classify", "x ? 0"});
  CHECK(syn.code == 2);
  CHECK(syn.out.empty());
  CHECK(!syn.err.empty());
}

TEST_CASE("exit codes: domain errors are 1 with structured JSON") {
  Run not_sigma = run_cli({"realize", "ALL y <= x . y <= x", "--let", "x=2"});
  CHECK(not_sigma.code == 1);
  CHECK(not_sigma.doc["error"]["kind"] == "not_sigma_b1");
  Run unbound = run_cli({"eval", "x + 1"});
  CHECK(unbound.code == 1);
  CHECK(unbound.doc["error"]["kind"] == "unbound_variable");
  Run malformed = run_cli({"pind", "x <= y", "--bound", "4", "--var", "x"});
  CHECK(malformed.code == 1);
  CHECK(malformed.doc["error"]["kind"] == "malformed_instance");
}

TEST_CASE("exit codes: budget exhaustion is 3") {
  Run r = run_cli({"eval", "x # x", "--let", "x=255", "--budget-bits", "8"});
  CHECK(r.code == 3);
  CHECK(r.doc["error"]["kind"] == "budget_exceeded");
  CHECK(r.doc["error"]["which"] == "bits");
  Run steps = run_cli({"eval", "x * x", "--let", "x=255", "--budget-steps", "5"});
  CHECK(steps.code == 3);
  CHECK(steps.doc["error"]["which"] == "steps");
}

TEST_CASE("budget flags change feasibility") {
  CHECK(run_cli({"eval", "x # x", "--let", "x=255"}).code == 0);
  CHECK(run_cli({"eval", "x # x", "--let", "x=255", "--budget-bits", "64"}).code == 3);
}

TEST_CASE("JSON output round-trips through the tool") {
  Run first = run_cli({"classify", "NOT (EX y <= x . y = x)"});
  REQUIRE(first.code == 0);
  std::string printed = first.doc["input"].get<std::string>();
  Run second = run_cli({"classify", printed});
  REQUIRE(second.code == 0);
  CHECK(first.doc["class"] == second.doc["class"]);
  CHECK(first.doc["input"] == second.doc["input"]);
}

TEST_CASE("formulas can come from a file") {
  std::string path = "cli_input_formula.txt";
  {
    std::ofstream out(path);
    out << "EX y <= x . y + y = x\n";
  }
  Run r = run_cli({"classify", "@" + path});
  std::remove(path.c_str());
  REQUIRE(r.code == 0);
  CHECK(r.doc["result"]["sigma_b1"] == true);
  CHECK(run_cli({"classify", "@no_such_file_here.txt"}).code == 2);
}

TEST_CASE("plain output stays terse") {
  Run r = run_cli({"eval", "2 + 2", "--plain"});
  CHECK(r.code == 0);
  CHECK(r.out == "4\n");
  Run c = run_cli({"classify", "x <= y", "--plain"});
  CHECK(c.out == "sharp=true sigma_b1=true pi_b1=true\n");
}

TEST_CASE("help exits zero") {
  CHECK(run_cli({"--help"}).code == 0);
  CHECK(run_cli({"classify", "--help"}).code == 0);
}

} // TEST_SUITE
