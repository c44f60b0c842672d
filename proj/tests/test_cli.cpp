#include "cli.hpp"
#include "ramanujan/algexpr.hpp"
#include "ramanujan/modeq.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ramanujan");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = ramanujan::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args, int expected_code = 0) {
  args.push_back("--json");
  Result r = invoke(std::move(args));
  REQUIRE(r.code == expected_code);
  return nlohmann::json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("alpha at n = 1") {
  auto doc = invoke_json({"alpha", "--n", "1", "--digits", "30"});
  CHECK(doc["command"] == "alpha");
  CHECK(doc["digits"] == 30);
  CHECK(doc["inputs"]["n"] == "1");
  REQUIRE(doc["results"].size() >= 1);
  std::string value = doc["results"][0]["value"];
  CHECK(value.rfind("0.5000000000000000000000000000", 0) == 0);
}

TEST_CASE("json output is deterministic") {
  std::vector<std::string> args = {"singular", "--n", "4", "--digits", "40", "--json"};
  CHECK(invoke(args).out == invoke(args).out);
}

TEST_CASE("json schema") {
  auto doc = invoke_json({"cf", "--fn", "s1", "--q", "0.1", "--digits", "40"});
  for (const char* key : {"command", "inputs", "digits", "results"}) CHECK(doc.contains(key));
  for (const auto& row : doc["results"]) {
    CHECK(row.contains("label"));
    CHECK(row.contains("value"));
    CHECK(row.contains("residual"));
    CHECK(row["pass"].is_boolean());
  }
}

TEST_CASE("nome spellings") {
  auto a = invoke_json({"theta", "--fn", "phi", "--q", "exp(-pi*sqrt(1))", "--digits", "30"});
  auto b = invoke_json({"theta", "--fn", "phi", "--q", "e^-pi*sqrt(1)", "--digits", "30"});
  CHECK(a["results"][0]["value"] == b["results"][0]["value"]);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"alpha", "--n", "1", "--q", "0.1"}).code == 2);
  CHECK(invoke({"alpha", "--n", "-3"}).code == 2);
  CHECK(invoke({"alpha", "--q", "1.5"}).code == 2);
  CHECK(invoke({"theta", "--fn", "sigma", "--q", "0.1"}).code == 2);
  CHECK(invoke({"verify", "--identity", "X9", "--q", "0.1"}).code == 2);
  CHECK(invoke({"verify", "--identity", "T3.1", "--q", "0.7"}).code == 2);
  CHECK(invoke({"closed-forms", "--label", "alpha_99"}).code == 2);
  CHECK(invoke({"theta", "--fn", "phi", "--q", "exp(-pi*sqrt(2)"}).code == 2);
  CHECK(invoke({"alpha", "--n", "1", "--digits", "3"}).code == 2);
}

TEST_CASE("help exits with 0") { CHECK(invoke({"--help"}).code == 0); }

TEST_CASE("single identity") {
  auto doc = invoke_json({"verify", "--identity", "T3.1", "--q", "0.1", "--digits", "60"});
  REQUIRE(doc["results"].size() == 1);
  CHECK(doc["results"][0]["pass"] == true);
}

TEST_CASE("fixture file") {
  auto doc = invoke_json({"verify", "--fixtures", IDENTITY_FIXTURES});
  CHECK(doc["results"].size() >= 9);
  for (const auto& row : doc["results"]) CHECK(row["pass"] == true);
  CHECK(invoke({"verify", "--fixtures", "/nonexistent/cases.txt"}).code == 2);
}

TEST_CASE("verify --all covers every identity, closed form and factor check") {
  auto doc = invoke_json({"verify", "--all", "--digits", "60"});
  std::set<std::string> labels;
  for (const auto& row : doc["results"]) {
    CHECK(row["pass"] == true);
    labels.insert(row["label"].get<std::string>());
  }
  auto has_prefix = [&](const std::string& prefix) {
    for (const auto& l : labels)
      if (l.rfind(prefix, 0) == 0) return true;
    return false;
  };
  for (const auto& id : ramanujan::all_identity_ids()) {
    CAPTURE(id);
    CHECK(has_prefix(id + " q="));
  }
  for (const auto& label : ramanujan::closed_form_labels()) {
    CAPTURE(label);
    CHECK(labels.count(label) == 1);
  }
  for (const char* t : {"T3.1 q=0.01", "T3.4 q=0.005"}) CHECK(has_prefix(t));
}

TEST_CASE("tables") {
  CHECK(invoke({"table", "--set", "singular-values", "--digits", "40"}).code == 0);
  CHECK(invoke({"table", "--set", "invariants", "--digits", "30"}).code == 0);
}

}
