#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "kkb/io.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = kkb::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = std::string(KKB_TEST_TMP) + "/" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("compute prints a report") {
  const auto path = write_temp("k3.json", R"({"ground_size":3,"minimal_elements":[[0,1],[0,2],[1,2]]})");
  const auto r = run({"compute", "--instance", path});
  CHECK(r.code == 0);
  const auto j = kkb::OrderedJson::parse(r.out);
  CHECK(j["p_c"].get<double>() == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(j["selected_dim"]["dim"] == 2);
  const auto w = run({"compute", "--instance", path, "--dim-convention", "within-family"});
  CHECK(kkb::OrderedJson::parse(w.out)["selected_dim"]["dim"] == 3);
  const auto csv = run({"compute", "--instance", path, "--format", "csv"});
  CHECK(csv.out.rfind("field,value\n", 0) == 0);
}

TEST_CASE("exit codes") {
  const auto k3 = write_temp("k3b.json", R"({"ground_size":3,"minimal_elements":[[0,1],[0,2],[1,2]]})");
  CHECK(run({}).code == 2);
  CHECK(run({"compute"}).code == 2);
  CHECK(run({"compute", "--instance", k3, "--method", "mc"}).code == 2);
  CHECK(run({"compute", "--instance", k3, "--method", "mc", "--samples", "2000"}).code == 0);
  CHECK(run({"compute", "--instance", k3, "--variant", "nope"}).code == 2);
  CHECK(run({"compute", "--instance", "/nonexistent/file.json"}).code == 2);
  const auto bad = write_temp("bad.json", R"({"ground_size":3,"minimal_elements":[[0],[0,1]]})");
  CHECK(run({"compute", "--instance", bad}).code == 2);
  CHECK(run({"verify", "--instance", k3}).code == 0);
  CHECK(run({"verify", "--instance", k3, "--override-q", "0.9"}).code == 1);
  CHECK(run({"verify"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  const auto k7 = run({"family", "--family", "connectivity", "--n", "7"});
  REQUIRE(k7.code == 0);
  const auto big = write_temp("k7.json", k7.out);
  CHECK(run({"compute", "--instance", big}).code == 3);
}

TEST_CASE("sweep output") {
  const auto r = run({"sweep", "--family", "connectivity", "--range", "3..4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("n,min_count,", 0) == 0);
  const auto summary = kkb::OrderedJson::parse(r.err);
  CHECK(summary["records"] == 2);
  CHECK(summary["classification"].is_null());

  const auto empty = run({"sweep", "--family", "triangle", "--range", "5..3"});
  CHECK(empty.code == 0);
  CHECK(std::count(empty.out.begin(), empty.out.end(), '\n') == 1);

  CHECK(run({"sweep", "--family", "triangle", "--range", "3-5"}).code == 2);
  CHECK(run({"sweep", "--family", "nope", "--range", "3..5"}).code == 2);

  const auto json = run({"sweep", "--family", "singletons", "--range", "2..4", "--format", "json"});
  const auto doc = kkb::OrderedJson::parse(json.out);
  CHECK(doc["rows"].size() == 3);
  CHECK(doc["rows"][0]["q"].get<double>() == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(doc["summary"]["classification"]["kind"] == "never_nontrivial");

  const auto side = std::string(KKB_TEST_TMP) + "/summary.json";
  const auto with_file = run({"sweep", "--family", "singletons", "--range", "2..3", "--summary", side});
  CHECK(with_file.err.empty());
  std::ifstream in(side);
  CHECK(kkb::OrderedJson::parse(in)["records"] == 2);
}

TEST_CASE("family output is deterministic") {
  const auto a = run({"family", "--family", "random", "--n", "8", "--seed", "5"});
  const auto b = run({"family", "--family", "random", "--n", "8", "--seed", "5"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run({"family", "--family", "nope", "--n", "3"}).code == 2);
}
