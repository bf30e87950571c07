#include "affweyl/cli.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

using namespace affweyl;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::initializer_list<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::vector<std::string>(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli: identical invocations give byte-identical JSON") {
  auto a = run_cli({"eq1", "--family", "C", "--rank", "2", "--cap", "10", "--json"});
  auto b = run_cli({"eq1", "--family", "C", "--rank", "2", "--cap", "10", "--json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());

  auto c = run_cli({"rootdata", "--family", "G", "--rank", "2", "--json"});
  auto d = run_cli({"rootdata", "--family", "G", "--rank", "2", "--json"});
  CHECK(c.code == 0);
  CHECK(c.out == d.out);
}

TEST_CASE("cli: rootdata payload carries exact rational strings") {
  auto r = run_cli({"rootdata", "--family", "C", "--rank", "2", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "rootdata");
  CHECK(j["result"]["descriptor"] == "C2~");
  CHECK(j["result"]["fundamental_coweights"][1][0] == "1/2");
  CHECK(j["result"]["two_rho"][0] == "4/1");
  CHECK(j["result"]["cartan"][0][1] == -2);
}

TEST_CASE("cli: ball histogram") {
  auto r = run_cli({"ball", "--family", "A", "--rank", "1", "--gens", "0,1", "--max-len",
                    "5", "--count-by-length", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"]["count"] == 11);
  CHECK(j["result"]["count_by_length"] ==
        nlohmann::json::array({1, 2, 2, 2, 2, 2}));
}

TEST_CASE("cli: verify-factorization pass and exit codes") {
  auto r = run_cli({"verify-factorization", "--family", "A", "--n", "3", "--max-len", "8",
                    "--json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  for (const auto& a : j["assertions"]) CHECK(a["pass"] == true);
}

TEST_CASE("cli: braid-violating rep file exits 1 naming the pair") {
  std::string path = "/tmp/affweyl_cli_bad_rep.json";
  {
    nlohmann::json doc;
    doc["family"] = "A";
    doc["rank"] = 2;
    doc["affine"] = true;
    doc["q"] = "2/1";
    doc["dim"] = 2;
    auto diag = [](const char* a, const char* b) {
      return nlohmann::json::array(
          {nlohmann::json::array({a, "0/1"}), nlohmann::json::array({"0/1", b})});
    };
    doc["generators"] = nlohmann::json::array(
        {diag("2/1", "-1/1"), diag("2/1", "-1/1"), diag("-1/1", "2/1")});
    std::ofstream(path) << doc.dump();
  }
  auto r = run_cli({"verify-b", "--family", "A", "--n", "3", "--rep", path});
  CHECK(r.code == 1);
  CHECK(r.err.find("braid relation") != std::string::npos);
  CHECK(r.err.find("(0,2)") != std::string::npos);
}

TEST_CASE("cli: usage and capacity map to exit 2") {
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({"rootdata", "--family", "Z", "--rank", "2"}).code == 2);
  CHECK(run_cli({"rootdata", "--family", "F", "--rank", "3"}).code == 2);
  auto r = run_cli({"ball", "--family", "A", "--rank", "2", "--max-len", "12",
                    "--capacity", "10"});
  CHECK(r.code == 2);
  CHECK(r.err.find("capacity") != std::string::npos);
}

TEST_CASE("cli: verify-b on builtins") {
  auto r = run_cli({"verify-b", "--family", "C", "--n", "3", "--rep", "sign", "--q", "3/1",
                    "--cap", "8", "--json"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  bool saw_literal = false;
  for (const auto& a : j["assertions"]) {
    CHECK(a["pass"] == true);
    if (a["name"] == "literal-arrangement") saw_literal = true;
  }
  CHECK(saw_literal);
}

TEST_CASE("cli: csv rows") {
  auto r = run_cli({"ball", "--family", "A", "--rank", "1", "--max-len", "3", "--csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out == "length,count\n0,1\n1,2\n2,2\n3,2\n");
  auto e = run_cli({"eq1", "--family", "A", "--rank", "1", "--cap", "4", "--csv"});
  REQUIRE(e.code == 0);
  CHECK(e.out.find("2,1,1") != std::string::npos);  // 1/(1-u^2) at degree 2
}

TEST_CASE("cli: help exits OK") {
  auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Usage") != std::string::npos);
}
