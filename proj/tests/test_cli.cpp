#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "klr/cli.hpp"
#include "klr/qring.hpp"

using namespace klr;

namespace {

JobConfig base_config(const Quiver& q, const std::string& cmd) {
  JobConfig cfg;
  cfg.quiver = q;
  cfg.command = cmd;
  return cfg;
}

std::pair<int, std::string> run_job(const JobConfig& cfg) {
  std::ostringstream out, err;
  int code = run(cfg, out, err);
  return {code, code == 0 ? out.str() : err.str()};
}

}  // namespace

TEST_CASE("shuffle command output") {
  JobConfig cfg = base_config(Quiver::type_a(2), "shuffle");
  cfg.args = {"1", "2"};
  auto [code, out] = run_job(cfg);
  CHECK(code == 0);
  CHECK(out == "12 : 1\n21 : q\n");
  // emission is always sorted lexicographically by word
  cfg.args = {"2", "1"};
  CHECK(run_job(cfg).second == "12 : q\n21 : 1\n");
}

TEST_CASE("words and roots commands") {
  JobConfig cfg = base_config(Quiver::type_a(2), "words");
  cfg.alpha = Weight({1, 1});
  auto [code, out] = run_job(cfg);
  CHECK(code == 0);
  CHECK(out == "12\n21\n");
  JobConfig roots = base_config(Quiver::type_a(2), "roots");
  auto [rcode, rout] = run_job(roots);
  CHECK(rcode == 0);
  CHECK(rout == "1: 1,0  [1,1]\n2: 1,1  [1,2]\n3: 0,1  [2,2]\n");
  // custom w0
  roots.w0 = std::vector<int>{2, 1, 2};
  CHECK(run_job(roots).second ==
        "1: 0,1  [2,2]\n2: 1,1  [1,2]\n3: 1,0  [1,1]\n");
}

TEST_CASE("canonical-basis command") {
  JobConfig cfg = base_config(Quiver::type_a(2), "canonical-basis");
  cfg.alpha = Weight({1, 1});
  auto [code, out] = run_job(cfg);
  CHECK(code == 0);
  // the A2 block: p_{(a2,a1),(a1+a2)} = q
  CHECK(out.find("p[0,1|1,0 ; 1,1] = q") != std::string::npos);
  CHECK(out.find("lambda: 1,1  [1,2]") != std::string::npos);
  CHECK(out.find("12 : 1") != std::string::npos);
  CHECK(out.find("21 : 1") != std::string::npos);
}

TEST_CASE("p-matrix tsv") {
  JobConfig cfg = base_config(Quiver::type_a(2), "p-matrix");
  cfg.alpha = Weight({1, 1});
  cfg.format = "tsv";
  auto [code, out] = run_job(cfg);
  CHECK(code == 0);
  std::istringstream in(out);
  std::string header, row1, row2;
  std::getline(in, header);
  std::getline(in, row1);
  std::getline(in, row2);
  CHECK(header == "lambda\t0,1|1,0\t1,1");
  CHECK(row1 == "0,1|1,0\t1\tq");
  CHECK(row2 == "1,1\t0\t1");
}

TEST_CASE("characters command") {
  JobConfig cfg = base_config(Quiver::type_a(2), "characters");
  cfg.alpha = Weight({1, 1});
  auto [code, out] = run_job(cfg);
  CHECK(code == 0);
  CHECK(out.find("lambda: 1,1") != std::string::npos);
  CHECK(out.find("decomposition:") != std::string::npos);
  CHECK(out.find("    1,1 : q") != std::string::npos);
}

TEST_CASE("deterministic output") {
  JobConfig cfg = base_config(Quiver::type_a(3), "characters");
  cfg.alpha = Weight({1, 1, 1});
  auto first = run_job(cfg);
  auto second = run_job(cfg);
  CHECK(first.first == 0);
  CHECK(first.second == second.second);
}

TEST_CASE("json round trip") {
  JobConfig cfg = base_config(Quiver::type_a(2), "shuffle");
  cfg.args = {"1", "2"};
  cfg.format = "json";
  auto [code, out] = run_job(cfg);
  REQUIRE(code == 0);
  auto j = nlohmann::json::parse(out);
  CHECK(j["command"] == "shuffle");
  // every emitted polynomial parses back to an equal value
  CHECK(LaurentPoly::parse(j["result"]["12"].get<std::string>()) ==
        LaurentPoly(1));
  CHECK(LaurentPoly::parse(j["result"]["21"].get<std::string>()) ==
        LaurentPoly::q(1));
  JobConfig cb = base_config(Quiver::type_a(2), "canonical-basis");
  cb.alpha = Weight({1, 1});
  cb.format = "json";
  auto [ccode, cout_] = run_job(cb);
  REQUIRE(ccode == 0);
  auto cj = nlohmann::json::parse(cout_);
  for (const auto& blk : cj["blocks"]) {
    for (const auto& [key, val] : blk["b"].items())
      CHECK_NOTHROW(LaurentPoly::parse(val.get<std::string>()));
    for (const auto& [key, val] : blk["dual_character"].items())
      CHECK_NOTHROW(LaurentPoly::parse(val.get<std::string>()));
  }
  JobConfig gram = base_config(Quiver::kronecker(), "gram");
  gram.alpha = Weight({1, 1});
  gram.format = "json";
  auto [gcode, gout] = run_job(gram);
  REQUIRE(gcode == 0);
  auto gj = nlohmann::json::parse(gout);
  for (const auto& [rk, row] : gj["matrix"].items())
    for (const auto& [ck, val] : row.items())
      CHECK_NOTHROW(RatFn::parse(val.get<std::string>()));
}

TEST_CASE("config errors exit 2") {
  // non-finite-type quiver for a finite-type command
  JobConfig cfg = base_config(Quiver::kronecker(), "canonical-basis");
  cfg.alpha = Weight({1, 1});
  auto [code, err] = run_job(cfg);
  CHECK(code == kExitConfig);
  CHECK(err.find("finite") != std::string::npos);
  // non-reduced w0
  JobConfig bad = base_config(Quiver::type_a(2), "roots");
  bad.w0 = std::vector<int>{1, 1, 2};
  CHECK(run_job(bad).first == kExitConfig);
  // missing alpha
  JobConfig noalpha = base_config(Quiver::type_a(2), "words");
  CHECK(run_job(noalpha).first == kExitConfig);
  // unknown command / format
  JobConfig unk = base_config(Quiver::type_a(2), "frobnicate");
  CHECK(run_job(unk).first == kExitConfig);
  JobConfig badfmt = base_config(Quiver::type_a(2), "roots");
  badfmt.format = "yaml";
  CHECK(run_job(badfmt).first == kExitConfig);
}

TEST_CASE("alpha and w0 parsing") {
  Quiver a2 = Quiver::type_a(2);
  CHECK(parse_alpha(a2, "2,1") == Weight({2, 1}));
  CHECK_THROWS_AS(parse_alpha(a2, "1"), error);
  CHECK_THROWS_AS(parse_alpha(a2, "1,-1"), error);
  CHECK_THROWS_AS(parse_alpha(a2, "a,b"), error);
  CHECK(parse_w0(a2, "1,2,1") == std::vector<int>{1, 2, 1});
  CHECK_THROWS_AS(parse_w0(a2, "1,7,1"), error);
}

TEST_CASE("binary smoke test") {
  const char* bin = std::getenv("KLR_BIN");
  if (!bin) return;  // only runs under ctest
  std::string dir = "/tmp/klr_cli_test";
  std::system(("mkdir -p " + dir).c_str());
  {
    std::ofstream f(dir + "/a2.json");
    f << R"({"vertices": ["1","2"], "edges": [["1","2",1]]})";
  }
  std::string cmd = std::string(bin) + " shuffle --quiver " + dir +
                    "/a2.json 1 2 > " + dir + "/out1.txt 2>&1";
  CHECK(std::system(cmd.c_str()) == 0);
  std::ifstream in(dir + "/out1.txt");
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == "12 : 1\n21 : q\n");
  // repeated runs are byte identical
  std::string cmd2 = std::string(bin) + " canonical-basis --quiver " + dir +
                     "/a2.json --alpha 1,1 > " + dir + "/out2.txt 2>&1";
  std::string cmd3 = std::string(bin) + " canonical-basis --quiver " + dir +
                     "/a2.json --alpha 1,1 > " + dir + "/out3.txt 2>&1";
  CHECK(std::system(cmd2.c_str()) == 0);
  CHECK(std::system(cmd3.c_str()) == 0);
  CHECK(std::system(("cmp -s " + dir + "/out2.txt " + dir + "/out3.txt")
                        .c_str()) == 0);
  // malformed quiver file exits 2
  {
    std::ofstream f(dir + "/bad.json");
    f << "{oops";
  }
  int rc = std::system((std::string(bin) + " roots --quiver " + dir +
                        "/bad.json > /dev/null 2>&1")
                           .c_str());
  CHECK(WEXITSTATUS(rc) == 2);
  // a passing fast verify exits 0 and prints PASS lines
  int vc = std::system((std::string(bin) + " verify --quiver " + dir +
                        "/a2.json --verify-level fast > " +
                        dir + "/verify.txt 2>&1")
                           .c_str());
  CHECK(WEXITSTATUS(vc) == 0);
  std::ifstream vf(dir + "/verify.txt");
  std::stringstream vs;
  vs << vf.rdbuf();
  CHECK(vs.str().find("PASS qring-arithmetic") != std::string::npos);
  CHECK(vs.str().find("FAIL") == std::string::npos);
}
