#include <doctest.h>

#include "wzw/commands.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>

using namespace wzw;
using Json = nlohmann::json;

namespace {

RunConfig structured() {
  RunConfig c;
  c.format = OutputFormat::Structured;
  return c;
}

Json doc_of(const CommandResult& r) { return Json::parse(r.document); }

}  // namespace

TEST_CASE("modular command") {
  const auto r = cmd_modular("su2@1", structured());
  CHECK(r.exit_code == kExitPass);
  const auto j = doc_of(r);
  CHECK(j["results"]["central_charge"] == "1");
  CHECK(j["results"]["S"].size() == 2);
  CHECK(j["results"]["S"][1][1]["re"] == "-0.70710678118654757");
  CHECK(j["verdict"]["pass"] == true);
  CHECK(j["config"]["precision"] == 50);

  const auto su3 = doc_of(cmd_modular("su3@1", structured()));
  CHECK(su3["results"]["labels"].size() == 3);
  CHECK(su3["results"]["global_index"] == "3");
}

TEST_CASE("parse errors exit 2") {
  for (const char* s : {"su2@", "su2@1 / su2@1", "banana"}) {
    const auto r = cmd_modular(s, structured());
    CHECK(r.exit_code == kExitParse);
    CHECK(doc_of(r)["error"]["kind"] == "parse");
  }
  CHECK(cmd_inclusion("su2@5:su3@1", structured()).exit_code == kExitParse);
  CHECK(cmd_coset("su2@1 x su2@1", structured()).exit_code == kExitParse);
  CHECK(cmd_coset("su2@1 x su2@1 / su2@2", structured(), "/nonexistent").exit_code == kExitParse);
}

TEST_CASE("run configuration invariants") {
  RunConfig c = structured();
  c.precision = 29;
  CHECK(cmd_modular("su2@1", c).exit_code == kExitParse);
  c = structured();
  c.tol = 1e-3;
  CHECK(cmd_modular("su2@1", c).exit_code == kExitParse);
  c.tol = 0;
  CHECK(cmd_modular("su2@1", c).exit_code == kExitParse);
  c = structured();
  c.truncation = 4;
  CHECK(cmd_oracle(1, 1, c).exit_code == kExitParse);
  c.truncation = 41;
  CHECK(cmd_oracle(1, 1, c).exit_code == kExitParse);
  CHECK_THROWS(parse_format("yaml"));
  CHECK(parse_format("csv") == OutputFormat::Csv);
}

TEST_CASE("fusion command") {
  const auto r = cmd_fusion("su2@2", structured());
  CHECK(r.exit_code == kExitPass);
  const auto j = doc_of(r);
  bool found = false;
  for (const auto& line : j["results"]["fusion_rules"]) found = found || line == "(1) x (1) = (0) + (2)";
  CHECK(found);
  CHECK(j["checks"]["Y-equals-S/S_vac,mu"] == false);
  CHECK(j["checks"]["Y-equals-S/S_vac,vac"] == true);
}

TEST_CASE("coset command") {
  const auto r = cmd_coset("su2@1 x su2@1 / su2@2", structured());
  CHECK(r.exit_code == kExitPass);
  const auto j = doc_of(r);
  CHECK(j["results"]["b_vac"] == "0.5");
  CHECK(j["results"]["mu_coset"] == "4");
  CHECK(j["results"]["central_charge"] == "1/2");
  for (int k = 1; k <= 8; ++k) {
    const std::string spec = "su2@" + std::to_string(k) + " x su2@1 / su2@" + std::to_string(k + 1);
    CHECK_MESSAGE(cmd_coset(spec, structured()).exit_code == kExitPass, spec);
  }
  CHECK(cmd_coset("su3@1 / su2@4", structured()).exit_code == kExitUnsupported);
  CHECK(cmd_coset("su2@2 x su2@2 / su2@4", structured()).exit_code == kExitUnsupported);
  CHECK(cmd_coset("su2@1 x su2@1 / su2@2", structured(), "", true).exit_code == kExitPass);
}

TEST_CASE("coset command with a corrupted table") {
  const char* path = "corrupt_table.txt";
  {
    std::ofstream f(path);
    f << "ambient: su2@1 x su2@1\nsub: su2@2\n0 ; 0 ; 0 ; 1\n1 ; 0 ; 1 ; 1\n";
  }
  const auto r = cmd_coset("su2@1 x su2@1 / su2@2", structured(), path);
  CHECK(r.exit_code == kExitCheckFailed);
  CHECK_FALSE(doc_of(r)["kac_wakimoto"]["witnesses"].empty());
  std::remove(path);
}

TEST_CASE("inclusion command") {
  const auto r = cmd_inclusion("su2@4:su3@1", structured());
  CHECK(r.exit_code == kExitPass);
  const auto j = doc_of(r);
  CHECK(j["results"]["sector_count_sum"] == 6);
  CHECK(j["results"]["Z"][2][2] == 2);
  CHECK(cmd_inclusion("su2@2xsu2@2:su4@1", structured()).exit_code == kExitPass);
}

TEST_CASE("catalog, oracle and suite commands") {
  CHECK(doc_of(cmd_catalog(6, structured()))["results"]["inclusions"].size() == 5);
  CHECK(cmd_oracle(1, 2, structured()).exit_code == kExitPass);
  CHECK(cmd_suite(3, 3, structured()).exit_code == kExitPass);
}

TEST_CASE("output is deterministic") {
  for (auto fmt : {OutputFormat::Text, OutputFormat::Structured, OutputFormat::Csv}) {
    RunConfig c;
    c.format = fmt;
    CHECK(cmd_coset("su2@2 x su2@1 / su2@3", c).document == cmd_coset("su2@2 x su2@1 / su2@3", c).document);
    CHECK(cmd_modular("su3@2", c).document == cmd_modular("su3@2", c).document);
  }
}

TEST_CASE("CSV documents") {
  RunConfig c;
  c.format = OutputFormat::Csv;
  CHECK(cmd_coset("su2@1 x su2@1 / su2@2", c).document.rfind("ambient,sub,in_exp,b,dim\n\"0;0\",\"0\",1,0.5,1\n", 0) ==
        0);
  CHECK(cmd_inclusion("su2@4:su3@1", c).document.rfind("label,\"0\",\"1\"", 0) == 0);
  CHECK(cmd_fusion("su2@1", c).document.rfind("lambda,mu,nu,N\n", 0) == 0);
  CHECK(cmd_modular("su2@", c).document.rfind("error,kind,message\nerror,parse,", 0) == 0);
}

TEST_CASE("text documents") {
  const auto r = cmd_modular("su2@1", RunConfig{});
  CHECK(r.document.find("central_charge: 1\n") != std::string::npos);
  CHECK(r.document.find("pass: true") != std::string::npos);
}
