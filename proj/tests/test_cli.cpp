#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(WZW_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("modular") {
  const auto r = cli("modular su2@1");
  CHECK(r.code == 0);
  CHECK(r.out.find("central_charge: 1\n") != std::string::npos);
  CHECK(cli("modular su2@").code == 2);
  CHECK(cli("modular 'su2@1 x su3@1' --format structured").code == 0);
}

TEST_CASE("structured output parses and echoes the config") {
  const auto r = cli("--precision 60 --tol 1e-10 coset 'su2@1 x su2@1 / su2@2' --format structured");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["config"]["precision"] == 60);
  CHECK(j["results"]["mu_coset"] == "4");
  CHECK(j["verdict"]["exit_code"] == 0);
}

TEST_CASE("exit codes") {
  CHECK(cli("coset 'su3@1 / su2@4'").code == 3);
  CHECK(cli("coset 'su2@2 x su2@2 / su2@4'").code == 3);
  CHECK(cli("inclusion su9@9:su3@1").code == 2);
  CHECK(cli("inclusion su2@4:su3@1").code == 0);
  CHECK(cli("inclusion su2@2xsu2@2:su4@1").code == 0);
  CHECK(cli("--precision 10 modular su2@1").code == 2);
  CHECK(cli("--trunc 50 oracle 1 1").code == 2);
  CHECK(cli("modular su2@1 --format yaml").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("").code == 2);
  CHECK(cli("--help").code == 0);
}

TEST_CASE("coset grid") {
  for (int k = 1; k <= 8; ++k)
    CHECK(cli("coset 'su2@" + std::to_string(k) + " x su2@1 / su2@" + std::to_string(k + 1) + "'").code == 0);
}

TEST_CASE("output file and table round trip") {
  REQUIRE(cli("inclusion su2@4:su3@1 --save-table cli_table.txt --format csv --out cli_z.csv").code == 0);
  std::ifstream z("cli_z.csv");
  std::stringstream zs;
  zs << z.rdbuf();
  CHECK(zs.str().rfind("label,\"0\",\"1\",\"2\",\"3\",\"4\"\n\"0\",1,0,0,0,1\n", 0) == 0);
  std::ifstream t("cli_table.txt");
  std::stringstream ts;
  ts << t.rdbuf();
  CHECK(ts.str().rfind("ambient: su3@1\nsub: su2@4\n", 0) == 0);
  std::remove("cli_table.txt");
  std::remove("cli_z.csv");
}

TEST_CASE("reruns are bit-identical") {
  const auto a = cli("coset 'su2@3 x su2@1 / su2@4' --format structured");
  const auto b = cli("coset 'su2@3 x su2@1 / su2@4' --format structured");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}
