#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

using nlohmann::json;

namespace {

std::string cli;  // path to the executable, from argv

struct Result {
  int status = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + cli + "' " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(p);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string write_file(const std::string& name, const std::string& text) {
  std::ofstream f(name);
  f << text;
  return name;
}

}  // namespace

TEST_CASE("generate and check") {
  const Result g = run("generate --family ladder --n 6");
  REQUIRE(g.status == 0);
  CHECK(json::parse(g.out)["edges"].size() == 7);
  const std::string k4 = write_file("cli_k4.json", R"({"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
  const Result c = run("check " + k4);
  REQUIRE(c.status == 0);
  CHECK(json::parse(c.out)["outerplanar"] == false);
  const std::string g6 = write_file("cli_c4.g6", "Cr\n");
  const Result c4 = run("check " + g6);
  REQUIRE(c4.status == 0);
  CHECK(json::parse(c4.out)["maximal"] == true);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run("").status == 1);
  CHECK(run("frobnicate").status == 1);
  CHECK(run("generate --family nonsense --n 4").status == 1);
  CHECK(run("check does-not-exist.json").status == 1);
  const std::string bad = write_file("cli_bad_config.json", R"({"tolerences": {}})");
  CHECK(run("--config " + bad + " bounds --kind star --n 5").status == 1);
  CHECK(run("bounds --kind star --n 5", "BIPOP_CONFIG=" + bad).status == 1);
  const std::string raised = write_file("cli_raised.json", R"({"caps": {"orderly_max_order": 11}})");
  CHECK(run("--config " + raised + " bounds --kind star --n 5").status == 1);
  CHECK(run("--config " + raised + " --override-caps bounds --kind star --n 5").status == 0);
  CHECK(run("enumerate --family bip-outerplanar --n 11").status == 1);
}

TEST_CASE("verification suites") {
  const Result ok = run("verify-theorems --suite rowsum --n 4..16");
  CHECK(ok.status == 0);
  CHECK(json::parse(ok.out)["pass"] == true);
  // pendant-family strict bound fails for the path book with s >= 6
  const Result bad = run("verify-theorems --suite g1g2");
  CHECK(bad.status == 2);
  CHECK(json::parse(bad.out)["pass"] == false);
  CHECK(run("verify-theorems --suite nonsense").status == 1);
  const Result names = run("suites");
  int lines = 0;
  for (char ch : names.out) lines += ch == '\n';
  CHECK(lines == 15);
}

TEST_CASE("enumerate emits one graph per line and is deterministic") {
  const Result a = run("enumerate --family maximal2conn --n 10");
  REQUIRE(a.status == 0);
  int lines = 0;
  for (char ch : a.out) lines += ch == '\n';
  CHECK(lines == 5);
  CHECK(run("--threads 1 enumerate --family bip-outerplanar --n 8").out ==
        run("--threads 4 enumerate --family bip-outerplanar --n 8").out);
  CHECK(run("scan --n 6").out == run("scan --n 6").out);
}

TEST_CASE("census and certify") {
  const Result c = run("census --n 1..7");
  CHECK(c.status == 0);
  const std::string c4 = write_file("cli_c4.json", R"({"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]})");
  const Result ok = run("certify " + c4 + " --poly 1,0,0 --r 4");
  CHECK(ok.status == 0);
  CHECK(json::parse(ok.out)["verdict"] == "loose");
  const Result sp = run("spectrum " + c4);
  CHECK(json::parse(sp.out)["rho"].get<double>() == doctest::Approx(2));
  const Result b = run("bounds --kind maximal_2conn --n 16");
  CHECK(b.status == 0);
  CHECK(run("bounds --kind maximal_2conn --n 14").status == 1);
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a.rfind("--cli=", 0) == 0) cli = a.substr(6);
  }
  if (cli.empty()) {
    std::fprintf(stderr, "usage: test_cli --cli=PATH\n");
    return 1;
  }
  return ctx.run();
}
