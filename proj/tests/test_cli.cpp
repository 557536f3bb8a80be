// End-to-end checks of the command-line tool.  The binary path comes from
// the FREEPROB_CLI environment variable (set by CTest).

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <json.hpp>

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  const char* bin = std::getenv("FREEPROB_CLI");
  REQUIRE_MESSAGE(bin != nullptr, "FREEPROB_CLI must point at the binary");
  const std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  CmdResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int rc = pclose(pipe);
  r.status = WEXITSTATUS(rc);
  return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("moments table with symbolic and numeric columns") {
  const auto r = run_cli("moments --order 3 --t 1 --format json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  CHECK(j["table"] == "moment");
  CHECK(j["order"] == 3);
  CHECK(j["entries"].size() == 3);
  CHECK(j["entries"][0]["symbolic"] == "Q");
  const std::string m2 = j["entries"][1]["symbolic"].get<std::string>();
  CHECK(m2 == "(1 - t)*Q^2");
  const std::string num = j["entries"][0]["numeric"]["t=1"].get<std::string>();
  CHECK(num.substr(0, 6) == "6.0653");  // exp(-1/2)
}

TEST_CASE("json output round-trips byte-identically") {
  const auto r = run_cli("star-cumulants --order 3 --t 1/2 --format json");
  REQUIRE(r.status == 0);
  const auto parsed = nlohmann::ordered_json::parse(r.out);
  CHECK(parsed.dump(2) + "\n" == r.out);
}

TEST_CASE("schur emits the adjudicated gamma_1") {
  const auto r = run_cli("schur --depth 1 --t 1 --format json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  bool found = false;
  for (const auto& blob : j) {
    if (blob["table"] != "gamma") continue;
    found = true;
    CHECK(blob["entries"][1]["symbolic"] == "t*Q^2/(-1 + Q^2)");
    const std::string num = blob["entries"][1]["numeric"]["t=1"].get<std::string>();
    CHECK(num.substr(0, 7) == "-5.8197");
  }
  CHECK(found);
}

TEST_CASE("jacobi-r reports the closed-form divergence as errata") {
  const auto r = run_cli("jacobi-r --order 3 --variant as-printed --format json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::ordered_json::parse(r.out);
  REQUIRE(j.is_array());
  bool has_erratum = false;
  for (const auto& blob : j)
    if (blob["provenance"] == "closed-form" && !blob["errata"].empty())
      has_erratum = true;
  CHECK(has_erratum);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli("moments --order 0").status == 2);
  CHECK(run_cli("no-such-command").status == 2);
  CHECK(run_cli("moments --order 3 --t -1").status == 2);
  CHECK(run_cli("moments --order 3 --precision 10").status == 2);
}

TEST_CASE("order caps and the environment override") {
  CHECK(run_cli("star-cumulants --order 11").status == 2);
  setenv("FREEPROB_MAX_ORDER", "12", 1);
  const auto r = run_cli("star-cumulants --order 11 --format json");
  unsetenv("FREEPROB_MAX_ORDER");
  CHECK(r.status == 0);
}

TEST_CASE("csv format") {
  const auto r = run_cli("free-cumulants --order 2 --t 1 --format csv");
  REQUIRE(r.status == 0);
  CHECK(r.out.find("n,symbolic,t=1") != std::string::npos);
  CHECK(r.out.find("1,\"Q\"") != std::string::npos);
}

}  // TEST_SUITE
