#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("hopfcyc_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Run run(const std::string& args, const std::string& env = "") {
  const auto err = scratch() / "stderr.txt";
  const std::string cmd = env + " " + HOPFCYC_CLI + " " + args + " 2>" + err.string();
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, slurp(err)};
}

std::vector<std::size_t> series(const nlohmann::json& report, const std::string& table) {
  std::vector<std::size_t> out;
  for (const auto& e : report["tables"][table]["entries"]) out.push_back(e.back().get<std::size_t>());
  return out;
}

}  // namespace

TEST_CASE("cohomology of the ground field") {
  const auto r = run("cohomology catalog:ground-field --theory hc --degree 4");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(series(j, "HC") == std::vector<std::size_t>{1, 0, 1, 0, 1});
  CHECK(j["safe_degree"] == 4);
  const auto h = run("cohomology catalog:ground-field --theory hh --degree 4");
  CHECK(series(nlohmann::json::parse(h.out), "HH") == std::vector<std::size_t>{1, 0, 0, 0, 0});
}

TEST_CASE("identity suites pass on a catalog instance") {
  const auto r = run("identities catalog:kz2-functions --pmax 2 --qmax 2");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& [name, suite] : j["suites"].items()) {
    CAPTURE(name);
    CHECK(suite["checked"].get<std::size_t>() > 0);
    CHECK(suite["failed"].empty());
  }
}

TEST_CASE("catalog files round-trip through the CLI") {
  const auto dir = scratch() / "catalog";
  REQUIRE(run("catalog --dir " + dir.string()).code == 0);
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    CAPTURE(e.path().string());
    ++files;
    CHECK(run("check " + e.path().string()).code == 0);
  }
  CHECK(files >= 7);
  const auto from_file = run("cohomology " + (dir / "kz2-functions.hopf").string() + " --theory hc --degree 2");
  const auto from_catalog = run("cohomology catalog:kz2-functions --theory hc --degree 2");
  CHECK(from_file.out == from_catalog.out);
}

TEST_CASE("a tampered file fails with a named axiom and witness") {
  const auto dir = scratch() / "tamper";
  REQUIRE(run("catalog --dir " + dir.string()).code == 0);
  std::string text = slurp(dir / "kz2-functions.hopf");
  const std::string from = "coaction = 0 0 1 1; 3 1 1 1", to = "coaction = 0 0 1 1; 3 1 2 1";
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  text.replace(pos, from.size(), to);
  const auto bad = dir / "tampered.hopf";
  std::ofstream(bad, std::ios::binary) << text;
  const auto r = run("check " + bad.string());
  CHECK(r.code == 1);
  CHECK(r.err.find("coaction counit") != std::string::npos);
  CHECK(r.err.find("on e(") != std::string::npos);
  CHECK(run("identities " + bad.string()).code == 1);
}

TEST_CASE("input errors exit with 2") {
  const auto bad = scratch() / "malformed.hopf";
  std::ofstream(bad) << "kind = hopf\nname = x\nfield = Q\nhopf.dim = two\n";
  const auto r = run("check " + bad.string());
  CHECK(r.code == 2);
  CHECK(r.err.find("line") != std::string::npos);
  CHECK(run("check catalog:no-such-instance").code == 2);
  CHECK(run("check " + (scratch() / "missing.hopf").string()).code == 2);
  CHECK(run("check catalog:kz2", "FIELD=Fp:8").code == 2);
  CHECK(run("cohomology catalog:kz2 --theory hp").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("spectral and proposition reports") {
  const auto a = run("spectral catalog:kz2-functions --pmax 2 --qmax 2 --report " + (scratch() / "a.json").string());
  const auto b = run("spectral catalog:kz2-functions --pmax 2 --qmax 2 --report " + (scratch() / "b.json").string());
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(slurp(scratch() / "a.json") == slurp(scratch() / "b.json"));
  for (const auto& e : nlohmann::json::parse(a.out)["tables"]["E"]["entries"])
    if (e[0] == 2 && e[1].get<int>() > 0) CHECK(e[3] == 0);

  const auto p = run("proposition catalog:kz2-functions --degree 2");
  CHECK(p.code == 0);
  CHECK(nlohmann::json::parse(p.out)["agree"] == true);
  CHECK(run("proposition catalog:sweedler-trivial --degree 2").code == 1);

  // A prime field through the environment.
  const auto f7 = run("spectral catalog:kz2-functions --pmax 2 --qmax 2", "FIELD=Fp:7");
  REQUIRE(f7.code == 0);
  const auto jq = nlohmann::json::parse(a.out), j7 = nlohmann::json::parse(f7.out);
  CHECK(j7["field"] == "Fp:7");
  CHECK(jq["tables"] == j7["tables"]);
}
