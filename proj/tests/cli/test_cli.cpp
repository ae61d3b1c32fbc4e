#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(FOCKGAUSS_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

std::string out_dir() { return (std::filesystem::temp_directory_path() / "fockgauss_cli_test").string(); }

}  // namespace

TEST_CASE("list prints the catalog with its anchors") {
  const Result r = run("list");
  CHECK(r.code == 0);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 15);
  CHECK(r.out.find("isometry \xE2\x80\x94 Theorem 2.1") != std::string::npos);
  CHECK(r.out.find("sphi-routes \xE2\x80\x94 Theorem 3.7") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("run").code == 2);
  CHECK(run("run no-such-experiment").code == 2);
  CHECK(run("run isometry --bogus").code == 2);
  CHECK(run("run isometry --seed notanumber").code == 2);
  CHECK(run("run isometry --config /nonexistent.cfg").code == 2);
  CHECK(run("run isometry --out " + out_dir() + " --config " + temp_file("fg_bad.cfg", "degree = many\n")).code == 2);
  CHECK(run("run sphi-invert --out " + out_dir() + " --config " + temp_file("fg_sym.cfg", "symbol=\"2 + sin(\"\n")).code == 2);
}

TEST_CASE("assertion and residual failures map to 3 and 4") {
  CHECK(run("run lemma44 --out " + out_dir()).code == 0);
  CHECK(run("run thm23-ratio --out " + out_dir()).code == 3);
  CHECK(run("run prop22 --out " + out_dir() + " --config " + temp_file("fg_tight.cfg", "tolerance=1e-30\n")).code == 4);
}

TEST_CASE("identical seeds give byte-identical payloads") {
  const Result a = run("run isometry --json --seed 4242 --out " + out_dir());
  const Result b = run("run isometry --json --seed 4242 --out " + out_dir());
  const Result c = run("run isometry --json --seed 4243 --out " + out_dir());
  REQUIRE(a.code == 0);
  auto ja = nlohmann::json::parse(a.out), jb = nlohmann::json::parse(b.out), jc = nlohmann::json::parse(c.out);
  CHECK(ja.at("header").at("schema_version") == "fockgauss-report/1");
  ja.erase("header");
  jb.erase("header");
  jc.erase("header");
  CHECK(ja.dump() == jb.dump());
  CHECK(ja.dump() != jc.dump());
  CHECK(ja.at("params").at("seed") == 4242);
}

TEST_CASE("reports and CSV tables are written to the output directory") {
  std::filesystem::remove_all(out_dir());
  CHECK(run("run bessel-diag --csv --out " + out_dir()).code == 0);
  CHECK(std::filesystem::exists(std::filesystem::path(out_dir()) / "bessel-diag.json"));
  CHECK(std::filesystem::exists(std::filesystem::path(out_dir()) / "bessel-diag_holder.csv"));
  std::filesystem::remove_all(out_dir());
}
