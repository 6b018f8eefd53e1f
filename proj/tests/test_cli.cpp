#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include <json.hpp>

#include "support.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(TDIM_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("tdim_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("validate") {
  Run ok = run("validate " + test::fixture("tmesh") + " --format json");
  CHECK(ok.code == 0);
  auto j = nlohmann::json::parse(ok.out);
  CHECK(j["valid"] == true);
  CHECK(j["census"]["crossings"] == 8);
  CHECK(j["census"]["rays"] == 1);

  std::string overlap = temp_file("overlap.json", R"({"domain":[0,0,2,1],"cells":[[0,0,2,1],[1,0,2,1]]})");
  CHECK(run("validate " + overlap).code == 1);
  std::string broken = temp_file("broken.json", R"({"domain":[0,0,2,1],"cells":[)");
  CHECK(run("validate " + broken).code == 2);
  CHECK(run("validate /nonexistent/mesh.json").code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("dim reports every method") {
  Run r = run("dim " + test::fixture("examplefordim1") + " --space 3 --format json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["agree"] == true);
  REQUIRE(j["methods"].size() == 3);
  for (const auto& [name, m] : j["methods"].items()) CHECK(m["value"] == 49);

  Run nl = run("dim " + test::fixture("nolevel") + " --space 3 --format json");
  CHECK(nl.code == 0);
  auto k = nlohmann::json::parse(nl.out);
  CHECK(k["methods"]["formula"]["value"].is_null());
  CHECK(k["methods"]["formula"]["reason"].get<std::string>().find("NConditionViolated") != std::string::npos);
  CHECK(k["methods"]["cofactor"]["value"] == k["methods"]["oracle"]["value"]);

  Run text = run("dim " + test::fixture("exam1") + " --space 2 --method cofactor");
  CHECK(text.code == 0);
  CHECK(text.out.find("37") != std::string::npos);

  CHECK(run("dim " + test::fixture("exam1") + " --space x").code == 2);
  CHECK(run("dim " + test::fixture("exam1") + " --method magic").code == 2);
}

TEST_CASE("fuzz output is deterministic") {
  std::string args = "fuzz --seed 3 --count 3 --space 2 --max-level 2 --level0 4 --format json";
  Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = nlohmann::json::parse(a.out);
  CHECK(j["mismatches"] == 0);
}

TEST_CASE("cvr, extend, matrix and flatten") {
  Run c = run("cvr " + test::fixture("cvr") + " --format json");
  CHECK(c.code == 0);
  auto j = nlohmann::json::parse(c.out);
  CHECK(j["boundary_identity"]["holds"] == true);
  CHECK(j["equivalence"]["equal"] == true);
  Run n1 = run("cvr " + test::fixture("exam1") + " --format json");
  CHECK(n1.code == 0);
  CHECK(nlohmann::json::parse(n1.out)["n_ge_2"] == false);

  Run e = run("extend " + test::fixture("extend") + " --space 2 --step 1/10");
  CHECK(e.code == 0);
  tdim::TMesh ext = tdim::mesh_from_json(nlohmann::json::parse(e.out));
  tdim::TMesh base = test::load_tmesh("extend");
  CHECK(ext.domain().x0 == base.domain().x0 - tdim::Rational(1, 5));

  Run m = run("matrix " + test::fixture("tmesh") + " --degree 2");
  CHECK(m.code == 0);
  CHECK(m.out.rfind("ledge,power", 0) == 0);

  Run f = run("flatten " + test::fixture("exam1"));
  CHECK(f.code == 0);
  CHECK(tdim::mesh_from_json(nlohmann::json::parse(f.out)).census().vertices ==
        test::load_hmesh("exam1").mesh().census().vertices);
}
