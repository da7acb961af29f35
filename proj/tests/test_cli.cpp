#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RINGLAB_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const char* name) { return std::string(RINGLAB_TEST_DATA) + "/" + name; }

std::vector<nlohmann::json> jsonl(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  return out;
}

}  // namespace

TEST_CASE("classify") {
  const auto r = run("classify 'M(2,GF(2))' --stable --jobs 2");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == 16);
  CHECK(j["predicates"]["TFine"]["holds"] == true);
  CHECK(j["structure"]["weakly_2_primal"] == false);
  CHECK_FALSE(j.contains("timing"));

  const auto md = run("classify Z/4 --md --stable");
  CHECK(md.status == 0);
  CHECK(md.out.rfind("# Z/4", 0) == 0);

  CHECK(run("classify Z/1").status == 2);
  CHECK(run("classify 'Q/4'").status == 2);
  CHECK(run("classify 'M(3,Z/4)'").status == 3);
  CHECK(run("classify Z/4 --jobs 0").status == 2);
  CHECK(run("").status == 2);
}

TEST_CASE("classify cache") {
  const auto path = std::filesystem::temp_directory_path() / "ringlab_cli_cache_test.jsonl";
  std::filesystem::remove(path);
  const auto a = run("classify Z/6 --cache " + path.string());
  const auto b = run("classify Z/6 --cache " + path.string());
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  std::ifstream in(path);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 1);
  std::filesystem::remove(path);
}

TEST_CASE("decompose") {
  const auto fail = run("decompose Z/4 2 --kind TFine");
  REQUIRE(fail.status == 0);
  const auto f = nlohmann::json::parse(fail.out);
  CHECK(f["result"] == "exhaustive_failure");
  CHECK(f["failure"]["search_space_size"] == 2);

  const auto ok = run("decompose 'M(2,GF(2))' '[[1,0],[0,0]]'");
  REQUIRE(ok.status == 0);
  const auto c = nlohmann::json::parse(ok.out);
  CHECK(c["result"] == "certificate");
  CHECK(c["verified"] == true);

  const auto gr = run("decompose 'GR(Z/4,C2)' '1+3*g' --kind nil-clean");
  REQUIRE(gr.status == 0);
  CHECK(nlohmann::json::parse(gr.out)["result"] == "certificate");

  CHECK(run("decompose Z/4 0 --kind TFine").status == 2);
  CHECK(run("decompose Z/4 1 --kind Bogus").status == 2);
  CHECK(run("decompose Z/4 '1+'").status == 2);
}

TEST_CASE("scan") {
  const auto r = run("scan " + data("zmod_2_9.catalog") + " --predicate tfine --jobs 3");
  REQUIRE(r.status == 0);
  const auto records = jsonl(r.out);
  REQUIRE(records.size() == 8);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const int n = static_cast<int>(i) + 2;
    CAPTURE(n);
    CHECK(records[i]["spec"] == "Z/" + std::to_string(n));
    const bool prime = n == 2 || n == 3 || n == 5 || n == 7;
    CHECK(records[i]["predicates"]["TFine"]["holds"] == prime);
  }

  const auto m = run("scan " + data("matrix.catalog") + " --predicates TFine,NilClean");
  REQUIRE(m.status == 0);
  const auto mr = jsonl(m.out);
  REQUIRE(mr.size() == 2);
  CHECK(mr[0]["predicates"]["TFine"]["holds"] == true);
  CHECK(mr[1]["predicates"]["TFine"]["holds"] == false);
  CHECK(mr[1]["predicates"].contains("NilClean"));

  const auto g = run("scan " + data("group_rings.catalog") + " --predicate NilClean");
  REQUIRE(g.status == 0);
  const auto gr = jsonl(g.out);
  REQUIRE(gr.size() == 4);
  CHECK(gr[0]["nil_clean_agrees"] == true);
  CHECK(gr[1]["delta"]["is_nil"] == false);
  CHECK(gr[2]["delta"]["is_nil"] == true);
  CHECK(gr[3].contains("error"));

  const auto empty = run("scan " + data("empty.catalog"));
  CHECK(empty.status == 0);
  CHECK(empty.out.empty());

  CHECK(run("scan /nonexistent/file.catalog").status == 1);
  CHECK(run("scan " + data("empty.catalog") + " --predicate nope").status == 2);
}

TEST_CASE("scan output is independent of the job count") {
  const auto a = run("scan " + data("zmod_2_9.catalog") + " --jobs 1");
  const auto b = run("scan " + data("zmod_2_9.catalog") + " --jobs 8");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("tfine-matrix") {
  const auto s = run("tfine-matrix Z/3 2");
  REQUIRE(s.status == 0);
  const auto j = nlohmann::json::parse(s.out);
  CHECK(j["matrices"] == 80);
  CHECK(j["verified"] == 80);

  const auto one = run("tfine-matrix Z/2 2 --element '[[1,0],[0,0]]'");
  REQUIRE(one.status == 0);
  const auto e = nlohmann::json::parse(one.out);
  CHECK(e["verified"] == true);
  CHECK(e["unit"] == "[[0,1],[1,1]]");

  const auto bad = run("tfine-matrix Z/4 2");
  CHECK(bad.status == 1);
  CHECK(nlohmann::json::parse(bad.out).contains("errors"));

  CHECK(run("tfine-matrix Z/5 3 --limit 1000").status == 3);
  CHECK(run("tfine-matrix Z/3 2 --element E22 --budget-similarity 0 --budget-fallback 0").status == 3);
  CHECK(run("tfine-matrix Z/3 2 --element 0").status == 2);
}

TEST_CASE("verify") {
  CHECK(run("verify --suite nonexistent").status == 2);
  const auto inv = run("verify --suite invariants --max-order 64 --json");
  REQUIRE(inv.status == 0);
  const auto j = nlohmann::json::parse(inv.out);
  CHECK(j["checks"].size() >= 10);
  CHECK(j["pass"] == true);
  for (const auto& c : j["checks"]) CHECK(c["status"] == "pass");
}
