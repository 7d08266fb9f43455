#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + std::string(STARCLEAN_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

ordered_json run_json(const std::string& args) {
  const auto r = run(args + " --format json");
  REQUIRE(r.code == 0);
  return ordered_json::parse(r.out);
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '\n') {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  if (start < s.size()) out.push_back(s.substr(start));
  return out;
}

}  // namespace

TEST_CASE("analyze examples") {
  auto j = run_json("analyze --field 2 --group C3xC9 --involution classical");
  CHECK(j["schema"] == "starclean/1");
  CHECK(j["verdict"] == true);
  CHECK(j["witness_t"] == 3);
  CHECK(j["m"] == 9);
  CHECK(j["discrepancy"] == false);
  CHECK(j["method"] == "both");
  j = run_json("analyze --field 4 --group C5xC25 --involution sigma2:v=-1");
  CHECK(j["verdict"] == false);
  CHECK(j["witness_t"].is_null());
  j = run_json("analyze --field 4 --group C9xC9 -i sigma2:v=-1");
  CHECK(j["witness_t"] == 2);
  j = run_json("analyze -q 2 -g C1");
  CHECK(j["verdict"] == true);
  CHECK_FALSE(j["notes"].empty());
  const auto text = run("analyze -q 2 -g C3xC15");
  CHECK(text.code == 0);
  CHECK(text.out.find("not *-clean") != std::string::npos);
}

TEST_CASE("idempotents and codes examples") {
  auto j = run_json("idempotents -q 2 -g C7");
  REQUIRE(j["primitives"].size() == 3);
  std::vector<int> sizes;
  for (const auto& p : j["primitives"]) sizes.push_back(p["orbit_size"].get<int>());
  CHECK(sizes == std::vector<int>{1, 3, 3});
  CHECK(run_json("idempotents -q 2 -g C3xC3")["primitive_count"] == 5);
  j = run_json("idempotents -q 5 -g C1");
  REQUIRE(j["primitives"].size() == 1);
  j = run_json("idempotents -q 2 -g C3xC3 --count-all");
  CHECK(j["idempotent_count"] == 32);
  CHECK(run("idempotents -q 2 -g C3xC3 --count-all --max-subsets 8").code == 2);

  const auto c33 = run("codes -q 2 -g C3xC3");
  CHECK(c33.code == 0);
  CHECK(c33.out.find("star-clean: true") != std::string::npos);
  CHECK(c33.out.find("SO") == std::string::npos);
  j = run_json("codes -q 2 -g C7xC7");
  int so = 0;
  for (const auto& c : j["classes"])
    if (c["order"] == 7) {
      CHECK(c["kind"] == "self-orthogonal");
      ++so;
    }
  CHECK(so == 16);
  CHECK(j["star_clean"] == false);
  j = run_json("codes -q 2 -g C1");
  CHECK(j["classes"].size() == 1);
  j = run_json("codes -q 2 -g C3xC3 --distance");
  CHECK(j["classes"][0]["min_distance"] == 9);
  CHECK(run("codes -q 2 -g C6").code == 2);
}

TEST_CASE("involutions listing") {
  const auto j = run_json("involutions -q 4 -g C3");
  CHECK(j["involutions"].size() >= 4);
  const auto t = run("involutions -q 2 -g C7");
  CHECK(t.code == 0);
  CHECK(t.out.find("only sigma1-type involutions: true") != std::string::npos);
}

TEST_CASE("scan rows equal single analyses") {
  const auto s = run("scan --field 2 --max-order 20 --involution classical --format json");
  REQUIRE(s.code == 0);
  const auto rows = lines(s.out);
  CHECK(rows.size() == 11);
  for (const auto& row : rows) {
    const auto j = ordered_json::parse(row);
    const auto single = run_json("analyze --field 2 --group " + j["group"].get<std::string>() + " -i classical");
    CHECK(single.dump() == row);
  }
  const auto one = run("scan -q 3 --max-order 1 --format json");
  CHECK(lines(one.out).size() == 1);
  const auto f4 = run("scan -q 4 -i sigma2:v=-1 --max-order 30 --format json");
  CHECK(f4.code == 0);
  CHECK(lines(f4.out).size() == 19);
  for (const auto& row : lines(f4.out)) CHECK(ordered_json::parse(row)["discrepancy"] == false);
  const auto text = run("scan -q 2 --max-order 6");
  CHECK(text.code == 0);
  CHECK(text.out.find("C3") != std::string::npos);
}

TEST_CASE("json re-renders byte for byte") {
  for (const char* cmd : {"analyze -q 2 -g C3xC9", "analyze -q 9 -g C4xC8 -i sigma2:v=3", "idempotents -q 4 -g C3xC5",
                          "codes -q 3 -g C2xC4 --distance", "involutions -q 9 -g C8", "idempotents -q 2 -g C2xC6"}) {
    const auto r = run(std::string(cmd) + " --format json");
    REQUIRE(r.code == 0);
    CHECK(ordered_json::parse(r.out).dump(2) + "\n" == r.out);
  }
}

TEST_CASE("repeated runs are identical") {
  for (const char* cmd : {"analyze -q 8 -g C7xC7", "idempotents -q 2 -g C5xC5", "codes -q 4 -g C3xC9", "scan -q 5 --max-order 30",
                          "involutions -q 25 -g C24"}) {
    for (const char* fmt : {"text", "json"}) {
      const std::string full = std::string(cmd) + " --format " + fmt;
      const auto a = run(full), b = run(full);
      CHECK(a.code == 0);
      CHECK(a.out == b.out);
      CHECK_FALSE(a.out.empty());
    }
  }
}

TEST_CASE("exit codes for bad input") {
  CHECK(run("--help").code == 0);
  CHECK(run("--version").code == 0);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("analyze -g C3").code == 2);
  CHECK(run("analyze -q 6 -g C3").code == 2);
  CHECK(run("analyze -q 2 -g C3y").code == 2);
  CHECK(run("analyze -q 2 -g C9 -i sigma1:v=2").code == 2);
  CHECK(run("analyze -q 2 -g C9 -i sigma2:v=-1").code == 2);
  CHECK(run("analyze -q 2 -g C9 -i nonsense").code == 2);
  CHECK(run("analyze -q 2 -g C9 --format xml").code == 2);
  CHECK(run("analyze -q 33554432 -g C9").code == 2);
  CHECK(run("scan -q 2 --max-order 5000").code == 2);
  CHECK(run("scan -q 2 --max-order 0").code == 2);
  CHECK(run("analyze -q 2 -g C3 --paranoid --max-subsets 9999999").code == 2);
  CHECK(run("scan -q 2 --max-order 50", "STARCLEAN_MAX_ORDER=20").code == 2);
  CHECK(run("scan -q 2 --max-order 10", "STARCLEAN_MAX_ORDER=20").code == 0);
  CHECK(run("analyze -q 2 -g C3", "STARCLEAN_MAX_ORDER=abc").code == 2);
  CHECK(run("idempotents -q 2 -g C3xC3 --count-all", "STARCLEAN_MAX_SUBSETS=4").code == 2);
  CHECK(run("idempotents -q 2 -g C3xC3 --count-all", "STARCLEAN_MAX_SUBSETS=64").code == 0);
}
