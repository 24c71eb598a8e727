#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "stacksort/cli.hpp"
#include "stacksort/text.hpp"

using namespace stacksort;
using namespace stacksort::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, std::optional<std::string> env = std::nullopt) {
  std::ostringstream out, err;
  const int code = run(args, out, err, std::move(env));
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

}  // namespace

TEST_CASE("parse_args builds plans") {
  std::vector<std::string> a{"sort", "4162", "--iterations", "1"};
  auto plan = parse_args(a);
  CHECK(plan.command == Command::sort);
  CHECK(*plan.permutation == Permutation{4, 1, 6, 2});
  CHECK(plan.iterations == 1);

  a = {"verify", "theorem1", "--m", "4", "--n", "6"};
  plan = parse_args(a);
  CHECK(plan.command == Command::verify);
  CHECK(plan.claim == "theorem1");
  CHECK(*plan.m == 4);
  CHECK(*plan.n == 6);

  a = {"--format", "jsonl", "--shards", "3", "count-image", "--n", "5", "--t", "1"};
  plan = parse_args(a);
  CHECK(plan.format == OutputFormat::jsonl);
  CHECK(plan.shards == 3);
  CHECK(plan.enumeration().shards == 3);

  a = {"bijection", "{2}{1,3}{4}"};
  plan = parse_args(a);
  CHECK(plan.partition.has_value());
  CHECK_FALSE(plan.permutation.has_value());
}

TEST_CASE("parse errors carry positions and exit 1") {
  std::vector<std::string> a{"sort", "41x2"};
  try {
    parse_args(a);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  const auto r = run_cli({"sort", "41x2"});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("3") != std::string::npos);
  CHECK(r.out.empty());
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli({"sort", "4162", "--bogus"}).code == kExitUsage);
  CHECK(run_cli({}).code == kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == kExitUsage);
  CHECK(run_cli({"verify", "nonsense"}).code == kExitUsage);
  CHECK(run_cli({"verify", "theorem1", "--m", "3"}).code == kExitUsage);
  CHECK(run_cli({"characterize", "213"}).code == kExitUsage);
  CHECK(run_cli({"--format", "xml", "sort", "21"}).code == kExitUsage);
}

TEST_CASE("help exits 0") {
  const auto r = run_cli({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("sort") != std::string::npos);
}

TEST_CASE("sort and trace") {
  auto r = run_cli({"sort", "4162"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 4 2 6\n");
  r = run_cli({"sort", "4162", "--iterations", "5"});
  CHECK(r.out == "1 2 4 6\n");
  r = run_cli({"--compact", "sort", "35241"});
  CHECK(r.out == "32145\n");
  r = run_cli({"sort", "10 3 12 1"});
  CHECK(r.out == "3 10 1 12\n");

  r = run_cli({"trace", "4162"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 9);
  CHECK(ls[0] == "push 4");
  CHECK(ls.back() == "output 1 4 2 6");
  std::size_t pushes = 0;
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) pushes += ls[i].rfind("push", 0) == 0;
  CHECK(pushes == 4);
}

TEST_CASE("stats") {
  const auto r = run_cli({"stats", "35241"});
  CHECK(r.code == 0);
  CHECK(r.out.find("descent_tops {4,5}") != std::string::npos);
  CHECK(r.out.find("lr_maxima {3,5}") != std::string::npos);
  CHECK(r.out.find("avoids_32-4-1 false") != std::string::npos);
  CHECK(r.out.find("tail_length 0") != std::string::npos);
}

TEST_CASE("characterize, preimage, lift, zeta, xi, bijection") {
  auto r = run_cli({"characterize", "32145", "--t", "1"});
  CHECK(r.out == "true thm2-zeta\n");
  r = run_cli({"characterize", "23154", "--t", "2"});
  CHECK(r.out == "false thm1\n");

  r = run_cli({"--compact", "preimage", "527148369"});
  CHECK(r.code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  CHECK(ls[1].rfind("certificate s(sigma)=5,2,7,1,4,8,3,6,9 avoids=true", 0) == 0);
  CHECK(run_cli({"preimage", "2413"}).code == kExitDomain);

  r = run_cli({"lift", "21345", "--t", "4"});
  CHECK(r.code == kExitDomain);
  r = run_cli({"--compact", "zeta", "--l", "3", "--m", "4"});
  CHECK(r.out == "32145\n");
  r = run_cli({"zeta", "--l", "9", "--m", "4"});
  CHECK(r.code == kExitDomain);
  r = run_cli({"--compact", "xi", "--l", "3", "--m", "4"});
  CHECK(r.code == 0);

  r = run_cli({"bijection", "{2}{1,3}{4}"});
  CHECK(r.code == 0);
  const auto perm = parse_permutation(lines(r.out).at(0));
  r = run_cli({"bijection", format_permutation(perm, false)});
  CHECK(r.out == "{2}{1,3}{4}\n");
  CHECK(run_cli({"bijection", "321"}).code == kExitDomain);
}

TEST_CASE("count-image and resource limits") {
  auto r = run_cli({"count-image", "--n", "5", "--t", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "17\n");
  r = run_cli({"--keep-elements", "--compact", "count-image", "--n", "3", "--t", "1"});
  CHECK(r.out == "2\n123\n213\n");
  r = run_cli({"count-image", "--n", "11", "--t", "1"});
  CHECK(r.code == kExitResource);
  r = run_cli({"--max-n", "13", "count-image", "--n", "4", "--t", "1"});
  CHECK(r.code == kExitResource);
  r = run_cli({"characterize", "214365", "--t", "1"}, "5");
  CHECK(r.code == kExitResource);
}

TEST_CASE("STACKSORT_MAX_N and --max-n precedence") {
  std::vector<std::string> a{"count-image", "--n", "4", "--t", "1"};
  CHECK(parse_args(a).max_n == kDefaultMaxN);
  CHECK(parse_args(a, "7").max_n == 7);
  a = {"--max-n", "9", "count-image", "--n", "4", "--t", "1"};
  CHECK(parse_args(a, "7").max_n == 9);
  CHECK(run_cli({"count-image", "--n", "6", "--t", "1"}, "5").code == kExitResource);
  CHECK(run_cli({"count-image", "--n", "5", "--t", "1"}, "5").code == kExitOk);
  CHECK(run_cli({"count-image", "--n", "5", "--t", "1"}, "abc").code == kExitUsage);
}

TEST_CASE("verify") {
  auto r = run_cli({"verify", "theorem1", "--m", "4", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS theorem1 m=4 n=6 expected=15 observed=15", 0) == 0);
  r = run_cli({"verify", "all", "--max-n", "8"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE_FALSE(ls.empty());
  for (std::size_t i = 0; i + 1 < ls.size(); ++i) CHECK(ls[i].rfind("PASS", 0) == 0);
  CHECK(ls.back().find(" passed") != std::string::npos);
  r = run_cli({"verify", "theorem2", "--m", "4"});
  CHECK(r.out.rfind("PASS theorem2 m=4 n=5 expected=17 observed=17", 0) == 0);
}

TEST_CASE("explore") {
  const auto r = run_cli({"explore", "--m", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "n\tcount\tknown\n4\t24\tm!=24\n5\t17\tB_m+m-2=17\n6\t15\tB_m=15\n");
}

TEST_CASE("jsonl and csv output") {
  auto r = run_cli({"--format", "jsonl", "count-image", "--n", "4", "--t", "1"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 5);
  CHECK_FALSE(j.contains("wall_time"));
  r = run_cli({"--format", "jsonl", "--timing", "count-image", "--n", "4", "--t", "1"});
  CHECK(nlohmann::json::parse(r.out).contains("wall_time"));

  r = run_cli({"--format", "jsonl", "verify", "catalan", "--n", "5"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["expected"] == 42);
  CHECK(j["pass"] == true);

  r = run_cli({"--format", "csv", "sort", "4162"});
  CHECK(lines(r.out).size() == 2);
  CHECK(lines(r.out)[0] == "input,iterations,applied,output");
}

TEST_CASE("printed permutations parse back") {
  for (const char* input : {"4162", "527148369", "35241", "1"}) {
    for (bool compact : {false, true}) {
      std::vector<std::string> args;
      if (compact) args.push_back("--compact");
      args.insert(args.end(), {"sort", input});
      const auto r = run_cli(args);
      const auto p = parse_permutation(lines(r.out).at(0));
      CHECK(format_permutation(p, compact) + "\n" == r.out);
    }
  }
}
