#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "jinf/automorphism.hpp"
#include "jinf/formats.hpp"
#include "jinf/graph.hpp"
#include "jinf/periodic_set.hpp"
#include "jinf/permutation.hpp"

using namespace jinf;

namespace {

struct RunResult {
  int rc = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int rc = runCli(args, out, err);
  return {rc, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("adjacency predicate sets the exit code") {
  const auto yes = run({"adj", "--x", "evens", "--y", "union(diff(evens,{2}),{1})"});
  CHECK(yes.rc == 0);
  CHECK(yes.out == "adjacent: true\n");
  CHECK(yes.err.empty());

  const auto no = run({"adj", "--x", "evens", "--y", "odds"});
  CHECK(no.rc == 1);
  CHECK(no.out == "adjacent: false\n");
}

TEST_CASE("distance across components is a domain error, exit 1") {
  const auto result = run({"dist", "--x", "evens", "--y", "odds"});
  CHECK(result.rc == 1);
  CHECK(result.out.empty());
  CHECK(contains(result.err, "error:"));
}

TEST_CASE("distance with path prints the geodesic") {
  const auto result =
      run({"dist", "--x", "evens", "--y", "union(diff(evens,{2}),{1})", "--path"});
  CHECK(result.rc == 0);
  CHECK(contains(result.out, "distance: 1\n"));
  CHECK(contains(result.out, "  per(;01)\n"));
}

TEST_CASE("set eval canonicalizes and lists smallest elements") {
  const auto canon = run({"set", "eval", "--expr", "inter(evens, mod(3,0))"});
  CHECK(canon.rc == 0);
  CHECK(canon.out == "per(;000001)\n");

  const auto first = run({"set", "eval", "--expr", "evens", "--first", "3"});
  CHECK(first.rc == 0);
  CHECK(first.out == "per(;01)\nfirst: 2 4 6\n");
}

TEST_CASE("set member mirrors the predicate convention") {
  CHECK(run({"set", "member", "--expr", "evens", "--n", "4"}).rc == 0);
  const auto no = run({"set", "member", "--expr", "evens", "--n", "3"});
  CHECK(no.rc == 1);
  CHECK(no.out == "member: false\n");
}

TEST_CASE("malformed expressions are usage errors with a location") {
  const auto result = run({"set", "eval", "--expr", "wombat"});
  CHECK(result.rc == 2);
  CHECK(contains(result.err, "expected a set name or operation"));
}

TEST_CASE("kneser distance of complementary vertices") {
  const auto result = run({"kneser", "dist", "--x", "evens", "--y", "odds"});
  CHECK(result.rc == 0);
  CHECK(result.out == "distance: 1\n");
}

TEST_CASE("finite oracle reports the automorphism group order") {
  const auto result =
      run({"oracle", "aut-order", "--family", "johnson", "--n", "5", "--k", "2"});
  CHECK(result.rc == 0);
  CHECK(result.out == "120\n");
}

TEST_CASE("bfs between kneser matching components is unreachable") {
  const auto result = run({"oracle", "bfs", "--family", "kneser", "--n", "4", "--k", "2",
                           "--from", "1,2", "--to", "1,3"});
  CHECK(result.rc == 1);
  CHECK(result.out == "unreachable\n");
}

TEST_CASE("perm apply accepts inline JSON specs") {
  const std::string spec = permutationToJson(ComputablePermutation::transposition(1, 2));
  const auto forward = run({"perm", "apply", "--spec", spec, "--n", "1"});
  CHECK(forward.rc == 0);
  CHECK(forward.out == "2\n");

  const auto inverse = run({"perm", "apply", "--spec", spec, "--n", "2", "--inverse"});
  CHECK(inverse.rc == 0);
  CHECK(inverse.out == "1\n");
}

TEST_CASE("spec flags slurp @file arguments") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "jinf_cli_spec.json";
  {
    std::ofstream file(path);
    file << permutationToJson(ComputablePermutation::transposition(1, 2));
  }
  const auto result = run({"perm", "apply", "--spec", "@" + path.string(), "--n", "1"});
  fs::remove(path);
  CHECK(result.rc == 0);
  CHECK(result.out == "2\n");

  const auto missing =
      run({"perm", "apply", "--spec", "@" + (path.parent_path() / "absent.json").string(),
           "--n", "1"});
  CHECK(missing.rc == 2);
  CHECK(contains(missing.err, "cannot read spec file"));
}

TEST_CASE("verify-cert round trips the one-component relabeling example") {
  const Vertex a = Vertex::fromSet(PeriodicSet::evens());
  const Vertex b = Vertex::fromSet(
      unite(subtract(PeriodicSet::evens(), PeriodicSet::finite({2})), PeriodicSet::finite({1})));
  const ExampleOneResult example = buildExampleOne(a, b);
  const std::string spec = automorphismToJson(AutomorphismValue{example.f});
  const std::string cert = certificateToJson(example.certificate);

  const auto result = run({"auto", "verify-cert", "--spec", spec, "--cert", cert});
  CHECK(result.rc == 0);
  CHECK(result.out == "certificate: true\n");

  const std::string identity =
      automorphismToJson(AutomorphismValue{RegularAutomorphism{}});
  const auto held = run({"auto", "verify-cert", "--spec", identity, "--cert", cert});
  CHECK(held.rc == 1);
  CHECK(held.out == "certificate: false\n");
}

TEST_CASE("auto reconstruct recovers the inducing permutation") {
  const std::string spec = automorphismToJson(
      AutomorphismValue{RegularAutomorphism{ComputablePermutation::transposition(2, 5)}});
  const auto result =
      run({"auto", "reconstruct", "--spec", spec, "--base", "evens", "--window", "5"});
  CHECK(result.rc == 0);
  CHECK(contains(result.out, "case: stars-to-stars\n"));
  CHECK(contains(result.out, "flip: false\n"));
  CHECK(contains(result.out, "sigma(2) = 5\n"));
  CHECK(contains(result.out, "sigma(5) = 2\n"));
}

TEST_CASE("suite filter selects checks and rejects unknown names") {
  const auto json = run({"suite", "run", "--filter", "finite-groups", "--json"});
  CHECK(json.rc == 0);
  CHECK(contains(json.out, "\"allPassed\": true"));
  CHECK(contains(json.out, "finite-groups"));

  const auto none = run({"suite", "run", "--filter", "zzz"});
  CHECK(none.rc == 2);
  CHECK(contains(none.err, "no checks match"));

  const auto names = run({"suite", "list"});
  CHECK(names.rc == 0);
  CHECK(contains(names.out, "distance-law\n"));
  CHECK_FALSE(contains(names.out, "mutant-probe"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).rc == 2);
  CHECK(run({"clique", "classify", "--vertex", "evens"}).rc == 2);
  const auto help = run({"--help"});
  CHECK(help.rc == 0);
  CHECK(contains(help.out, "set expression grammar"));
}
