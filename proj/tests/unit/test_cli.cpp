#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "permorb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = permorb::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string lattice(const std::string& name) { return std::string(PERMORB_DATA_DIR) + "/lattices/" + name + ".json"; }

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("modules lists the labels in order") {
  const auto r = run({"modules", lattice("a1")});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 9);
  CHECK(r.out.rfind("D(0;0)\n", 0) == 0);
}

TEST_CASE("fuse prints the product") {
  const auto r = run({"fuse", lattice("a1"), "T(0;0)", "T(0;1)"});
  CHECK(r.code == 0);
  CHECK(r.out == "D(0;1)\nD(1/2;1)\n");
  const auto j = run({"fuse", "--json", lattice("a1"), "T(0;0)", "T(1/2;0)"});
  CHECK(j.code == 0);
  CHECK(j.out.find("\"N(0,1/2)\"") != std::string::npos);
}

TEST_CASE("verify exit status") {
  const auto e8 = run({"verify", lattice("e8")});
  CHECK(e8.code == 0);
  CHECK(e8.out.find("all checks passed") != std::string::npos);
  const auto a2 = run({"verify", lattice("a2")});
  CHECK(a2.code == 0);
  const auto guarded = run({"verify", lattice("a2"), "--max-l", "2"});
  CHECK(guarded.code == 2);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"modules", lattice("missing")}).code == 2);
  CHECK(run({"fuse", lattice("a1"), "N(1,0)", "D(0;0)"}).code == 2);
  CHECK(run({"fuse", lattice("a1"), "Q", "D(0;0)"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  const auto r = run({"modules", lattice("missing")});
  CHECK(count_lines(r.err) == 1);
}

TEST_CASE("version and help") {
  const auto v = run({"--version"});
  CHECK(v.code == 0);
  CHECK(v.out.find("1.0.0") != std::string::npos);
  const auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("verify") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  for (const auto& args : std::vector<std::vector<std::string>>{{"table", "--json", lattice("a2")},
                                                                {"table", "--csv", lattice("a1x2")},
                                                                {"qdims", lattice("d4")},
                                                                {"decompose", lattice("a2"), "T(0,0;1)"}}) {
    const auto first = run(args);
    CHECK(first.code == 0);
    CHECK(run(args).out == first.out);
  }
}
