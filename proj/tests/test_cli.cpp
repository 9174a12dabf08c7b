#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "tiedmon/serialize.hpp"

namespace fs = std::filesystem;

namespace {

  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int const          code = tiedmon::run_cli(args, out, err);
    return {code, out.str(), err.str()};
  }

  fs::path scratch(std::string const& name) {
    char const* base = std::getenv("TIEDMON_TEST_TMP");
    fs::path    dir  = fs::path(base ? base : fs::temp_directory_path().string()) / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
  }

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "bBr", "--n", "4"}).out == "747\n");
  CHECK(run({"count", "tJ", "--n", "5"}).out == "126\n");
  CHECK(run({"count", "RBr", "--n", "3"}).out == "75\n");
  auto const j = tiedmon::Json::parse(run({"count", "bBr", "--n", "14", "--json"}).out);
  CHECK(j["size"] == "767922887039461928775");
  CHECK(run({"count", "nope", "--n", "3"}).code == 2);
  CHECK(run({"count", "Br", "--n", "0"}).code == 1);
}

TEST_CASE("word-eq") {
  auto const r = run({"word-eq", "Qn", "--n", "3", "s1 t2 s1", "s2 t1 s2"});
  CHECK(r.code == 0);
  CHECK(r.out == "equal\n");
  CHECK(run({"word-eq", "Qn", "--n", "3", "e1 f2", "f2"}).out == "not equal\n");
  CHECK(run({"word-eq", "Wn", "--n", "3", "t1", "t1"}).code == 1);
  CHECK(run({"word-eq", "Qn", "--n", "3", "s1 q2", "s1"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count", "Br"}).code == 2);
  CHECK(run({"product", "--n", "3", "1,2"}).code == 2);
  CHECK(run({"render", "--format", "png", "1,1'"}).code == 2);
  auto const r = run({"product", "--n", "3", "1,2", "x"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("verify") {
  auto const r = run({"verify", "Qn", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0 failures") != std::string::npos);
  auto const j = tiedmon::Json::parse(run({"verify", "tJn", "--n", "3", "--json"}).out);
  CHECK(j["failures"] == 0);
  CHECK(j["relations"].size() > 0);
  CHECK(run({"verify", "Xn", "--n", "3"}).code == 2);
}

TEST_CASE("normal forms and products") {
  CHECK(run({"nf", "tJ", "--n", "6", "--elem", "f2 f1 f5 f4"}).out == "f{1,2} f{4,5} | 1\n");
  CHECK(run({"nf", "P", "--elem", "1,3|2|4"}).out == "e{1,3}\n");
  CHECK(run({"nf", "Br", "--elem", "1,2|1',2'"}).out == "top [1 2] k 1 bottom [1 2]\n");
  CHECK(run({"nf", "bBr", "--elem", "1,2|1',2' ; 1,2|1',2'"}).code == 1);
  CHECK(run({"product", "--n", "3", "1,2|1',2'|3,3'", "1,1'|2,3|2',3'"}).out
        == "1,2|3,1'|2',3'\n");
  CHECK(run({"product", "--n", "2", "1,1'|2,2' ; 1,2,1',2'", "1,2|1',2' ; 1,2|1',2'"}).out
        == "1,2|1',2' ; 1,2|1',2'\n");
}

TEST_CASE("tables and rendering") {
  CHECK(run({"table", "Bnj", "--max", "2"}).out == "n,j,B\n1,1,1\n2,1,2\n2,2,1\n");
  CHECK(run({"table", "bBr-sizes", "--max", "4"}).out == "n,size\n1,1\n2,5\n3,48\n4,747\n");
  auto const u = run({"table", "U", "--max", "3"});
  CHECK(u.code == 0);
  CHECK(u.out.find("3,1,2\n") != std::string::npos);
  CHECK(run({"render", "1,1'|2,3|2',3'|4,4'"}).out
        == "n 4\nline 1 1'\nup 2 3\nline 4 4'\ndown 2' 3'\n");
  auto const svg = run({"render", "--format", "svg", "1,1'|2,2' ; 1,2,1',2'"}).out;
  CHECK(svg.find("class=\"tie\"") != std::string::npos);
  auto const j = tiedmon::Json::parse(run({"render", "--json", "1,1'"}).out);
  CHECK(j["output"] == "n 1\nline 1 1'\n");
}

TEST_CASE("closure and cache") {
  auto const dir  = scratch("cli-cache");
  std::vector<std::string> const args = {"closure", "Br", "--n", "5", "--dump", "--cache-dir",
                                         dir.string()};
  auto const first = run(args);
  CHECK(first.code == 0);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 1);
  auto const second = run(args);
  CHECK(second.code == 0);
  CHECK(second.out == first.out);
  CHECK(run({"closure", "Br", "--n", "5", "--dump", "--no-cache"}).out == first.out);
  auto const table = tiedmon::Json::parse(first.out);
  CHECK(table["elements"].size() == 945);

  CHECK(run({"closure", "J", "--n", "6"}).out == "132\n");
  CHECK(run({"closure", "--gens", "s1 t1", "--n", "3"}).out == "3\n");
  CHECK(run({"closure", "RBr", "--n", "5", "--limit", "100"}).code == 1);
}
