#include "demazure/cli.hpp"

#include <doctest.h>

#include <map>
#include <sstream>
#include <vector>

using namespace demazure;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("word subcommand") {
  CliResult r = run({"word", "--algebra", "A1^1", "--coweight", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"letters\":[1,0],\"sigma\":\"id\"}\n");
  r = run({"word", "--algebra", "A1^1", "--coweight", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"letters\":[1],\"sigma\":[1,0]}\n");
}

TEST_CASE("char subcommand") {
  CliResult r = run({"char", "--algebra", "A1^1", "--level", "1", "--coweight", "1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"algebra":"A1^1","level":1,"terms":[{"mult":1,"weight":[-1]},{"mult":1,"weight":[1]}]})"
        "\n");
  // finite labels are affinized
  CliResult r2 = run({"char", "--algebra", "A1", "--level", "1", "--coweight", "1"});
  CHECK(r2.out == r.out);

  CliResult tsv = run({"char", "--algebra", "A1^1", "--level", "1", "--coweight", "1",
                       "--format", "tsv"});
  CHECK(tsv.code == 0);
  CHECK(tsv.out == "-1\t1\n1\t1\n");
}

TEST_CASE("deterministic output") {
  std::vector<std::string> argv{"char", "--algebra", "C2^1", "--level", "2",
                                "--coweight", "1,1"};
  CliResult a = run(argv);
  CliResult b = run(argv);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("tsv and json carry the same term multiset") {
  std::vector<std::string> base{"char", "--algebra", "C2^1", "--level", "1",
                                "--coweight", "1,0"};
  CliResult js = run(base);
  std::vector<std::string> targv = base;
  targv.push_back("--format");
  targv.push_back("tsv");
  CliResult tsv = run(targv);
  REQUIRE(js.code == 0);
  REQUIRE(tsv.code == 0);

  std::map<std::vector<long>, long> from_tsv, from_json;
  std::istringstream ts(tsv.out);
  std::string line;
  while (std::getline(ts, line)) {
    std::istringstream ls(line);
    std::vector<long> fields;
    long v;
    while (ls >> v) fields.push_back(v);
    REQUIRE(fields.size() == 3);
    from_tsv[{fields[0], fields[1]}] += fields[2];
  }
  // pull weight/mult pairs out of the json terms array
  std::string s = js.out;
  for (std::size_t p = s.find("\"mult\":"); p != std::string::npos;
       p = s.find("\"mult\":", p + 1)) {
    long mult = std::stol(s.substr(p + 7));
    std::size_t w = s.find("\"weight\":[", p);
    REQUIRE(w != std::string::npos);
    std::size_t end = s.find(']', w);
    std::istringstream ws(s.substr(w + 10, end - w - 10));
    std::vector<long> coords;
    long v;
    char comma;
    while (ws >> v) {
      coords.push_back(v);
      ws >> comma;
    }
    from_json[coords] += mult;
  }
  CHECK(from_tsv == from_json);
  CHECK(from_tsv.size() == 9);
}

TEST_CASE("decompose subcommand") {
  CliResult r = run({"decompose", "--algebra", "A1^1", "--level", "1", "--coweight", "2"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        R"({"parts":[{"dim":1,"mult":1,"weight":[0]},{"dim":3,"mult":1,"weight":[2]}]})"
        "\n");
}

TEST_CASE("verify subcommands") {
  CliResult r = run({"verify", "thm1", "--algebra", "C2", "--level", "1", "--parts",
                     "1,0;0,1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"status\":\"pass\"") != std::string::npos);
  CHECK(r.out.find("\"dim\":55") != std::string::npos);

  r = run({"verify", "thm2", "--algebra", "C2", "--node", "1", "--level", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"status\":\"pass\"") != std::string::npos);

  r = run({"verify", "twisted", "--algebra", "A2^2", "--level", "1", "--parts", "1;1"});
  CHECK(r.code == 0);

  r = run({"limit", "--algebra", "A1", "--level", "1", "--truncation", "2"});
  CHECK(r.code == 0);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"char", "--algebra", "H9", "--level", "1", "--coweight", "1"}).code == 2);
  CHECK(run({"char", "--algebra", "A1", "--level", "1", "--coweight", "x"}).code == 2);
  CHECK(run({"char", "--algebra", "A1", "--level", "1", "--coweight", "-1"}).code == 2);
  CHECK(run({"char", "--algebra", "A1", "--level", "1", "--coweight", "1,2"}).code == 2);
  CHECK(run({"verify", "thm2", "--algebra", "C2", "--node", "7", "--level", "1"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({}).code == 2);
  CliResult r = run({"char", "--algebra", "E9", "--level", "1", "--coweight", "1"});
  CHECK(r.code == 2);
  CHECK(r.err.find("E9") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  CliResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("char") != std::string::npos);
  CHECK(run({"verify", "wmodule", "--algebra", "A1", "--level", "1"}).code == 0);
}
