#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "codb/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = codb::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("show") {
  auto r = run({"show", "-e", "\\c.\\e.c", "--format", "codebruijn"});
  CHECK(r.code == 0);
  CHECK(r.out == "λ (1\\ λ (0\\ # only)) ↑ ε\n");
  auto m = run({"show", "-e", "\\x.y x", "--env", "y", "--format", "named", "--format", "index"});
  CHECK(m.out == "named: \\a.y a\nindex: λ. 1 0\n");
}

TEST_CASE("normalize") {
  auto r = run({"normalize", "-e", "(\\x.x) (\\y.y)"});
  CHECK(r.code == 0);
  CHECK(r.out == "\\a.a\nsteps: 1\n");
  auto o = run({"normalize", "-e", "(\\x.x x)(\\x.x x)", "--fuel", "3"});
  CHECK(o.code == 3);
  CHECK(o.out == "(\\a.a a) (\\a.a a)\nsteps: 3\n");
  CHECK(o.err == "-e: out of fuel after 3 steps\n");
}

TEST_CASE("errors map to exit codes") {
  CHECK(run({"show", "-e", "\\x."}).code == 1);
  CHECK(run({"show", "-e", "\\x.y"}).code == 1);
  CHECK(run({"show"}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"show", "-e", "x", "--format", "xml"}).code == 1);
  auto bad = run({"check", "-e",
                  "(up (con (lam (bind usage:1 (con (lam (bind usage:1 (con (app (pair "
                  "(up (bind usage: (hash (pair (up only thin:1) (up unit thin:0) cover:L))) thin:10) "
                  "(up (bind usage: (hash (pair (up only thin:1) (up unit thin:0) cover:L))) thin:01) "
                  "cover:LL))))))))) thin:)"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("RelevanceError at $/con/lam/bind/con/lam/bind/con/app/pair") != std::string::npos);
  CHECK(run({"help"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("files: every term is processed and the first failure wins") {
  const std::string path = "cli_test_input.lam";
  {
    std::ofstream f(path);
    f << "# three terms\n\\x.x\n\\x.y   # unbound\n\n(\\x.x x)(\\x.x x)\n";
  }
  auto r = run({"normalize", path, "--fuel", "2"});
  std::remove(path.c_str());
  CHECK(r.code == 1);
  CHECK(r.out == "\\a.a\nsteps: 0\n(\\a.a a) (\\a.a a)\nsteps: 2\n");
  CHECK(r.err == "cli_test_input.lam:3: unbound name: y\ncli_test_input.lam:5: out of fuel after 2 steps\n");
}

TEST_CASE("sexp input is detected") {
  auto db = run({"show", "-e", "(con (lam (rec (var 0 unit))))"});
  CHECK(db.code == 0);
  CHECK(db.out == "\\a.a\n");
  auto r = run({"show", "-e", "(up (hash (pair (up only thin:1) (up unit thin:0) cover:L)) thin:01)", "--env", "x,y"});
  CHECK(r.out == "y\n");
  auto named = run({"show", "--input", "named", "-e", "(x)", "--env", "x"});
  CHECK(named.out == "x\n");
}

TEST_CASE("bench agrees") {
  auto r = run({"bench", "--count", "20", "--max-nodes", "15"});
  CHECK(r.code == 0);
  CHECK(r.out.find("agree: 20/20") != std::string::npos);
}
