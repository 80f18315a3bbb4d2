#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "extres/betti.hpp"
#include "extres/cli.hpp"
#include "extres/errors.hpp"
#include "extres/io.hpp"

using namespace extres;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kThreeGens = "[1,3],[1,4],[2,4,6]";

std::string parse_error_of(std::string_view text) {
  try {
    parse_ideal(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("ideal text and JSON") {
  auto I = parse_ideal("n=6; gens=[1,3],[1,4],[2,4,6]");
  CHECK(I == make_ideal(Ambient(6), {{1, 3}, {1, 4}, {2, 4, 6}}));
  CHECK(parse_ideal("  n = 6 ;gens = e1*e3, e1*e4, e2*e4*e6\n") == I);
  CHECK(parse_ideal(R"({"n":6,"gens":[[2,4,6],[1,3],[1,4]]})") == I);
  // Non-minimal generators are dropped.
  CHECK(parse_ideal("n=4; gens=[1,2],[1,2,3]") == make_ideal(Ambient(4), {{1, 2}}));
  CHECK(parse_monomial(Ambient(3), "1").is_unit());
  CHECK(parse_monomial(Ambient(3), "[3,1]") == Monomial::of(Ambient(3), {1, 3}));
  CHECK(parse_int_list("2, 0,1") == std::vector<int>{2, 0, 1});
  CHECK(parse_generators(Ambient(4), "[1],[1]").size() == 2);

  CHECK(ideal_to_text(I) == "n=6; gens=[1,3],[1,4],[2,4,6]");
  CHECK(parse_ideal(ideal_to_json(I).dump()) == I);
  CHECK(parse_ideal(ideal_to_text(I)) == I);
}

TEST_CASE("parse errors carry line and column") {
  CHECK(parse_error_of("n=4; gens=[1,,2]").find("1:14") != std::string::npos);
  CHECK(parse_error_of("n=3;\ngens=[1,4]").find("2:") != std::string::npos);
  CHECK(parse_error_of("n=3; gens=[1,1]") != "");
  CHECK(parse_error_of("n=3; gens=[0]") != "");
  CHECK(parse_error_of("gens=[1]") != "");
  CHECK(parse_error_of(R"({"n":3,"gens":[[1,"x"]]})") != "");
  CHECK(parse_error_of(R"({"n":3,)") != "");
  CHECK_THROWS_AS(parse_int_list("1,a"), ParseError);
}

TEST_CASE("Betti table layout") {
  auto lq = *find_lq_order(parse_ideal("n=6; gens=" + kThreeGens));
  CHECK(betti_to_text(betti_lq(lq, 3)) ==
        "       0 1  2  3\n"
        "total: 3 9 19 34\n"
        "    2: 2 5  9 14\n"
        "    3: 1 4 10 20\n");
  auto j = betti_to_json(betti_lq(lq, 1));
  CHECK(j["schema"] == 1);
  CHECK(j["totals"] == nlohmann::json::array({3, 9}));
  CHECK(j["entries"].size() == 4);

  // Values beyond 64 bits become strings.
  std::vector<Monomial> gens;
  Ambient a(60);
  for (int k = 1; k <= 40; ++k) gens.push_back(Monomial::variable(a, k));
  auto big = betti_to_json(betti_stable(minimalize(a, gens), 60));
  CHECK(big["totals"][60] == "9013924030034630492634340800");
}

TEST_CASE("cli: betti, lq, verify, cxdepth, poincare") {
  auto r = run({"betti", "-n", "6", "-g", kThreeGens, "--imax", "3"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("total: 3 9 19 34") != std::string::npos);

  auto o = run({"betti", "-n", "6", "-g", kThreeGens, "--imax", "3", "--oracle"});
  CHECK(o.code == cli::kOk);
  CHECK(o.out.find("total: 3 9 19 34") != std::string::npos);

  auto l = run({"lq", "-n", "4", "-g", "[2],[3,4]"});
  CHECK(l.code == cli::kOk);
  CHECK(l.out.find("e3*e4  set = {2,3,4}") != std::string::npos);

  auto none = run({"lq", "-n", "6", "-g", "[1,2],[3,4],[5,6]"});
  CHECK(none.code == cli::kMathFailure);
  CHECK(none.out.find("orders ruled out 6") != std::string::npos);

  auto v = run({"verify", "--regular", "--imax", "3"}, "n=4; gens=[1,2],[2,4],[1,3]");
  CHECK(v.code == cli::kOk);
  CHECK(v.out.find("ranks 1 3 8 15") != std::string::npos);
  CHECK(v.out.find("H_0 = E/I true") != std::string::npos);

  auto bad = run({"verify", "--regular", "-n", "4", "-g", "[1,2],[2,4],[1,3]", "--order", "3,1,2"});
  CHECK(bad.code == cli::kMathFailure);

  auto lifted = run({"verify", "-n", "4", "-g", "[1,2],[2,4],[1,3]", "--order", "3,1,2", "--imax", "3"});
  CHECK(lifted.code == cli::kOk);

  auto cx = run({"cxdepth", "-n", "4", "-g", "[1,2],[2,4],[1,3]"});
  CHECK(cx.out.find("cx 3") != std::string::npos);
  CHECK(cx.out.find("depth 1") != std::string::npos);

  auto p = run({"poincare", "-n", "6", "-g", kThreeGens, "--imax", "1"});
  CHECK(p.out.find("2*s^2 + s^3 + 5*t*s^3 + 4*t*s^4") != std::string::npos);

  auto resolve = run({"resolve", "--regular", "--json", "-n", "4", "-g", "[1,2],[2,4],[1,3]", "--imax", "2"});
  CHECK(resolve.code == cli::kOk);
  auto js = nlohmann::json::parse(resolve.out);
  CHECK(js["differentials"].size() == 2);
}

TEST_CASE("cli: exit codes and determinism") {
  CHECK(run({}).code == cli::kInputError);
  CHECK(run({"bogus"}).code == cli::kInputError);
  auto e = run({"betti", "-n", "3", "-g", "[1,4]"});
  CHECK(e.code == cli::kInputError);
  CHECK(e.err.find("1:4") != std::string::npos);
  CHECK(run({"betti", "-n", "4", "-g", "[1,2]", "--imax", "-1"}).code == cli::kInputError);
  CHECK(run({"betti", "-n", "4", "-g", "[1,2],[3,4]"}).code == cli::kMathFailure);
  CHECK(run({"tspread", "--t", "2", "--check", "-n", "4", "-g", "[1,2]"}).code == cli::kMathFailure);
  CHECK(run({"tspread", "--t", "2", "--check", "-n", "4", "-g", "[1,3]"}).code == cli::kOk);

  for (std::vector<std::string> args :
       {std::vector<std::string>{"resolve", "-n", "5", "-g", "[1,2],[1,3,5],[2,3]", "--imax", "3"},
        std::vector<std::string>{"betti", "--json", "-n", "6", "-g", kThreeGens}}) {
    auto first = run(args);
    auto second = run(args);
    CHECK(first.code == cli::kOk);
    CHECK(first.out == second.out);
  }
}
