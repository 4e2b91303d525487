#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "doctest.h"
#include "pfrac/json_io.hpp"

using pfrac::json_io::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  json out_json() const { return json::parse(out); }
  json err_json() const { return json::parse(err); }
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = pfrac::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kWorkedInput = R"({"triple":{"A":["-6","1"],"B":["7/2","-3/2"],"C":["-2","4","-1"]},"alpha":["1","3","4"]})";
const char* kFirst = R"({"b0":"1","block":["-3","1","3"],"alpha":["1","3","4"]})";

}  // namespace

TEST_CASE("expand") {
  const auto r = run({"expand"}, kWorkedInput);
  REQUIRE(r.code == 0);
  CHECK(r.out_json() == json::parse(R"([
    {"alpha":["1","3","4"],"b0":"1","block":["-3","1","3"]},
    {"alpha":["1","3","4"],"b0":"-1/5","block":["-5/2","6/5","3/10"]}])"));
}

TEST_CASE("triple output pipes back into expand") {
  const auto t = run({"triple"}, kFirst);
  REQUIRE(t.code == 0);
  CHECK(t.out_json()["T"] == json::parse(R"(["-7/2","1/2"])"));
  const auto e = run({"expand"}, t.out);
  REQUIRE(e.code == 0);
  CHECK(e.out_json()[0] == json::parse(kFirst));
}

TEST_CASE("pure variants") {
  const char* in = R"({"triple":{"A":["0","1"],"B":["-1","-1/2"],"C":["2","1","-1"]},"alpha":["0","1","2"]})";
  const json expected = json::parse(R"({"alpha":["0","1","2"],"b0":"1","block":["1","1","1"]})");
  CHECK(run({"expand", "--pure"}, in).out_json() == expected);
  CHECK(run({"pure-expand"}, in).out_json() == expected);
  const auto bad = run({"pure-expand"}, kWorkedInput);
  CHECK(bad.code == 1);
  CHECK(bad.err_json()["error"] == "NotPure");
}

TEST_CASE("admissible") {
  const auto r = run({"admissible"}, R"({"R":["1/4","31/2","-31/4","1"],"alpha":["1","3","4"]})");
  CHECK(r.code == 0);
  CHECK(r.out_json() == json::parse(R"({"S":["-7/2","1/2"]})"));
  const auto bad = run({"admissible"}, R"({"R":["-12","20","-8","1"],"alpha":["1","3","4"]})");
  CHECK(bad.code == 1);
  CHECK(bad.err_json()["error"] == "NotAdmissible");
}

TEST_CASE("act and orbit") {
  const auto a = run({"act", "--word", R"(["epspi"])"}, kFirst);
  CHECK(a.out_json() == json::parse(R"({"alpha":["4","3","1"],"b0":"-2","block":["-1","3","-3"]})"));
  const auto o = run({"orbit"}, kFirst);
  REQUIRE(o.code == 0);
  CHECK(o.out_json()["expansions"].size() == 12);
  CHECK(o.out_json()["complete"] == true);
  const auto p = run({"orbit", "--pure"}, kFirst);
  CHECK(p.code == 1);
  CHECK(p.err_json()["error"] == "NotPure");
  const auto z = run({"act", "--word", R"(["sigma:1"])"}, R"({"b0":"1","block":["0","1","3"],"alpha":["1","3","4"]})");
  CHECK(z.code == 1);
  CHECK(z.err_json()["error"] == "ZeroPivot");
}

TEST_CASE("jacobi commands") {
  const char* jac = R"({"U":["-6","1"],"V":["-11/2"],"W":["5","-7/4","1"],"R":["1/4","31/2","-31/4","1"]})";
  const auto t = run({"jacobi-to-triple"}, std::string(R"({"beta":"-3/2","jacobi":)") + jac + "}");
  CHECK(t.out_json() == json::parse(R"({"A":["-6","1"],"B":["7/2","-3/2"],"C":["-2","4","-1"]})"));
  const auto j = run({"triple-to-jacobi"}, t.out);
  CHECK(j.out_json() == json::parse(std::string(R"({"beta":"-3/2","jacobi":)") + jac + "}"));
  const auto d = run({"jacobi-to-divisor"}, jac);
  CHECK(d.out_json()["points"] == json::parse(R"([{"lambda":"6","mu":"-11/2"}])"));
  CHECK(run({"divisor-to-jacobi"}, d.out).out_json() == json::parse(jac));
  const auto b = run({"pure-beta"}, std::string(R"({"alpha_N":"4","jacobi":)") + jac + "}");
  CHECK(b.out_json()["beta"].size() == 2);
}

TEST_CASE("verify and residual") {
  const auto v = run({"verify"}, std::string(R"({"expansion":)") + kFirst +
                                     R"(,"triple":{"A":["-6","1"],"B":["7/2","-3/2"],"C":["-2","4","-1"]}})");
  CHECK(v.out_json()["pass"] == true);
  const char* triple = R"({"A":["-6","1"],"B":["7/2","-3/2"],"C":["-2","4","-1"]})";
  const auto r = run({"residual", "--lambda", "10", "--branch", "-"}, triple);
  REQUIRE(r.code == 0);
  CHECK(r.out_json()["residual"].get<double>() <= 1e-9);
  CHECK(run({"residual", "--lambda", "6"}, triple).err_json()["error"] == "PoleAtLambda");
  CHECK(run({"residual", "--lambda", "x"}, triple).code == 2);
  CHECK(run({"residual", "--lambda", "1", "--branch", "*"}, triple).code == 2);
}

TEST_CASE("example") {
  const auto r = run({"example", "--name", "n1-pure"});
  REQUIRE(r.code == 0);
  CHECK(r.out_json()["expansions"][0] == json::parse(R"({"alpha":["0"],"b0":"-2","block":["-2"]})"));
  CHECK(run({"example", "--name", "pure-n3"}).out_json()["expansions"][0]["block"] == json::parse(R"(["1","1","1"])"));
  CHECK(run({"example", "--name", "n1-periodic"}).out_json()["expansions"].size() == 2);
  const auto bad = run({"example", "--name", "nope"});
  CHECK(bad.code == 1);
  CHECK(bad.err_json()["error"] == "UnknownExample");
}

TEST_CASE("usage and malformed input") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"act"}, kFirst).code == 2);
  const auto m = run({"expand"}, "{not json");
  CHECK(m.code == 2);
  CHECK(m.err_json()["error"] == "MalformedInput");
  CHECK(run({"expand"}, R"({"alpha":["1"]})").code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("file input and output") {
  const std::string in_path = "cli_test_in.json", out_path = "cli_test_out.json";
  std::ofstream(in_path) << kWorkedInput;
  const auto r = run({"expand", "--input", in_path, "--output", out_path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out_path);
  CHECK(json::parse(f).size() == 2);
  CHECK(run({"expand", "--input", "does/not/exist.json"}).code == 2);
  std::remove(in_path.c_str());
  std::remove(out_path.c_str());
}
