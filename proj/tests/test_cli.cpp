#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "vcalc/cli.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = vc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval prints the worked quotient with its standard part") {
  Run r = cli({"eval", "((5+del)^2 - 25)/del"});
  CHECK(r.code == 0);
  CHECK(r.out == "10 + del  (≈ 10)\n");
}

TEST_CASE("classify renders the oscillating infinite") {
  Run r = cli({"classify", "(+-)inf"});
  CHECK(r.code == 0);
  CHECK(r.out == "infinite; not > R; not < R\n");
}

TEST_CASE("near exit codes distinguish Fails from ok") {
  CHECK(cli({"near", "10 + del", "10"}).code == 0);
  CHECK(cli({"near", "inf", "inf^2"}).code == 1);
}

TEST_CASE("integrate verb") {
  Run r = cli({"integrate", "x^2", "0", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.333333") != std::string::npos);
  CHECK(r.out.find("Holds") != std::string::npos);
}

TEST_CASE("usage errors exit 2 and never throw") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate", "x"}).code == 2);
  CHECK(cli({"eval"}).code == 2);
  CHECK(cli({"eval", "((("}).code == 2);
  CHECK(cli({"integrate", "x", "0"}).code == 2);
  CHECK(cli({"deriv", "sqrt(x)", "0"}).code == 2);  // not interior
  CHECK(cli({"eval", "1/(x - x)", "--json"}).code == 2);
}

TEST_CASE("json reports have the documented shape and sorted keys") {
  Run r = cli({"eval", "10 + del", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out.back() == '\n');
  json j = json::parse(r.out);
  CHECK(j["status"] == "ok");
  CHECK(j["verb"] == "eval");
  CHECK(j["payload"]["normalForm"] == "10 + del");
  CHECK(j["meta"]["trunc"] == 16);
  CHECK(j["meta"]["depth"] == 14);
  CHECK(j["meta"]["tol"] == 1e-9);
  // nlohmann objects iterate in sorted key order; serialization is canonical
  std::string keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys += it.key() + ",";
  CHECK(keys == "meta,payload,status,verb,");

  Run e = cli({"eval", "ln(-1 + 0*del)", "--json"});
  CHECK(e.code == 2);
  json je = json::parse(e.out);
  CHECK(je["status"] == "error");
}

TEST_CASE("flags reach the engine") {
  Run r = cli({"eval", "sin(del)", "--trunc", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "del - del^3/6 + O(del^5)  (≈ 0)\n");
}

TEST_CASE("deterministic output under a fixed seed") {
  Run a = cli({"integrate", "sin(x)", "0", "2", "--json", "--seed", "11"});
  Run b = cli({"integrate", "sin(x)", "0", "2", "--json", "--seed", "11"});
  CHECK(a.out == b.out);
  Run c = cli({"props", "ftc", "--json", "--seed", "3", "--instances", "2"});
  Run d = cli({"props", "ftc", "--json", "--seed", "3", "--instances", "2"});
  CHECK(c.out == d.out);
}

TEST_CASE("props verb reports per-proposition lines") {
  Run r = cli({"props", "confront", "--instances", "8"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[pass] confront:") != std::string::npos);
  CHECK(r.out.find("all propositions pass") != std::string::npos);
  CHECK(cli({"props", "bogus"}).code == 2);
}

TEST_CASE("deriv verb with an extension value") {
  Run r = cli({"deriv", "x^2*sin(1/x)", "0", "--at", "0", "--depth", "27"});
  CHECK(r.code == 0);
  CHECK(r.out.find("derivative") != std::string::npos);
}

TEST_CASE("taylor verb") {
  Run r = cli({"taylor", "exp(x)", "0", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1 1 1/2 1/6") != std::string::npos);
  CHECK(r.out.find("remainder in O(del^4): Holds") != std::string::npos);
}

TEST_CASE("uc verb with witness output") {
  Run holds = cli({"uc", "cos(x)", "R"});
  CHECK(holds.code == 0);
  CHECK(holds.out.find("HoldsToDepth") != std::string::npos);
  Run fails = cli({"uc", "x^2", "R"});
  CHECK(fails.code == 1);
  CHECK(fails.out.find("witness") != std::string::npos);
}

TEST_CASE("geom verb") {
  Run r = cli({"geom", "length", "x", "0", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("1.414213562") != std::string::npos);
}

TEST_CASE("order verb") {
  Run r = cli({"order", "del^2", "del"});
  CHECK(r.code == 0);
  CHECK(r.out.find("negligible (<<): Holds") != std::string::npos);
  CHECK(r.out.find("magnitude: Smaller") != std::string::npos);
}

TEST_CASE("ftc verb") {
  Run r = cli({"ftc", "exp(x)", "0", "0.5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Holds") != std::string::npos);
}

TEST_CASE("repl session") {
  std::istringstream in(
      "inf - sqrt(inf^2+1)\n"
      "\n"
      ":set trunc 4\n"
      "sin(del)\n"
      "bad syntax ((\n"
      ":quit\n");
  std::ostringstream out;
  vc::Settings s;
  int code = vc::cli::repl(in, out, s);
  CHECK(code == 0);
  std::string text = out.str();
  CHECK(text.find("(≈ 0)") != std::string::npos);
  CHECK(text.find("trunc = 4") != std::string::npos);
  CHECK(text.find("del - del^3/6 + O(del^5)") != std::string::npos);
  CHECK(text.find("error:") != std::string::npos);  // recovered, session continued
  CHECK(text.find("vcalc> ") != std::string::npos);
}
