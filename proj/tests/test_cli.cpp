#include <catch_amalgamated.hpp>

#include <sstream>

#include "cellres/cli/cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cellres::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(CELLRES_DATA_DIR) + "/" + name; }

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

}  // namespace

TEST_CASE("arrangement commands") {
  auto r = run({"arr", "betti", data("four-lines.arr"), "--method", "all"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "cellular: [4, 5, 2]"));
  CHECK(has_line(r.out, "stanley: [4, 5, 2]"));
  CHECK(has_line(r.out, "zp: [4, 5, 2]"));
  CHECK(has_line(r.out, "agreement: true"));

  r = run({"arr", "ideal", "--type", "oriented", data("four-lines.arr")});
  CHECK(has_line(r.out, "generators: <y4, x1x2, x1x3, y2x3>"));

  r = run({"arr", "verify", data("four-lines.arr")});
  CHECK(has_line(r.out, "matroid: exact true, minimal true, betti [4, 5, 2]"));
  CHECK(has_line(r.out, "oriented: exact true, minimal true, betti [4, 5, 2]"));

  r = run({"arr", "betti", data("parallel.arr")});
  CHECK(r.code == cellres::cli::kPreconditionFailure);
  CHECK(r.err.find("{1,2}") != std::string::npos);
}

TEST_CASE("graph commands") {
  CHECK(has_line(run({"graph", "muperp", "Km:10"}).out, "tutte: 48803904"));
  CHECK(has_line(run({"graph", "cochar", "--side", "cographic", "Kmn:3,3"}).out,
                 "recursion: 1 + 15*q + 48*q^2 + 54*q^3 + 20*q^4"));
  CHECK(has_line(run({"graph", "mu", "Km:4", "--method", "orientations"}).out, "orientations: 6"));
  const auto all = run({"graph", "mu", data("k33.graph"), "--check"});
  CHECK(all.code == 0);
  CHECK(has_line(all.out, "order_classes: 31"));
  CHECK(run({"graph", "mu", data("disconnected.graph")}).code == cellres::cli::kPreconditionFailure);
  CHECK(run({"graph", "cochar", "--side", "cographic", "Km:1"}).code == 0);
  CHECK(run({"graph", "mu", "Zz:3"}).code == cellres::cli::kParseError);
}

TEST_CASE("toric and hermite commands") {
  auto r = run({"toric", "fvector", data("k33-cographic.mat"), "--w", "auto"});
  CHECK(has_line(r.out, "fvector: [1, 15, 48, 54, 20]"));
  CHECK(has_line(r.out, "w: 1,2,4,8"));
  r = run({"toric", "fvector", data("k33-cographic.mat"), "--seed-w", "3"});
  CHECK(has_line(r.out, "w: 1,3,9,27"));
  r = run({"toric", "circuits", data("k33-cographic.mat")});
  CHECK(has_line(r.out, "count: 15"));
  r = run({"toric", "initial", data("k33-cographic.mat"), "--w", "1,1,1,1"});
  CHECK(r.code == cellres::cli::kPreconditionFailure);
  CHECK(r.err.find("try --w 1,2,4,8") != std::string::npos);
  CHECK(run({"toric", "circuits", data("k33-cographic.mat"), "--labels", "a,b"}).code ==
        cellres::cli::kParseError);

  CHECK(has_line(run({"hermite", "3"}).out, "recurrence: 3*x + x^3"));
  CHECK(has_line(run({"hermite", "4", "--at", "1"}).out, "recurrence: 10"));
  CHECK(run({"hermite2", "3", "2", "--check"}).code == 0);
}

TEST_CASE("reports are stable and flags behave") {
  const std::vector<std::string> args{"graph", "cochar", "Km:4", "--check", "--json"};
  const auto first = run(args);
  CHECK(first.code == 0);
  CHECK(first.out == run(args).out);
  CHECK(first.out.find("\"agreement\": true") != std::string::npos);
  CHECK(first.out.find("timing_ms") == std::string::npos);
  CHECK(run({"graph", "cochar", "Km:4", "--timing"}).out.find("time: ") != std::string::npos);
  CHECK(run({}).code == cellres::cli::kParseError);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"arr", "bounded", data("missing.arr")}).code == cellres::cli::kParseError);
}
