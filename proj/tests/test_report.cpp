#include <cmath>
#include <cstdlib>
#include <random>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "specbound/report.hpp"

using namespace specbound;

TEST_CASE("format_double round-trips and trims") {
  CHECK(format_double(3.0) == "3");
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-1.25) == "-1.25");

  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int trial = 0; trial < 200; ++trial) {
    const double v = dist(rng);
    const std::string s = format_double(v);
    CHECK(std::strtod(s.c_str(), nullptr) == v);
  }
  // Representative irrationals survive the trip exactly.
  for (double v : {1.0 / 3.0, std::sqrt(2.0), 2.0 / 7.0, 1e-300}) {
    CHECK(std::strtod(format_double(v).c_str(), nullptr) == v);
  }
}

TEST_CASE("Json serializes sorted keys and escapes strings") {
  Json o = Json::object();
  o["zeta"] = 1;
  o["alpha"] = true;
  o["mid"] = "a\"b\\c\nd";
  const std::string s = o.dump();
  CHECK(s.find("\"alpha\"") < s.find("\"mid\""));
  CHECK(s.find("\"mid\"") < s.find("\"zeta\""));
  CHECK(s.find("a\\\"b\\\\c\\nd") != std::string::npos);

  CHECK(Json::object().dump() == "{}\n");
  CHECK(Json::array().dump() == "[]\n");

  Json arr = Json::array();
  arr.push_back(1);
  arr.push_back(2.5);
  CHECK(arr.dump() == "[1, 2.5]\n");
}

namespace {

Report sample_report() {
  Report r;
  r.command = "bounds";
  r.input = {"x.tns", "tensor", 3, 4, 12};

  BoundReport b;
  b.method = BoundMethod::general_f;
  b.lower = std::sqrt(2.0);
  b.upper = 2.0;
  b.argmin = IndexPair{0, 2};
  b.argmax = IndexPair{0, 1};
  b.pair_values = std::vector<PairValue>{{0, 1, 2.0}, {0, 2, std::sqrt(2.0)}};
  r.bounds = b;

  OracleReport o;
  o.rho = 1.5874010519681994;
  o.residual = 1e-13;
  o.iterations = 42;
  o.bracket = 2e-13;
  r.oracle = o;
  r.sandwich_margin = 0.25;
  return r;
}

}  // namespace

TEST_CASE("to_json emits valid JSON that a reference parser accepts") {
  const std::string s = to_json(sample_report());
  auto parsed = nlohmann::json::parse(s);

  CHECK(parsed["command"] == "bounds");
  CHECK(parsed["input"]["kind"] == "tensor");
  CHECK(parsed["input"]["m"] == 3);
  CHECK(parsed["input"]["n"] == 4);
  CHECK(parsed["input"]["entries"] == 12);
  // Indices are 1-based in reports.
  CHECK(parsed["bounds"]["argmin"][0] == 1);
  CHECK(parsed["bounds"]["argmin"][1] == 3);
  CHECK(parsed["bounds"]["pairs"].size() == 2);
  // Doubles survive the render + reference parse exactly.
  CHECK(parsed["bounds"]["lower"].get<double>() == std::sqrt(2.0));
  CHECK(parsed["oracle"]["rho"].get<double>() == 1.5874010519681994);
  CHECK(parsed["sandwich_margin"].get<double>() == 0.25);
  // Absent sections stay absent.
  CHECK_FALSE(parsed.contains("check"));
  CHECK_FALSE(parsed.contains("timing_ms"));
  CHECK_FALSE(parsed.contains("profile"));
}

TEST_CASE("to_json shapes hypergraph inputs and witnesses") {
  Report r;
  r.command = "hg";
  r.input = {"h.hg", "hypergraph", 3, 4, 2};

  BoundReport b;
  b.method = BoundMethod::qlaplacian;
  b.lower = 3.0;
  b.upper = 3.0;
  EqualityWitness w;
  w.kind = EqualityWitness::Kind::bipartite;
  w.value = 3.0;
  w.bipartition = BipartitionWitness{{0, 2}, {1}, 0.5};
  b.equality = w;
  r.bounds = b;

  HypergraphProfile p;
  p.d = {2.0, 2.0, 1.0, 1.0};
  p.b = {1.0, 1.0, 1.0, 1.0};
  p.b_prime = {2.0, 2.0, 1.0, 1.0};
  r.profile = p;

  auto parsed = nlohmann::json::parse(to_json(r));
  CHECK(parsed["input"]["k"] == 3);
  CHECK(parsed["input"]["edges"] == 2);
  CHECK_FALSE(parsed["input"].contains("m"));
  CHECK(parsed["bounds"]["equality"]["kind"] == "bipartite");
  CHECK(parsed["bounds"]["equality"]["ell"] == 0.5);
  CHECK(parsed["bounds"]["equality"]["u"] == nlohmann::json::array({1, 3}));
  CHECK(parsed["bounds"]["equality"]["w"] == nlohmann::json::array({2}));
  CHECK(parsed["profile"]["d"][0] == 2.0);
  CHECK_FALSE(parsed["profile"].contains("m_avg"));
}

TEST_CASE("to_text renders one labeled line per datum") {
  const std::string s = to_text(sample_report());
  CHECK(s.find("command: bounds\n") != std::string::npos);
  CHECK(s.find("input: x.tns (tensor, m=3, n=4, entries=12)\n") != std::string::npos);
  CHECK(s.find("method: general-F\n") != std::string::npos);
  CHECK(s.find("lower: 1.4142135623730951\n") != std::string::npos);
  CHECK(s.find("upper: 2\n") != std::string::npos);
  CHECK(s.find("argmin: (1, 3)\n") != std::string::npos);
  CHECK(s.find("argmax: (1, 2)\n") != std::string::npos);
  CHECK(s.find("F(1, 2) = 2\n") != std::string::npos);
  CHECK(s.find("equality: none\n") != std::string::npos);
  CHECK(s.find("rho: 1.5874010519681994\n") != std::string::npos);
  CHECK(s.find("iterations: 42\n") != std::string::npos);
  CHECK(s.find("sandwich_margin: 0.25\n") != std::string::npos);
  CHECK(s.find("timing_ms") == std::string::npos);
}

TEST_CASE("to_text renders witnesses and check lines") {
  Report r;
  r.command = "check";
  r.input = {"x.tns", "tensor", 2, 3, 4};
  CheckReport c;
  c.weakly_irreducible = true;
  c.zero_diagonal = false;
  r.check = c;

  std::string s = to_text(r);
  CHECK(s.find("weakly_irreducible: true\n") != std::string::npos);
  CHECK(s.find("zero_diagonal: false\n") != std::string::npos);
  CHECK(s.find("connected") == std::string::npos);

  BoundReport b;
  b.method = BoundMethod::general_f;
  b.lower = b.upper = 3.0;
  EqualityWitness w;
  w.kind = EqualityWitness::Kind::bipartite;
  w.value = 3.0;
  w.bipartition = BipartitionWitness{{0, 2}, {1}, 0.5};
  b.equality = w;
  r.bounds = b;
  s = to_text(r);
  CHECK(s.find("equality: bipartite, value 3, ell 0.5, U {1, 3}, W {2}\n") != std::string::npos);
}
