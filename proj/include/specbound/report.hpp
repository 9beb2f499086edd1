#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "specbound/bounds.hpp"
#include "specbound/hypergraph.hpp"
#include "specbound/spectral.hpp"

namespace specbound {

/// 17 significant digits (printf %.17g semantics) via std::to_chars:
/// locale-independent, round-trips through strtod exactly.
std::string format_double(double v);

/// Minimal JSON document builder. Objects are std::map, so keys always
/// serialize sorted; doubles go through format_double. Enough for the
/// report shapes below, not a general JSON library.
class Json {
public:
  using Object = std::map<std::string, Json>;
  using Array = std::vector<Json>;

  Json() : v_(nullptr) {}
  Json(bool b) : v_(b) {}
  Json(int i) : v_(static_cast<std::int64_t>(i)) {}
  Json(std::int64_t i) : v_(i) {}
  Json(double d) : v_(d) {}
  Json(const char* s) : v_(std::string(s)) {}
  Json(std::string s) : v_(std::move(s)) {}
  Json(Object o) : v_(std::move(o)) {}
  Json(Array a) : v_(std::move(a)) {}

  static Json object() { return Json(Object{}); }
  static Json array() { return Json(Array{}); }

  /// Object access; creates the key. Throws std::bad_variant_access when
  /// applied to a non-object.
  Json& operator[](const std::string& key) { return std::get<Object>(v_)[key]; }
  void push_back(Json v) { std::get<Array>(v_).push_back(std::move(v)); }

  std::string dump(int indent = 2) const;

private:
  std::variant<std::nullptr_t, bool, std::int64_t, double, std::string, Object, Array> v_;

  void write(std::string& out, int indent, int depth) const;
};

struct InputDescriptor {
  std::string file;
  std::string kind;  // tensor | hypergraph
  int order = 0;     // m, or k for hypergraphs
  int dim = 0;
  std::int64_t count = 0;  // stored entries, or edges for hypergraphs
};

struct OracleReport {
  double rho = 0.0;
  double residual = 0.0;
  int iterations = 0;
  double bracket = 0.0;
};

struct CheckReport {
  std::optional<bool> weakly_irreducible;
  std::optional<bool> zero_diagonal;
  std::optional<bool> connected;
};

/// Everything one CLI invocation reports. Absent optionals are omitted
/// from both renderings, so identical runs emit identical bytes; timing
/// is only populated on request for that reason.
struct Report {
  std::string command;
  InputDescriptor input;
  std::optional<CheckReport> check;
  std::optional<BoundReport> bounds;
  std::optional<OracleReport> oracle;
  std::optional<double> sandwich_margin;
  std::optional<HypergraphProfile> profile;
  std::optional<double> timing_ms;
};

/// Key-sorted, 2-space-indented JSON; indices rendered 1-based.
std::string to_json(const Report& r);

/// Line-oriented human rendering of the same data.
std::string to_text(const Report& r);

}  // namespace specbound
