#include "specbound/report.hpp"

#include <array>
#include <charconv>
#include <sstream>

namespace specbound {

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), ptr);
}

namespace {

void write_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char hex[8];
          std::snprintf(hex, sizeof hex, "\\u%04x", c);
          out += hex;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

} // namespace

void Json::write(std::string& out, int indent, int depth) const {
  const std::string pad(static_cast<std::size_t>(indent) * (depth + 1), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent) * depth, ' ');
  switch (v_.index()) {
    case 0: out += "null"; break;
    case 1: out += std::get<bool>(v_) ? "true" : "false"; break;
    case 2: out += std::to_string(std::get<std::int64_t>(v_)); break;
    case 3: out += format_double(std::get<double>(v_)); break;
    case 4: write_escaped(out, std::get<std::string>(v_)); break;
    case 5: {
      const auto& obj = std::get<Object>(v_);
      if (obj.empty()) {
        out += "{}";
        break;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, val] : obj) {
        if (!first) out += ",\n";
        first = false;
        out += pad;
        write_escaped(out, key);
        out += ": ";
        val.write(out, indent, depth + 1);
      }
      out += '\n';
      out += close_pad;
      out += '}';
      break;
    }
    case 6: {
      const auto& arr = std::get<Array>(v_);
      if (arr.empty()) {
        out += "[]";
        break;
      }
      out += '[';
      bool first = true;
      for (const auto& val : arr) {
        if (!first) out += ", ";
        first = false;
        val.write(out, indent, depth);
      }
      out += ']';
      break;
    }
  }
}

std::string Json::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  out += '\n';
  return out;
}

namespace {

Json pair_json(const IndexPair& p) {
  Json a = Json::array();
  a.push_back(p.i + 1);
  a.push_back(p.j + 1);
  return a;
}

Json vector_json(std::span<const double> v) {
  Json a = Json::array();
  for (double x : v)
    a.push_back(x);
  return a;
}

Json index_list_json(const std::vector<Index>& v) {
  Json a = Json::array();
  for (Index i : v)
    a.push_back(i + 1);
  return a;
}

Json equality_json(const EqualityWitness& w) {
  Json o = Json::object();
  if (w.kind == EqualityWitness::Kind::uniform) {
    o["kind"] = "uniform";
    o["value"] = w.value;
  } else {
    o["kind"] = "bipartite";
    o["value"] = w.value;
    o["ell"] = w.bipartition->ell;
    o["u"] = index_list_json(w.bipartition->u);
    o["w"] = index_list_json(w.bipartition->w);
  }
  return o;
}

Json bounds_json(const BoundReport& b) {
  Json o = Json::object();
  o["method"] = std::string(method_label(b.method));
  o["lower"] = b.lower;
  o["upper"] = b.upper;
  if (b.argmin)
    o["argmin"] = pair_json(*b.argmin);
  if (b.argmax)
    o["argmax"] = pair_json(*b.argmax);
  if (b.pair_values) {
    Json rows = Json::array();
    for (const auto& pv : *b.pair_values) {
      Json row = Json::array();
      row.push_back(pv.i + 1);
      row.push_back(pv.j + 1);
      row.push_back(pv.value);
      rows.push_back(std::move(row));
    }
    o["pairs"] = std::move(rows);
  }
  if (b.equality)
    o["equality"] = equality_json(*b.equality);
  return o;
}

} // namespace

std::string to_json(const Report& r) {
  Json root = Json::object();
  root["command"] = r.command;

  Json in = Json::object();
  in["file"] = r.input.file;
  in["kind"] = r.input.kind;
  in["n"] = r.input.dim;
  if (r.input.kind == "hypergraph") {
    in["k"] = r.input.order;
    in["edges"] = r.input.count;
  } else {
    in["m"] = r.input.order;
    in["entries"] = r.input.count;
  }
  root["input"] = std::move(in);

  if (r.check) {
    Json c = Json::object();
    if (r.check->weakly_irreducible)
      c["weakly_irreducible"] = *r.check->weakly_irreducible;
    if (r.check->zero_diagonal)
      c["zero_diagonal"] = *r.check->zero_diagonal;
    if (r.check->connected)
      c["connected"] = *r.check->connected;
    root["check"] = std::move(c);
  }
  if (r.bounds)
    root["bounds"] = bounds_json(*r.bounds);
  if (r.oracle) {
    Json o = Json::object();
    o["rho"] = r.oracle->rho;
    o["residual"] = r.oracle->residual;
    o["iterations"] = r.oracle->iterations;
    o["bracket"] = r.oracle->bracket;
    root["oracle"] = std::move(o);
  }
  if (r.sandwich_margin)
    root["sandwich_margin"] = *r.sandwich_margin;
  if (r.profile) {
    Json p = Json::object();
    p["d"] = vector_json(r.profile->d);
    p["b"] = vector_json(r.profile->b);
    p["b_prime"] = vector_json(r.profile->b_prime);
    if (!r.profile->m_avg.empty())
      p["m_avg"] = vector_json(r.profile->m_avg);
    root["profile"] = std::move(p);
  }
  if (r.timing_ms)
    root["timing_ms"] = *r.timing_ms;

  return root.dump();
}

namespace {

void text_vector(std::ostringstream& out, const char* label, std::span<const double> v) {
  out << label << ':';
  for (double x : v)
    out << ' ' << format_double(x);
  out << '\n';
}

} // namespace

std::string to_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << '\n';
  out << "input: " << r.input.file << " (" << r.input.kind;
  if (r.input.kind == "hypergraph")
    out << ", k=" << r.input.order << ", n=" << r.input.dim << ", edges=" << r.input.count;
  else
    out << ", m=" << r.input.order << ", n=" << r.input.dim << ", entries=" << r.input.count;
  out << ")\n";

  if (r.check) {
    if (r.check->weakly_irreducible)
      out << "weakly_irreducible: " << (*r.check->weakly_irreducible ? "true" : "false") << '\n';
    if (r.check->zero_diagonal)
      out << "zero_diagonal: " << (*r.check->zero_diagonal ? "true" : "false") << '\n';
    if (r.check->connected)
      out << "connected: " << (*r.check->connected ? "true" : "false") << '\n';
  }
  if (r.profile) {
    text_vector(out, "d", r.profile->d);
    text_vector(out, "b", r.profile->b);
    text_vector(out, "b_prime", r.profile->b_prime);
    if (!r.profile->m_avg.empty())
      text_vector(out, "m_avg", r.profile->m_avg);
  }
  if (r.bounds) {
    const BoundReport& b = *r.bounds;
    out << "method: " << method_label(b.method) << '\n';
    out << "lower: " << format_double(b.lower) << '\n';
    out << "upper: " << format_double(b.upper) << '\n';
    if (b.argmin)
      out << "argmin: (" << b.argmin->i + 1 << ", " << b.argmin->j + 1 << ")\n";
    if (b.argmax)
      out << "argmax: (" << b.argmax->i + 1 << ", " << b.argmax->j + 1 << ")\n";
    if (b.pair_values)
      for (const auto& pv : *b.pair_values)
        out << "F(" << pv.i + 1 << ", " << pv.j + 1 << ") = " << format_double(pv.value) << '\n';
    if (b.equality) {
      if (b.equality->kind == EqualityWitness::Kind::uniform) {
        out << "equality: uniform, value " << format_double(b.equality->value) << '\n';
      } else {
        out << "equality: bipartite, value " << format_double(b.equality->value)
            << ", ell " << format_double(b.equality->bipartition->ell) << ", U {";
        for (std::size_t i = 0; i < b.equality->bipartition->u.size(); ++i)
          out << (i ? ", " : "") << b.equality->bipartition->u[i] + 1;
        out << "}, W {";
        for (std::size_t i = 0; i < b.equality->bipartition->w.size(); ++i)
          out << (i ? ", " : "") << b.equality->bipartition->w[i] + 1;
        out << "}\n";
      }
    } else {
      out << "equality: none\n";
    }
  }
  if (r.oracle) {
    out << "rho: " << format_double(r.oracle->rho) << '\n';
    out << "residual: " << format_double(r.oracle->residual) << '\n';
    out << "iterations: " << r.oracle->iterations << '\n';
    out << "bracket: " << format_double(r.oracle->bracket) << '\n';
  }
  if (r.sandwich_margin)
    out << "sandwich_margin: " << format_double(*r.sandwich_margin) << '\n';
  if (r.timing_ms)
    out << "timing_ms: " << format_double(*r.timing_ms) << '\n';
  return out.str();
}

}  // namespace specbound
