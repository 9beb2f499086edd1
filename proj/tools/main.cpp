// specbound: two-sided spectral-radius bounds for nonnegative tensors and
// uniform hypergraphs, with a power-iteration oracle to check them.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "parse_util.hpp"
#include "specbound/bounds.hpp"
#include "specbound/errors.hpp"
#include "specbound/hypergraph.hpp"
#include "specbound/irreducibility.hpp"
#include "specbound/report.hpp"
#include "specbound/spectral.hpp"
#include "specbound/tensor.hpp"

namespace {

constexpr const char* kVersion = "specbound 1.0.0";

using namespace specbound;

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// One value per whitespace-separated token, '#' comments allowed; exactly n
// values required.
std::vector<double> read_vector_file(const std::string& path, int n, const char* what) {
  const std::string text = read_file(path);
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<double> out;
  while (std::getline(in, line)) {
    ++line_no;
    for (const auto& tok : detail::tokenize(line))
      out.push_back(detail::parse_value(tok, line_no));
  }
  if (out.size() != static_cast<std::size_t>(n))
    throw InputError(std::string(what) + " file " + path + " holds " +
                     std::to_string(out.size()) + " values, expected " + std::to_string(n));
  return out;
}

InputDescriptor tensor_descriptor(const std::string& file, const SparseTensor& t) {
  InputDescriptor in;
  in.file = file;
  in.kind = "tensor";
  in.order = t.order();
  in.dim = t.dim();
  in.count = static_cast<std::int64_t>(t.entry_count());
  return in;
}

InputDescriptor hypergraph_descriptor(const std::string& file, const Hypergraph& h) {
  InputDescriptor in;
  in.file = file;
  in.kind = "hypergraph";
  in.order = h.k;
  in.dim = h.n;
  in.count = static_cast<std::int64_t>(h.edges.size());
  return in;
}

OracleReport oracle_report(const PerronEstimate& est) {
  OracleReport o;
  o.rho = est.rho;
  o.residual = est.residual;
  o.iterations = est.iterations;
  o.bracket = est.bracket;
  return o;
}

// First non-comment token decides the input kind for `check`.
std::string sniff_kind(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::tokenize(line);
    if (tokens.empty())
      continue;
    if (tokens[0] == "tensor" || tokens[0] == "hypergraph")
      return tokens[0];
    throw InputError("line " + std::to_string(line_no) +
                     ": unrecognized header '" + tokens[0] +
                     "', expected 'tensor' or 'hypergraph'");
  }
  throw InputError("empty input, expected a 'tensor' or 'hypergraph' header");
}

Report run_check(const std::string& file) {
  const std::string text = read_file(file);
  Report r;
  r.command = "check";
  CheckReport c;
  if (sniff_kind(text) == "tensor") {
    const SparseTensor t = parse_tensor(text);
    r.input = tensor_descriptor(file, t);
    c.weakly_irreducible = is_weakly_irreducible(t);
    c.zero_diagonal = t.zero_diagonal();
  } else {
    const Hypergraph h = parse_hypergraph(text);
    r.input = hypergraph_descriptor(file, h);
    c.connected = is_connected(h);
  }
  r.check = c;
  return r;
}

Report run_rho(const std::string& file, const IterationConfig& cfg) {
  const SparseTensor t = parse_tensor(read_file(file));
  Report r;
  r.command = "rho";
  r.input = tensor_descriptor(file, t);
  r.oracle = oracle_report(perron(t, cfg));
  return r;
}

DiagonalShift make_shifts(const std::string& choice, int n) {
  if (choice == "none")
    return DiagonalShift::zeros(n);
  if (choice.rfind("file:", 0) == 0)
    return DiagonalShift(read_vector_file(choice.substr(5), n, "shift"));
  throw InputError("--shifts expects 'none' or 'file:<path>', got '" + choice + "'");
}

Report run_bounds(const std::string& file, const std::string& weights,
                  const std::string& shifts, bool pairs, bool oracle) {
  const SparseTensor a = parse_tensor(read_file(file));
  const DiagonalShift t = make_shifts(shifts, a.dim());

  Report r;
  r.command = "bounds";
  r.input = tensor_descriptor(file, a);
  if (weights == "rowsum") {
    r.bounds = rowsum_weighted_bounds(a, t, pairs);
  } else if (weights == "unit") {
    r.bounds = general_bounds(a, t, WeightVector::ones(a.dim()), pairs);
  } else if (weights.rfind("file:", 0) == 0) {
    WeightVector w(read_vector_file(weights.substr(5), a.dim(), "weight"));
    r.bounds = general_bounds(a, t, w, pairs);
  } else {
    throw InputError("--weights expects 'rowsum', 'unit' or 'file:<path>', got '" +
                     weights + "'");
  }
  if (oracle) {
    const PerronEstimate est = perron(add_diagonal(a, t));
    r.oracle = oracle_report(est);
    r.sandwich_margin = std::min(est.rho - r.bounds->lower, r.bounds->upper - est.rho);
  }
  return r;
}

WeightVector make_hg_weights(const std::string& choice, const Hypergraph& h) {
  if (choice == "degree")
    return WeightVector(degrees(h));
  if (choice == "unit")
    return WeightVector::ones(h.n);
  if (choice.rfind("file:", 0) == 0)
    return WeightVector(read_vector_file(choice.substr(5), h.n, "weight"));
  throw InputError("--weights expects 'degree', 'unit' or 'file:<path>', got '" + choice + "'");
}

Report run_hg(const std::string& file, const std::string& op,
              const std::string& weights, bool oracle, std::size_t cap) {
  const Hypergraph h = parse_hypergraph(read_file(file));
  const bool qlap = op == "qlap";
  if (!qlap && op != "adjacency")
    throw InputError("--operator expects 'adjacency' or 'qlap', got '" + op + "'");

  Report r;
  r.command = "hg";
  r.input = hypergraph_descriptor(file, h);
  const WeightVector b = make_hg_weights(weights, h);

  if (h.k >= 3) {
    r.bounds = qlap ? qlaplacian_bounds(h, b) : adjacency_bounds(h, b);
  } else {
    // k = 2: the closed forms assume k >= 3, so route through the
    // general tensor machinery on the (matrix) adjacency tensor.
    const SparseTensor a = adjacency_tensor(h, cap);
    const DiagonalShift t = qlap ? DiagonalShift(degrees(h)) : DiagonalShift::zeros(h.n);
    r.bounds = general_bounds(a, t, b);
  }
  r.profile = profile(h, b);

  if (oracle) {
    const SparseTensor target =
        qlap ? signless_laplacian_tensor(h, cap) : adjacency_tensor(h, cap);
    const PerronEstimate est = perron(target);
    r.oracle = oracle_report(est);
    r.sandwich_margin = std::min(est.rho - r.bounds->lower, r.bounds->upper - est.rho);
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-sided spectral-radius bounds for nonnegative tensors and "
               "k-uniform hypergraphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "text"}));
  bool timing = false;
  app.add_flag("--timing", timing, "append wall-clock milliseconds to the report");
  std::size_t cap = kDefaultTensorCap;
  app.add_option("--cap", cap, "stored-entry cap for materialized hypergraph tensors");

  auto* check = app.add_subcommand("check", "parse an input and report its structure");
  check->fallthrough();
  std::string check_file;
  check->add_option("file", check_file, "tensor or hypergraph file ('-' for stdin)")
      ->required();

  auto* rho = app.add_subcommand("rho", "spectral radius by shifted power iteration");
  rho->fallthrough();
  std::string rho_file;
  rho->add_option("file", rho_file, "tensor file ('-' for stdin)")->required();
  IterationConfig cfg;
  rho->add_option("--tol", cfg.tol, "relative bracket tolerance");
  rho->add_option("--max-iter", cfg.max_iter, "iteration limit");
  rho->add_option("--shift", cfg.shift, "additive diagonal shift");

  auto* bounds = app.add_subcommand("bounds", "two-sided bounds from the pair formula");
  bounds->fallthrough();
  std::string bounds_file;
  bounds->add_option("file", bounds_file, "tensor file ('-' for stdin)")->required();
  std::string weights = "rowsum";
  bounds->add_option("--weights", weights, "rowsum | unit | file:<path>");
  std::string shifts = "none";
  bounds->add_option("--shifts", shifts, "none | file:<path>");
  bool pairs = false;
  bounds->add_flag("--pairs", pairs, "emit the full pair table");
  bool bounds_oracle = false;
  bounds->add_flag("--oracle", bounds_oracle, "also run the power iteration and report the sandwich margin");

  auto* hg = app.add_subcommand("hg", "closed-form hypergraph bounds");
  hg->fallthrough();
  std::string hg_file;
  hg->add_option("file", hg_file, "hypergraph file ('-' for stdin)")->required();
  std::string op = "adjacency";
  hg->add_option("--operator", op, "adjacency | qlap");
  std::string hg_weights = "degree";
  hg->add_option("--weights", hg_weights, "degree | unit | file:<path>");
  bool hg_oracle = false;
  hg->add_flag("--oracle", hg_oracle, "also run the power iteration on the materialized tensor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Report r;
    if (check->parsed())
      r = run_check(check_file);
    else if (rho->parsed())
      r = run_rho(rho_file, cfg);
    else if (bounds->parsed())
      r = run_bounds(bounds_file, weights, shifts, pairs, bounds_oracle);
    else
      r = run_hg(hg_file, op, hg_weights, hg_oracle, cap);
    if (timing) {
      const auto stop = std::chrono::steady_clock::now();
      r.timing_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    }
    std::cout << (format == "json" ? to_json(r) : to_text(r));
    return 0;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << " (bracket [" << format_double(e.lower_estimate)
              << ", " << format_double(e.upper_estimate) << "])\n";
    return 4;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
