#include "specbound/tensor.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <sstream>

#include "parse_util.hpp"

namespace specbound {

WeightVector::WeightVector(std::vector<double> w) : w_(std::move(w)) {
  for (double v : w_)
    if (!(v > 0.0) || !std::isfinite(v))
      throw PreconditionError("weight vector components must be strictly positive and finite");
}

WeightVector WeightVector::ones(int n) {
  return WeightVector(std::vector<double>(static_cast<std::size_t>(n), 1.0));
}

DiagonalShift::DiagonalShift(std::vector<double> t) : t_(std::move(t)) {
  for (double v : t_)
    if (v < 0.0 || !std::isfinite(v))
      throw PreconditionError("diagonal shifts must be nonnegative and finite");
}

DiagonalShift DiagonalShift::zeros(int n) {
  return DiagonalShift(std::vector<double>(static_cast<std::size_t>(n), 0.0));
}

namespace {

bool tuple_less(std::span<const Index> a, std::span<const Index> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

SparseTensor::SparseTensor(int order, int dim, std::vector<Index> subscripts,
                           std::vector<double> values, bool symmetric)
    : order_(order), dim_(dim), subs_(std::move(subscripts)),
      values_(std::move(values)), symmetric_(symmetric) {
  if (order_ < 2)
    throw InputError("tensor order must be at least 2");
  if (dim_ < 1)
    throw InputError("tensor dimension must be at least 1");
  if (subs_.size() != values_.size() * static_cast<std::size_t>(order_))
    throw InputError("subscript array length does not match entry count");
  for (Index ix : subs_)
    if (ix < 0 || ix >= dim_)
      throw InputError("tensor subscript out of range");
  for (double v : values_)
    if (!(v > 0.0) || !std::isfinite(v))
      throw InputError("tensor entries must be strictly positive and finite");

  const std::size_t nnz = values_.size();
  std::vector<std::size_t> perm(nnz);
  std::iota(perm.begin(), perm.end(), 0);
  auto tup = [&](std::size_t e) {
    return std::span<const Index>(subs_).subspan(e * order_, order_);
  };
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return tuple_less(tup(a), tup(b)); });

  std::vector<Index> sorted_subs(subs_.size());
  std::vector<double> sorted_vals(nnz);
  for (std::size_t e = 0; e < nnz; ++e) {
    auto src = tup(perm[e]);
    std::copy(src.begin(), src.end(), sorted_subs.begin() + e * order_);
    sorted_vals[e] = values_[perm[e]];
  }
  subs_ = std::move(sorted_subs);
  values_ = std::move(sorted_vals);

  for (std::size_t e = 1; e < nnz; ++e)
    if (std::equal(tuple(e - 1).begin(), tuple(e - 1).end(), tuple(e).begin()))
      throw InputError("duplicate tensor entry tuple");
}

bool SparseTensor::zero_diagonal() const {
  for (std::size_t e = 0; e < entry_count(); ++e) {
    auto t = tuple(e);
    if (std::all_of(t.begin(), t.end(), [&](Index ix) { return ix == t[0]; }))
      return false;
  }
  return true;
}

std::vector<double> SparseTensor::apply(std::span<const double> x) const {
  if (x.size() != static_cast<std::size_t>(dim_))
    throw InputError("apply: vector length does not match tensor dimension");
  std::vector<double> out(x.size(), 0.0);
  for (std::size_t e = 0; e < entry_count(); ++e) {
    auto tup = tuple(e);
    double term = value(e);
    for (int p = 1; p < order_; ++p)
      term *= x[static_cast<std::size_t>(tup[p])];
    out[static_cast<std::size_t>(tup[0])] += term;
  }
  return out;
}

std::vector<double> power_vector(std::span<const double> x, int r) {
  assert(r >= 1);
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = int_pow(x[i], r);
  return out;
}

RowProfile row_profile(const SparseTensor &t, const WeightVector &weights) {
  if (weights.size() != static_cast<std::size_t>(t.dim()))
    throw InputError("row_profile: weight vector length does not match tensor dimension");
  const std::size_t n = weights.size();
  const int m = t.order();
  RowProfile profile;
  profile.row_sums.assign(n, 0.0);
  profile.weighted_sums.assign(n, 0.0);
  profile.neighbors.assign(n, {});
  for (std::size_t e = 0; e < t.entry_count(); ++e) {
    auto tup = t.tuple(e);
    const auto lead = static_cast<std::size_t>(tup[0]);
    double term = t.value(e);
    for (int p = 1; p < m; ++p)
      term *= weights[static_cast<std::size_t>(tup[p])];
    profile.row_sums[lead] += t.value(e);
    profile.weighted_sums[lead] += term;
    for (int p = 1; p < m; ++p)
      profile.neighbors[lead].push_back(tup[p]);
  }
  for (auto &nb : profile.neighbors) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return profile;
}

std::vector<std::vector<Index>> neighbor_sets(const SparseTensor &t) {
  std::vector<std::vector<Index>> nbs(static_cast<std::size_t>(t.dim()));
  const int m = t.order();
  for (std::size_t e = 0; e < t.entry_count(); ++e) {
    auto tup = t.tuple(e);
    for (int p = 1; p < m; ++p)
      nbs[static_cast<std::size_t>(tup[0])].push_back(tup[p]);
  }
  for (auto &nb : nbs) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return nbs;
}

SparseTensor add_diagonal(const SparseTensor &t, const DiagonalShift &shift) {
  if (shift.size() != static_cast<std::size_t>(t.dim()))
    throw InputError("add_diagonal: shift length does not match tensor dimension");
  if (!t.zero_diagonal())
    throw PreconditionError("add_diagonal: tensor already has diagonal entries");
  const int m = t.order();
  std::vector<Index> subs;
  std::vector<double> vals;
  subs.reserve(t.entry_count() * m + shift.size() * m);
  vals.reserve(t.entry_count() + shift.size());
  for (std::size_t e = 0; e < t.entry_count(); ++e) {
    auto tup = t.tuple(e);
    subs.insert(subs.end(), tup.begin(), tup.end());
    vals.push_back(t.value(e));
  }
  for (std::size_t i = 0; i < shift.size(); ++i) {
    if (shift[i] == 0.0)
      continue;
    subs.insert(subs.end(), static_cast<std::size_t>(m), static_cast<Index>(i));
    vals.push_back(shift[i]);
  }
  return SparseTensor(m, t.dim(), std::move(subs), std::move(vals), t.symmetric());
}

SparseTensor diagonal_similarity(const SparseTensor &t, const WeightVector &d) {
  if (d.size() != static_cast<std::size_t>(t.dim()))
    throw InputError("diagonal_similarity: weight length does not match tensor dimension");
  const int m = t.order();
  std::vector<Index> subs(t.entry_count() * static_cast<std::size_t>(m));
  std::vector<double> vals(t.entry_count());
  for (std::size_t e = 0; e < t.entry_count(); ++e) {
    auto tup = t.tuple(e);
    std::copy(tup.begin(), tup.end(), subs.begin() + e * m);
    double v = t.value(e);
    for (int p = 1; p < m; ++p)
      v *= d[static_cast<std::size_t>(tup[p])];
    vals[e] = v / int_pow(d[static_cast<std::size_t>(tup[0])], m - 1);
  }
  return SparseTensor(m, t.dim(), std::move(subs), std::move(vals));
}

SparseTensor parse_tensor(std::string_view text) {
  using detail::parse_fail;
  using detail::parse_int;
  using detail::parse_value;
  using detail::tokenize;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;

  int m = 0, n = 0;
  bool have_header = false;
  std::vector<Index> subs;
  std::vector<double> vals;

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = tokenize(line);
    if (tokens.empty())
      continue;
    if (!have_header) {
      if (tokens.size() != 3 || tokens[0] != "tensor")
        parse_fail(line_no, "expected header 'tensor <m> <n>'");
      long mm = parse_int(tokens[1], line_no);
      long nn = parse_int(tokens[2], line_no);
      if (mm < 2 || mm > 32)
        parse_fail(line_no, "tensor order must be in [2, 32]");
      if (nn < 1)
        parse_fail(line_no, "tensor dimension must be at least 1");
      m = static_cast<int>(mm);
      n = static_cast<int>(nn);
      have_header = true;
      continue;
    }
    if (tokens.size() != static_cast<std::size_t>(m) + 1)
      parse_fail(line_no, "expected " + std::to_string(m) + " indices and a value");
    for (int p = 0; p < m; ++p) {
      long ix = parse_int(tokens[static_cast<std::size_t>(p)], line_no);
      if (ix < 1 || ix > n)
        parse_fail(line_no, "index " + std::to_string(ix) + " out of range 1.." + std::to_string(n));
      subs.push_back(static_cast<Index>(ix - 1));
    }
    double v = parse_value(tokens[static_cast<std::size_t>(m)], line_no);
    if (!(v > 0.0))
      parse_fail(line_no, "entry values must be strictly positive");
    vals.push_back(v);
  }
  if (!have_header)
    throw InputError("missing 'tensor <m> <n>' header");

  // Duplicate detection in the constructor loses line numbers; do it here.
  {
    const std::size_t nnz = vals.size();
    std::vector<std::size_t> perm(nnz);
    std::iota(perm.begin(), perm.end(), 0);
    auto tup = [&](std::size_t e) {
      return std::span<const Index>(subs).subspan(e * static_cast<std::size_t>(m),
                                                  static_cast<std::size_t>(m));
    };
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t a, std::size_t b) { return tuple_less(tup(a), tup(b)); });
    for (std::size_t e = 1; e < nnz; ++e) {
      auto a = tup(perm[e - 1]), b = tup(perm[e]);
      if (std::equal(a.begin(), a.end(), b.begin()))
        throw InputError("duplicate entry tuple (entries " + std::to_string(perm[e - 1] + 1) +
                         " and " + std::to_string(perm[e] + 1) + " in file order)");
    }
  }

  return SparseTensor(m, n, std::move(subs), std::move(vals));
}

std::string format_tensor(const SparseTensor &t) {
  std::ostringstream out;
  out << "tensor " << t.order() << ' ' << t.dim() << '\n';
  out.precision(17);
  for (std::size_t e = 0; e < t.entry_count(); ++e) {
    for (Index ix : t.tuple(e))
      out << (ix + 1) << ' ';
    out << t.value(e) << '\n';
  }
  return out.str();
}

} // namespace specbound
