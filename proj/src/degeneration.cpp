#include "hstab/degeneration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hstab {

namespace {

/// Advances an ascending k-subset of {0..n-1}; false when exhausted.
bool next_subset(std::vector<int>& subset, int n) {
  int k = static_cast<int>(subset.size());
  int i = k - 1;
  while (i >= 0 && subset[i] == n - k + i) --i;
  if (i < 0) return false;
  ++subset[i];
  for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  return true;
}

Matrix submatrix(const Matrix& m, const std::vector<int>& cols) {
  int k = static_cast<int>(cols.size());
  Matrix sub(k, k);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) sub.at(r, c) = m.at(r, cols[c]);
  return sub;
}

/// Scales the map so its first (lex-least) nonzero entry is 1 and drops zeros.
PluckerVector normalized(int k, std::map<std::vector<int>, Rational> raw) {
  for (auto it = raw.begin(); it != raw.end();) {
    if (it->second.is_zero())
      it = raw.erase(it);
    else
      ++it;
  }
  if (raw.empty()) throw std::invalid_argument("zero Plücker vector");
  Rational lead = raw.begin()->second;
  for (auto& [subset, value] : raw) value /= lead;
  return PluckerVector{k, std::move(raw)};
}

long subset_weight(const std::vector<int>& subset, const WeightVector& w) {
  const auto& basis = Ambient::get().basis();
  long total = 0;
  for (int col : subset) total += w.weight_of(basis[col]);
  return total;
}

/// Weight of a univariate monomial t^e, i.e. its exponent.
int valuation(const Poly& p) {
  int best = -1;
  for (const auto& [mono, coeff] : p.terms()) {
    (void)coeff;
    if (best < 0 || mono.exps[0] < best) best = mono.exps[0];
  }
  return best;
}

Poly leibniz_poly_det(const PathMatrix& family, const std::vector<int>& cols) {
  int k = static_cast<int>(cols.size());
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Poly total(std::vector<std::string>{"t"});
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    Poly prod = Poly::constant({"t"}, Rational(1));
    for (int i = 0; i < k; ++i) prod = prod * family[i][cols[perm[i]]];
    total = inversions % 2 == 0 ? total + prod : total - prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

Rational PluckerVector::at(const std::vector<int>& subset) const {
  auto it = coords.find(subset);
  return it == coords.end() ? Rational(0) : it->second;
}

bool PluckerVector::operator==(const PluckerVector& other) const {
  return k == other.k && coords == other.coords;
}

bool PluckerVector::operator!=(const PluckerVector& other) const {
  return !(*this == other);
}

PluckerVector plucker(const QuadricSystem& s) {
  const Matrix& m = s.coefficients();
  int k = s.dimension();
  int n = m.cols();
  std::map<std::vector<int>, Rational> raw;
  std::vector<int> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  do {
    Rational value = det(submatrix(m, cols));
    if (!value.is_zero()) raw.emplace(cols, std::move(value));
  } while (next_subset(cols, n));
  return normalized(k, std::move(raw));
}

QuadricSystem limit_max(const QuadricSystem& s, const OnePS& rho) {
  QuadricSystem framed = in_frame(s, rho);
  const WeightVector& w = rho.weights;
  const auto& basis = Ambient::get().basis();
  int n = static_cast<int>(basis.size());

  // Columns in weight-descending order, ties broken by the global order.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return w.weight_of(basis[a]) > w.weight_of(basis[b]);
  });

  const Matrix& m = framed.coefficients();
  int k = framed.dimension();
  Matrix permuted(k, n);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) permuted.at(r, c) = m.at(r, order[c]);
  RrefResult adapted = rref(permuted);

  std::vector<Form> tops;
  for (int r = 0; r < k; ++r) {
    std::vector<Rational> row(n);
    for (int c = 0; c < n; ++c) row[order[c]] = adapted.echelon.at(r, c);
    Form generator = Ambient::get().form_of_row(row);
    auto parts = graded_parts(generator, w);
    tops.push_back(parts.rbegin()->second);
  }
  QuadricSystem limit(tops);
  if (limit.dimension() != k)
    throw std::logic_error("limit lost dimension");
  return limit;
}

HPoint limit_max(const HPoint& h, const OnePS& rho) {
  QuadricSystem system = limit_max(h.system, rho);
  ProjectivePoint p = in_frame(h.point, rho);
  long best = 0;
  bool seen = false;
  for (int i = 0; i < 5; ++i) {
    if (p.coords[i].is_zero()) continue;
    if (!seen || rho.weights.w[i] > best) best = rho.weights.w[i];
    seen = true;
  }
  std::vector<Rational> kept(5);
  for (int i = 0; i < 5; ++i)
    if (!p.coords[i].is_zero() && rho.weights.w[i] == best) kept[i] = p.coords[i];
  return HPoint{system, ProjectivePoint::of(kept)};
}

PluckerVector plucker_limit(const QuadricSystem& s, const OnePS& rho) {
  PluckerVector full = plucker(in_frame(s, rho));
  long best = 0;
  bool seen = false;
  for (const auto& [subset, value] : full.coords) {
    (void)value;
    long weight = subset_weight(subset, rho.weights);
    if (!seen || weight > best) best = weight;
    seen = true;
  }
  std::map<std::vector<int>, Rational> kept;
  for (const auto& [subset, value] : full.coords)
    if (subset_weight(subset, rho.weights) == best) kept.emplace(subset, value);
  return normalized(full.k, std::move(kept));
}

bool is_fixed(const QuadricSystem& s, const OnePS& rho) {
  QuadricSystem framed = in_frame(s, rho);
  return limit_max(s, rho) == framed && limit_max(s, rho.inverse()) == framed;
}

PathMatrix path_family(const std::vector<std::string>& generators) {
  if (generators.empty()) throw std::invalid_argument("empty path family");
  std::vector<std::string> vars = Ambient::get().vars();
  vars.push_back("t");
  PathMatrix family;
  for (const std::string& text : generators) {
    Poly p = Poly::parse(text, vars);
    std::vector<Poly> row(Ambient::get().basis_size(),
                          Poly(std::vector<std::string>{"t"}));
    for (const auto& [mono, coeff] : p.terms()) {
      Monomial zpart{std::vector<int>(mono.exps.begin(), mono.exps.begin() + 5)};
      if (zpart.degree() != 2)
        throw std::invalid_argument(
            "path generator term is not quadratic in z0..z4");
      Monomial tpart{std::vector<int>{mono.exps[5]}};
      row[Ambient::get().index_of(zpart)].add_term(tpart, coeff);
    }
    family.push_back(std::move(row));
  }
  return family;
}

QuadricSystem path_limit(const PathMatrix& family) {
  int k = static_cast<int>(family.size());
  int n = Ambient::get().basis_size();
  if (k < 1 || k > 5)
    throw std::invalid_argument("path family must have 1 to 5 rows");
  for (const auto& row : family)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("path family rows must have 15 columns");

  std::map<std::vector<int>, Poly> minors;
  int min_val = -1;
  std::vector<int> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  do {
    Poly d = leibniz_poly_det(family, cols);
    if (d.is_zero()) continue;
    int v = valuation(d);
    if (min_val < 0 || v < min_val) min_val = v;
    minors.emplace(cols, std::move(d));
  } while (next_subset(cols, n));
  if (min_val < 0)
    throw std::invalid_argument("family drops rank identically: zero Plücker vector");

  std::map<std::vector<int>, Rational> limit;
  Monomial lowest{std::vector<int>{min_val}};
  for (const auto& [subset, poly] : minors) {
    Rational value = poly.coeff(lowest);
    if (!value.is_zero()) limit.emplace(subset, std::move(value));
  }

  // Reconstruct the k-plane from a chart with nonzero coordinate: a vector v
  // lies in the plane iff contracting v against the limit Plücker vector
  // kills every (k+1)-subset extending the chart subset.
  const std::vector<int>& chart = limit.begin()->first;
  std::vector<bool> in_chart(n, false);
  for (int c : chart) in_chart[c] = true;
  Matrix equations(n - k, n);
  int row = 0;
  for (int j = 0; j < n; ++j) {
    if (in_chart[j]) continue;
    std::vector<int> extended = chart;
    extended.push_back(j);
    std::sort(extended.begin(), extended.end());
    for (int pos = 0; pos < k + 1; ++pos) {
      std::vector<int> rest;
      for (int q = 0; q < k + 1; ++q)
        if (q != pos) rest.push_back(extended[q]);
      auto it = limit.find(rest);
      if (it == limit.end()) continue;
      Rational sign = pos % 2 == 0 ? Rational(1) : Rational(-1);
      equations.at(row, extended[pos]) += sign * it->second;
    }
    ++row;
  }

  auto basis_vectors = kernel_basis(equations);
  if (static_cast<int>(basis_vectors.size()) != k)
    throw std::logic_error("Plücker reconstruction produced wrong dimension");
  Matrix rows(k, n);
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < n; ++c) rows.at(r, c) = basis_vectors[r][c];
  return QuadricSystem::from_rows(rows);
}

}  // namespace hstab
