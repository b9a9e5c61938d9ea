#include "rackkit/linalg.hpp"

#include <algorithm>

namespace rackkit {

namespace {

// Eliminates the leading entry of v against existing pivot rows until the
// leading index is not a pivot.
void reduce_leading(QVec& v, const std::map<std::size_t, QVec>& pivot_rows) {
  while (!v.is_zero()) {
    auto it = pivot_rows.find(v.leading());
    if (it == pivot_rows.end()) return;
    v.axpy(-v.get(it->first), it->second);
  }
}

}  // namespace

Rref rref_rows(std::vector<QVec> rows, std::size_t dim) {
  std::map<std::size_t, QVec> pivot_rows;
  for (auto& v : rows) {
    if (v.dim() != dim) throw Error("rref: row dimension mismatch");
    reduce_leading(v, pivot_rows);
    if (v.is_zero()) continue;
    const std::size_t lead = v.leading();
    v *= Rational(1) / v.get(lead);
    pivot_rows.emplace(lead, std::move(v));
  }
  // Back substitution, highest pivot first.
  for (auto it = pivot_rows.rbegin(); it != pivot_rows.rend(); ++it) {
    const std::size_t col = it->first;
    for (auto& [c, row] : pivot_rows) {
      if (c >= col) break;
      const Rational coeff = row.get(col);
      if (!coeff.is_zero()) row.axpy(-coeff, it->second);
    }
  }
  Rref out;
  out.rows.reserve(pivot_rows.size());
  for (auto& [c, row] : pivot_rows) {
    out.pivots.push_back(c);
    out.rows.push_back(std::move(row));
  }
  return out;
}

Rref rref(const QMap& m) {
  const QMap t = m.transpose();
  std::vector<QVec> rows;
  rows.reserve(t.cols());
  for (std::size_t i = 0; i < t.cols(); ++i) rows.push_back(t.column(i));
  return rref_rows(std::move(rows), m.cols());
}

std::size_t rank(const QMap& m) {
  std::vector<QVec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return rref_rows(std::move(cols), m.rows()).rank();
}

Span::Span(std::size_t ambient, std::vector<QVec> generators)
    : ambient_(ambient), basis_(rref_rows(std::move(generators), ambient)) {}

Span Span::whole(std::size_t ambient) {
  std::vector<QVec> gens;
  for (std::size_t i = 0; i < ambient; ++i) gens.push_back(QVec::unit(ambient, i));
  return Span(ambient, std::move(gens));
}

void Span::check_ambient(std::size_t d) const {
  if (d != ambient_) {
    throw Error("ambient dimension mismatch: " + std::to_string(ambient_) + " vs " + std::to_string(d));
  }
}

QVec Span::reduce(const QVec& v) const {
  check_ambient(v.dim());
  QVec r = v;
  for (std::size_t k = 0; k < basis_.pivots.size(); ++k) {
    const Rational c = v.get(basis_.pivots[k]);
    if (!c.is_zero()) r.axpy(-c, basis_.rows[k]);
  }
  return r;
}

bool Span::contains(const QVec& v) const { return reduce(v).is_zero(); }

bool Span::contains(const Span& other) const {
  check_ambient(other.ambient_);
  return std::all_of(other.basis().begin(), other.basis().end(),
                     [this](const QVec& v) { return contains(v); });
}

Span span_sum(const Span& a, const Span& b) {
  if (a.ambient() != b.ambient()) throw Error("span_sum: ambient dimension mismatch");
  std::vector<QVec> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Span(a.ambient(), std::move(gens));
}

Span span_intersection(const Span& a, const Span& b) {
  if (a.ambient() != b.ambient()) throw Error("span_intersection: ambient dimension mismatch");
  const std::size_t p = a.dim();
  const std::size_t q = b.dim();
  // (alpha, beta) -> sum alpha_i a_i - sum beta_j b_j
  QMap m(a.ambient(), p + q);
  for (std::size_t i = 0; i < p; ++i) m.set_column(i, a.basis()[i]);
  for (std::size_t j = 0; j < q; ++j) m.set_column(p + j, -b.basis()[j]);
  const Span ker = kernel(m);
  std::vector<QVec> gens;
  for (const auto& k : ker.basis()) {
    QVec v(a.ambient());
    for (const auto& [idx, c] : k) {
      if (idx < p) v.axpy(c, a.basis()[idx]);
    }
    gens.push_back(std::move(v));
  }
  return Span(a.ambient(), std::move(gens));
}

Span kernel(const QMap& m) {
  const Rref r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<QVec> gens;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    QVec v = QVec::unit(n, f);
    for (std::size_t k = 0; k < r.pivots.size(); ++k) {
      const Rational c = r.rows[k].get(f);
      if (!c.is_zero()) v.add(r.pivots[k], -c);
    }
    gens.push_back(std::move(v));
  }
  return Span(n, std::move(gens));
}

Span image(const QMap& m) {
  std::vector<QVec> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return Span(m.rows(), std::move(cols));
}

std::optional<QVec> solve(const QMap& m, const QVec& rhs) {
  if (rhs.dim() != m.rows()) throw Error("solve: right-hand side dimension mismatch");
  const std::size_t n = m.cols();
  QMap aug(m.rows(), n + 1);
  for (std::size_t j = 0; j < n; ++j) aug.set_column(j, m.column(j));
  aug.set_column(n, rhs);
  const Rref r = rref(aug);
  QVec x(n);
  for (std::size_t k = 0; k < r.pivots.size(); ++k) {
    if (r.pivots[k] == n) return std::nullopt;
    x.add(r.pivots[k], r.rows[k].get(n));
  }
  return x;
}

}  // namespace rackkit
