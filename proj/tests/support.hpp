#pragma once

#include <random>

#include "rackkit/linalg.hpp"

namespace rackkit::testing {

inline Rational random_rational(std::mt19937& rng, int bound = 7) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return Rational(num(rng), den(rng));
}

/// Random matrix with roughly `density` fraction of nonzero entries.
inline QMap random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, double density = 0.5) {
  std::bernoulli_distribution keep(density);
  QMap m(rows, cols);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) {
      if (keep(rng)) m.add(i, j, random_rational(rng));
    }
  }
  return m;
}

inline QVec random_vector(std::mt19937& rng, std::size_t dim, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  QVec v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (keep(rng)) v.add(i, random_rational(rng));
  }
  return v;
}

}  // namespace rackkit::testing

namespace rackkit::testing {

/// Dense Gaussian elimination over Q, independent of the sparse RREF path.
inline std::size_t oracle_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col].is_zero()) continue;
      const Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

/// Columns of m as dense rows.
inline std::vector<std::vector<Rational>> dense_columns(const QMap& m) {
  std::vector<std::vector<Rational>> out(m.cols(), std::vector<Rational>(m.rows()));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& [i, c] : m.column(j)) out[j][i] = c;
  }
  return out;
}

/// Rank by growing an independent set one column at a time.
inline std::size_t incremental_span_rank(const QMap& m) {
  std::vector<std::vector<Rational>> kept;
  for (auto& col : dense_columns(m)) {
    kept.push_back(col);
    if (oracle_rank(kept) < kept.size()) kept.pop_back();
  }
  return kept.size();
}

}  // namespace rackkit::testing
