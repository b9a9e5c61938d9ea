#pragma once

#include <optional>
#include <type_traits>
#include <vector>

#include "rackkit/sparse.hpp"

namespace rackkit {

using QVec = SparseVec<Rational>;
using QMap = LinMap<Rational>;

/// Row-reduced echelon form of a list of row vectors. Pivots are the
/// leading (lowest) indices; each pivot row has a 1 in its pivot column and
/// zeros in every other pivot column.
struct Rref {
  std::vector<QVec> rows;            // one per pivot, sorted by pivot
  std::vector<std::size_t> pivots;   // strictly increasing
  std::size_t rank() const { return pivots.size(); }
};

Rref rref_rows(std::vector<QVec> rows, std::size_t dim);

/// RREF of the matrix m (rows of m are reduced).
Rref rref(const QMap& m);

/// Dual numbers are not a field: row reduction over them is refused.
template <class K>
Rref rref(const LinMap<K>&) {
  static_assert(!std::is_same_v<K, Rational>);
  throw PreconditionError("row reduction requires field scalars; dual numbers are not a field");
}

std::size_t rank(const QMap& m);

/// Finite-dimensional subspace of k^dim, stored as an RREF basis.
class Span {
 public:
  explicit Span(std::size_t ambient = 0) : ambient_(ambient) {}
  Span(std::size_t ambient, std::vector<QVec> generators);

  static Span whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rank(); }
  const std::vector<QVec>& basis() const { return basis_.rows; }
  const std::vector<std::size_t>& pivots() const { return basis_.pivots; }

  /// v minus its component along the span, in the canonical complement
  /// spanned by non-pivot coordinates.
  QVec reduce(const QVec& v) const;
  bool contains(const QVec& v) const;
  bool contains(const Span& other) const;

  friend bool operator==(const Span& a, const Span& b) {
    return a.ambient_ == b.ambient_ && a.basis_.rows == b.basis_.rows;
  }

 private:
  void check_ambient(std::size_t d) const;

  std::size_t ambient_;
  Rref basis_;
};

Span span_sum(const Span& a, const Span& b);
Span span_intersection(const Span& a, const Span& b);
Span kernel(const QMap& m);
Span image(const QMap& m);

/// Some x with m·x = rhs, or nullopt if rhs is outside the image.
std::optional<QVec> solve(const QMap& m, const QVec& rhs);

}  // namespace rackkit
