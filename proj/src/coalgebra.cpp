#include "rackkit/coalgebra.hpp"

namespace rackkit {

std::string tuple_label(const std::vector<std::string>& labels, const std::vector<std::size_t>& idx) {
  std::string s = "(";
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ",";
    s += idx[k] < labels.size() ? labels[idx[k]] : std::to_string(idx[k]);
  }
  return s + ")";
}

Span primitives(const FinCoalgebra& c) {
  const std::size_t u = c.require_unit();
  const std::size_t d = c.dim();
  const QMap m = QMap::from_basis(d * d, d, [&](std::size_t k) {
    const QVec v = c.basis(k);
    const QVec one = c.basis(u);
    return c.delta(v) - kron(one, v) - kron(v, one);
  });
  return kernel(m);
}

}  // namespace rackkit
