#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "rackkit/linalg.hpp"
#include "rackkit/sparse.hpp"

namespace rackkit {

/// Outcome of one identity check: the first failing basis tuple (as indices
/// and as a label string) when it does not hold.
struct AxiomResult {
  bool ok = true;
  std::vector<std::size_t> witness;
  std::string detail;

  static AxiomResult pass() { return {}; }
  static AxiomResult fail(std::vector<std::size_t> w, std::string d) {
    return {false, std::move(w), std::move(d)};
  }
};

std::string tuple_label(const std::vector<std::string>& labels, const std::vector<std::size_t>& idx);

/// Finite-dimensional coalgebra given by structure constants. Column k of
/// `comul` is Δ(e_k) in the basis e_i⊗e_j (index i*dim+j).
template <class K>
class Coalgebra {
 public:
  using Vec = SparseVec<K>;
  using Map = LinMap<K>;

  Coalgebra() = default;
  Coalgebra(std::vector<std::string> labels, Map comul, std::optional<Vec> counit,
            std::optional<std::size_t> unit)
      : labels_(std::move(labels)), comul_(std::move(comul)), counit_(std::move(counit)), unit_(unit) {
    const std::size_t d = labels_.size();
    if (comul_.cols() != d || comul_.rows() != d * d) throw Error("coproduct has wrong shape");
    if (counit_ && counit_->dim() != d) throw Error("counit has wrong length");
    if (unit_ && (*unit_ >= d || !counit_)) throw Error("unit requires an in-range index and a counit");
  }

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Map& comul() const { return comul_; }
  const std::optional<Vec>& counit() const { return counit_; }
  const std::optional<std::size_t>& unit() const { return unit_; }
  bool has_unit() const { return unit_.has_value(); }

  std::size_t index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw Error("unknown basis label '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  Vec basis(std::size_t i) const { return Vec::unit(dim(), i); }
  Vec one() const { return basis(require_unit()); }
  K eps(std::size_t i) const { return counit_ ? counit_->get(i) : K(0); }
  K eps(const Vec& v) const {
    K s(0);
    for (const auto& [i, c] : v) s += c * eps(i);
    return s;
  }
  Vec delta(const Vec& v) const { return comul_.apply(v); }

  AxiomResult check_coassociative() const {
    const Map id = Map::identity(dim());
    const Map left = kron(comul_, id).after(comul_);
    const Map right = kron(id, comul_).after(comul_);
    for (std::size_t k = 0; k < dim(); ++k) {
      if (!(left.column(k) == right.column(k))) {
        return AxiomResult::fail({k}, "(Δ⊗id)Δ ≠ (id⊗Δ)Δ at " + labels_[k]);
      }
    }
    return AxiomResult::pass();
  }

  AxiomResult check_counit() const {
    if (!counit_) return AxiomResult::fail({}, "no counit");
    for (std::size_t k = 0; k < dim(); ++k) {
      Vec left(dim()), right(dim());
      for (const auto& [idx, c] : comul_.column(k)) {
        const std::size_t i = idx / dim(), j = idx % dim();
        left.add(j, c * eps(i));
        right.add(i, c * eps(j));
      }
      if (!(left == basis(k)) || !(right == basis(k))) {
        return AxiomResult::fail({k}, "counit law fails at " + labels_[k]);
      }
    }
    return AxiomResult::pass();
  }

  /// Δ(1) = 1⊗1 and ε(1) = 1.
  AxiomResult check_unit() const {
    if (!unit_) return AxiomResult::fail({}, "no distinguished unit");
    const std::size_t u = *unit_;
    if (!(comul_.column(u) == kron(basis(u), basis(u))) || !(eps(u) == K(1))) {
      return AxiomResult::fail({u}, "unit " + labels_[u] + " is not group-like");
    }
    return AxiomResult::pass();
  }

  bool check_cocommutative() const {
    const std::size_t d = dim();
    for (std::size_t k = 0; k < d; ++k) {
      for (const auto& [idx, c] : comul_.column(k)) {
        const std::size_t i = idx / d, j = idx % d;
        if (!(comul_.column(k).get(j * d + i) == c)) return false;
      }
    }
    return true;
  }

  /// Δ^{(n)}: C → C^{⊗n}. n = 0 is the counit (target k), n = 1 the identity.
  Map iterated_coproduct(std::size_t n) const {
    if (n == 0) {
      if (!counit_) throw PreconditionError("0-fold coproduct needs a counit");
      Map m(1, dim());
      for (std::size_t i = 0; i < dim(); ++i) m.add(0, i, eps(i));
      return m;
    }
    checked_power(dim(), n);
    Map acc = Map::identity(dim());
    for (std::size_t k = 1; k < n; ++k) {
      // Split the first leg: (Δ ⊗ id^{⊗(k-1)}) ∘ Δ^{(k)}.
      const Map tail = Map::identity(checked_power(dim(), k - 1));
      acc = kron(comul_, tail).after(acc);
    }
    return acc;
  }

  /// Coproduct of the tensor-power coalgebra C^{⊗n}, with Sweedler legs
  /// grouped as (x1_(1),…,xn_(1)) ⊗ (x1_(2),…,xn_(2)).
  Map tensor_coproduct(std::size_t n) const {
    Map acc = Map::identity(1);
    for (std::size_t k = 0; k < n; ++k) acc = kron(acc, comul_);
    std::vector<std::size_t> perm(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
      perm[k] = 2 * k;
      perm[n + k] = 2 * k + 1;
    }
    return tensor_permutation<K>(dim(), perm).after(acc);
  }

  std::vector<std::size_t> group_like_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i) {
      if (is_group_like(basis(i))) out.push_back(i);
    }
    return out;
  }

  bool is_group_like(const Vec& v) const {
    return eps(v) == K(1) && delta(v) == kron(v, v);
  }

  bool is_primitive(const Vec& v) const {
    const Vec one_v = one();
    return delta(v) == kron(one_v, v) + kron(v, one_v);
  }

  std::size_t require_unit() const {
    if (!unit_) throw PreconditionError("coalgebra has no distinguished unit");
    return *unit_;
  }

 private:
  std::vector<std::string> labels_;
  Map comul_;
  std::optional<Vec> counit_;
  std::optional<std::size_t> unit_;
};

using FinCoalgebra = Coalgebra<Rational>;

/// Ĉ = k1 ⊕ C with Δ̂(x) = Δ(x) + 1⊗x + x⊗1, ε̂(1) = 1, ε̂|_C = 0. The
/// new unit is basis index 0.
template <class K>
Coalgebra<K> counitise(const Coalgebra<K>& c, std::string unit_label = "1") {
  const std::size_t n = c.dim();
  const std::size_t d = n + 1;
  while (std::find(c.labels().begin(), c.labels().end(), unit_label) != c.labels().end()) {
    unit_label += "'";
  }
  std::vector<std::string> labels{unit_label};
  labels.insert(labels.end(), c.labels().begin(), c.labels().end());
  LinMap<K> comul(d * d, d);
  comul.add(0, 0, K(1));
  for (std::size_t k = 0; k < n; ++k) {
    for (const auto& [idx, v] : c.comul().column(k)) {
      comul.add((idx / n + 1) * d + (idx % n + 1), k + 1, v);
    }
    comul.add(0 * d + (k + 1), k + 1, K(1));
    comul.add((k + 1) * d + 0, k + 1, K(1));
  }
  SparseVec<K> counit = SparseVec<K>::unit(d, 0);
  return Coalgebra<K>(std::move(labels), std::move(comul), std::move(counit), 0);
}

/// Č = ker ε with basis {e_i − ε(e_i)1 : i ≠ unit} (labels kept) and
/// Δ̌(c) = Δ(c) − 1⊗c − c⊗1. The result carries no counit.
template <class K>
Coalgebra<K> reduce(const Coalgebra<K>& c) {
  const std::size_t u = c.require_unit();
  const std::size_t d = c.dim();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < d; ++i) {
    if (i != u) keep.push_back(i);
  }
  const std::size_t m = keep.size();
  std::vector<std::size_t> pos(d, m);
  for (std::size_t a = 0; a < m; ++a) pos[keep[a]] = a;

  auto check_vec = [&](std::size_t i) {
    SparseVec<K> v = c.basis(i);
    v.add(u, -c.eps(i));
    return v;
  };
  std::vector<std::string> labels;
  LinMap<K> comul(m * m, m);
  for (std::size_t a = 0; a < m; ++a) {
    labels.push_back(c.labels()[keep[a]]);
    const SparseVec<K> v = check_vec(keep[a]);
    const SparseVec<K> one = c.one();
    const SparseVec<K> full = c.delta(v) - kron(one, v) - kron(v, one);
    // Coordinates in Č⊗Č: drop unit legs, then confirm the reconstruction.
    SparseVec<K> red(m * m);
    SparseVec<K> rebuilt(d * d);
    for (const auto& [idx, coef] : full) {
      const std::size_t i = idx / d, j = idx % d;
      if (i == u || j == u) continue;
      red.add(pos[i] * m + pos[j], coef);
      rebuilt.axpy(coef, kron(check_vec(i), check_vec(j)));
    }
    if (!(rebuilt == full)) {
      throw VerificationError("reduced coproduct of " + labels.back() + " leaves ker ε ⊗ ker ε");
    }
    comul.set_column(a, std::move(red));
  }
  return Coalgebra<K>(std::move(labels), std::move(comul), std::nullopt, std::nullopt);
}

/// Primitive elements {x : Δx = 1⊗x + x⊗1}, solved as a kernel.
Span primitives(const FinCoalgebra& c);

}  // namespace rackkit
