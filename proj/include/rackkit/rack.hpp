#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rackkit/coalgebra.hpp"

namespace rackkit {

/// Per-axiom verdicts of a rack bialgebra.
struct RackReport {
  AxiomResult coassociative;
  AxiomResult counit;
  AxiomResult unit_grouplike;
  AxiomResult selfdist;
  AxiomResult morphism;
  AxiomResult counit_mult;
  AxiomResult unit_right;
  AxiomResult unit_left;

  bool all() const {
    return coassociative.ok && counit.ok && unit_grouplike.ok && selfdist.ok && morphism.ok &&
           counit_mult.ok && unit_right.ok && unit_left.ok;
  }
};

/// Coalgebra with unit plus the rack product; column i*dim+j of `product`
/// is e_i ◁ e_j.
template <class K>
class RackBialgebra {
 public:
  using Vec = SparseVec<K>;
  using Map = LinMap<K>;

  RackBialgebra() = default;
  RackBialgebra(Coalgebra<K> coalgebra, Map product)
      : coalgebra_(std::move(coalgebra)), product_(std::move(product)) {
    const std::size_t d = coalgebra_.dim();
    coalgebra_.require_unit();
    if (product_.rows() != d || product_.cols() != d * d) throw Error("rack product has wrong shape");
  }

  const Coalgebra<K>& coalgebra() const { return coalgebra_; }
  const Map& product() const { return product_; }
  std::size_t dim() const { return coalgebra_.dim(); }
  std::size_t unit() const { return *coalgebra_.unit(); }
  const std::vector<std::string>& labels() const { return coalgebra_.labels(); }

  Vec tri(std::size_t i, std::size_t j) const { return product_.column(i * dim() + j); }
  Vec tri(const Vec& a, const Vec& b) const { return product_.apply(kron(a, b)); }

  RackReport check() const {
    RackReport r;
    const auto& c = coalgebra_;
    r.coassociative = c.check_coassociative();
    r.counit = c.check_counit();
    r.unit_grouplike = c.check_unit();
    const std::size_t d = dim();
    const std::size_t u = unit();
    const auto& lab = labels();

    for (std::size_t x = 0; x < d && r.selfdist.ok; ++x) {
      for (std::size_t y = 0; y < d && r.selfdist.ok; ++y) {
        const Vec xy = tri(x, y);
        for (std::size_t z = 0; z < d; ++z) {
          const Vec left = tri(xy, c.basis(z));
          Vec right(d);
          for (const auto& [idx, coef] : c.comul().column(z)) {
            right.axpy(coef, tri(tri(x, idx / d), tri(y, idx % d)));
          }
          if (!(left == right)) {
            r.selfdist = AxiomResult::fail({x, y, z}, "self-distributivity fails at " + tuple_label(lab, {x, y, z}));
            break;
          }
        }
      }
    }

    for (std::size_t x = 0; x < d && r.morphism.ok; ++x) {
      for (std::size_t y = 0; y < d; ++y) {
        const Vec left = c.delta(tri(x, y));
        Vec right(d * d);
        for (const auto& [ix, cx] : c.comul().column(x)) {
          for (const auto& [iy, cy] : c.comul().column(y)) {
            right.axpy(cx * cy, kron(tri(ix / d, iy / d), tri(ix % d, iy % d)));
          }
        }
        if (!(left == right)) {
          r.morphism = AxiomResult::fail({x, y}, "Δ(x◁y) ≠ (x₁◁y₁)⊗(x₂◁y₂) at " + tuple_label(lab, {x, y}));
          break;
        }
      }
    }

    for (std::size_t x = 0; x < d && r.counit_mult.ok; ++x) {
      for (std::size_t y = 0; y < d; ++y) {
        if (!(c.eps(tri(x, y)) == c.eps(x) * c.eps(y))) {
          r.counit_mult = AxiomResult::fail({x, y}, "ε(x◁y) ≠ ε(x)ε(y) at " + tuple_label(lab, {x, y}));
          break;
        }
      }
    }

    for (std::size_t x = 0; x < d; ++x) {
      if (!(tri(x, u) == c.basis(x))) {
        r.unit_right = AxiomResult::fail({x}, "x◁1 ≠ x at " + lab[x]);
        break;
      }
    }
    for (std::size_t x = 0; x < d; ++x) {
      if (!(tri(u, x) == c.eps(x) * c.basis(u))) {
        r.unit_left = AxiomResult::fail({x}, "1◁x ≠ ε(x)1 at " + lab[x]);
        break;
      }
    }
    return r;
  }

  /// τ(x⊗y) = y₁ ⊗ (x ◁ y₂) on C⊗C.
  Map braiding() const {
    const std::size_t d = dim();
    return Map::from_basis(d * d, d * d, [&](std::size_t col) {
      const std::size_t x = col / d, y = col % d;
      Vec out(d * d);
      for (const auto& [idx, coef] : coalgebra_.comul().column(y)) {
        out.axpy(coef, kron(coalgebra_.basis(idx / d), tri(x, idx % d)));
      }
      return out;
    });
  }

  /// (τ⊗id)(id⊗τ)(τ⊗id) = (id⊗τ)(τ⊗id)(id⊗τ) on C^{⊗3}.
  bool satisfies_braid_relation() const {
    const Map t = braiding();
    const Map id = Map::identity(dim());
    const Map t1 = kron(t, id), t2 = kron(id, t);
    return t1.after(t2).after(t1) == t2.after(t1).after(t2);
  }

 private:
  Coalgebra<K> coalgebra_;
  Map product_;
};

using QRack = RackBialgebra<Rational>;

/// Right Leibniz algebra by structure constants: column i*dim+j of
/// `bracket` is [e_i, e_j].
class LeibnizAlgebra {
 public:
  LeibnizAlgebra() = default;
  LeibnizAlgebra(std::vector<std::string> labels, QMap bracket);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const QMap& bracket() const { return bracket_; }
  QVec br(std::size_t i, std::size_t j) const { return bracket_.column(i * dim() + j); }
  QVec br(const QVec& a, const QVec& b) const { return bracket_.apply(kron(a, b)); }

  /// [[x,y],z] = [[x,z],y] + [x,[y,z]] on all basis triples.
  AxiomResult check_leibniz() const;

 private:
  std::vector<std::string> labels_;
  QMap bracket_;
};

/// Builds a Leibniz algebra from (i, j, k, coefficient) entries meaning
/// [e_i, e_j] has coefficient c on e_k.
struct BracketEntry {
  std::size_t i, j, k;
  Rational c;
};
LeibnizAlgebra make_leibniz(std::vector<std::string> labels, const std::vector<BracketEntry>& entries);

/// Set-level self-distributivity (a◁b)◁c = (a◁c)◁(b◁c); returns the first
/// failing triple.
std::optional<std::array<std::size_t, 3>> set_selfdist_violation(const std::vector<std::vector<std::size_t>>& table);

/// Counitised linearisation k1 ⊕ kX of a set shelf; each g_x is group-like
/// and g_x ◁ g_y = g_{x◁y}.
QRack from_pointed_rack(const std::vector<std::string>& elements, const std::vector<std::vector<std::size_t>>& table);

/// k1 ⊕ 𝔥 with 𝔥 primitive, x◁y = [x,y], x◁1 = x, 1◁x = ε(x)1.
QRack from_leibniz(const LeibnizAlgebra& l, const std::string& unit_label = "1");

/// Inverse of from_leibniz: requires every non-unit basis vector to be
/// primitive with ε = 0 and ◁ to close on them.
LeibnizAlgebra leibniz_of(const QRack& r);

/// a ◁ b = ε(b) a on any coalgebra with unit.
template <class K>
RackBialgebra<K> trivial_rack(const Coalgebra<K>& c) {
  const std::size_t d = c.dim();
  c.require_unit();
  LinMap<K> prod(d, d * d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) prod.add(a, a * d + b, c.eps(b));
  }
  return RackBialgebra<K>(c, std::move(prod));
}

/// Coalgebra k1 ⊕ span(names) with every named element primitive.
FinCoalgebra primitive_coalgebra(const std::vector<std::string>& names, const std::string& unit_label = "1");

/// The five-dimensional non-cocommutative example: basis 1,x,y,z,t with
/// y,z,t primitive, Δ(x) = 1⊗x + x⊗1 + y⊗z, x◁y = x◁z = t, −◁x = −◁t = 0
/// on ker ε.
QRack builtin_nc5();

/// Same rack product on 1,x,y,z,t with all of x,y,z,t primitive.
QRack builtin_nc5_degeneration();

template <class K>
RackBialgebra<K> lift_rack(const QRack& r) {
  const auto& c = r.coalgebra();
  std::optional<SparseVec<K>> counit;
  if (c.counit()) counit = lift<K>(*c.counit());
  Coalgebra<K> ck(c.labels(), lift<K>(c.comul()), std::move(counit), c.unit());
  return RackBialgebra<K>(std::move(ck), lift<K>(r.product()));
}

}  // namespace rackkit
