#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rackkit/enveloping.hpp"
#include "rackkit/hopf.hpp"
#include "rackkit/rack.hpp"

namespace rackkit {

/// A rack bialgebra C with a right H-action and a coalgebra map q: C → H.
/// action[h] is the matrix of c ↦ c·e_h, absent where it could not be
/// formed inside the truncation of H.
struct YDRackStructure {
  QRack rack;
  FilteredBialgebra h;
  QMap q;
  std::vector<std::optional<QMap>> action;

  /// c·v for v ∈ H; nullopt when some needed action matrix is missing.
  std::optional<QVec> act(const QVec& c, const QVec& v) const;
};

struct YDReport {
  AxiomResult coalgebra_morphism_q;
  AxiomResult eq_c;              // a◁b = a·q(b)
  AxiomResult eq_d;              // h₁ q(a·h₂) = q(a)h
  AxiomResult module;            // a·1 = a, (a·g)·h = a·(gh)
  AxiomResult module_coalgebra;  // on algebra generators of H
  std::size_t checked = 0;
  std::size_t skipped = 0;

  bool all() const {
    return coalgebra_morphism_q.ok && eq_c.ok && eq_d.ok && module.ok && module_coalgebra.ok;
  }
};

/// Action of each generator g of H is ◁c for some c with q(c) = g (H is
/// assumed generated by im q); other basis elements act through their
/// factorization.
YDRackStructure yd_from_q(const QRack& rack, const FilteredBialgebra& h, const QMap& q);
/// C = rack_from_hopf(h, seed) over h, q the inclusion, action the adjoint action.
YDRackStructure yd_from_hopf(const FilteredBialgebra& h, const std::vector<QVec>& seed);
/// C over its own truncated U(C).
YDRackStructure yd_over_enveloping(const TruncatedEnveloping& u);

YDReport check_yd_rack(const YDRackStructure& s);

struct CoactionReport {
  AxiomResult coassociative;          // (ρ⊗id)ρ = (id⊗Δ_H)ρ
  AxiomResult counit;                 // (id⊗ε)ρ = id
  std::array<AxiomResult, 3> terms;   // the three terms of the YD identity
  AxiomResult yd;                     // (x·h₂)₀ ⊗ h₁(x·h₂)₁ = x₀·h₁ ⊗ x₁h₂
  std::size_t checked = 0;
  std::size_t skipped = 0;

  bool all() const { return coassociative.ok && counit.ok && terms[0].ok && terms[1].ok && terms[2].ok && yd.ok; }
};

struct CanonicalCoaction {
  QMap rho;  // C → C⊗H
  CoactionReport report;
};

/// x ↦ (x₁ − ε(x₁)1)⊗q(x₂) + ε(x)1⊗1; needs H cocommutative.
CanonicalCoaction canonical_coaction(const YDRackStructure& s);

/// Yetter-Drinfel'd module V over H: right action and right coaction.
struct YDModule {
  std::vector<std::string> labels;
  std::vector<std::optional<QMap>> action;  // per H basis element, V → V
  QMap coaction;                            // V → V⊗H
};

struct LMReport {
  AxiomResult bimodule;
  AxiomResult bicomodule;
  AxiomResult coactions_commute;
  std::array<AxiomResult, 4> compatibility;  // λ(gm), λ(mg), ρ(gm), ρ(mg)
  AxiomResult bilinear;
  AxiomResult coderivation;
  std::size_t checked = 0;
  std::size_t skipped = 0;

  bool all() const {
    bool ok = bimodule.ok && bicomodule.ok && coactions_commute.ok && bilinear.ok && coderivation.ok;
    for (const auto& c : compatibility) ok = ok && c.ok;
    return ok;
  }
};

/// Tetramodule M = H⊗V with g(h⊗v)g' = ghg'₁ ⊗ v·g'₂,
/// λ(h⊗v) = h₁⊗(h₂⊗v), ρ(h⊗v) = (h₁⊗v₀)⊗h₂v₁. Index of h⊗v is h·dim V + v.
class Tetramodule {
 public:
  Tetramodule(FilteredBialgebra h, YDModule v);

  const FilteredBialgebra& h() const { return h_; }
  const YDModule& v() const { return v_; }
  std::size_t dim() const { return h_.dim() * v_.labels.size(); }
  std::string label(std::size_t m) const;

  QVec left(const QVec& g, const QVec& m) const;
  QVec right(const QVec& m, const QVec& g) const;
  QVec lambda(const QVec& m) const;  // in H⊗M
  QVec rho(const QVec& m) const;     // in M⊗H

 private:
  QVec act_v(const QVec& v, std::size_t g) const;

  FilteredBialgebra h_;
  YDModule v_;
};

/// Linear map known only on some basis vectors; applying it to a vector
/// outside that part raises TruncationOverflow.
struct PartialMap {
  std::size_t rows = 0;
  std::vector<std::optional<QVec>> cols;
  QVec apply(const QVec& v) const;
  std::size_t defined() const;
};

struct LMObject {
  Tetramodule module;
  PartialMap f;  // M → H
  LMReport report;
};

/// Tetramodule U(C)⊗Č with f(s⊗c) = s·q(c); verifies all structure within truncation.
LMObject lm_bialgebra_object(const TruncatedEnveloping& u);
LMReport check_lm(const Tetramodule& m, const PartialMap& f);

struct UniversalMorphismReport {
  AxiomResult composes_to_q;   // u∘q = q_H
  AxiomResult vanishes_on_j;
  AxiomResult multiplicative;
  AxiomResult comultiplicative;
  AxiomResult counit;
  AxiomResult equivariant;     // x·s = x·u(s)
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<std::size_t> kernel_dims;  // dim(ker u ∩ F_k), k = 0..d

  bool all() const {
    return composes_to_q.ok && vanishes_on_j.ok && multiplicative.ok && comultiplicative.ok && counit.ok &&
           equivariant.ok;
  }
};

struct UniversalMorphism {
  QMap map;  // U → H
  UniversalMorphismReport report;
};

/// u: U(C) → H on words c₁…c_l ↦ q_H(c₁)…q_H(c_l).
UniversalMorphism universal_morphism(const TruncatedEnveloping& u, const YDRackStructure& target);

}  // namespace rackkit
