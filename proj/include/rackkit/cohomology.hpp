#pragma once

#include <optional>
#include <vector>

#include "rackkit/linalg.hpp"
#include "rackkit/rack.hpp"

namespace rackkit {

/// Cochains C^{⊗n} → C are handled as matrices; vec(ω) stacks them as
/// index t·dim C + a for input tuple t and output basis element a.
QVec vec_of(const QMap& omega);
QMap cochain_of(const QVec& v, std::size_t d, std::size_t n);

/// μⁿ(x₁,…,xₙ) = (…(x₁◁x₂)◁…)◁xₙ, μ¹ = id.
QMap mu_n(const QRack& r, std::size_t n);

/// Δ∘ω = (ω⊗μⁿ + μⁿ⊗ω)∘Δ_{C⊗n}.
bool is_coderivation(const QRack& r, const QMap& omega, std::size_t n);
/// Coderivations along μⁿ as a subspace of vec coordinates (cocommutative C only).
Span coderivation_space(const QRack& r, std::size_t n);

enum class DifferentialTerm { d_i1, d_j0, d_last };
/// One summand d_{i,1}, d_{j,0} (index i) or d_{n+1} of the differential, unsigned.
QMap differential_term(const QRack& r, const QMap& omega, std::size_t n, DifferentialTerm which, std::size_t i = 0);

/// d_C^n ω with the sum Σ_{i=1}^n (−1)^{i+1}(d_{i,1} − d_{i,0}) + (−1)^{n+1} d_{n+1}.
QMap deformation_differential(const QRack& r, const QMap& omega, std::size_t n);

struct DifferentialResult {
  std::size_t n = 0;
  Span source;           // Coder^n
  QMap images;           // columns: vec(d ω_k) for the basis of Coder^n
  bool lands = true;     // every image is a coderivation
  std::size_t rank = 0;
};
DifferentialResult differential(const QRack& r, std::size_t n);

/// d^n∘d^{n−1} = 0 on Coder^{n−1} (n ≥ 2).
bool d_squared_zero(const QRack& r, std::size_t n);

struct ComplexReport {
  std::size_t max_n = 0;
  std::vector<std::size_t> coder_dims;   // index n−1
  std::vector<std::size_t> ranks;
  std::vector<bool> lands;
  std::vector<bool> d_squared_zero;      // index n−1, meaningful from n = 2
  std::vector<std::optional<std::size_t>> betti;  // absent where d∘d ≠ 0
};
ComplexReport deformation_complex(const QRack& r, std::size_t max_n);

/// A coderivation with dω = 0.
bool is_special_cocycle(const QRack& r, const QMap& omega, std::size_t n);

/// Loday differential on Hom(𝔥^{⊗n}, 𝔥) with the same sign pattern:
/// Σ_{i=1}^n (−1)^{i+1}([f(…r̂ᵢ…), rᵢ] − Σ_{k<i} f(…[r_k,rᵢ]…r̂ᵢ…)) + (−1)^{n+1}[r₁, f(r₂,…)].
QMap loday_apply(const LeibnizAlgebra& l, const QMap& f, std::size_t n);
QMap loday_differential(const LeibnizAlgebra& l, std::size_t n);

struct LodayReport {
  std::size_t max_n = 0;
  std::vector<std::size_t> ranks;                  // rank dⁿ, index n−1
  std::vector<bool> d_squared_zero;                // index n−1, from n = 2
  std::vector<std::optional<std::size_t>> betti;
};
LodayReport loday_complex(const LeibnizAlgebra& l, std::size_t max_n);

/// Extension by zero on unit legs to C = k1 ⊕ 𝔥 (from_leibniz layout: unit first).
QMap embed_leibniz(const LeibnizAlgebra& l, const QMap& f, std::size_t n);

struct EmbeddingReport {
  AxiomResult coderivation;
  AxiomResult injective;
  AxiomResult chain_map;  // d_C(embed f) = embed(d_L f)
};
EmbeddingReport check_embedding_chain_map(const LeibnizAlgebra& l, std::size_t n);

/// Δ_ε = Δ₀ + ε·dComul, ◁_ε = ◁₀ + ε·dRack over dual numbers.
RackBialgebra<DualRational> deform(const QRack& r0, const QMap& dcomul, const QMap& drack);
RackReport first_order_deformation_check(const QRack& r0, const QMap& dcomul, const QMap& drack);

}  // namespace rackkit
