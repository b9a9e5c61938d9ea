#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rackkit/coalgebra.hpp"
#include "rackkit/rack.hpp"

namespace rackkit {

struct BialgebraReport {
  AxiomResult associative;
  AxiomResult unital;
  AxiomResult coassociative;
  AxiomResult counit;
  AxiomResult multiplicative;   // Δ(ab) = Δ(a)Δ(b)
  AxiomResult counit_mult;      // ε(ab) = ε(a)ε(b)
  AxiomResult filtration;       // Δ(F_n) ⊆ F_n ⊗ F_n
  AxiomResult antipode;         // only when an antipode is stored
  std::size_t checked = 0;
  std::size_t skipped = 0;      // identity instances beyond the truncation

  bool all() const {
    return associative.ok && unital.ok && coassociative.ok && counit.ok && multiplicative.ok && counit_mult.ok &&
           filtration.ok && antipode.ok;
  }
};

/// A bialgebra known up to a filtration degree: products are defined only
/// when the degrees add up to at most `truncation`; anything else raises
/// TruncationOverflow.
class FilteredBialgebra {
 public:
  struct Parts {
    std::string name;
    std::vector<std::string> labels;
    std::vector<int> degrees;
    int truncation = 0;
    std::size_t unit = 0;
    QVec counit;
    QMap comul;
    std::map<std::pair<std::size_t, std::size_t>, QVec> products;  // only defined pairs
    std::vector<std::size_t> generators;                 // algebra generators (basis indices)
    std::vector<std::vector<std::size_t>> factorization; // basis element as word in `generators`
  };

  FilteredBialgebra() = default;
  explicit FilteredBialgebra(Parts parts);

  const std::string& name() const { return p_.name; }
  std::size_t dim() const { return p_.labels.size(); }
  const std::vector<std::string>& labels() const { return p_.labels; }
  int degree(std::size_t i) const { return p_.degrees.at(i); }
  int degree(const QVec& v) const;
  int truncation() const { return p_.truncation; }
  std::size_t unit() const { return p_.unit; }
  QVec one() const { return QVec::unit(dim(), p_.unit); }
  QVec basis(std::size_t i) const { return QVec::unit(dim(), i); }
  const std::vector<std::size_t>& generators() const { return p_.generators; }
  const std::vector<std::vector<std::size_t>>& factorization() const { return p_.factorization; }
  std::size_t index_of(const std::string& label) const;

  Rational eps(std::size_t i) const { return p_.counit.get(i); }
  Rational eps(const QVec& v) const;
  QVec delta(const QVec& v) const { return p_.comul.apply(v); }
  const QMap& comul() const { return p_.comul; }
  FinCoalgebra coalgebra() const;

  bool defined(std::size_t i, std::size_t j) const { return p_.products.count({i, j}) != 0; }
  QVec mul(std::size_t i, std::size_t j) const;
  QVec mul(const QVec& a, const QVec& b) const;
  /// Product in H⊗H: (a⊗b)(c⊗d) = ac⊗bd.
  QVec mul_tensor(const QVec& x, const QVec& y) const;

  bool has_antipode() const { return !antipode_.empty(); }
  /// S(e_i) when it could be solved within the truncation.
  const std::optional<QVec>& antipode(std::size_t i) const { return antipode_.at(i); }
  QVec apply_antipode(const QVec& v) const;
  void set_antipode(std::vector<std::optional<QVec>> s) { antipode_ = std::move(s); }
  /// Solves S(h₁)h₂ = ε(h)1 by recursion along the coproduct; elements
  /// whose recursion is cyclic or leaves the truncation stay unsolved.
  void solve_antipode();
  std::size_t antipode_coverage() const;

  bool is_commutative() const;
  bool is_cocommutative() const { return coalgebra().check_cocommutative(); }

  BialgebraReport check() const;

 private:
  Parts p_;
  std::vector<std::optional<QVec>> antipode_;
};

/// Group algebra k[G] from a multiplication table (all degrees 0, total
/// product, S(g) = g⁻¹). Rejects tables that are not groups.
FilteredBialgebra group_algebra(const std::vector<std::string>& elements,
                                const std::vector<std::vector<std::size_t>>& table, std::string name = "group");
FilteredBialgebra cyclic_group_algebra(std::size_t n);
FilteredBialgebra s3_group_algebra();

/// Commutative polynomial bialgebra k[vars] truncated at total degree d;
/// Δ on each variable given as terms (left monomial, right monomial, c)
/// with monomials as exponent vectors, extended multiplicatively.
struct PolyTerm {
  std::vector<int> left, right;
  Rational coeff;
};
FilteredBialgebra polynomial_bialgebra(const std::vector<std::string>& vars,
                                       const std::vector<std::vector<PolyTerm>>& var_coproducts, int degree,
                                       std::string name = "poly");

/// k[X,Y,Z] with Δ(X) = 1⊗X + X⊗1 + Y⊗Z and Y, Z primitive.
FilteredBialgebra polynomial_hopf_k3(int degree);
/// k[x] with x primitive (the enveloping algebra of a 1-dim Lie algebra).
FilteredBialgebra polynomial_line(int degree, const std::string& var = "x");

/// a ◁ b = S(b₁) a b₂.
QVec adjoint_action(const FilteredBialgebra& h, const QVec& a, const QVec& b);

/// Closes span(seed) ⊆ ker ε under the adjoint action of the algebra
/// generators of H, then returns k1 ⊕ closure with the restricted coproduct
/// and adjoint action. `basis_vectors` receives the chosen elements of H
/// (unit first) when non-null.
QRack rack_from_hopf(const FilteredBialgebra& h, const std::vector<QVec>& seed,
                     std::vector<QVec>* basis_vectors = nullptr);

/// Human-readable linear combination, e.g. "(12)-e" or "2*X+Y".
std::string format_combination(const std::vector<std::string>& labels, const QVec& v);

}  // namespace rackkit
