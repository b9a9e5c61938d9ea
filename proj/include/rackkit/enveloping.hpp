#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rackkit/hopf.hpp"
#include "rackkit/linalg.hpp"
#include "rackkit/rack.hpp"

namespace rackkit {

/// All words of length ≤ max_len over `letters` letters, numbered by
/// length first and lexicographically within a length.
class WordSpace {
 public:
  using Word = std::vector<std::size_t>;

  WordSpace() = default;
  WordSpace(std::size_t letters, std::size_t max_len);

  std::size_t letters() const { return letters_; }
  std::size_t max_len() const { return max_len_; }
  std::size_t size() const { return offset_.back(); }
  /// Number of words of length < len.
  std::size_t count_below(std::size_t len) const { return offset_.at(len); }
  std::size_t position(const Word& w) const;
  Word word(std::size_t pos) const;
  std::size_t length(std::size_t pos) const;

 private:
  std::size_t letters_ = 0;
  std::size_t max_len_ = 0;
  std::vector<std::size_t> offset_{0, 1};
};

/// Element of T(Č) as (word, coefficient) terms.
using TElement = std::map<WordSpace::Word, Rational>;

struct GeneratorInstance {
  std::size_t x = 0, y = 0;  // letters (Č basis)
  TElement value;            // Σ i(y₁)·i(x◁y₂) − i(x)·i(y)
};

struct ActionReport {
  AxiomResult instances;   // every generator instance acts as zero
  AxiomResult ideal;       // every basis vector of J ∩ F_d acts as zero
};

/// U(C) = T(Č)/J known up to filtration degree d.
class TruncatedEnveloping {
 public:
  TruncatedEnveloping(QRack source, int degree, int slack);

  const QRack& source() const { return source_; }
  int degree() const { return degree_; }
  int slack() const { return slack_; }
  bool stabilized() const { return stabilized_; }

  /// Č: letters are the non-unit basis elements e_k − ε(e_k)1 of C.
  std::size_t letters() const { return letter_index_.size(); }
  const std::vector<std::string>& letter_labels() const { return letter_labels_; }
  /// Basis index in C of letter k.
  std::size_t letter_basis_index(std::size_t k) const { return letter_index_.at(k); }
  /// The C-vector behind letter k.
  QVec letter_vector(std::size_t k) const;
  /// i: C → T.
  TElement embed(const QVec& c) const;

  const std::vector<GeneratorInstance>& instances() const { return instances_; }
  const WordSpace& words() const { return words_; }
  std::string word_label(const WordSpace::Word& w) const;

  /// Basis of J ∩ F_d as elements of T.
  std::vector<TElement> ideal_basis() const;
  std::size_t ideal_dim() const { return ideal_.dim(); }
  bool in_ideal(const TElement& t) const;

  /// Normal-form basis of U up to degree d.
  std::size_t dim() const { return normal_.size(); }
  const std::vector<WordSpace::Word>& normal_words() const { return normal_; }
  std::vector<std::string> labels() const;
  /// dim F_k U for k = 0..d.
  const std::vector<std::size_t>& hilbert_series() const { return series_; }

  /// Normal form of an element of F_d; throws TruncationOverflow beyond d.
  QVec normal_form(const TElement& t) const;
  QVec mul(const QVec& a, const QVec& b) const;
  /// q: C → U as a matrix (needs degree ≥ 1).
  const QMap& q() const;

  bool coideal() const { return coideal_.ok; }
  const AxiomResult& coideal_report() const { return coideal_; }
  /// Coproduct on U (normal basis); PreconditionError when J was not found to be a coideal.
  const QMap& comul() const;
  QVec delta(const QVec& v) const { return comul().apply(v); }
  Rational eps(const QVec& v) const;
  /// Δ_T of an element of T, with both legs reduced to normal form.
  QVec reduced_coproduct(const TElement& t) const;

  /// Right action of a word on C by iterated ◁.
  QVec act(const QVec& c, const WordSpace::Word& w) const;
  QVec act(const QVec& c, const TElement& t) const;
  /// Matrix C → C of the action of normal basis element u.
  QMap action_matrix(std::size_t u) const;
  ActionReport check_action() const;

  /// U as a filtered bialgebra (needs the coideal property).
  FilteredBialgebra to_bialgebra(const std::string& name = "U(C)") const;

  std::vector<std::string> relations_sample(std::size_t limit) const;

 private:
  Span saturate(std::size_t top) const;
  QVec to_column(const TElement& t, std::size_t total) const;
  TElement from_column(const QVec& v, std::size_t total) const;
  std::vector<std::tuple<WordSpace::Word, WordSpace::Word, Rational>> coproduct_terms(const WordSpace::Word& w) const;

  QRack source_;
  int degree_;
  int slack_;
  std::vector<std::size_t> letter_index_;  // letter -> basis index in C
  std::vector<std::string> letter_labels_;
  std::vector<GeneratorInstance> instances_;
  WordSpace words_;           // length ≤ d
  Span ideal_;                // J ∩ F_d in column coordinates over words_
  bool stabilized_ = false;
  std::vector<WordSpace::Word> normal_;
  std::map<WordSpace::Word, std::size_t> normal_index_;
  std::vector<std::size_t> series_;
  std::optional<QMap> q_;
  AxiomResult coideal_;
  std::optional<QMap> comul_;
};

/// Builds U(C) up to degree d, saturating J with products of total length ≤ d + slack.
TruncatedEnveloping build_enveloping(const QRack& r, int degree, int slack);

}  // namespace rackkit
