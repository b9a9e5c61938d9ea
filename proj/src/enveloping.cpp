#include "rackkit/enveloping.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <tuple>

namespace rackkit {

namespace {

using Word = WordSpace::Word;

constexpr std::size_t kMaxWords = 400000;
constexpr std::size_t kMaxRows = 2000000;

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

void add_term(TElement& t, const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto& slot = t[w];
  slot += c;
  if (slot.is_zero()) t.erase(w);
}

TElement times(const TElement& a, const TElement& b) {
  TElement out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) add_term(out, concat(wa, wb), ca * cb);
  return out;
}

std::size_t top_length(const TElement& t) {
  std::size_t l = 0;
  for (const auto& [w, c] : t) l = std::max(l, w.size());
  return l;
}

bool plain_label(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isalnum(ch) || ch == '_'; });
}

}  // namespace

WordSpace::WordSpace(std::size_t letters, std::size_t max_len) : letters_(letters), max_len_(max_len) {
  offset_.assign(1, 0);
  std::size_t count = 1;
  for (std::size_t len = 0; len <= max_len; ++len) {
    offset_.push_back(offset_.back() + count);
    if (offset_.back() > kMaxWords) {
      throw ResourceError("word space over " + std::to_string(letters) + " letters up to length " +
                          std::to_string(max_len) + " exceeds " + std::to_string(kMaxWords) + " words");
    }
    count *= letters;
  }
}

std::size_t WordSpace::position(const Word& w) const {
  if (w.size() > max_len_) throw TruncationOverflow("word of length " + std::to_string(w.size()) + " beyond truncation");
  std::size_t code = 0;
  for (auto l : w) code = code * letters_ + l;
  return offset_[w.size()] + code;
}

std::size_t WordSpace::length(std::size_t pos) const {
  auto it = std::upper_bound(offset_.begin(), offset_.end(), pos);
  return static_cast<std::size_t>(it - offset_.begin()) - 1;
}

Word WordSpace::word(std::size_t pos) const {
  const std::size_t len = length(pos);
  std::size_t code = pos - offset_[len];
  Word w(len);
  for (std::size_t k = len; k-- > 0;) {
    w[k] = code % letters_;
    code /= letters_;
  }
  return w;
}

TruncatedEnveloping::TruncatedEnveloping(QRack source, int degree, int slack)
    : source_(std::move(source)), degree_(degree), slack_(slack) {
  if (degree < 0 || slack < 0) throw PreconditionError("degree and slack must be non-negative");
  const auto& c = source_.coalgebra();
  const std::size_t unit = c.require_unit();
  std::vector<std::size_t> letter_of(c.dim(), c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (i == unit) continue;
    letter_of[i] = letter_index_.size();
    letter_index_.push_back(i);
    letter_labels_.push_back(c.labels()[i]);
  }
  const std::size_t m = letters();

  // Generator instances g_{x,y} = Σ i(y₁)·i(x◁y₂) − i(x)·i(y).
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const QVec xv = letter_vector(x), yv = letter_vector(y);
      TElement g;
      const std::size_t n = c.dim();
      for (const auto& [idx, coef] : c.delta(yv)) {
        const TElement left = embed(c.basis(idx / n));
        const TElement right = embed(source_.tri(xv, c.basis(idx % n)));
        for (const auto& [w, k] : times(left, right)) add_term(g, w, coef * k);
      }
      for (const auto& [w, k] : times(embed(xv), embed(yv))) add_term(g, w, -k);
      if (!g.empty()) instances_.push_back({x, y, std::move(g)});
    }
  }

  words_ = WordSpace(m, static_cast<std::size_t>(degree));
  const std::size_t top = static_cast<std::size_t>(degree + slack);
  ideal_ = saturate(top);
  stabilized_ = (saturate(top + 1) == ideal_);

  // Non-pivot words are the normal forms.
  const std::size_t total = words_.size();
  std::vector<bool> pivot(total, false);
  for (auto col : ideal_.pivots()) pivot[total - 1 - col] = true;
  series_.assign(static_cast<std::size_t>(degree) + 1, 0);
  for (std::size_t pos = 0; pos < total; ++pos) {
    if (pivot[pos]) continue;
    Word w = words_.word(pos);
    for (std::size_t k = w.size(); k <= static_cast<std::size_t>(degree); ++k) ++series_[k];
    normal_index_[w] = normal_.size();
    normal_.push_back(std::move(w));
  }

  if (degree >= 1 || letters() == 0) {
    q_ = QMap(dim(), c.dim());
    for (std::size_t i = 0; i < c.dim(); ++i) q_->set_column(i, normal_form(embed(c.basis(i))));
  }

  // Coideal: Δ_T of every element of J ∩ F_d (and every instance that fits)
  // must vanish after reducing both legs.
  for (const auto& v : ideal_basis()) {
    if (!reduced_coproduct(v).is_zero()) {
      std::string s;
      for (const auto& [w, k] : v) s += (s.empty() ? "" : " + ") + k.str() + "*" + word_label(w);
      coideal_ = AxiomResult::fail({}, "Δ_T(" + s + ") ∉ J⊗T + T⊗J");
      break;
    }
  }
  for (const auto& g : instances_) {
    if (!coideal_.ok) break;
    if (top_length(g.value) > static_cast<std::size_t>(degree)) continue;
    if (!reduced_coproduct(g.value).is_zero()) {
      coideal_ = AxiomResult::fail({g.x, g.y}, "Δ_T of generator (" + letter_labels_[g.x] + "," +
                                                   letter_labels_[g.y] + ") ∉ J⊗T + T⊗J");
    }
  }
  if (coideal_.ok) {
    const std::size_t d = dim();
    QMap cm(d * d, d);
    for (std::size_t u = 0; u < d; ++u) cm.set_column(u, reduced_coproduct(TElement{{normal_[u], Rational(1)}}));
    comul_ = std::move(cm);
  }
}

QVec TruncatedEnveloping::letter_vector(std::size_t k) const {
  const auto& c = source_.coalgebra();
  const std::size_t i = letter_index_.at(k);
  QVec v = c.basis(i);
  v.add(c.require_unit(), -c.eps(i));
  return v;
}

TElement TruncatedEnveloping::embed(const QVec& v) const {
  const auto& c = source_.coalgebra();
  const std::size_t unit = c.require_unit();
  TElement t;
  // v = Σ v_i e_i = Σ v_i (ě_i + ε(e_i)1)
  for (const auto& [i, coef] : v) {
    if (i == unit) {
      add_term(t, {}, coef);
      continue;
    }
    const std::size_t k = static_cast<std::size_t>(std::find(letter_index_.begin(), letter_index_.end(), i) -
                                                   letter_index_.begin());
    add_term(t, {k}, coef);
    add_term(t, {}, coef * c.eps(i));
  }
  return t;
}

std::string TruncatedEnveloping::word_label(const Word& w) const {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += "*";
    const std::string& l = letter_labels_.at(w[k]);
    s += plain_label(l) ? l : "[" + l + "]";
  }
  return s;
}

QVec TruncatedEnveloping::to_column(const TElement& t, std::size_t total) const {
  QVec v(total);
  for (const auto& [w, c] : t) {
    v.add(total - 1 - words_.position(w), c);
  }
  return v;
}

TElement TruncatedEnveloping::from_column(const QVec& v, std::size_t total) const {
  TElement t;
  for (const auto& [col, c] : v) t[words_.word(total - 1 - col)] = c;
  return t;
}

Span TruncatedEnveloping::saturate(std::size_t top) const {
  const std::size_t m = letters();
  const WordSpace big(m, top);
  const std::size_t total = big.size();
  const std::size_t wd = words_.size();
  std::vector<QVec> rows;
  for (const auto& g : instances_) {
    const std::size_t lg = top_length(g.value);
    if (lg > top) continue;
    const std::size_t room = top - lg;
    const std::size_t na = big.count_below(room + 1);
    for (std::size_t pa = 0; pa < na; ++pa) {
      const Word a = big.word(pa);
      const std::size_t nb = big.count_below(room - a.size() + 1);
      for (std::size_t pb = 0; pb < nb; ++pb) {
        const Word b = big.word(pb);
        QVec row(total);
        for (const auto& [w, c] : g.value) row.add(total - 1 - big.position(concat(concat(a, w), b)), c);
        rows.push_back(std::move(row));
        if (rows.size() > kMaxRows) {
          throw ResourceError("ideal saturation needs more than " + std::to_string(kMaxRows) + " products");
        }
      }
    }
  }
  const Span full(total, std::move(rows));
  // Rows whose pivot (highest word) has length ≤ d lie in F_d.
  std::vector<QVec> low;
  for (std::size_t k = 0; k < full.dim(); ++k) {
    if (full.pivots()[k] < total - wd) continue;
    QVec r(wd);
    for (const auto& [col, c] : full.basis()[k]) r.add(col - (total - wd), c);
    low.push_back(std::move(r));
  }
  return Span(wd, std::move(low));
}

std::vector<TElement> TruncatedEnveloping::ideal_basis() const {
  std::vector<TElement> out;
  for (const auto& r : ideal_.basis()) out.push_back(from_column(r, words_.size()));
  return out;
}

bool TruncatedEnveloping::in_ideal(const TElement& t) const {
  for (const auto& [w, c] : t) {
    if (w.size() > words_.max_len()) throw TruncationOverflow("element beyond truncation degree");
  }
  return ideal_.contains(to_column(t, words_.size()));
}

std::vector<std::string> TruncatedEnveloping::labels() const {
  std::vector<std::string> out;
  for (const auto& w : normal_) out.push_back(word_label(w));
  return out;
}

QVec TruncatedEnveloping::normal_form(const TElement& t) const {
  for (const auto& [w, c] : t) {
    if (w.size() > words_.max_len()) {
      throw TruncationOverflow("U(C): word " + word_label(w) + " exceeds truncation degree " + std::to_string(degree_));
    }
  }
  const std::size_t total = words_.size();
  const QVec r = ideal_.reduce(to_column(t, total));
  QVec out(dim());
  for (const auto& [col, c] : r) out.add(normal_index_.at(words_.word(total - 1 - col)), c);
  return out;
}

QVec TruncatedEnveloping::mul(const QVec& a, const QVec& b) const {
  TElement t;
  for (const auto& [i, ca] : a)
    for (const auto& [j, cb] : b) add_term(t, concat(normal_[i], normal_[j]), ca * cb);
  return normal_form(t);
}

const QMap& TruncatedEnveloping::q() const {
  if (!q_) throw TruncationOverflow("U(C): q needs truncation degree at least 1");
  return *q_;
}

const QMap& TruncatedEnveloping::comul() const {
  if (!comul_) throw PreconditionError("U(C): J is not a coideal here, so U(C) has no induced coproduct");
  return *comul_;
}

Rational TruncatedEnveloping::eps(const QVec& v) const {
  Rational s(0);
  for (const auto& [i, c] : v)
    if (normal_[i].empty()) s += c;
  return s;
}

std::vector<std::tuple<Word, Word, Rational>> TruncatedEnveloping::coproduct_terms(const Word& w) const {
  const auto& c = source_.coalgebra();
  const std::size_t n = c.dim();
  std::vector<std::tuple<Word, Word, Rational>> acc{{Word{}, Word{}, Rational(1)}};
  for (auto letter : w) {
    std::map<std::pair<Word, Word>, Rational> next;
    for (const auto& [idx, coef] : c.delta(letter_vector(letter))) {
      const TElement l = embed(c.basis(idx / n)), r = embed(c.basis(idx % n));
      for (const auto& [wl, cl] : l) {
        for (const auto& [wr, cr] : r) {
          for (const auto& [al, ar, ac] : acc) next[{concat(al, wl), concat(ar, wr)}] += ac * coef * cl * cr;
        }
      }
    }
    acc.clear();
    for (const auto& [k, v] : next)
      if (!v.is_zero()) acc.emplace_back(k.first, k.second, v);
  }
  return acc;
}

QVec TruncatedEnveloping::reduced_coproduct(const TElement& t) const {
  const std::size_t d = dim();
  QVec out(d * d);
  std::map<Word, QVec> cache;
  auto nf = [&](const Word& w) -> const QVec& {
    auto it = cache.find(w);
    if (it == cache.end()) it = cache.emplace(w, normal_form(TElement{{w, Rational(1)}})).first;
    return it->second;
  };
  for (const auto& [w, c] : t) {
    for (const auto& [wl, wr, k] : coproduct_terms(w)) out.axpy(c * k, kron(nf(wl), nf(wr)));
  }
  return out;
}

QVec TruncatedEnveloping::act(const QVec& c, const Word& w) const {
  QVec v = c;
  for (auto letter : w) v = source_.tri(v, letter_vector(letter));
  return v;
}

QVec TruncatedEnveloping::act(const QVec& c, const TElement& t) const {
  QVec out(c.dim());
  for (const auto& [w, k] : t) out.axpy(k, act(c, w));
  return out;
}

QMap TruncatedEnveloping::action_matrix(std::size_t u) const {
  const auto& c = source_.coalgebra();
  QMap m(c.dim(), c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) m.set_column(i, act(c.basis(i), normal_.at(u)));
  return m;
}

ActionReport TruncatedEnveloping::check_action() const {
  ActionReport r;
  const auto& c = source_.coalgebra();
  for (const auto& g : instances_) {
    for (std::size_t i = 0; i < c.dim() && r.instances.ok; ++i) {
      if (!act(c.basis(i), g.value).is_zero()) {
        r.instances = AxiomResult::fail({i, g.x, g.y}, "generator (" + letter_labels_[g.x] + "," +
                                                           letter_labels_[g.y] + ") acts nonzero on " + c.labels()[i]);
      }
    }
  }
  const auto basis = ideal_basis();
  for (std::size_t k = 0; k < basis.size() && r.ideal.ok; ++k) {
    for (std::size_t i = 0; i < c.dim(); ++i) {
      if (!act(c.basis(i), basis[k]).is_zero()) {
        r.ideal = AxiomResult::fail({i}, "an element of J ∩ F_d acts nonzero on " + c.labels()[i]);
        break;
      }
    }
  }
  return r;
}

FilteredBialgebra TruncatedEnveloping::to_bialgebra(const std::string& name) const {
  const std::size_t d = dim();
  auto empty = normal_index_.find(Word{});
  if (empty == normal_index_.end()) throw PreconditionError("U(C) is zero: the unit lies in J");
  FilteredBialgebra::Parts p;
  p.name = name;
  p.labels = labels();
  p.truncation = degree_;
  p.unit = empty->second;
  p.counit = QVec::unit(d, p.unit);
  p.comul = comul();
  std::map<std::size_t, std::size_t> gen_of_letter;
  for (std::size_t l = 0; l < letters(); ++l) {
    auto it = normal_index_.find(Word{l});
    if (it == normal_index_.end()) continue;
    gen_of_letter[l] = p.generators.size();
    p.generators.push_back(it->second);
  }
  for (std::size_t u = 0; u < d; ++u) {
    p.degrees.push_back(static_cast<int>(normal_[u].size()));
    std::vector<std::size_t> fact;
    bool ok = true;
    for (auto l : normal_[u]) {
      auto it = gen_of_letter.find(l);
      if (it == gen_of_letter.end()) {
        ok = false;
        break;
      }
      fact.push_back(it->second);
    }
    p.factorization.push_back(ok ? fact : std::vector<std::size_t>{});
    for (std::size_t v = 0; v < d; ++v) {
      if (normal_[u].size() + normal_[v].size() <= static_cast<std::size_t>(degree_)) {
        p.products[{u, v}] = mul(QVec::unit(d, u), QVec::unit(d, v));
      }
    }
  }
  FilteredBialgebra h(std::move(p));
  h.solve_antipode();
  return h;
}

std::vector<std::string> TruncatedEnveloping::relations_sample(std::size_t limit) const {
  std::vector<std::string> out;
  for (const auto& t : ideal_basis()) {
    if (out.size() >= limit) break;
    std::vector<std::pair<Word, Rational>> terms(t.begin(), t.end());
    // longest word first
    std::stable_sort(terms.begin(), terms.end(),
                     [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
    std::string s;
    for (auto it = terms.begin(); it != terms.end(); ++it) {
      const Rational& c = it->second;
      std::string coef = c == Rational(1) ? "+" : c == Rational(-1) ? "-" : (c.sign() > 0 ? "+" : "") + c.str() + "*";
      s += coef + word_label(it->first);
    }
    out.push_back(s[0] == '+' ? s.substr(1) : s);
  }
  return out;
}

TruncatedEnveloping build_enveloping(const QRack& r, int degree, int slack) {
  return TruncatedEnveloping(r, degree, slack);
}

}  // namespace rackkit
