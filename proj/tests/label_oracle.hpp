#pragma once

// Independent, label-based evaluation of coalgebra and rack identities.
// Tensors are maps from label tuples to coefficients; no LinMap/kron code
// from the library is used, so verdicts here cross-check the library.

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "rackkit/rack.hpp"

namespace rackkit::oracle {

using Word = std::vector<std::string>;
using Tensor = std::map<Word, Rational>;

inline void add_to(Tensor& t, const Word& w, const Rational& c) {
  if (c.is_zero()) return;
  auto& slot = t[w];
  slot += c;
  if (slot.is_zero()) t.erase(w);
}

struct Structure {
  Word basis;
  std::string unit;
  std::map<std::string, Rational> counit;
  std::map<std::string, std::vector<std::tuple<std::string, std::string, Rational>>> comul;
  std::map<std::pair<std::string, std::string>, std::vector<std::pair<std::string, Rational>>> rack;

  Tensor delta(const std::string& a) const {
    Tensor t;
    auto it = comul.find(a);
    if (it == comul.end()) return t;
    for (const auto& [l, r, c] : it->second) add_to(t, {l, r}, c);
    return t;
  }
  Tensor tri(const std::string& a, const std::string& b) const {
    Tensor t;
    auto it = rack.find({a, b});
    if (it == rack.end()) return t;
    for (const auto& [l, c] : it->second) add_to(t, {l}, c);
    return t;
  }
  Rational eps(const std::string& a) const {
    auto it = counit.find(a);
    return it == counit.end() ? Rational(0) : it->second;
  }
};

/// Reads structure constants out of a library object (pure data extraction).
inline Structure extract(const QRack& r) {
  Structure s;
  const auto& c = r.coalgebra();
  const std::size_t d = r.dim();
  s.basis = c.labels();
  s.unit = c.labels()[r.unit()];
  for (std::size_t i = 0; i < d; ++i) {
    s.counit[s.basis[i]] = c.eps(i);
    for (const auto& [idx, coef] : c.comul().column(i)) {
      s.comul[s.basis[i]].emplace_back(s.basis[idx / d], s.basis[idx % d], coef);
    }
    for (std::size_t j = 0; j < d; ++j) {
      for (const auto& [k, coef] : r.tri(i, j)) s.rack[{s.basis[i], s.basis[j]}].emplace_back(s.basis[k], coef);
    }
  }
  return s;
}

/// Applies Δ to leg k of every term.
inline Tensor delta_leg(const Structure& s, const Tensor& t, std::size_t k) {
  Tensor out;
  for (const auto& [w, c] : t) {
    for (const auto& [pair, c2] : s.delta(w[k])) {
      Word nw(w.begin(), w.begin() + static_cast<long>(k));
      nw.push_back(pair[0]);
      nw.push_back(pair[1]);
      nw.insert(nw.end(), w.begin() + static_cast<long>(k) + 1, w.end());
      add_to(out, nw, c * c2);
    }
  }
  return out;
}

/// Rack product of two single-leg tensors.
inline Tensor tri(const Structure& s, const Tensor& a, const Tensor& b) {
  Tensor out;
  for (const auto& [wa, ca] : a) {
    for (const auto& [wb, cb] : b) {
      for (const auto& [w, c] : s.tri(wa[0], wb[0])) add_to(out, w, ca * cb * c);
    }
  }
  return out;
}

inline Tensor single(const std::string& a) { return Tensor{{Word{a}, Rational(1)}}; }

inline bool coassociative(const Structure& s) {
  for (const auto& a : s.basis) {
    const Tensor d = s.delta(a);
    if (delta_leg(s, d, 0) != delta_leg(s, d, 1)) return false;
  }
  return true;
}

inline bool selfdistributive(const Structure& s) {
  for (const auto& x : s.basis) {
    for (const auto& y : s.basis) {
      for (const auto& z : s.basis) {
        const Tensor left = tri(s, tri(s, single(x), single(y)), single(z));
        Tensor right;
        for (const auto& [w, c] : s.delta(z)) {
          for (const auto& [w2, c2] : tri(s, tri(s, single(x), single(w[0])), tri(s, single(y), single(w[1])))) {
            add_to(right, w2, c * c2);
          }
        }
        if (left != right) return false;
      }
    }
  }
  return true;
}

inline bool morphism(const Structure& s) {
  for (const auto& x : s.basis) {
    for (const auto& y : s.basis) {
      Tensor left;
      for (const auto& [w, c] : tri(s, single(x), single(y))) {
        for (const auto& [w2, c2] : s.delta(w[0])) add_to(left, w2, c * c2);
      }
      Tensor right;
      for (const auto& [wx, cx] : s.delta(x)) {
        for (const auto& [wy, cy] : s.delta(y)) {
          for (const auto& [l, cl] : s.tri(wx[0], wy[0])) {
            for (const auto& [r, cr] : s.tri(wx[1], wy[1])) add_to(right, {l[0], r[0]}, cx * cy * cl * cr);
          }
        }
      }
      if (left != right) return false;
    }
  }
  return true;
}

inline bool counit_multiplicative(const Structure& s) {
  for (const auto& x : s.basis) {
    for (const auto& y : s.basis) {
      Rational e(0);
      for (const auto& [w, c] : s.tri(x, y)) e += c * s.eps(w[0]);
      if (!(e == s.eps(x) * s.eps(y))) return false;
    }
  }
  return true;
}

inline bool unit_laws(const Structure& s) {
  for (const auto& x : s.basis) {
    if (s.tri(x, s.unit) != single(x)) return false;
    Tensor expect;
    add_to(expect, {s.unit}, s.eps(x));
    if (s.tri(s.unit, x) != expect) return false;
  }
  return true;
}

inline bool all_axioms(const Structure& s) {
  return coassociative(s) && selfdistributive(s) && morphism(s) && counit_multiplicative(s) && unit_laws(s);
}

}  // namespace rackkit::oracle
