#include "rackkit/hopf.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

namespace rackkit {

FilteredBialgebra::FilteredBialgebra(Parts parts) : p_(std::move(parts)) {
  const std::size_t n = p_.labels.size();
  if (p_.degrees.size() != n || p_.counit.dim() != n || p_.comul.cols() != n || p_.comul.rows() != n * n ||
      p_.unit >= n || p_.factorization.size() != n) {
    throw Error("filtered bialgebra '" + p_.name + "': inconsistent sizes");
  }
  for (const auto& [key, v] : p_.products) {
    if (key.first >= n || key.second >= n || v.dim() != n) throw Error("product table out of range");
  }
}

std::size_t FilteredBialgebra::index_of(const std::string& label) const {
  auto it = std::find(p_.labels.begin(), p_.labels.end(), label);
  if (it == p_.labels.end()) throw Error("unknown basis label '" + label + "' in " + p_.name);
  return static_cast<std::size_t>(it - p_.labels.begin());
}

int FilteredBialgebra::degree(const QVec& v) const {
  int d = 0;
  for (const auto& [i, c] : v) d = std::max(d, p_.degrees[i]);
  return d;
}

Rational FilteredBialgebra::eps(const QVec& v) const {
  Rational s(0);
  for (const auto& [i, c] : v) s += c * p_.counit.get(i);
  return s;
}

FinCoalgebra FilteredBialgebra::coalgebra() const {
  return FinCoalgebra(p_.labels, p_.comul, p_.counit, p_.unit);
}

QVec FilteredBialgebra::mul(std::size_t i, std::size_t j) const {
  auto it = p_.products.find({i, j});
  if (it == p_.products.end()) {
    throw TruncationOverflow(p_.name + ": product " + p_.labels.at(i) + "·" + p_.labels.at(j) +
                             " exceeds truncation degree " + std::to_string(p_.truncation));
  }
  return it->second;
}

QVec FilteredBialgebra::mul(const QVec& a, const QVec& b) const {
  QVec out(dim());
  for (const auto& [i, ca] : a) {
    for (const auto& [j, cb] : b) out.axpy(ca * cb, mul(i, j));
  }
  return out;
}

QVec FilteredBialgebra::mul_tensor(const QVec& x, const QVec& y) const {
  const std::size_t n = dim();
  QVec out(n * n);
  for (const auto& [ix, cx] : x) {
    for (const auto& [iy, cy] : y) {
      out.axpy(cx * cy, kron(mul(ix / n, iy / n), mul(ix % n, iy % n)));
    }
  }
  return out;
}

QVec FilteredBialgebra::apply_antipode(const QVec& v) const {
  if (!has_antipode()) throw PreconditionError(p_.name + " has no antipode");
  QVec out(dim());
  for (const auto& [i, c] : v) {
    if (!antipode_[i]) throw PreconditionError(p_.name + ": antipode of " + p_.labels[i] + " is not available");
    out.axpy(c, *antipode_[i]);
  }
  return out;
}

std::size_t FilteredBialgebra::antipode_coverage() const {
  return static_cast<std::size_t>(
      std::count_if(antipode_.begin(), antipode_.end(), [](const auto& s) { return s.has_value(); }));
}

void FilteredBialgebra::solve_antipode() {
  const std::size_t n = dim();
  enum class State { unseen, visiting, done };
  std::vector<State> state(n, State::unseen);
  std::vector<std::optional<QVec>> s(n);

  std::function<void(std::size_t)> visit = [&](std::size_t h) {
    if (state[h] != State::unseen) return;
    state[h] = State::visiting;
    Rational self(0);
    QVec rhs = p_.counit.get(h) * one();
    bool ok = true;
    for (const auto& [idx, c] : p_.comul.column(h)) {
      const std::size_t a = idx / n, b = idx % n;
      if (a == h) {
        if (b != p_.unit) ok = false;
        self += c;
        continue;
      }
      visit(a);
      if (!s[a]) {
        ok = false;
        continue;
      }
      try {
        rhs.axpy(-c, mul(*s[a], basis(b)));
      } catch (const TruncationOverflow&) {
        ok = false;
      }
    }
    if (ok && !self.is_zero()) s[h] = Rational(1) / self * rhs;
    state[h] = State::done;
  };
  for (std::size_t h = 0; h < n; ++h) visit(h);
  antipode_ = std::move(s);
}

bool FilteredBialgebra::is_commutative() const {
  for (const auto& [key, v] : p_.products) {
    auto it = p_.products.find({key.second, key.first});
    if (it != p_.products.end() && !(it->second == v)) return false;
  }
  return true;
}

BialgebraReport FilteredBialgebra::check() const {
  BialgebraReport r;
  const std::size_t n = dim();
  const FinCoalgebra c = coalgebra();
  r.coassociative = c.check_coassociative();
  r.counit = c.check_counit();

  auto attempt = [&](AxiomResult& slot, const std::vector<std::size_t>& w, const std::string& what,
                     const std::function<bool()>& body) {
    if (!slot.ok) return;
    try {
      ++r.checked;
      if (!body()) slot = AxiomResult::fail(w, what + " fails at " + tuple_label(p_.labels, w));
    } catch (const TruncationOverflow&) {
      --r.checked;
      ++r.skipped;
    }
  };

  for (std::size_t a = 0; a < n; ++a) {
    attempt(r.unital, {a}, "unit law", [&] { return mul(p_.unit, a) == basis(a) && mul(a, p_.unit) == basis(a); });
    for (std::size_t b = 0; b < n; ++b) {
      if (!defined(a, b)) {
        ++r.skipped;
        continue;
      }
      const QVec ab = mul(a, b);
      attempt(r.counit_mult, {a, b}, "ε(ab) = ε(a)ε(b)", [&] { return eps(ab) == eps(a) * eps(b); });
      attempt(r.multiplicative, {a, b}, "Δ(ab) = Δ(a)Δ(b)",
              [&] { return delta(ab) == mul_tensor(delta(basis(a)), delta(basis(b))); });
      for (std::size_t cc = 0; cc < n; ++cc) {
        attempt(r.associative, {a, b, cc}, "associativity",
                [&] { return mul(ab, basis(cc)) == mul(basis(a), mul(b, cc)); });
      }
    }
    for (const auto& [idx, coef] : p_.comul.column(a)) {
      if (p_.degrees[idx / n] > p_.degrees[a] || p_.degrees[idx % n] > p_.degrees[a]) {
        r.filtration = AxiomResult::fail({a}, "Δ leaves F_n⊗F_n at " + p_.labels[a]);
      }
    }
  }

  if (has_antipode()) {
    for (std::size_t h = 0; h < n; ++h) {
      attempt(r.antipode, {h}, "antipode identity", [&] {
        QVec left(n), right(n);
        for (const auto& [idx, coef] : p_.comul.column(h)) {
          const std::size_t a = idx / n, b = idx % n;
          if (!antipode_[a] || !antipode_[b]) throw TruncationOverflow("antipode unavailable");
          left.axpy(coef, mul(*antipode_[a], basis(b)));
          right.axpy(coef, mul(basis(a), *antipode_[b]));
        }
        const QVec target = eps(h) * one();
        return left == target && right == target;
      });
    }
  }
  return r;
}

FilteredBialgebra group_algebra(const std::vector<std::string>& elements,
                                const std::vector<std::vector<std::size_t>>& table, std::string name) {
  const std::size_t n = elements.size();
  if (n == 0 || table.size() != n) throw ParseError("group table must be square and non-empty");
  for (const auto& row : table) {
    if (row.size() != n) throw ParseError("group table must be square");
    for (auto v : row) {
      if (v >= n) throw ParseError("group table entry out of range");
    }
  }
  auto label = [&](std::size_t i) { return elements[i]; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw PreconditionError("not associative at (" + label(a) + "," + label(b) + "," + label(c) + ")");
        }
  std::optional<std::size_t> e;
  for (std::size_t a = 0; a < n && !e; ++a) {
    bool is_id = true;
    for (std::size_t b = 0; b < n; ++b) is_id = is_id && table[a][b] == b && table[b][a] == b;
    if (is_id) e = a;
  }
  if (!e) throw PreconditionError("group table has no identity element");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a][b] == *e && table[b][a] == *e) inv[a] = b;
    }
    if (inv[a] == n) throw PreconditionError("element " + label(a) + " has no inverse");
  }

  FilteredBialgebra::Parts p;
  p.name = std::move(name);
  p.labels = elements;
  p.degrees.assign(n, 0);
  p.truncation = 0;
  p.unit = *e;
  p.counit = QVec(n);
  p.comul = QMap(n * n, n);
  for (std::size_t a = 0; a < n; ++a) {
    p.counit.add(a, 1);
    p.comul.add(a * n + a, a, 1);
    for (std::size_t b = 0; b < n; ++b) p.products[{a, b}] = QVec::unit(n, table[a][b]);
    p.generators.push_back(a);
    p.factorization.push_back(a == *e ? std::vector<std::size_t>{} : std::vector<std::size_t>{a});
  }
  FilteredBialgebra h(std::move(p));
  std::vector<std::optional<QVec>> s(n);
  for (std::size_t a = 0; a < n; ++a) s[a] = QVec::unit(n, inv[a]);
  h.set_antipode(std::move(s));
  return h;
}

FilteredBialgebra cyclic_group_algebra(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group order must be positive");
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(a == 0 ? "e" : (a == 1 ? "s" : "s^" + std::to_string(a)));
    for (std::size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return group_algebra(names, table, "k[Z/" + std::to_string(n) + "]");
}

FilteredBialgebra s3_group_algebra() {
  // Permutations of {1,2,3} in one-line notation; product (ab)(i) = a(b(i)).
  const std::vector<std::array<int, 3>> perms = {{1, 2, 3}, {2, 1, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}};
  const std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i] - 1];
      table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return group_algebra(names, table, "k[S3]");
}

namespace {

using Exps = std::vector<int>;
using PolyTensor = std::map<std::pair<Exps, Exps>, Rational>;

Exps add_exps(const Exps& a, const Exps& b) {
  Exps c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

int total(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0); }

PolyTensor tensor_mul(const PolyTensor& x, const PolyTensor& y) {
  PolyTensor out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      auto& slot = out[{add_exps(kx.first, ky.first), add_exps(kx.second, ky.second)}];
      slot += cx * cy;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::string monomial_label(const std::vector<std::string>& vars, const Exps& e) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

// Exponent vectors of total degree exactly d, X-heavy first.
void enumerate(std::size_t nvars, int d, std::size_t pos, Exps& cur, std::vector<Exps>& out) {
  if (pos + 1 == nvars) {
    cur[pos] = d;
    out.push_back(cur);
    return;
  }
  for (int k = d; k >= 0; --k) {
    cur[pos] = k;
    enumerate(nvars, d - k, pos + 1, cur, out);
  }
}

}  // namespace

FilteredBialgebra polynomial_bialgebra(const std::vector<std::string>& vars,
                                       const std::vector<std::vector<PolyTerm>>& var_coproducts, int degree,
                                       std::string name) {
  const std::size_t nv = vars.size();
  if (nv == 0 || var_coproducts.size() != nv) throw Error("polynomial bialgebra needs one coproduct per variable");
  if (degree < 0) throw PreconditionError("truncation degree must be non-negative");
  std::vector<Exps> monos;
  for (int d = 0; d <= degree; ++d) {
    Exps cur(nv, 0);
    enumerate(nv, d, 0, cur, monos);
  }
  const std::size_t n = monos.size();
  std::map<Exps, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[monos[i]] = i;

  FilteredBialgebra::Parts p;
  p.name = std::move(name);
  p.truncation = degree;
  p.unit = 0;
  p.counit = QVec::unit(n, 0);
  p.comul = QMap(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    p.labels.push_back(monomial_label(vars, monos[i]));
    p.degrees.push_back(total(monos[i]));
    std::vector<std::size_t> word;
    for (std::size_t v = 0; v < nv; ++v) {
      for (int k = 0; k < monos[i][v]; ++k) word.push_back(v);
    }
    p.factorization.push_back(std::move(word));
  }
  for (std::size_t v = 0; v < nv; ++v) {
    Exps e(nv, 0);
    e[v] = 1;
    if (degree >= 1) p.generators.push_back(index.at(e));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Exps s = add_exps(monos[i], monos[j]);
      if (total(s) <= degree) p.products[{i, j}] = QVec::unit(n, index.at(s));
    }
  }
  std::vector<PolyTensor> var_delta(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    for (const auto& t : var_coproducts[v]) {
      if (t.left.size() != nv || t.right.size() != nv) throw Error("coproduct term has wrong arity");
      var_delta[v][{t.left, t.right}] += t.coeff;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    PolyTensor acc{{{Exps(nv, 0), Exps(nv, 0)}, Rational(1)}};
    for (std::size_t v = 0; v < nv; ++v) {
      for (int k = 0; k < monos[i][v]; ++k) acc = tensor_mul(acc, var_delta[v]);
    }
    for (const auto& [key, c] : acc) {
      auto l = index.find(key.first), r = index.find(key.second);
      if (l == index.end() || r == index.end()) {
        throw TruncationOverflow(p.name + ": coproduct of " + p.labels[i] + " leaves the truncation");
      }
      p.comul.add(l->second * n + r->second, i, c);
    }
  }
  FilteredBialgebra h(std::move(p));
  h.solve_antipode();
  return h;
}

FilteredBialgebra polynomial_hopf_k3(int degree) {
  if (degree < 1) throw PreconditionError("polynomial_hopf_k3 needs degree >= 1");
  const Exps one{0, 0, 0}, X{1, 0, 0}, Y{0, 1, 0}, Z{0, 0, 1};
  std::vector<std::vector<PolyTerm>> d = {
      {{one, X, Rational(1)}, {X, one, Rational(1)}, {Y, Z, Rational(1)}},
      {{one, Y, Rational(1)}, {Y, one, Rational(1)}},
      {{one, Z, Rational(1)}, {Z, one, Rational(1)}},
  };
  return polynomial_bialgebra({"X", "Y", "Z"}, d, degree, "k3[" + std::to_string(degree) + "]");
}

FilteredBialgebra polynomial_line(int degree, const std::string& var) {
  std::vector<std::vector<PolyTerm>> d = {{{{0}, {1}, Rational(1)}, {{1}, {0}, Rational(1)}}};
  return polynomial_bialgebra({var}, d, degree, "k[" + var + "]_" + std::to_string(degree));
}

QVec adjoint_action(const FilteredBialgebra& h, const QVec& a, const QVec& b) {
  const std::size_t n = h.dim();
  QVec out(n);
  for (const auto& [ib, cb] : b) {
    for (const auto& [idx, c] : h.comul().column(ib)) {
      const auto& s = h.has_antipode() ? h.antipode(idx / n) : std::optional<QVec>{};
      if (!s) throw PreconditionError(h.name() + ": antipode of " + h.labels()[idx / n] + " unavailable");
      out.axpy(cb * c, h.mul(h.mul(*s, a), h.basis(idx % n)));
    }
  }
  return out;
}

std::string format_combination(const std::vector<std::string>& labels, const QVec& v) {
  if (v.is_zero()) return "0";
  std::string s;
  // positive terms first so that g-e reads naturally
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& [i, c] : v) {
      if ((c.sign() > 0) != (pass == 0)) continue;
      std::string coef;
      if (c == Rational(1)) {
        coef = "+";
      } else if (c == Rational(-1)) {
        coef = "-";
      } else {
        coef = (c.sign() > 0 ? "+" : "") + c.str() + "*";
      }
      s += coef + labels[i];
    }
  }
  return s[0] == '+' ? s.substr(1) : s;
}

QRack rack_from_hopf(const FilteredBialgebra& h, const std::vector<QVec>& seed, std::vector<QVec>* basis_vectors) {
  if (!h.is_cocommutative()) throw PreconditionError(h.name() + " is not cocommutative");
  const std::size_t n = h.dim();
  for (const auto& s : seed) {
    if (s.dim() != n) throw Error("seed vector has wrong dimension");
    if (!h.eps(s).is_zero()) throw PreconditionError("seed vector " + format_combination(h.labels(), s) + " is not in ker ε");
  }
  // Reverse coordinates so that RREF pivots sit on the last (highest) basis
  // index; basis vectors then read like "g - e".
  auto flip = [n](const QVec& v) {
    QVec w(n);
    for (const auto& [i, c] : v) w.add(n - 1 - i, c);
    return w;
  };
  std::vector<QVec> gens;
  for (const auto& s : seed) gens.push_back(flip(s));
  Span closure(n, gens);
  for (std::size_t round = 0; round <= n; ++round) {
    const std::size_t before = closure.dim();
    for (const auto& v : closure.basis()) {
      for (std::size_t g : h.generators()) gens.push_back(flip(adjoint_action(h, flip(v), h.basis(g))));
    }
    closure = Span(n, gens);
    if (closure.dim() == before) break;
  }

  std::vector<QVec> cbasis{h.one()};
  for (auto it = closure.basis().rbegin(); it != closure.basis().rend(); ++it) {
    QVec v = flip(*it);
    // Normalise the leading coefficient on the highest index to 1 (RREF already does).
    cbasis.push_back(std::move(v));
  }
  const std::size_t d = cbasis.size();
  QMap embed(n, d);
  for (std::size_t j = 0; j < d; ++j) embed.set_column(j, cbasis[j]);
  const QMap embed2 = kron(embed, embed);

  std::vector<std::string> labels{"1"};
  for (std::size_t j = 1; j < d; ++j) labels.push_back(format_combination(h.labels(), cbasis[j]));

  QMap comul(d * d, d);
  QVec counit(d);
  for (std::size_t j = 0; j < d; ++j) {
    counit.add(j, h.eps(cbasis[j]));
    auto coords = solve(embed2, h.delta(cbasis[j]));
    if (!coords) throw VerificationError("Δ(" + labels[j] + ") leaves (k1 ⊕ C) ⊗ (k1 ⊕ C)");
    comul.set_column(j, *coords);
  }
  QMap prod(d, d * d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      auto coords = solve(embed, adjoint_action(h, cbasis[a], cbasis[b]));
      if (!coords) throw VerificationError(labels[a] + " ◁ " + labels[b] + " leaves k1 ⊕ C");
      prod.set_column(a * d + b, *coords);
    }
  }
  if (basis_vectors) *basis_vectors = cbasis;
  return QRack(FinCoalgebra(std::move(labels), std::move(comul), std::move(counit), 0), std::move(prod));
}

}  // namespace rackkit
