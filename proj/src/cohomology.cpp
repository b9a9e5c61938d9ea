#include "rackkit/cohomology.hpp"

#include <numeric>

namespace rackkit {

namespace {

constexpr std::size_t kMaxEntries = 2000000;

void budget(std::size_t d, std::size_t legs) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < legs; ++k) {
    total *= d;
    if (total > kMaxEntries) {
      throw ResourceError("cochain space C^{⊗" + std::to_string(legs) + "} with dim C = " + std::to_string(d) +
                          " exceeds the budget");
    }
  }
}

QMap id_pow(std::size_t d, std::size_t k) { return QMap::identity(checked_power(d, k)); }

QMap kron_all(const std::vector<QMap>& ms) {
  QMap acc = QMap::identity(1);
  for (const auto& m : ms) acc = kron(acc, m);
  return acc;
}

QMap counit_row(const FinCoalgebra& c) { return c.iterated_coproduct(0); }

void require_cocommutative(const QRack& r) {
  if (!r.coalgebra().check_cocommutative()) {
    throw PreconditionError("the deformation complex needs a cocommutative rack bialgebra");
  }
}

}  // namespace

QVec vec_of(const QMap& omega) {
  const std::size_t d = omega.rows();
  QVec v(omega.cols() * d);
  for (std::size_t t = 0; t < omega.cols(); ++t)
    for (const auto& [a, c] : omega.column(t)) v.add(t * d + a, c);
  return v;
}

QMap cochain_of(const QVec& v, std::size_t d, std::size_t n) {
  const std::size_t cols = checked_power(d, n);
  if (v.dim() != cols * d) throw Error("cochain vector has the wrong length");
  QMap m(d, cols);
  for (const auto& [idx, c] : v) m.add(idx % d, idx / d, c);
  return m;
}

QMap mu_n(const QRack& r, std::size_t n) {
  if (n == 0) throw PreconditionError("μⁿ needs n ≥ 1");
  const std::size_t d = r.dim();
  budget(d, n + 1);
  QMap acc = QMap::identity(d);
  for (std::size_t k = 2; k <= n; ++k) acc = r.product().after(kron(acc, QMap::identity(d)));
  return acc;
}

bool is_coderivation(const QRack& r, const QMap& omega, std::size_t n) {
  const auto& c = r.coalgebra();
  const QMap mu = mu_n(r, n);
  const QMap rhs = (kron(omega, mu) + kron(mu, omega)).after(c.tensor_coproduct(n));
  return c.comul().after(omega) == rhs;
}

Span coderivation_space(const QRack& r, std::size_t n) {
  require_cocommutative(r);
  const auto& c = r.coalgebra();
  const std::size_t d = c.dim();
  budget(d, n + 2);
  const std::size_t big = checked_power(d, n);
  const QMap mu = mu_n(r, n);
  const QMap td = c.tensor_coproduct(n);
  // Φ(E_{a,t}) = Δ∘E − (E⊗μⁿ + μⁿ⊗E)∘Δ_{C⊗n}, one column per (t, a).
  std::vector<QVec> cols(big * d, QVec(big * d * d));
  for (std::size_t t = 0; t < big; ++t) {
    for (std::size_t a = 0; a < d; ++a) {
      for (const auto& [k, coef] : c.comul().column(a)) cols[t * d + a].add(t * d * d + k, coef);
    }
  }
  for (std::size_t tp = 0; tp < big; ++tp) {
    for (const auto& [idx, coef] : td.column(tp)) {
      const std::size_t l = idx / big, rr = idx % big;
      for (std::size_t a = 0; a < d; ++a) {
        for (const auto& [m, mc] : mu.column(rr)) cols[l * d + a].add(tp * d * d + a * d + m, -coef * mc);
        for (const auto& [m, mc] : mu.column(l)) cols[rr * d + a].add(tp * d * d + m * d + a, -coef * mc);
      }
    }
  }
  QMap phi(big * d * d, big * d);
  for (std::size_t j = 0; j < cols.size(); ++j) phi.set_column(j, std::move(cols[j]));
  return kernel(phi);
}

QMap differential_term(const QRack& r, const QMap& omega, std::size_t n, DifferentialTerm which, std::size_t i) {
  const auto& c = r.coalgebra();
  const std::size_t d = c.dim();
  if (n == 0 || omega.rows() != d || omega.cols() != checked_power(d, n)) throw Error("cochain has the wrong shape");
  budget(d, n + 2);
  const QMap& mu = r.product();
  switch (which) {
    case DifferentialTerm::d_i1: {
      // ω(r₁…r_{i−1}, r_{i+1}⁽¹⁾…) ◁ μ^{n−i+2}(rᵢ, r_{i+1}⁽²⁾…)
      if (i < 1 || i > n) throw PreconditionError("d_{i,1} needs 1 ≤ i ≤ n");
      const std::size_t m = n + 1 - i;
      const QMap split = kron(id_pow(d, i), c.tensor_coproduct(m));
      std::vector<std::size_t> perm;
      for (std::size_t k = 0; k + 1 < i; ++k) perm.push_back(k);
      for (std::size_t k = 0; k < m; ++k) perm.push_back(i + k);
      perm.push_back(i - 1);
      for (std::size_t k = 0; k < m; ++k) perm.push_back(i + m + k);
      return mu.after(kron(omega, mu_n(r, m + 1))).after(tensor_permutation<Rational>(d, perm)).after(split);
    }
    case DifferentialTerm::d_j0: {
      // ω(r₁◁r_j⁽¹⁾, …, r_{j−1}◁r_j^{(j−1)}, r_{j+1}, …); j = 1 uses the counit
      if (i < 1 || i > n) throw PreconditionError("d_{j,0} needs 1 ≤ j ≤ n");
      if (i == 1) return omega.after(kron(counit_row(c), id_pow(d, n)));
      const std::size_t p = i - 1, rest = n + 1 - i;
      const QMap split = kron_all({id_pow(d, p), c.iterated_coproduct(p), id_pow(d, rest)});
      std::vector<std::size_t> perm;
      for (std::size_t k = 0; k < p; ++k) {
        perm.push_back(k);
        perm.push_back(p + k);
      }
      for (std::size_t k = 0; k < rest; ++k) perm.push_back(2 * p + k);
      std::vector<QMap> prods(p, mu);
      prods.push_back(id_pow(d, rest));
      return omega.after(kron_all(prods)).after(tensor_permutation<Rational>(d, perm)).after(split);
    }
    case DifferentialTerm::d_last: {
      // μⁿ(r₁, r₃⁽¹⁾…) ◁ ω(r₂, r₃⁽²⁾…)
      const std::size_t m = n - 1;
      const QMap split = kron(id_pow(d, 2), c.tensor_coproduct(m));
      std::vector<std::size_t> perm{0};
      for (std::size_t k = 0; k < m; ++k) perm.push_back(2 + k);
      perm.push_back(1);
      for (std::size_t k = 0; k < m; ++k) perm.push_back(2 + m + k);
      return mu.after(kron(mu_n(r, n), omega)).after(tensor_permutation<Rational>(d, perm)).after(split);
    }
  }
  throw Error("unknown differential term");
}

QMap deformation_differential(const QRack& r, const QMap& omega, std::size_t n) {
  QMap total(r.dim(), checked_power(r.dim(), n + 1));
  for (std::size_t i = 1; i <= n; ++i) {
    const Rational sign(i % 2 == 1 ? 1 : -1);
    total = total + sign * (differential_term(r, omega, n, DifferentialTerm::d_i1, i) -
                            differential_term(r, omega, n, DifferentialTerm::d_j0, i));
  }
  return total + Rational(n % 2 == 1 ? 1 : -1) * differential_term(r, omega, n, DifferentialTerm::d_last);
}

DifferentialResult differential(const QRack& r, std::size_t n) {
  DifferentialResult out;
  out.n = n;
  out.source = coderivation_space(r, n);
  const std::size_t d = r.dim();
  out.images = QMap(checked_power(d, n + 2), out.source.dim());
  for (std::size_t k = 0; k < out.source.dim(); ++k) {
    const QMap dw = deformation_differential(r, cochain_of(out.source.basis()[k], d, n), n);
    out.lands = out.lands && is_coderivation(r, dw, n + 1);
    out.images.set_column(k, vec_of(dw));
  }
  out.rank = rank(out.images);
  return out;
}

bool d_squared_zero(const QRack& r, std::size_t n) {
  if (n < 2) throw PreconditionError("d∘d needs n ≥ 2");
  const std::size_t d = r.dim();
  const Span src = coderivation_space(r, n - 1);
  for (const auto& v : src.basis()) {
    const QMap once = deformation_differential(r, cochain_of(v, d, n - 1), n - 1);
    if (!deformation_differential(r, once, n).is_zero()) return false;
  }
  return true;
}

ComplexReport deformation_complex(const QRack& r, std::size_t max_n) {
  ComplexReport rep;
  rep.max_n = max_n;
  std::vector<DifferentialResult> diffs;
  for (std::size_t n = 1; n <= max_n; ++n) {
    diffs.push_back(differential(r, n));
    rep.coder_dims.push_back(diffs.back().source.dim());
    rep.ranks.push_back(diffs.back().rank);
    rep.lands.push_back(diffs.back().lands);
    rep.d_squared_zero.push_back(n < 2 ? true : d_squared_zero(r, n));
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    const bool ok = rep.d_squared_zero[n - 1] && (n == max_n || rep.d_squared_zero[n]);
    if (!ok) {
      rep.betti.emplace_back();
      continue;
    }
    const std::size_t incoming = n >= 2 ? rep.ranks[n - 2] : 0;
    rep.betti.emplace_back(rep.coder_dims[n - 1] - rep.ranks[n - 1] - incoming);
  }
  return rep;
}

bool is_special_cocycle(const QRack& r, const QMap& omega, std::size_t n) {
  return is_coderivation(r, omega, n) && deformation_differential(r, omega, n).is_zero();
}

QMap loday_apply(const LeibnizAlgebra& l, const QMap& f, std::size_t n) {
  const std::size_t m = l.dim();
  if (n == 0 || f.rows() != m || f.cols() != checked_power(m, n)) throw Error("Loday cochain has the wrong shape");
  budget(m, n + 2);
  const std::size_t total = checked_power(m, n + 1);
  // f evaluated on a tuple whose slot `slot` holds vector v (others basis).
  auto f_with = [&](std::vector<std::size_t> tuple, std::size_t slot, const QVec& v) {
    QVec out(m);
    for (const auto& [k, c] : v) {
      tuple[slot] = k;
      out.axpy(c, f.column(encode_multi(tuple, m)));
    }
    return out;
  };
  QMap df(m, total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    const auto r = decode_multi(idx, m, n + 1);
    QVec val(m);
    for (std::size_t i = 1; i <= n; ++i) {
      const Rational sign(i % 2 == 1 ? 1 : -1);
      std::vector<std::size_t> hat;
      for (std::size_t k = 0; k <= n; ++k)
        if (k != i - 1) hat.push_back(r[k]);
      val.axpy(sign, l.br(f.column(encode_multi(hat, m)), QVec::unit(m, r[i - 1])));
      for (std::size_t k = 0; k + 1 < i; ++k) {
        val.axpy(-sign, f_with(hat, k, l.br(r[k], r[i - 1])));
      }
    }
    std::vector<std::size_t> tail(r.begin() + 1, r.end());
    val.axpy(Rational(n % 2 == 1 ? 1 : -1), l.br(QVec::unit(m, r[0]), f.column(encode_multi(tail, m))));
    df.set_column(idx, val);
  }
  return df;
}

QMap loday_differential(const LeibnizAlgebra& l, std::size_t n) {
  const std::size_t m = l.dim();
  const std::size_t dom = checked_power(m, n) * m;
  QMap out(checked_power(m, n + 1) * m, dom);
  for (std::size_t k = 0; k < dom; ++k) out.set_column(k, vec_of(loday_apply(l, cochain_of(QVec::unit(dom, k), m, n), n)));
  return out;
}

LodayReport loday_complex(const LeibnizAlgebra& l, std::size_t max_n) {
  LodayReport rep;
  rep.max_n = max_n;
  std::vector<QMap> ds;
  for (std::size_t n = 1; n <= max_n; ++n) {
    ds.push_back(loday_differential(l, n));
    rep.ranks.push_back(rank(ds.back()));
    rep.d_squared_zero.push_back(n < 2 ? true : ds[n - 1].after(ds[n - 2]).is_zero());
  }
  const std::size_t m = l.dim();
  for (std::size_t n = 1; n <= max_n; ++n) {
    const bool ok = rep.d_squared_zero[n - 1] && (n == max_n || rep.d_squared_zero[n]);
    if (!ok) {
      rep.betti.emplace_back();
      continue;
    }
    const std::size_t dim = checked_power(m, n) * m;
    rep.betti.emplace_back(dim - rep.ranks[n - 1] - (n >= 2 ? rep.ranks[n - 2] : 0));
  }
  return rep;
}

QMap embed_leibniz(const LeibnizAlgebra& l, const QMap& f, std::size_t n) {
  const std::size_t m = l.dim(), d = m + 1;
  if (f.rows() != m || f.cols() != checked_power(m, n)) throw Error("Loday cochain has the wrong shape");
  QMap w(d, checked_power(d, n));
  for (std::size_t t = 0; t < f.cols(); ++t) {
    auto digits = decode_multi(t, m, n);
    for (auto& x : digits) ++x;
    const std::size_t col = encode_multi(digits, d);
    for (const auto& [a, c] : f.column(t)) w.add(a + 1, col, c);
  }
  return w;
}

EmbeddingReport check_embedding_chain_map(const LeibnizAlgebra& l, std::size_t n) {
  EmbeddingReport rep;
  const QRack c = from_leibniz(l);
  const std::size_t m = l.dim();
  const std::size_t dom = checked_power(m, n) * m;
  std::vector<QVec> images;
  for (std::size_t k = 0; k < dom; ++k) {
    const QMap f = cochain_of(QVec::unit(dom, k), m, n);
    const QMap w = embed_leibniz(l, f, n);
    images.push_back(vec_of(w));
    if (rep.coderivation.ok && !is_coderivation(c, w, n)) {
      rep.coderivation = AxiomResult::fail({k}, "embedded cochain " + std::to_string(k) + " is not a coderivation");
    }
    if (rep.chain_map.ok &&
        !(deformation_differential(c, w, n) == embed_leibniz(l, loday_apply(l, f, n), n + 1))) {
      rep.chain_map = AxiomResult::fail({k}, "d_C(embed f) ≠ embed(d_L f) for basis cochain " + std::to_string(k));
    }
  }
  if (Span(images.empty() ? 0 : images[0].dim(), images).dim() != dom) {
    rep.injective = AxiomResult::fail({}, "embedding is not injective");
  }
  return rep;
}

RackBialgebra<DualRational> deform(const QRack& r0, const QMap& dcomul, const QMap& drack) {
  const auto& c = r0.coalgebra();
  const std::size_t d = c.dim();
  if (dcomul.rows() != d * d || dcomul.cols() != d || drack.rows() != d || drack.cols() != d * d) {
    throw Error("perturbations have the wrong shape");
  }
  const DualRational eps = DualRational::epsilon();
  auto perturb = [&](const QMap& base, const QMap& delta) {
    return lift<DualRational>(base) + eps * lift<DualRational>(delta);
  };
  Coalgebra<DualRational> cd(c.labels(), perturb(c.comul(), dcomul), lift<DualRational>(*c.counit()), c.unit());
  return RackBialgebra<DualRational>(std::move(cd), perturb(r0.product(), drack));
}

RackReport first_order_deformation_check(const QRack& r0, const QMap& dcomul, const QMap& drack) {
  return deform(r0, dcomul, drack).check();
}

}  // namespace rackkit
