#include "rackkit/ydrack.hpp"

#include <functional>

namespace rackkit {

namespace {

// Runs one identity instance. The body returns nullopt (or throws
// TruncationOverflow) when the instance cannot be formed in the truncation.
class Tally {
 public:
  Tally(std::size_t& checked, std::size_t& skipped) : checked_(checked), skipped_(skipped) {}

  void operator()(AxiomResult& slot, const std::vector<std::size_t>& w, const std::string& what,
                  const std::function<std::optional<bool>()>& body) {
    if (!slot.ok) return;
    std::optional<bool> r;
    try {
      r = body();
    } catch (const TruncationOverflow&) {
      r.reset();
    }
    if (!r) {
      ++skipped_;
      return;
    }
    ++checked_;
    if (!*r) slot = AxiomResult::fail(w, what);
  }

 private:
  std::size_t& checked_;
  std::size_t& skipped_;
};

QMap counit_map(const FilteredBialgebra& h) {
  QMap e(1, h.dim());
  for (std::size_t i = 0; i < h.dim(); ++i) e.add(0, i, h.eps(i));
  return e;
}

}  // namespace

std::optional<QVec> YDRackStructure::act(const QVec& c, const QVec& v) const {
  QVec out(c.dim());
  for (const auto& [k, coef] : v) {
    if (!action.at(k)) return std::nullopt;
    out.axpy(coef, action[k]->apply(c));
  }
  return out;
}

YDRackStructure yd_from_q(const QRack& rack, const FilteredBialgebra& h, const QMap& q) {
  const std::size_t nc = rack.dim();
  if (q.rows() != h.dim() || q.cols() != nc) throw Error("q must be a " + std::to_string(h.dim()) + "×" + std::to_string(nc) + " matrix");
  const auto& c = rack.coalgebra();
  std::vector<QMap> gen_action;
  for (std::size_t g : h.generators()) {
    auto pre = solve(q, h.basis(g));
    if (!pre) throw PreconditionError("generator " + h.labels()[g] + " of " + h.name() + " is not in the image of q");
    gen_action.push_back(QMap::from_basis(nc, nc, [&](std::size_t i) { return rack.tri(c.basis(i), *pre); }));
  }
  YDRackStructure s{rack, h, q, {}};
  for (std::size_t k = 0; k < h.dim(); ++k) {
    const auto& word = h.factorization()[k];
    if (word.empty() && k != h.unit()) {
      s.action.emplace_back();
      continue;
    }
    QMap m = QMap::identity(nc);
    for (auto g : word) m = gen_action.at(g).after(m);
    s.action.emplace_back(std::move(m));
  }
  return s;
}

YDRackStructure yd_from_hopf(const FilteredBialgebra& h, const std::vector<QVec>& seed) {
  std::vector<QVec> bv;
  QRack rack = rack_from_hopf(h, seed, &bv);
  const std::size_t nc = rack.dim();
  QMap q(h.dim(), nc);
  for (std::size_t i = 0; i < nc; ++i) q.set_column(i, bv[i]);
  YDRackStructure s{std::move(rack), h, q, {}};
  for (std::size_t k = 0; k < h.dim(); ++k) {
    try {
      QMap m(nc, nc);
      for (std::size_t i = 0; i < nc; ++i) {
        auto coords = solve(q, adjoint_action(h, bv[i], h.basis(k)));
        if (!coords) throw VerificationError("adjoint action leaves the rack subspace");
        m.set_column(i, *coords);
      }
      s.action.emplace_back(std::move(m));
    } catch (const TruncationOverflow&) {
      s.action.emplace_back();
    } catch (const PreconditionError&) {
      s.action.emplace_back();
    }
  }
  return s;
}

YDRackStructure yd_over_enveloping(const TruncatedEnveloping& u) {
  YDRackStructure s{u.source(), u.to_bialgebra(), u.q(), {}};
  for (std::size_t k = 0; k < u.dim(); ++k) s.action.emplace_back(u.action_matrix(k));
  return s;
}

YDReport check_yd_rack(const YDRackStructure& s) {
  YDReport r;
  Tally tally(r.checked, r.skipped);
  const auto& c = s.rack.coalgebra();
  const auto& h = s.h;
  const std::size_t nc = c.dim(), nh = h.dim();
  const auto& L = c.labels();
  const auto& HL = h.labels();
  if (s.q.rows() != nh || s.q.cols() != nc || s.action.size() != nh) throw Error("YD structure has inconsistent sizes");

  const QMap qq = kron(s.q, s.q);
  if (!(s.q.column(c.require_unit()) == h.one())) {
    r.coalgebra_morphism_q = AxiomResult::fail({c.require_unit()}, "q(1) ≠ 1");
  }
  for (std::size_t i = 0; i < nc; ++i) {
    tally(r.coalgebra_morphism_q, {i}, "Δ_H q ≠ (q⊗q)Δ_C at " + L[i], [&]() -> std::optional<bool> {
      return h.delta(s.q.column(i)) == qq.apply(c.delta(c.basis(i))) && h.eps(s.q.column(i)) == c.eps(i);
    });
  }

  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t b = 0; b < nc; ++b) {
      tally(r.eq_c, {a, b}, "a◁b ≠ a·q(b) at " + tuple_label(L, {a, b}), [&]() -> std::optional<bool> {
        auto rhs = s.act(c.basis(a), s.q.column(b));
        if (!rhs) return std::nullopt;
        return s.rack.tri(a, b) == *rhs;
      });
    }
  }

  const std::size_t nh2 = nh;
  for (std::size_t a = 0; a < nc; ++a) {
    for (std::size_t k = 0; k < nh; ++k) {
      tally(r.eq_d, {a, k}, "h₁q(a·h₂) ≠ q(a)h at (" + L[a] + "," + HL[k] + ")", [&]() -> std::optional<bool> {
        QVec lhs(nh);
        for (const auto& [idx, coef] : h.comul().column(k)) {
          auto ah = s.act(c.basis(a), h.basis(idx % nh2));
          if (!ah) return std::nullopt;
          lhs.axpy(coef, h.mul(h.basis(idx / nh2), s.q.apply(*ah)));
        }
        return lhs == h.mul(s.q.column(a), h.basis(k));
      });
    }
  }

  if (!s.action[h.unit()] || !(*s.action[h.unit()] == QMap::identity(nc))) {
    r.module = AxiomResult::fail({h.unit()}, "1_H does not act as the identity");
  }
  for (std::size_t g = 0; g < nh; ++g) {
    for (std::size_t k = 0; k < nh; ++k) {
      tally(r.module, {g, k}, "(a·g)·h ≠ a·(gh) at (" + HL[g] + "," + HL[k] + ")", [&]() -> std::optional<bool> {
        if (!h.defined(g, k) || !s.action[g] || !s.action[k]) return std::nullopt;
        const QVec gk = h.mul(g, k);
        for (std::size_t a = 0; a < nc; ++a) {
          auto rhs = s.act(c.basis(a), gk);
          if (!rhs) return std::nullopt;
          if (!(s.action[k]->apply(s.action[g]->apply(c.basis(a))) == *rhs)) return false;
        }
        return true;
      });
    }
  }

  for (std::size_t g : h.generators()) {
    for (std::size_t a = 0; a < nc; ++a) {
      tally(r.module_coalgebra, {a, g}, "module coalgebra fails at (" + L[a] + "," + HL[g] + ")",
            [&]() -> std::optional<bool> {
              auto ag = s.act(c.basis(a), h.basis(g));
              if (!ag) return std::nullopt;
              QVec rhs(nc * nc);
              for (const auto& [ic, cc] : c.comul().column(a)) {
                for (const auto& [ih, ch] : h.comul().column(g)) {
                  auto l = s.act(c.basis(ic / nc), h.basis(ih / nh));
                  auto rr = s.act(c.basis(ic % nc), h.basis(ih % nh));
                  if (!l || !rr) return std::nullopt;
                  rhs.axpy(cc * ch, kron(*l, *rr));
                }
              }
              return c.delta(*ag) == rhs && c.eps(*ag) == c.eps(a) * h.eps(g);
            });
    }
  }
  return r;
}

CanonicalCoaction canonical_coaction(const YDRackStructure& s) {
  const auto& c = s.rack.coalgebra();
  const auto& h = s.h;
  if (!h.is_cocommutative()) throw PreconditionError(h.name() + " is not cocommutative; the canonical coaction needs it");
  const std::size_t nc = c.dim(), nh = h.dim();
  const std::size_t unit = c.require_unit();
  const auto& L = c.labels();
  const auto& HL = h.labels();

  // Three parts of ρ(y): y₁⊗q(y₂), −1⊗q(y), ε(y)1⊗1.
  auto part = [&](int j, const QVec& y) {
    QVec out(nc * nh);
    if (j == 0) {
      for (const auto& [idx, coef] : c.delta(y)) out.axpy(coef, kron(c.basis(idx / nc), s.q.column(idx % nc)));
    } else if (j == 1) {
      out.axpy(Rational(-1), kron(c.basis(unit), s.q.apply(y)));
    } else {
      out.axpy(c.eps(y), kron(c.basis(unit), h.one()));
    }
    return out;
  };

  CanonicalCoaction out;
  out.rho = QMap(nc * nh, nc);
  for (std::size_t x = 0; x < nc; ++x) out.rho.set_column(x, part(0, c.basis(x)) + part(1, c.basis(x)) + part(2, c.basis(x)));

  auto& r = out.report;
  const QMap idh = QMap::identity(nh), idc = QMap::identity(nc);
  if (!(kron(out.rho, idh).after(out.rho) == kron(idc, h.comul()).after(out.rho))) {
    r.coassociative = AxiomResult::fail({}, "(ρ⊗id)ρ ≠ (id⊗Δ)ρ");
  }
  if (!(kron(idc, counit_map(h)).after(out.rho) == idc)) r.counit = AxiomResult::fail({}, "(id⊗ε)ρ ≠ id");

  Tally tally(r.checked, r.skipped);
  // (id⊗L_a) on C⊗H and (·b ⊗ R_e) on C⊗H
  auto left_mult = [&](std::size_t a, const QVec& t) {
    QVec o(nc * nh);
    for (const auto& [idx, coef] : t) o.axpy(coef, kron(c.basis(idx / nh), h.mul(h.basis(a), h.basis(idx % nh))));
    return o;
  };
  auto act_right = [&](std::size_t b, std::size_t e, const QVec& t) -> std::optional<QVec> {
    QVec o(nc * nh);
    for (const auto& [idx, coef] : t) {
      auto ab = s.act(c.basis(idx / nh), h.basis(b));
      if (!ab) return std::nullopt;
      o.axpy(coef, kron(*ab, h.mul(h.basis(idx % nh), h.basis(e))));
    }
    return o;
  };
  for (std::size_t x = 0; x < nc; ++x) {
    for (std::size_t k = 0; k < nh; ++k) {
      std::array<QVec, 3> lhs, rhs;
      bool formed = true;
      try {
        for (int j = 0; j < 3; ++j) {
          lhs[j] = QVec(nc * nh);
          rhs[j] = QVec(nc * nh);
          for (const auto& [idx, coef] : h.comul().column(k)) {
            const std::size_t h1 = idx / nh, h2 = idx % nh;
            auto xh2 = s.act(c.basis(x), h.basis(h2));
            auto rr = act_right(h1, h2, part(j, c.basis(x)));
            if (!xh2 || !rr) throw TruncationOverflow("action unavailable");
            lhs[j].axpy(coef, left_mult(h1, part(j, *xh2)));
            rhs[j].axpy(coef, *rr);
          }
        }
      } catch (const TruncationOverflow&) {
        formed = false;
      }
      const std::string where = "(" + L[x] + "," + HL[k] + ")";
      for (int j = 0; j < 3; ++j) {
        tally(r.terms[j], {x, k}, "YD term " + std::to_string(j + 1) + " differs at " + where,
              [&]() -> std::optional<bool> {
                if (!formed) return std::nullopt;
                return lhs[j] == rhs[j];
              });
      }
      tally(r.yd, {x, k}, "YD identity fails at " + where, [&]() -> std::optional<bool> {
        if (!formed) return std::nullopt;
        return lhs[0] + lhs[1] + lhs[2] == rhs[0] + rhs[1] + rhs[2];
      });
    }
  }
  return out;
}

QVec PartialMap::apply(const QVec& v) const {
  QVec out(rows);
  for (const auto& [i, c] : v) {
    if (!cols.at(i)) throw TruncationOverflow("map not defined within truncation");
    out.axpy(c, *cols[i]);
  }
  return out;
}

std::size_t PartialMap::defined() const {
  std::size_t n = 0;
  for (const auto& c : cols) n += c.has_value();
  return n;
}

Tetramodule::Tetramodule(FilteredBialgebra h, YDModule v) : h_(std::move(h)), v_(std::move(v)) {
  const std::size_t mv = v_.labels.size();
  if (v_.action.size() != h_.dim() || v_.coaction.cols() != mv || v_.coaction.rows() != mv * h_.dim()) {
    throw Error("YD module sizes do not match the bialgebra");
  }
}

std::string Tetramodule::label(std::size_t m) const {
  const std::size_t mv = v_.labels.size();
  return h_.labels()[m / mv] + "⊗" + v_.labels[m % mv];
}

QVec Tetramodule::act_v(const QVec& v, std::size_t g) const {
  if (!v_.action.at(g)) throw TruncationOverflow("action of " + h_.labels()[g] + " unavailable");
  return v_.action[g]->apply(v);
}

QVec Tetramodule::left(const QVec& g, const QVec& m) const {
  const std::size_t mv = v_.labels.size();
  QVec out(dim());
  for (const auto& [idx, c] : m)
    for (const auto& [gi, gc] : g) out.axpy(c * gc, kron(h_.mul(gi, idx / mv), QVec::unit(mv, idx % mv)));
  return out;
}

QVec Tetramodule::right(const QVec& m, const QVec& g) const {
  const std::size_t mv = v_.labels.size(), nh = h_.dim();
  QVec out(dim());
  for (const auto& [idx, c] : m) {
    for (const auto& [gi, gc] : g) {
      for (const auto& [di, dc] : h_.comul().column(gi)) {
        out.axpy(c * gc * dc, kron(h_.mul(idx / mv, di / nh), act_v(QVec::unit(mv, idx % mv), di % nh)));
      }
    }
  }
  return out;
}

QVec Tetramodule::lambda(const QVec& m) const {
  const std::size_t mv = v_.labels.size(), nh = h_.dim();
  QVec out(nh * dim());
  for (const auto& [idx, c] : m) {
    for (const auto& [di, dc] : h_.comul().column(idx / mv)) {
      out.add((di / nh) * dim() + (di % nh) * mv + idx % mv, c * dc);
    }
  }
  return out;
}

QVec Tetramodule::rho(const QVec& m) const {
  const std::size_t mv = v_.labels.size(), nh = h_.dim();
  QVec out(dim() * nh);
  for (const auto& [idx, c] : m) {
    for (const auto& [di, dc] : h_.comul().column(idx / mv)) {
      for (const auto& [vi, vc] : v_.coaction.column(idx % mv)) {
        const QVec prod = h_.mul(di % nh, vi % nh);
        for (const auto& [p, pc] : prod) out.add(((di / nh) * mv + vi / nh) * nh + p, c * dc * vc * pc);
      }
    }
  }
  return out;
}

LMReport check_lm(const Tetramodule& mod, const PartialMap& f) {
  LMReport r;
  Tally tally(r.checked, r.skipped);
  const auto& h = mod.h();
  const std::size_t nh = h.dim(), dm = mod.dim();
  const auto& HL = h.labels();

  auto eM = [&](std::size_t m) { return QVec::unit(dm, m); };
  // Leg-wise maps on tensor products.
  auto on_hm = [&](const QVec& t, const std::function<QVec(std::size_t, std::size_t)>& fn, std::size_t outdim) {
    QVec o(outdim);
    for (const auto& [idx, c] : t) o.axpy(c, fn(idx / dm, idx % dm));
    return o;
  };
  auto on_mh = [&](const QVec& t, const std::function<QVec(std::size_t, std::size_t)>& fn, std::size_t outdim) {
    QVec o(outdim);
    for (const auto& [idx, c] : t) o.axpy(c, fn(idx / nh, idx % nh));
    return o;
  };

  for (std::size_t m = 0; m < dm; ++m) {
    const std::string lm = mod.label(m);
    tally(r.bimodule, {m}, "unit does not act trivially on " + lm, [&]() -> std::optional<bool> {
      return mod.left(h.one(), eM(m)) == eM(m) && mod.right(eM(m), h.one()) == eM(m);
    });
    for (std::size_t g = 0; g < nh; ++g) {
      for (std::size_t k = 0; k < nh; ++k) {
        const std::vector<std::size_t> w{g, m, k};
        const std::string where = " at (" + HL[g] + "," + lm + "," + HL[k] + ")";
        tally(r.bimodule, w, "bimodule axiom fails" + where, [&]() -> std::optional<bool> {
          const QVec gk = h.mul(g, k);
          return mod.left(h.basis(g), mod.left(h.basis(k), eM(m))) == mod.left(gk, eM(m)) &&
                 mod.right(mod.right(eM(m), h.basis(g)), h.basis(k)) == mod.right(eM(m), gk) &&
                 mod.right(mod.left(h.basis(g), eM(m)), h.basis(k)) ==
                     mod.left(h.basis(g), mod.right(eM(m), h.basis(k)));
        });
      }
    }
  }

  for (std::size_t m = 0; m < dm; ++m) {
    const std::string lm = mod.label(m);
    tally(r.bicomodule, {m}, "bicomodule axiom fails at " + lm, [&]() -> std::optional<bool> {
      const QVec l = mod.lambda(eM(m));
      const QVec lc1 = on_hm(l, [&](std::size_t a, std::size_t b) { return kron(h.delta(h.basis(a)), eM(b)); },
                             nh * nh * dm);
      const QVec lc2 = on_hm(l, [&](std::size_t a, std::size_t b) { return kron(h.basis(a), mod.lambda(eM(b))); },
                             nh * nh * dm);
      const QVec le = on_hm(l, [&](std::size_t a, std::size_t b) { return h.eps(a) * eM(b); }, dm);
      const QVec p = mod.rho(eM(m));
      const QVec pc1 = on_mh(p, [&](std::size_t a, std::size_t b) { return kron(mod.rho(eM(a)), h.basis(b)); },
                             dm * nh * nh);
      const QVec pc2 = on_mh(p, [&](std::size_t a, std::size_t b) { return kron(eM(a), h.delta(h.basis(b))); },
                             dm * nh * nh);
      const QVec pe = on_mh(p, [&](std::size_t a, std::size_t b) { return h.eps(b) * eM(a); }, dm);
      return lc1 == lc2 && le == eM(m) && pc1 == pc2 && pe == eM(m);
    });
    tally(r.coactions_commute, {m}, "(λ⊗id)ρ ≠ (id⊗ρ)λ at " + lm, [&]() -> std::optional<bool> {
      const QVec a = on_mh(mod.rho(eM(m)), [&](std::size_t x, std::size_t b) { return kron(mod.lambda(eM(x)), h.basis(b)); },
                           nh * dm * nh);
      const QVec b = on_hm(mod.lambda(eM(m)), [&](std::size_t x, std::size_t y) { return kron(h.basis(x), mod.rho(eM(y))); },
                           nh * dm * nh);
      return a == b;
    });
    for (std::size_t g = 0; g < nh; ++g) {
      const std::string where = " at (" + HL[g] + "," + lm + ")";
      const QVec dg = h.delta(h.basis(g));
      // (g₁⊗g₂)·(a⊗m') etc.
      auto hm_left = [&](const QVec& t) {
        QVec o(nh * dm);
        for (const auto& [di, dc] : dg)
          o.axpy(dc, on_hm(t, [&](std::size_t a, std::size_t x) {
                   return kron(h.mul(di / nh, a), mod.left(h.basis(di % nh), eM(x)));
                 }, nh * dm));
        return o;
      };
      auto hm_right = [&](const QVec& t) {
        QVec o(nh * dm);
        for (const auto& [di, dc] : dg)
          o.axpy(dc, on_hm(t, [&](std::size_t a, std::size_t x) {
                   return kron(h.mul(a, di / nh), mod.right(eM(x), h.basis(di % nh)));
                 }, nh * dm));
        return o;
      };
      auto mh_left = [&](const QVec& t) {
        QVec o(dm * nh);
        for (const auto& [di, dc] : dg)
          o.axpy(dc, on_mh(t, [&](std::size_t x, std::size_t b) {
                   return kron(mod.left(h.basis(di / nh), eM(x)), h.mul(di % nh, b));
                 }, dm * nh));
        return o;
      };
      auto mh_right = [&](const QVec& t) {
        QVec o(dm * nh);
        for (const auto& [di, dc] : dg)
          o.axpy(dc, on_mh(t, [&](std::size_t x, std::size_t b) {
                   return kron(mod.right(eM(x), h.basis(di / nh)), h.mul(b, di % nh));
                 }, dm * nh));
        return o;
      };
      tally(r.compatibility[0], {g, m}, "λ(gm) ≠ Δ(g)λ(m)" + where, [&]() -> std::optional<bool> {
        return mod.lambda(mod.left(h.basis(g), eM(m))) == hm_left(mod.lambda(eM(m)));
      });
      tally(r.compatibility[1], {m, g}, "λ(mg) ≠ λ(m)Δ(g)" + where, [&]() -> std::optional<bool> {
        return mod.lambda(mod.right(eM(m), h.basis(g))) == hm_right(mod.lambda(eM(m)));
      });
      tally(r.compatibility[2], {g, m}, "ρ(gm) ≠ Δ(g)ρ(m)" + where, [&]() -> std::optional<bool> {
        return mod.rho(mod.left(h.basis(g), eM(m))) == mh_left(mod.rho(eM(m)));
      });
      tally(r.compatibility[3], {m, g}, "ρ(mg) ≠ ρ(m)Δ(g)" + where, [&]() -> std::optional<bool> {
        return mod.rho(mod.right(eM(m), h.basis(g))) == mh_right(mod.rho(eM(m)));
      });
      tally(r.bilinear, {g, m}, "f(gm) ≠ g f(m) or f(mg) ≠ f(m)g" + where, [&]() -> std::optional<bool> {
        return f.apply(mod.left(h.basis(g), eM(m))) == h.mul(h.basis(g), f.apply(eM(m))) &&
               f.apply(mod.right(eM(m), h.basis(g))) == h.mul(f.apply(eM(m)), h.basis(g));
      });
    }
    tally(r.coderivation, {m}, "Δf ≠ (id⊗f)λ + (f⊗id)ρ at " + lm, [&]() -> std::optional<bool> {
      const QVec lhs = h.delta(f.apply(eM(m)));
      const QVec a = on_hm(mod.lambda(eM(m)), [&](std::size_t x, std::size_t y) { return kron(h.basis(x), f.apply(eM(y))); },
                           nh * nh);
      const QVec b = on_mh(mod.rho(eM(m)), [&](std::size_t x, std::size_t y) { return kron(f.apply(eM(x)), h.basis(y)); },
                           nh * nh);
      return lhs == a + b;
    });
  }
  return r;
}

LMObject lm_bialgebra_object(const TruncatedEnveloping& u) {
  if (!u.source().coalgebra().check_cocommutative()) {
    throw PreconditionError("the bialgebra object needs a cocommutative rack bialgebra");
  }
  const YDRackStructure s = yd_over_enveloping(u);
  const CanonicalCoaction co = canonical_coaction(s);
  const auto& c = s.rack.coalgebra();
  const std::size_t nc = c.dim(), nh = s.h.dim(), mv = u.letters();
  const std::size_t unit = c.require_unit();

  // Č coordinates: drop the unit component of a vector in ker ε.
  std::vector<std::size_t> letter_of(nc, mv);
  for (std::size_t k = 0; k < mv; ++k) letter_of[u.letter_basis_index(k)] = k;
  auto to_v = [&](const QVec& x) {
    QVec o(mv);
    for (const auto& [i, coef] : x)
      if (i != unit) o.add(letter_of[i], coef);
    return o;
  };

  YDModule v;
  v.labels = u.letter_labels();
  for (std::size_t g = 0; g < nh; ++g) {
    v.action.emplace_back(QMap::from_basis(mv, mv, [&](std::size_t k) { return to_v(s.action[g]->apply(u.letter_vector(k))); }));
  }
  v.coaction = QMap(mv * nh, mv);
  for (std::size_t k = 0; k < mv; ++k) {
    QVec col(mv * nh);
    for (const auto& [idx, coef] : co.rho.apply(u.letter_vector(k))) {
      if (idx / nh == unit) continue;
      col.add(letter_of[idx / nh] * nh + idx % nh, coef);
    }
    v.coaction.set_column(k, col);
  }

  Tetramodule mod(s.h, std::move(v));
  PartialMap f{nh, {}};
  for (std::size_t m = 0; m < mod.dim(); ++m) {
    try {
      f.cols.emplace_back(s.h.mul(s.h.basis(m / mv), u.q().apply(u.letter_vector(m % mv))));
    } catch (const TruncationOverflow&) {
      f.cols.emplace_back();
    }
  }
  LMReport rep = check_lm(mod, f);
  return LMObject{std::move(mod), std::move(f), std::move(rep)};
}

UniversalMorphism universal_morphism(const TruncatedEnveloping& u, const YDRackStructure& target) {
  const auto& h = target.h;
  const auto& c = u.source().coalgebra();
  const std::size_t n = u.dim(), nh = h.dim(), nc = c.dim();
  if (target.q.cols() != nc || target.q.rows() != nh) throw Error("target q has the wrong shape");

  std::vector<QVec> letter_image;
  for (std::size_t k = 0; k < u.letters(); ++k) letter_image.push_back(target.q.apply(u.letter_vector(k)));
  auto word_image = [&](const WordSpace::Word& w) {
    QVec v = h.one();
    for (auto l : w) v = h.mul(v, letter_image[l]);
    return v;
  };
  auto image = [&](const TElement& t) {
    QVec v(nh);
    for (const auto& [w, coef] : t) v.axpy(coef, word_image(w));
    return v;
  };

  UniversalMorphism out;
  out.map = QMap(nh, n);
  for (std::size_t a = 0; a < n; ++a) out.map.set_column(a, word_image(u.normal_words()[a]));

  auto& r = out.report;
  Tally tally(r.checked, r.skipped);
  const auto UL = u.labels();
  for (std::size_t i = 0; i < nc; ++i) {
    tally(r.composes_to_q, {i}, "u∘q ≠ q_H at " + c.labels()[i],
          [&]() -> std::optional<bool> { return out.map.apply(u.q().column(i)) == target.q.column(i); });
  }
  const auto jb = u.ideal_basis();
  for (std::size_t k = 0; k < jb.size(); ++k) {
    tally(r.vanishes_on_j, {k}, "u does not vanish on J", [&]() -> std::optional<bool> { return image(jb[k]).is_zero(); });
  }
  for (const auto& g : u.instances()) {
    tally(r.vanishes_on_j, {g.x, g.y}, "u does not vanish on a generator of J",
          [&]() -> std::optional<bool> { return image(g.value).is_zero(); });
  }
  for (std::size_t a = 0; a < n; ++a) {
    tally(r.counit, {a}, "ε_H∘u ≠ ε at " + UL[a],
          [&]() -> std::optional<bool> { return h.eps(out.map.column(a)) == u.eps(QVec::unit(n, a)); });
    for (std::size_t b = 0; b < n; ++b) {
      tally(r.multiplicative, {a, b}, "u(ab) ≠ u(a)u(b) at " + tuple_label(UL, {a, b}), [&]() -> std::optional<bool> {
        const QVec ab = u.mul(QVec::unit(n, a), QVec::unit(n, b));
        return out.map.apply(ab) == h.mul(out.map.column(a), out.map.column(b));
      });
    }
    if (u.coideal()) {
      const QMap uu = kron(out.map, out.map);
      tally(r.comultiplicative, {a}, "Δ_H u ≠ (u⊗u)Δ at " + UL[a], [&]() -> std::optional<bool> {
        return h.delta(out.map.column(a)) == uu.apply(u.delta(QVec::unit(n, a)));
      });
    } else {
      r.comultiplicative = AxiomResult::fail({}, "U(C) has no coproduct at this truncation");
    }
    for (std::size_t x = 0; x < nc; ++x) {
      tally(r.equivariant, {x, a}, "x·s ≠ x·u(s) at (" + c.labels()[x] + "," + UL[a] + ")", [&]() -> std::optional<bool> {
        auto rhs = target.act(c.basis(x), out.map.column(a));
        if (!rhs) return std::nullopt;
        return u.action_matrix(a).apply(c.basis(x)) == *rhs;
      });
    }
  }

  for (int k = 0; k <= u.degree(); ++k) {
    std::vector<QVec> cols;
    for (std::size_t a = 0; a < n; ++a)
      if (u.normal_words()[a].size() <= static_cast<std::size_t>(k)) cols.push_back(out.map.column(a));
    QMap m(nh, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
    r.kernel_dims.push_back(cols.size() - rank(m));
  }
  return out;
}

}  // namespace rackkit
