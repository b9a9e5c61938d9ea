#include "rackkit/rack.hpp"

namespace rackkit {

LeibnizAlgebra::LeibnizAlgebra(std::vector<std::string> labels, QMap bracket)
    : labels_(std::move(labels)), bracket_(std::move(bracket)) {
  const std::size_t d = labels_.size();
  if (bracket_.rows() != d || bracket_.cols() != d * d) throw Error("bracket has wrong shape");
}

AxiomResult LeibnizAlgebra::check_leibniz() const {
  const std::size_t d = dim();
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t y = 0; y < d; ++y) {
      for (std::size_t z = 0; z < d; ++z) {
        const QVec ex = QVec::unit(d, x), ez = QVec::unit(d, z);
        const QVec left = br(br(x, y), ez);
        const QVec right = br(br(x, z), QVec::unit(d, y)) + br(ex, br(y, z));
        if (!(left == right)) {
          return AxiomResult::fail({x, y, z}, "right Leibniz identity fails at " + tuple_label(labels_, {x, y, z}));
        }
      }
    }
  }
  return AxiomResult::pass();
}

LeibnizAlgebra make_leibniz(std::vector<std::string> labels, const std::vector<BracketEntry>& entries) {
  const std::size_t d = labels.size();
  QMap b(d, d * d);
  for (const auto& e : entries) {
    if (e.i >= d || e.j >= d || e.k >= d) throw Error("bracket entry out of range");
    b.add(e.k, e.i * d + e.j, e.c);
  }
  return LeibnizAlgebra(std::move(labels), std::move(b));
}

std::optional<std::array<std::size_t, 3>> set_selfdist_violation(const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  for (const auto& row : table) {
    if (row.size() != n) throw ParseError("rack table must be square");
    for (auto v : row) {
      if (v >= n) throw ParseError("rack table entry out of range");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[table[a][c]][table[b][c]]) return std::array{a, b, c};
      }
    }
  }
  return std::nullopt;
}

QRack from_pointed_rack(const std::vector<std::string>& elements, const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = elements.size();
  if (table.size() != n) throw ParseError("rack table size does not match element count");
  if (auto bad = set_selfdist_violation(table)) {
    const auto& [a, b, c] = *bad;
    throw PreconditionError("table is not self-distributive at (" + elements[a] + "," + elements[b] + "," +
                            elements[c] + ")");
  }
  const std::size_t d = n + 1;
  std::vector<std::string> labels{"1"};
  for (const auto& e : elements) labels.push_back("g_" + e);
  QMap comul(d * d, d);
  QVec counit(d);
  for (std::size_t i = 0; i < d; ++i) {
    comul.add(i * d + i, i, 1);
    counit.add(i, 1);
  }
  QMap prod(d, d * d);
  for (std::size_t a = 0; a < d; ++a) {
    prod.add(a, a * d + 0, 1);  // a ◁ 1 = a
    if (a != 0) prod.add(0, 0 * d + a, 1);  // 1 ◁ g = ε(g) 1 = 1
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) prod.add(table[a][b] + 1, (a + 1) * d + (b + 1), 1);
  }
  return QRack(FinCoalgebra(std::move(labels), std::move(comul), std::move(counit), 0), std::move(prod));
}

FinCoalgebra primitive_coalgebra(const std::vector<std::string>& names, const std::string& unit_label) {
  const std::size_t d = names.size() + 1;
  std::vector<std::string> labels{unit_label};
  labels.insert(labels.end(), names.begin(), names.end());
  QMap comul(d * d, d);
  comul.add(0, 0, 1);
  for (std::size_t k = 1; k < d; ++k) {
    comul.add(0 * d + k, k, 1);
    comul.add(k * d + 0, k, 1);
  }
  return FinCoalgebra(std::move(labels), std::move(comul), QVec::unit(d, 0), 0);
}

QRack from_leibniz(const LeibnizAlgebra& l, const std::string& unit_label) {
  if (auto res = l.check_leibniz(); !res.ok) throw PreconditionError(res.detail);
  FinCoalgebra c = primitive_coalgebra(l.labels(), unit_label);
  const std::size_t n = l.dim();
  const std::size_t d = n + 1;
  QMap prod(d, d * d);
  prod.add(0, 0, 1);
  for (std::size_t a = 1; a < d; ++a) prod.add(a, a * d + 0, 1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& [k, coef] : l.br(a, b)) prod.add(k + 1, (a + 1) * d + (b + 1), coef);
    }
  }
  return QRack(std::move(c), std::move(prod));
}

LeibnizAlgebra leibniz_of(const QRack& r) {
  const auto& c = r.coalgebra();
  const std::size_t u = r.unit();
  const std::size_t d = r.dim();
  std::vector<std::size_t> keep;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    if (i == u) continue;
    if (!c.eps(i).is_zero() || !c.is_primitive(c.basis(i))) {
      throw PreconditionError("basis element " + c.labels()[i] + " is not a primitive of counit zero");
    }
    keep.push_back(i);
    labels.push_back(c.labels()[i]);
  }
  const std::size_t n = keep.size();
  QMap b(n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t bb = 0; bb < n; ++bb) {
      for (const auto& [k, coef] : r.tri(keep[a], keep[bb])) {
        if (k == u) throw PreconditionError("rack product leaves the primitive part");
        const auto pos = static_cast<std::size_t>(std::find(keep.begin(), keep.end(), k) - keep.begin());
        b.add(pos, a * n + bb, coef);
      }
    }
  }
  return LeibnizAlgebra(std::move(labels), std::move(b));
}

namespace {

QMap nc5_product() {
  // basis 1,x,y,z,t = 0..4
  const std::size_t d = 5;
  QMap prod(d, d * d);
  prod.add(0, 0, 1);
  for (std::size_t a = 1; a < d; ++a) prod.add(a, a * d + 0, 1);
  prod.add(4, 1 * d + 3, 1);  // x ◁ z = t
  prod.add(4, 1 * d + 2, 1);  // x ◁ y = t
  return prod;
}

}  // namespace

QRack builtin_nc5() {
  FinCoalgebra base = primitive_coalgebra({"x", "y", "z", "t"});
  QMap comul = base.comul();
  comul.add(2 * 5 + 3, 1, 1);  // y ⊗ z in Δ(x)
  FinCoalgebra c(base.labels(), std::move(comul), base.counit(), 0);
  return QRack(std::move(c), nc5_product());
}

QRack builtin_nc5_degeneration() {
  return QRack(primitive_coalgebra({"x", "y", "z", "t"}), nc5_product());
}

}  // namespace rackkit
