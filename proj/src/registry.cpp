#include "rackkit/registry.hpp"

#include <algorithm>

namespace rackkit {

LeibnizAlgebra leibniz_abelian1() { return make_leibniz({"x"}, {}); }

LeibnizAlgebra leibniz_leibniz2() { return make_leibniz({"x", "y"}, {{0, 0, 1, Rational(1)}}); }

LeibnizAlgebra leibniz_lie2() {
  return make_leibniz({"x", "y"}, {{0, 1, 0, Rational(1)}, {1, 0, 0, Rational(-1)}});
}

namespace {

QRack make_gg1() {
  // basis 1, g; g group-like, g◁g = 1
  QMap comul(4, 2);
  comul.add(0, 0, 1);
  comul.add(3, 1, 1);
  QVec counit(2);
  counit.add(0, 1);
  counit.add(1, 1);
  QMap prod(2, 4);
  prod.add(0, 0, 1);  // 1◁1 = 1
  prod.add(0, 1, 1);  // 1◁g = 1
  prod.add(1, 2, 1);  // g◁1 = g
  prod.add(0, 3, 1);  // g◁g = 1
  return QRack(FinCoalgebra({"1", "g"}, std::move(comul), std::move(counit), 0), std::move(prod));
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"nc5", "nc5_c0", "trivial1", "gg1", "conjZ2", "abelian1", "leibniz2", "lie2", "trivial2"};
}

bool is_builtin(const std::string& name) {
  const auto names = builtin_names();
  return name == "conj(Z2)" || std::find(names.begin(), names.end(), name) != names.end();
}

QRack builtin(const std::string& name) {
  if (name == "nc5") return builtin_nc5();
  if (name == "nc5_c0") return builtin_nc5_degeneration();
  if (name == "trivial1") return from_pointed_rack({"e"}, {{0}});
  if (name == "gg1") return make_gg1();
  if (name == "conjZ2" || name == "conj(Z2)") return from_pointed_rack({"0", "1"}, {{0, 0}, {1, 1}});
  if (name == "abelian1") return from_leibniz(leibniz_abelian1());
  if (name == "leibniz2") return from_leibniz(leibniz_leibniz2());
  if (name == "lie2") return from_leibniz(leibniz_lie2());
  if (name == "trivial2") return trivial_rack(primitive_coalgebra({"a", "b"}));
  throw Error("unknown built-in example '" + name + "'");
}

}  // namespace rackkit
