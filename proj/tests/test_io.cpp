#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rackkit/cohomology.hpp"
#include "rackkit/io.hpp"
#include "rackkit/registry.hpp"

using namespace rackkit;
using io::Json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QRack rack_of(const io::AnyStructure& s) {
  const auto& q = std::get<io::Structure<Rational>>(s);
  REQUIRE(q.rack.has_value());
  return *q.rack;
}

template <class K>
bool same(const RackBialgebra<K>& a, const RackBialgebra<K>& b) {
  const auto& ca = a.coalgebra();
  const auto& cb = b.coalgebra();
  return ca.labels() == cb.labels() && ca.comul() == cb.comul() && *ca.counit() == *cb.counit() &&
         ca.unit() == cb.unit() && a.product() == b.product();
}

Json minimal() {
  return Json::parse(R"({
    "ring": "Q", "basis": ["1", "x"], "unit": "1", "counit": {"1": "1"},
    "coproduct": {"1": [["1", "1", "1"]], "x": [["1", "x", "1"], ["x", "1", "1"]]},
    "rack": {"1,1": [["1", "1"]], "x,1": [["x", "1"]]}
  })");
}

std::string error_of(const Json& doc) {
  try {
    io::parse(doc);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("nc5 serializes with the non-primitive coproduct of x") {
  const Json j = io::serialize(builtin("nc5"));
  const Json expect = Json::parse(R"([["1","x","1"],["x","1","1"],["y","z","1"]])");
  CHECK(j["coproduct"]["x"] == expect);
  CHECK(j["ring"] == "Q");
  CHECK(j["rack"]["x,y"] == Json::parse(R"([["t","1"]])"));
}

TEST_CASE("structure files round trip for every built-in") {
  for (const auto& name : builtin_names()) {
    const QRack r = builtin(name);
    const Json j = io::serialize(r, Json{{"name", name}});
    const auto back = io::parse_text(io::dump(j));
    CAPTURE(name);
    CHECK(same(rack_of(back), r));
    CHECK(std::get<io::Structure<Rational>>(back).metadata["name"] == name);
    CHECK(io::dump(io::serialize(rack_of(back), Json{{"name", name}})) == io::dump(j));
  }
}

TEST_CASE("shipped data files match the registry byte for byte") {
  for (const auto& name : builtin_names()) {
    const std::string path = std::string(RACKKIT_DATA_DIR) + "/" + name + ".json";
    CAPTURE(path);
    CHECK(slurp(path) == io::dump(io::serialize(builtin(name), Json{{"name", name}})));
  }
}

TEST_CASE("dual-number structures round trip") {
  const QRack c0 = builtin("nc5_c0");
  QMap dcomul(25, 5);
  dcomul.add(2 * 5 + 3, 1, 1);
  const auto d = deform(c0, dcomul, QMap(5, 25));
  const Json j = io::serialize(d);
  CHECK(j["ring"] == "Q[eps]");
  CHECK(j["coproduct"]["x"].dump().find("0+1@eps") != std::string::npos);
  const auto back = std::get<io::Structure<DualRational>>(io::parse_text(io::dump(j)));
  REQUIRE(back.rack.has_value());
  CHECK(same(*back.rack, d));
  CHECK_THROWS_AS(io::parse_rational(j), ParseError);
}

TEST_CASE("an empty rack section yields a coalgebra only") {
  Json j = minimal();
  j["rack"] = Json::object();
  const auto s = std::get<io::Structure<Rational>>(io::parse(j));
  CHECK_FALSE(s.rack.has_value());
  CHECK(s.coalgebra.dim() == 2);
  j.erase("rack");
  CHECK_FALSE(std::get<io::Structure<Rational>>(io::parse(j)).rack.has_value());
  j.erase("unit");
  const auto c = std::get<io::Structure<Rational>>(io::parse(j)).coalgebra;
  CHECK_FALSE(c.has_unit());
  CHECK(io::serialize(c).count("unit") == 0);
}

TEST_CASE("malformed files are rejected with field diagnostics") {
  Json j = minimal();
  j["coproduct"]["x"][0][2] = "2/4";
  CHECK(error_of(j).find("coproduct.x[0][2]") != std::string::npos);

  j = minimal();
  j["coproduct"]["x"][0][2] = 1;
  CHECK(error_of(j).find("must be a string") != std::string::npos);

  j = minimal();
  j["coproduct"]["x"].push_back(Json::array({"1", "x", "1"}));
  CHECK(error_of(j).find("duplicate entry") != std::string::npos);

  j = minimal();
  j["rack"]["x,1"].push_back(Json::array({"x", "2"}));
  CHECK(error_of(j).find("rack.x,1[1]") != std::string::npos);

  j = minimal();
  j["coproduct"]["x"][1][0] = "w";
  CHECK(error_of(j).find("unknown label 'w'") != std::string::npos);

  j = minimal();
  j["rack"]["x,w"] = Json::array();
  CHECK(error_of(j).find("unknown label") != std::string::npos);

  j = minimal();
  j["coproduct"].erase("x");
  CHECK(error_of(j).find("explicit coproduct") != std::string::npos);

  j = minimal();
  j["basis"] = Json::array({"1", "1"});
  CHECK(error_of(j).find("duplicate label") != std::string::npos);

  j = minimal();
  j["ring"] = "Z";
  CHECK(error_of(j).find("ring") != std::string::npos);

  j = minimal();
  j.erase("unit");
  CHECK(error_of(j).find("unit") != std::string::npos);
}

TEST_CASE("duplicate keys and syntax errors in the text are reported") {
  const std::string dup = R"({"ring": "Q", "ring": "Q", "basis": ["1"], "coproduct": {"1": [["1","1","1"]]}})";
  try {
    io::parse_text(dup);
    FAIL("accepted a duplicate key");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("duplicate key") != std::string::npos);
  }
  try {
    io::parse_text("{\n  \"ring\": \"Q\",\n  \"basis\": [\"1\",\n}");
    FAIL("accepted broken JSON");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
}

TEST_CASE("basis size is capped by RACKKIT_MAX_DIM") {
  ::setenv("RACKKIT_MAX_DIM", "3", 1);
  CHECK(io::max_dim() == 3);
  CHECK_NOTHROW(io::parse(minimal()));
  CHECK_NOTHROW(io::serialize(builtin("nc5")));
  CHECK_THROWS_AS(io::parse(io::serialize(builtin("nc5"))), ResourceError);
  ::setenv("RACKKIT_MAX_DIM", "zero", 1);
  CHECK_THROWS_AS(io::max_dim(), ParseError);
  ::unsetenv("RACKKIT_MAX_DIM");
  CHECK(io::max_dim() == 64);
}

TEST_CASE("perturbation files") {
  const QRack c0 = builtin("nc5_c0");
  const auto p = io::parse_perturbation(c0, Json::parse(R"({"coproduct": {"x": [["y","z","1"]]}})"));
  CHECK(p.dcomul.column(1) == QVec::unit(25, 2 * 5 + 3));
  CHECK(p.drack.column(0).is_zero());
  CHECK_THROWS_AS(io::parse_perturbation(c0, Json::parse(R"({"comul": {}})")), ParseError);
  CHECK_THROWS_AS(io::parse_perturbation(c0, Json::parse(R"({"rack": {"x,q": []}})")), ParseError);
}
