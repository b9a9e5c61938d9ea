#include "rackkit/io.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace rackkit::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError(where + ": " + what);
}

const Json& require(const Json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) fail(key, "missing field");
  return *it;
}

template <class K>
K scalar(const Json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "scalar must be a string");
  try {
    return K::parse(v.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

class Labels {
 public:
  explicit Labels(const Json& basis) {
    if (!basis.is_array() || basis.empty()) fail("basis", "must be a non-empty array of labels");
    if (basis.size() > max_dim()) {
      throw ResourceError("basis: dimension " + std::to_string(basis.size()) + " exceeds RACKKIT_MAX_DIM=" +
                          std::to_string(max_dim()));
    }
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const std::string where = "basis[" + std::to_string(i) + "]";
      if (!basis[i].is_string()) fail(where, "label must be a string");
      const auto s = basis[i].get<std::string>();
      if (s.empty() || s.find(',') != std::string::npos) fail(where, "label must be non-empty and contain no comma");
      if (!index_.emplace(s, i).second) fail(where, "duplicate label '" + s + "'");
      names_.push_back(s);
    }
  }
  std::size_t at(const Json& v, const std::string& where) const {
    if (!v.is_string()) fail(where, "label must be a string");
    auto it = index_.find(v.get<std::string>());
    if (it == index_.end()) fail(where, "unknown label '" + v.get<std::string>() + "'");
    return it->second;
  }
  std::size_t at(const std::string& s, const std::string& where) const { return at(Json(s), where); }
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
};

template <class K>
LinMap<K> read_coproduct(const Json& section, const Labels& lab, bool all_required, const char* name) {
  const std::size_t d = lab.size();
  LinMap<K> comul(d * d, d);
  if (!section.is_object()) fail(name, "must be an object");
  for (const auto& [key, list] : section.items()) {
    const std::string base = std::string(name) + "." + key;
    const std::size_t a = lab.at(key, base);
    if (!list.is_array()) fail(base, "must be a list of [label, label, scalar]");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string where = base + "[" + std::to_string(k) + "]";
      const auto& e = list[k];
      if (!e.is_array() || e.size() != 3) fail(where, "entry must be [label, label, scalar]");
      const std::size_t l = lab.at(e[0], where + "[0]"), r = lab.at(e[1], where + "[1]");
      if (!seen.emplace(l, r).second) fail(where, "duplicate entry for " + lab.names()[l] + "⊗" + lab.names()[r]);
      comul.add(l * d + r, a, scalar<K>(e[2], where + "[2]"));
    }
  }
  if (all_required) {
    for (const auto& s : lab.names()) {
      if (!section.contains(s)) fail(std::string(name) + "." + s, "every basis element needs an explicit coproduct");
    }
  }
  return comul;
}

template <class K>
LinMap<K> read_rack(const Json& section, const Labels& lab, const char* name) {
  const std::size_t d = lab.size();
  LinMap<K> prod(d, d * d);
  if (!section.is_object()) fail(name, "must be an object");
  for (const auto& [key, list] : section.items()) {
    const std::string base = std::string(name) + "." + key;
    const auto comma = key.find(',');
    if (comma == std::string::npos) fail(base, "key must be \"a,b\"");
    const std::size_t a = lab.at(key.substr(0, comma), base);
    const std::size_t b = lab.at(key.substr(comma + 1), base);
    if (!list.is_array()) fail(base, "must be a list of [label, scalar]");
    std::set<std::size_t> seen;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string where = base + "[" + std::to_string(k) + "]";
      const auto& e = list[k];
      if (!e.is_array() || e.size() != 2) fail(where, "entry must be [label, scalar]");
      const std::size_t c = lab.at(e[0], where + "[0]");
      if (!seen.insert(c).second) fail(where, "duplicate entry for " + lab.names()[c]);
      prod.add(c, a * d + b, scalar<K>(e[1], where + "[1]"));
    }
  }
  return prod;
}

template <class K>
Structure<K> read(const Json& doc) {
  const Labels lab(require(doc, "basis"));
  const std::size_t d = lab.size();

  SparseVec<K> counit(d);
  if (auto it = doc.find("counit"); it != doc.end()) {
    if (!it->is_object()) fail("counit", "must be an object");
    for (const auto& [key, v] : it->items()) counit.add(lab.at(key, "counit." + key), scalar<K>(v, "counit." + key));
  }
  std::optional<std::size_t> unit;
  if (auto it = doc.find("unit"); it != doc.end() && !it->is_null()) unit = lab.at(*it, "unit");

  LinMap<K> comul = read_coproduct<K>(require(doc, "coproduct"), lab, true, "coproduct");

  Structure<K> s;
  s.coalgebra = Coalgebra<K>(lab.names(), std::move(comul), std::move(counit), unit);
  if (auto it = doc.find("rack"); it != doc.end() && !it->is_null() && !it->empty()) {
    if (!unit) fail("unit", "a rack section needs a unit label");
    s.rack = RackBialgebra<K>(s.coalgebra, read_rack<K>(*it, lab, "rack"));
  }
  if (auto it = doc.find("metadata"); it != doc.end()) {
    if (!it->is_object()) fail("metadata", "must be an object");
    s.metadata = *it;
  }
  return s;
}

template <class K>
Json write_coalgebra(const Coalgebra<K>& c, const char* ring, const Json& metadata) {
  const std::size_t d = c.dim();
  const auto& lab = c.labels();
  Json j;
  j["ring"] = ring;
  j["basis"] = lab;
  if (c.unit()) j["unit"] = lab[*c.unit()];
  Json counit = Json::object();
  for (std::size_t i = 0; i < d; ++i) {
    if (!c.eps(i).is_zero()) counit[lab[i]] = c.eps(i).str();
  }
  j["counit"] = counit;
  Json cop = Json::object();
  for (std::size_t a = 0; a < d; ++a) {
    Json list = Json::array();
    for (const auto& [idx, coef] : c.comul().column(a)) list.push_back({lab[idx / d], lab[idx % d], coef.str()});
    cop[lab[a]] = list;
  }
  j["coproduct"] = cop;
  if (!metadata.is_null() && !metadata.empty()) j["metadata"] = metadata;
  return j;
}

template <class K>
Json write_rack(const RackBialgebra<K>& r, const char* ring, const Json& metadata) {
  Json j = write_coalgebra(r.coalgebra(), ring, metadata);
  const std::size_t d = r.dim();
  const auto& lab = r.labels();
  Json rack = Json::object();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      Json list = Json::array();
      for (const auto& [k, coef] : r.tri(a, b)) list.push_back({lab[k], coef.str()});
      if (!list.empty()) rack[lab[a] + "," + lab[b]] = list;
    }
  }
  j["rack"] = rack;
  return j;
}

// Rejects repeated keys inside one object, which the JSON reader would
// otherwise collapse silently.
Json parse_checked(std::string_view text) {
  std::vector<std::set<std::string>> keys;
  auto cb = [&](int, Json::parse_event_t ev, Json& parsed) {
    switch (ev) {
      case Json::parse_event_t::object_start:
        keys.emplace_back();
        break;
      case Json::parse_event_t::object_end:
        keys.pop_back();
        break;
      case Json::parse_event_t::key: {
        const auto k = parsed.get<std::string>();
        if (!keys.back().insert(k).second) fail(k, "duplicate key");
        break;
      }
      default:
        break;
    }
    return true;
  };
  try {
    return Json::parse(text.begin(), text.end(), cb);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::size_t max_dim() {
  const char* env = std::getenv("RACKKIT_MAX_DIM");
  if (env == nullptr || *env == '\0') return 64;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (*end != '\0' || v == 0) throw ParseError(std::string("RACKKIT_MAX_DIM: not a positive integer: ") + env);
  return v;
}

AnyStructure parse(const Json& doc) {
  if (!doc.is_object()) fail("(root)", "must be an object");
  const Json& ring = require(doc, "ring");
  if (ring == "Q") return read<Rational>(doc);
  if (ring == "Q[eps]") return read<DualRational>(doc);
  fail("ring", "must be \"Q\" or \"Q[eps]\"");
}

AnyStructure parse_text(std::string_view text) { return parse(parse_checked(text)); }

AnyStructure parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_text(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Structure<Rational> parse_rational(const Json& doc) {
  auto s = parse(doc);
  if (auto* q = std::get_if<Structure<Rational>>(&s)) return std::move(*q);
  fail("ring", "expected \"Q\"");
}

Json serialize(const Coalgebra<Rational>& c, const Json& metadata) { return write_coalgebra(c, "Q", metadata); }
Json serialize(const Coalgebra<DualRational>& c, const Json& metadata) {
  return write_coalgebra(c, "Q[eps]", metadata);
}
Json serialize(const RackBialgebra<Rational>& r, const Json& metadata) { return write_rack(r, "Q", metadata); }
Json serialize(const RackBialgebra<DualRational>& r, const Json& metadata) {
  return write_rack(r, "Q[eps]", metadata);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Perturbation parse_perturbation(const QRack& r, const Json& doc) {
  if (!doc.is_object()) fail("perturbation", "must be an object");
  for (const auto& [key, v] : doc.items()) {
    if (key != "coproduct" && key != "rack") fail("perturbation." + key, "unknown section");
  }
  Json basis = r.labels();
  const Labels lab(basis);
  Perturbation p{QMap(r.dim() * r.dim(), r.dim()), QMap(r.dim(), r.dim() * r.dim())};
  if (auto it = doc.find("coproduct"); it != doc.end()) p.dcomul = read_coproduct<Rational>(*it, lab, false, "coproduct");
  if (auto it = doc.find("rack"); it != doc.end()) p.drack = read_rack<Rational>(*it, lab, "rack");
  return p;
}

}  // namespace rackkit::io
