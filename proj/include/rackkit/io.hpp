#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "rackkit/rack.hpp"

namespace rackkit::io {

using Json = nlohmann::json;

/// Cap on basis sizes read from files; RACKKIT_MAX_DIM, default 64.
std::size_t max_dim();

/// Contents of a structure-constants file. `rack` is empty when the file
/// has no (or an empty) rack section.
template <class K>
struct Structure {
  Coalgebra<K> coalgebra;
  std::optional<RackBialgebra<K>> rack;
  Json metadata = Json::object();
};

using AnyStructure = std::variant<Structure<Rational>, Structure<DualRational>>;

/// Errors are ParseError with the offending field path (e.g. coproduct.x[2][2])
/// or, for JSON syntax, the line and column.
AnyStructure parse(const Json& doc);
AnyStructure parse_text(std::string_view text);
AnyStructure parse_file(const std::string& path);

/// The exact rational ring only; a Q[eps] file raises ParseError.
Structure<Rational> parse_rational(const Json& doc);

Json serialize(const Coalgebra<Rational>& c, const Json& metadata = Json::object());
Json serialize(const Coalgebra<DualRational>& c, const Json& metadata = Json::object());
Json serialize(const RackBialgebra<Rational>& r, const Json& metadata = Json::object());
Json serialize(const RackBialgebra<DualRational>& r, const Json& metadata = Json::object());

/// Sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

/// Perturbation file {"coproduct": {a: [[l, r, s]...]}, "rack": {"a,b": [[c, s]...]}}
/// over the basis of `r`; missing sections are zero.
struct Perturbation {
  QMap dcomul;
  QMap drack;
};
Perturbation parse_perturbation(const QRack& r, const Json& doc);

}  // namespace rackkit::io
