#include "gmetric/document.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace gmetric {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(std::string_view source, const std::string& why) {
  throw Error(Errc::MalformedDocument, std::string(source) + ": " + why);
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Rational rational_from_json(const json& value, std::string_view source, const std::string& where) {
  if (value.is_string()) return parse_rational(value.get<std::string>());
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(Integer(value.get<std::uint64_t>()))
                                      : Rational(Integer(value.get<std::int64_t>()));
  }
  // Floats go through their shortest round-trip text, so 0.1 becomes 1/10.
  if (value.is_number_float()) return parse_rational(value.dump());
  malformed(source, where + " must be a rational string or a number");
}

}  // namespace

CaristiInstance SpaceDocument::instance(std::optional<CaristiVariant> override_variant) const {
  if (!phi) throw Error(Errc::TotalityError, "document has no 'phi'");
  if (!map_t) throw Error(Errc::TotalityError, "document has no 'T'");
  const CaristiVariant v = override_variant.value_or(variant.value_or(CaristiVariant::MWeak));
  return CaristiInstance::make(space(), *map_t, *phi, v);
}

SpaceDocument parse_space_document(std::string_view text, std::string_view source) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    malformed(source, "JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(column));
  }
  if (!root.is_object()) malformed(source, "top level must be an object");

  static const std::set<std::string> known{"points", "m", "phi", "T", "variant"};
  for (const auto& [key, value] : root.items()) {
    if (!known.count(key)) malformed(source, "unknown key '" + key + "'");
  }
  if (!root.contains("points") || !root["points"].is_array()) malformed(source, "'points' must be an array");
  if (!root.contains("m") || !root["m"].is_array()) malformed(source, "'m' must be an array of rows");

  SpaceDocument doc;
  for (const auto& p : root["points"]) {
    if (!p.is_string()) malformed(source, "point labels must be strings");
    doc.points.push_back(p.get<std::string>());
  }
  std::size_t r = 0;
  for (const auto& row : root["m"]) {
    ++r;
    if (!row.is_array()) malformed(source, "row " + std::to_string(r) + " of 'm' must be an array");
    auto& out = doc.table.emplace_back();
    std::size_t c = 0;
    for (const auto& cell : row) {
      ++c;
      out.push_back(rational_from_json(cell, source, "m[" + std::to_string(r) + "][" + std::to_string(c) + "]"));
    }
  }
  // Validates dimensions, labels, signs and symmetry.
  const FiniteSpace space = doc.space();

  if (root.contains("phi")) {
    const json& phi = root["phi"];
    if (!phi.is_object()) malformed(source, "'phi' must be an object");
    std::map<std::string, Rational> values;
    for (const auto& [label, value] : phi.items()) {
      if (!space.find(label)) malformed(source, "'phi' names unknown point '" + label + "'");
      values[label] = rational_from_json(value, source, "phi[" + label + "]");
    }
    for (const auto& p : doc.points) {
      if (!values.count(p)) throw Error(Errc::TotalityError, std::string(source) + ": 'phi' misses point '" + p + "'");
    }
    doc.phi = std::move(values);
  }
  if (root.contains("T")) {
    const json& t = root["T"];
    if (!t.is_object()) malformed(source, "'T' must be an object");
    std::map<std::string, std::string> images;
    for (const auto& [label, value] : t.items()) {
      if (!space.find(label)) malformed(source, "'T' names unknown point '" + label + "'");
      if (!value.is_string() || !space.find(value.get<std::string>())) {
        malformed(source, "'T' maps '" + label + "' outside the points");
      }
      images[label] = value.get<std::string>();
    }
    for (const auto& p : doc.points) {
      if (!images.count(p)) throw Error(Errc::TotalityError, std::string(source) + ": 'T' misses point '" + p + "'");
    }
    doc.map_t = std::move(images);
  }
  if (root.contains("variant")) {
    if (!root["variant"].is_string()) malformed(source, "'variant' must be a string");
    try {
      doc.variant = parse_caristi_variant(root["variant"].get<std::string>());
    } catch (const Error&) {
      malformed(source, "unknown variant '" + root["variant"].get<std::string>() + "'");
    }
  }
  return doc;
}

std::filesystem::path resolve_space_path(const std::filesystem::path& path) {
  if (std::filesystem::is_regular_file(path)) return path;
  std::filesystem::path with_ext = path;
  with_ext += ".json";
  if (std::filesystem::is_regular_file(with_ext)) return with_ext;
  throw Error(Errc::MalformedDocument, "cannot open '" + path.string() + "'");
}

SpaceDocument parse_space_file(const std::filesystem::path& path) {
  const auto resolved = resolve_space_path(path);
  std::ifstream in(resolved, std::ios::binary);
  if (!in) throw Error(Errc::MalformedDocument, "cannot open '" + resolved.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_space_document(buffer.str(), resolved.string());
}

std::string serialize_space_document(const SpaceDocument& doc) {
  json root;
  root["points"] = doc.points;
  json rows = json::array();
  for (const auto& row : doc.table) {
    json r = json::array();
    for (const auto& v : row) r.push_back(to_string(v));
    rows.push_back(std::move(r));
  }
  root["m"] = std::move(rows);
  if (doc.phi) {
    json phi = json::object();
    for (const auto& [k, v] : *doc.phi) phi[k] = to_string(v);
    root["phi"] = std::move(phi);
  }
  if (doc.map_t) root["T"] = *doc.map_t;
  if (doc.variant) root["variant"] = std::string(to_string(*doc.variant));
  return root.dump(2) + "\n";
}

}  // namespace gmetric
