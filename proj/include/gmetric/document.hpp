#pragma once

#include "gmetric/caristi.hpp"
#include "gmetric/rational.hpp"
#include "gmetric/space.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gmetric {

/// A space (and optionally a Caristi instance) as stored on disk:
///
///   {
///     "points": ["1", "2"],
///     "m": [["1", "2"], ["2", 2]],        rational strings or JSON numbers
///     "phi": {"1": "10", "2": 20},        optional
///     "T": {"1": "1", "2": "1"},          optional
///     "variant": "m_weak"                 optional
///   }
///
/// Unknown keys are rejected.
struct SpaceDocument {
  std::vector<std::string> points;
  std::vector<std::vector<Rational>> table;
  std::optional<std::map<std::string, Rational>> phi;
  std::optional<std::map<std::string, std::string>> map_t;
  std::optional<CaristiVariant> variant;

  FiniteSpace space() const { return FiniteSpace::validate(points, table); }

  /// Throws TotalityError when phi or T is missing.
  CaristiInstance instance(std::optional<CaristiVariant> override_variant = std::nullopt) const;
};

/// Parses and validates a document. Throws MalformedDocument (with line and
/// column for JSON syntax errors), RationalParseError, TotalityError, or the
/// FiniteSpace validation errors.
SpaceDocument parse_space_document(std::string_view text, std::string_view source = "<input>");

/// Reads `path`, or `path` + ".json" when `path` itself does not exist.
SpaceDocument parse_space_file(const std::filesystem::path& path);

/// The file parse_space_file would read. Throws MalformedDocument if neither exists.
std::filesystem::path resolve_space_path(const std::filesystem::path& path);

std::string serialize_space_document(const SpaceDocument& doc);

}  // namespace gmetric
