#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <variant>

#include "json.hpp"
#include "morita/bibundle.hpp"
#include "morita/bundle.hpp"
#include "morita/morita.hpp"

namespace morita {

  inline constexpr int kFormatVersion = 1;

  enum class Kind { groupoid, action, bundle, bibundle, certificate };

  std::string to_string(Kind kind);

  using Stored = std::variant<FiniteGroupoid, Action, Bundle, Bibundle, MoritaCertificate>;

  Kind kind_of(Stored const& object);

  // One object per file. References name the files holding constituent
  // groupoids, relative to the directory of the referring file.
  struct ObjectFile {
    int                                format_version = kFormatVersion;
    Kind                               kind           = Kind::groupoid;
    nlohmann::json                     payload;
    std::map<std::string, std::string> references;
  };

  // Syntax, version and envelope checks only. Throws ParseError.
  ObjectFile parse_object_file(std::string const& text);
  std::string dump(ObjectFile const& file);

  // Resolves references, rebuilds the raw tables and validates them.
  // Throws ParseError, UnresolvedReference and ValidationError.
  Stored load(std::filesystem::path const& path);

  // Writes the object to path and each constituent groupoid to
  // <stem>.<role>.json beside it. Returns the main file.
  ObjectFile save(Stored const& object, std::filesystem::path const& path);

  // Payload codecs, exposed for in-memory round trips.
  nlohmann::json groupoid_payload(FiniteGroupoid const& g);
  FiniteGroupoid groupoid_from_payload(nlohmann::json const& payload);

}  // namespace morita
