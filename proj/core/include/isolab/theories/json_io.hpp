#pragma once

#include <filesystem>
#include <string_view>
#include <variant>

#include <nlohmann/json_fwd.hpp>

#include "isolab/theories/data.hpp"

namespace isolab::theories {

/// What a data file describes. Several kinds share a representation: a
/// strict symmetric monoidal category is a FiniteStrictMonCat whose tensor
/// is commutative; an M-set and a presheaf over a rigid category are
/// PresheafData.
enum class DataKind {
  Monoid,
  CMonoid,
  Group,
  Category,
  StrMonCat,
  SymStrMonCat,
  Presheaf,
  MSet,
  CrossedModule,
};

std::string_view to_string(DataKind k);
std::optional<DataKind> parse_data_kind(std::string_view name);

struct TaggedData {
  DataKind kind;
  std::variant<FiniteMonoid, FiniteGroup, FiniteCategory, FiniteStrictMonCat,
               PresheafData, CrossedModule>
      value;
};

/// Reads a data document (see docs/data-format.md). Validates the result;
/// throws ParseError on malformed JSON structure and InvariantViolation on
/// data that breaks its type's laws.
TaggedData read_data(const nlohmann::json& doc);
TaggedData load_data_file(const std::filesystem::path& path);

FiniteMonoid read_monoid(const nlohmann::json& doc);
FiniteGroup read_group(const nlohmann::json& doc);
FiniteCategory read_category(const nlohmann::json& doc);
FiniteStrictMonCat read_strmoncat(const nlohmann::json& doc);
PresheafData read_presheaf(const nlohmann::json& doc);
CrossedModule read_crossed_module(const nlohmann::json& doc);

nlohmann::json to_json(const FiniteMonoid& m);
nlohmann::json to_json(const FiniteCategory& c);
nlohmann::json to_json(const PresheafData& p);

}  // namespace isolab::theories
