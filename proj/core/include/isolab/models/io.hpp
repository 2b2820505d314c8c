#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "isolab/models/structure.hpp"

namespace isolab::models {

// Model text format, one model per document:
//
//   model z2
//   theory monoid
//   elements M 0 1
//   row e -> 0
//   row mul 0 1 -> 1
//
// Tokens are separated by whitespace; '#' starts a comment. Rows that are
// absent are undefined.

struct ModelHeader {
  std::string model;
  std::string theory;
};

ModelHeader read_model_header(std::string_view text);

/// Parses a model over `theory`; the file's theory line must name it.
PartialStructure parse_model(std::string_view text,
                             std::shared_ptr<const phl::Theory> theory);

std::string print_model(const PartialStructure& m);

}  // namespace isolab::models
