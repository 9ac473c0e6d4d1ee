#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "normalp/perm_group.hpp"

namespace normalp {

/// Interchange format for permutation groups: a JSON object with
/// "degree", "generators" (0-indexed image arrays) and optional "name".
/// write_group_document emits one canonical layout, so documents it wrote
/// round-trip byte for byte.
struct GroupDocument {
  std::size_t degree = 0;
  std::vector<std::vector<Point>> generators;
  std::optional<std::string> name;
};

/// Throws ParseError on malformed JSON, missing fields, or invalid permutations.
GroupDocument parse_group_document(std::string_view text);
std::string write_group_document(const GroupDocument& doc);

PermGroup to_group(const GroupDocument& doc, GroupLimits limits = {});
GroupDocument to_document(const PermGroup& g, std::optional<std::string> name = std::nullopt);

}  // namespace normalp
