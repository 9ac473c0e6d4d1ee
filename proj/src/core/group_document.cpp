#include "normalp/group_document.hpp"

#include <sstream>

#include <json.hpp>

#include "normalp/error.hpp"

namespace normalp {

GroupDocument parse_group_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("group document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("group document must be a JSON object");
  if (!j.contains("degree") || !j["degree"].is_number_unsigned()) {
    throw ParseError("group document needs a nonnegative integer \"degree\"");
  }
  if (!j.contains("generators") || !j["generators"].is_array()) {
    throw ParseError("group document needs a \"generators\" array");
  }
  GroupDocument doc;
  doc.degree = j["degree"].get<std::size_t>();
  for (const auto& gen : j["generators"]) {
    if (!gen.is_array() || gen.size() != doc.degree) {
      throw ParseError("each generator must be an array of " + std::to_string(doc.degree) + " images");
    }
    std::vector<Point> images;
    for (const auto& x : gen) {
      if (!x.is_number_unsigned()) throw ParseError("images must be nonnegative integers");
      images.push_back(x.get<Point>());
    }
    try {
      Permutation check(images);
    } catch (const InvalidArgument& e) {
      throw ParseError(e.what());
    }
    doc.generators.push_back(std::move(images));
  }
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  return doc;
}

std::string write_group_document(const GroupDocument& doc) {
  std::ostringstream out;
  out << "{\n  \"degree\": " << doc.degree << ",\n  \"generators\": [";
  for (std::size_t i = 0; i < doc.generators.size(); ++i) {
    out << (i == 0 ? "\n    [" : ",\n    [");
    for (std::size_t k = 0; k < doc.generators[i].size(); ++k) {
      if (k > 0) out << ", ";
      out << doc.generators[i][k];
    }
    out << ']';
  }
  out << (doc.generators.empty() ? "]" : "\n  ]");
  if (doc.name) out << ",\n  \"name\": " << nlohmann::json(*doc.name).dump();
  out << "\n}\n";
  return out.str();
}

PermGroup to_group(const GroupDocument& doc, GroupLimits limits) {
  std::vector<Permutation> gens;
  for (const auto& images : doc.generators) gens.emplace_back(images);
  return PermGroup(doc.degree, std::move(gens), limits);
}

GroupDocument to_document(const PermGroup& g, std::optional<std::string> name) {
  GroupDocument doc;
  doc.degree = g.degree();
  for (const auto& gen : g.generators()) doc.generators.emplace_back(gen.images().begin(), gen.images().end());
  doc.name = std::move(name);
  return doc;
}

}  // namespace normalp
