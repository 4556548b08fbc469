#include "musico/document.h"

#include <json.hpp>

#include "musico/search.h"

namespace musico {

using ojson = nlohmann::ordered_json;

namespace {

std::vector<std::string> hexagon_names(const Assignment& a) {
  std::vector<std::string> out;
  if (!has_hexagon_symmetry(a)) return out;
  const ToneSet hex = hexagon_partition(a).hexagon;
  const Tone start = hex.contains(Tone(0)) ? Tone(0) : Tone(1);
  for (int k = 0; k < 6; ++k) out.emplace_back((start + 2 * k).name());
  return out;
}

ojson to_ojson(const AssignmentDocument& doc) {
  ojson j;
  j["schema_version"] = doc.schema_version;
  j["vertices"] = doc.vertices;
  if (doc.type_label) j["type_label"] = *doc.type_label;
  j["hexagon"] = doc.hexagon;
  return j;
}

Tone canonical_tone(const std::string& name, const std::string& field) {
  Tone t;
  try {
    t = parse_tone(name);
  } catch (const ParseError&) {
    throw DocumentError(field + ": unknown tone '" + name + "'");
  }
  if (t.name() != name) throw DocumentError(field + ": '" + name + "' is not a canonical tone name");
  return t;
}

}  // namespace

AssignmentDocument make_document(const Assignment& a, std::optional<TypeLabel> label) {
  AssignmentDocument doc;
  for (int v = 0; v < kVertexCount; ++v) doc.vertices[v] = std::string(a.tone_at(VertexId(v)).name());
  if (label) doc.type_label = to_string(*label);
  doc.hexagon = hexagon_names(a);
  return doc;
}

Assignment to_assignment(const AssignmentDocument& doc) {
  std::array<Tone, kVertexCount> tones;
  std::array<bool, kToneCount> seen{};
  for (int v = 0; v < kVertexCount; ++v) {
    const std::string field = "vertices[" + std::to_string(v) + "]";
    tones[v] = canonical_tone(doc.vertices[v], field);
    if (seen[tones[v].pc()]) throw DocumentError(field + ": duplicate tone '" + doc.vertices[v] + "'");
    seen[tones[v].pc()] = true;
  }
  return Assignment(tones);
}

std::string to_json(const AssignmentDocument& doc) { return to_ojson(doc).dump(2) + "\n"; }

std::string to_json(const std::vector<AssignmentDocument>& docs) {
  ojson arr = ojson::array();
  for (const auto& d : docs) arr.push_back(to_ojson(d));
  return arr.dump(2) + "\n";
}

AssignmentDocument document_from_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError(std::string("document: ") + e.what());
  }
  if (!j.is_object()) throw DocumentError("document: expected an object");
  for (const auto& [key, value] : j.items()) {
    if (key != "schema_version" && key != "vertices" && key != "type_label" && key != "hexagon") {
      throw DocumentError(key + ": unknown field");
    }
  }

  AssignmentDocument doc;
  if (!j.contains("schema_version") || !j["schema_version"].is_string()) {
    throw DocumentError("schema_version: missing or not a string");
  }
  doc.schema_version = j["schema_version"].get<std::string>();
  if (doc.schema_version != kSchemaVersion) throw DocumentError("schema_version: unsupported '" + doc.schema_version + "'");

  if (!j.contains("vertices") || !j["vertices"].is_array()) throw DocumentError("vertices: missing or not an array");
  const ojson& vs = j["vertices"];
  if (vs.size() != kVertexCount) {
    throw DocumentError("vertices: expected 12 entries, got " + std::to_string(vs.size()));
  }
  for (int v = 0; v < kVertexCount; ++v) {
    if (!vs[v].is_string()) throw DocumentError("vertices[" + std::to_string(v) + "]: not a string");
    doc.vertices[v] = vs[v].get<std::string>();
  }
  const Assignment a = to_assignment(doc);

  if (j.contains("type_label")) {
    if (!j["type_label"].is_string()) throw DocumentError("type_label: not a string");
    doc.type_label = j["type_label"].get<std::string>();
    TypeLabel label;
    try {
      label = parse_type_label(*doc.type_label);
    } catch (const ParseError&) {
      throw DocumentError("type_label: unknown type '" + *doc.type_label + "'");
    }
    if (classify_type(a, reference_types()) != label) throw DocumentError("type_label: does not match the vertices");
  }

  if (!j.contains("hexagon") || !j["hexagon"].is_array()) throw DocumentError("hexagon: missing or not an array");
  for (const auto& h : j["hexagon"]) {
    if (!h.is_string()) throw DocumentError("hexagon: entries must be strings");
    doc.hexagon.push_back(h.get<std::string>());
  }
  if (doc.hexagon != hexagon_names(a)) throw DocumentError("hexagon: does not match the vertices");
  return doc;
}

}  // namespace musico
