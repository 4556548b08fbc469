#ifndef MUSICO_DOCUMENT_H
#define MUSICO_DOCUMENT_H

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "musico/assignment.h"

namespace musico {

constexpr std::string_view kSchemaVersion = "1";

/// Malformed document; the message names the offending field.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// @brief JSON form of an assignment.
struct AssignmentDocument {
  std::string schema_version{kSchemaVersion};
  std::array<std::string, kVertexCount> vertices;
  std::optional<std::string> type_label;
  std::vector<std::string> hexagon;  // empty without hexagon symmetry

  bool operator==(const AssignmentDocument&) const = default;
};

AssignmentDocument make_document(const Assignment& a, std::optional<TypeLabel> label = std::nullopt);
Assignment to_assignment(const AssignmentDocument& doc);

std::string to_json(const AssignmentDocument& doc);
std::string to_json(const std::vector<AssignmentDocument>& docs);
AssignmentDocument document_from_json(std::string_view text);

}  // namespace musico

#endif  // MUSICO_DOCUMENT_H
