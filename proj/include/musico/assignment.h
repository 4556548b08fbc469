#ifndef MUSICO_ASSIGNMENT_H
#define MUSICO_ASSIGNMENT_H

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "musico/polyhedron.h"
#include "musico/tones.h"

namespace musico {

/// @brief A musical icosahedron: bijection vertex <-> tone.
class Assignment {
 public:
  /// tones[v] is the tone at vertex v. Throws unless bijective.
  explicit Assignment(const std::array<Tone, kVertexCount>& tones);

  Tone tone_at(VertexId v) const { return tone_at_[v.index]; }
  VertexId vertex_of(Tone t) const { return vertex_of_[t.pc()]; }
  const std::array<Tone, kVertexCount>& word() const { return tone_at_; }
  std::string to_string() const;

  friend auto operator<=>(const Assignment& a, const Assignment& b) { return a.tone_at_ <=> b.tone_at_; }
  friend bool operator==(const Assignment& a, const Assignment& b) { return a.tone_at_ == b.tone_at_; }

 private:
  std::array<Tone, kVertexCount> tone_at_;
  std::array<VertexId, kToneCount> vertex_of_;
};

/// Parses 12 tone names (vertex order).
Assignment assignment_from_names(const std::vector<std::string>& names);

/// @brief Vertex trace of a tone sequence.
struct Figure {
  std::vector<VertexId> vertices;
  std::vector<ChordKind> chords;  // between consecutive vertices, plus closing chord when closed
  bool closed = false;

  bool operator==(const Figure&) const = default;
};

Figure make_figure(const IcosaGraph& g, std::vector<VertexId> vertices, bool closed);

bool satisfies_neighboring(const Assignment& a, const std::vector<Tone>& seq, bool cyclic);
Figure figure_of(const Assignment& a, const ScaleInstance& s);
Figure figure_of(const Assignment& a, const std::vector<Tone>& seq, bool closed = false);
std::vector<Tone> read_tones(const Assignment& a, const Figure& f);
ToneSet read_tone_set(const Assignment& a, const Figure& f);

/// tone_at o op^-1.
Assignment apply_symmetry(const Assignment& a, const VertexPerm& op);
Figure apply_symmetry(const Figure& f, const VertexPerm& op);

Assignment transpose_assignment(const Assignment& a, int k);

struct TranspositionMap {
  VertexPerm perm;
  bool in_group = false;
};

/// P_k(v) = vertex_of(tone_at(v) + k).
TranspositionMap transposition_vertex_map(const Assignment& a, int k,
                                          const SymmetryGroup& group = icosahedral_group());

bool has_hexagon_symmetry(const Assignment& a, const SymmetryGroup& group = icosahedral_group());

using CanonicalKey = std::array<Tone, kVertexCount>;

CanonicalKey canonical_form(const Assignment& a, const SymmetryGroup& group = icosahedral_group());
std::string key_string(const CanonicalKey& key);

/// Raised when an assignment lacks hexagon-icosahedron symmetry.
class NotHexagonSymmetricError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct HexagonPartition {
  ToneSet hexagon;   // whole-tone class on an Edge 6-cycle
  ToneSet hexagram;  // whole-tone class on a Middle 6-cycle
};

HexagonPartition hexagon_partition(const Assignment& a);
bool on_hexagon(const Assignment& a, Tone t);

/// The hexagram tone whose three hexagon neighbours are consecutive on the
/// hexagon with t in the middle (and the converse for hexagram tones).
Tone radial_partner(const Assignment& a, Tone t);

Figure spatial_inversion(const Figure& f);

enum class Family : std::uint8_t { Chromatic, Pythagorean, Exceptional };

struct TypeLabel {
  Family family = Family::Chromatic;
  int index = 1;  // 1..4

  friend auto operator<=>(const TypeLabel&, const TypeLabel&) = default;
};

std::string to_string(TypeLabel label);
std::string to_string(Family family);
/// Accepts "1".."4", "1'"/"1p", "1*"/"1x".
TypeLabel parse_type_label(std::string_view text);
std::vector<TypeLabel> all_type_labels();

/// @brief The 12 labeled representatives with their canonical keys.
class ReferenceTypes {
 public:
  ReferenceTypes() = default;
  explicit ReferenceTypes(std::map<TypeLabel, Assignment> types);

  const Assignment& at(TypeLabel label) const;
  const std::map<TypeLabel, Assignment>& all() const { return types_; }
  std::optional<TypeLabel> label_of(const CanonicalKey& key) const;

 private:
  std::map<TypeLabel, Assignment> types_;
  std::map<CanonicalKey, TypeLabel> by_key_;
};

std::optional<TypeLabel> classify_type(const Assignment& a, const ReferenceTypes& refs);

}  // namespace musico

#endif  // MUSICO_ASSIGNMENT_H
