#ifndef MUSICO_POLYHEDRON_H
#define MUSICO_POLYHEDRON_H

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace musico {

constexpr int kVertexCount = 12;

/// @brief Vertex of the icosahedron, 0..11.
struct VertexId {
  std::uint8_t index = 0;

  constexpr VertexId() = default;
  constexpr explicit VertexId(int i) : index(static_cast<std::uint8_t>(i)) {}

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

/// Raised for repeated vertices where distinct ones are required.
class DegenerateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ChordKind : std::uint8_t { Edge, Middle, Diameter };

std::string_view to_string(ChordKind kind);

enum class TriangleShape : std::uint8_t {
  Face,
  LargeEquilateral,
  GoldenTriangle,
  GoldenGnomon,
  Scalene
};

std::string_view to_string(TriangleShape shape);

struct TriangleKind {
  TriangleShape shape = TriangleShape::Face;
  std::optional<VertexId> apex;  // golden kinds only

  bool operator==(const TriangleKind&) const = default;
};

using VertexTriple = std::array<VertexId, 3>;

/// @brief Immutable icosahedron graph with the canonical numbering.
///
/// Vertex 0 is the north pole over the ring 1..5, vertex 11 the south pole
/// under the ring 6..10. Upper vertex i touches i+5 and (i mod 5)+6.
class IcosaGraph {
 public:
  IcosaGraph();

  bool adjacent(VertexId u, VertexId v) const { return dist_[u.index][v.index] == 1; }
  int distance(VertexId u, VertexId v) const { return dist_[u.index][v.index]; }
  VertexId opposite(VertexId v) const { return opposite_[v.index]; }

  /// Neighbours of v in the cyclic order of the rotation system.
  const std::array<VertexId, 5>& neighbors(VertexId v) const { return around_[v.index]; }

  /// Successor of neighbour n in the cyclic order around center.
  VertexId next_around(VertexId center, VertexId n) const;

  const std::vector<VertexTriple>& faces() const { return faces_; }
  std::vector<std::pair<VertexId, VertexId>> edges() const;

 private:
  std::array<std::array<std::uint8_t, kVertexCount>, kVertexCount> dist_{};
  std::array<VertexId, kVertexCount> opposite_{};
  std::array<std::array<VertexId, 5>, kVertexCount> around_{};
  std::vector<VertexTriple> faces_;
};

/// Builds a fresh graph (self-checked).
IcosaGraph build_graph();

/// Shared instance; immutable, safe to use from any thread.
const IcosaGraph& icosahedron();

ChordKind chord_kind(const IcosaGraph& g, VertexId u, VertexId v);
TriangleKind classify_triangle(const IcosaGraph& g, const VertexTriple& t);
bool is_golden_rectangle(const IcosaGraph& g, const std::array<VertexId, 4>& q);

/// All 15 golden rectangles, each sorted ascending.
std::vector<std::array<VertexId, 4>> golden_rectangles(const IcosaGraph& g);

/// @brief Permutation of the 12 vertices.
class VertexPerm {
 public:
  constexpr VertexPerm() {
    for (int i = 0; i < kVertexCount; ++i) map_[i] = static_cast<std::uint8_t>(i);
  }
  explicit VertexPerm(const std::array<int, kVertexCount>& images);

  VertexId operator()(VertexId v) const { return VertexId(map_[v.index]); }

  /// (a * b)(v) = a(b(v)).
  friend VertexPerm operator*(const VertexPerm& a, const VertexPerm& b);
  VertexPerm inverse() const;
  int order() const;
  bool is_identity() const { return *this == VertexPerm(); }
  std::array<int, kVertexCount> images() const;
  std::string to_string() const;

  friend auto operator<=>(const VertexPerm&, const VertexPerm&) = default;

 private:
  std::array<std::uint8_t, kVertexCount> map_{};
};

struct SymmetryOp {
  VertexPerm perm;
  bool is_rotation = true;
  int order = 1;
};

/// True iff p preserves adjacency.
bool is_automorphism(const IcosaGraph& g, const VertexPerm& p);

/// True iff p preserves the rotation system (orientation).
bool preserves_orientation(const IcosaGraph& g, const VertexPerm& p);

/// @brief The 120 automorphisms, sorted by permutation.
class SymmetryGroup {
 public:
  struct Generators {
    VertexPerm c5, c3, c2, m;
  };

  SymmetryGroup(std::vector<SymmetryOp> ops, Generators gens);

  const std::vector<SymmetryOp>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  int rotation_count() const;
  bool contains(const VertexPerm& p) const;
  const SymmetryOp& find(const VertexPerm& p) const;
  const Generators& generators() const { return gens_; }

  /// Stabilizer of v (10 elements).
  std::vector<SymmetryOp> stabilizer(VertexId v) const;

  /// The 24 products {Y, M*Y} of the generator word list.
  std::vector<VertexPerm> word_list_heads() const;

  /// The full word list expanded with the five C5 powers (120 words).
  std::vector<VertexPerm> word_list() const;

 private:
  std::vector<SymmetryOp> ops_;
  Generators gens_;
};

SymmetryGroup automorphism_group(const IcosaGraph& g);

/// Shared instance built from icosahedron().
const SymmetryGroup& icosahedral_group();

/// Central inversion (vertex to opposite).
VertexPerm central_inversion(const IcosaGraph& g);

}  // namespace musico

#endif  // MUSICO_POLYHEDRON_H
