#include "musico/assignment.h"

#include <algorithm>
#include <sstream>

namespace musico {

Assignment::Assignment(const std::array<Tone, kVertexCount>& tones) : tone_at_(tones) {
  std::array<bool, kToneCount> seen{};
  for (int v = 0; v < kVertexCount; ++v) {
    int pc = tones[v].pc();
    if (seen[pc]) throw std::invalid_argument("tone " + std::string(tones[v].name()) + " appears twice");
    seen[pc] = true;
    vertex_of_[pc] = VertexId(v);
  }
}

std::string Assignment::to_string() const {
  std::vector<Tone> v(tone_at_.begin(), tone_at_.end());
  return join_names(v);
}

Assignment assignment_from_names(const std::vector<std::string>& names) {
  if (names.size() != kVertexCount) {
    throw std::invalid_argument("expected 12 tones, got " + std::to_string(names.size()));
  }
  std::array<Tone, kVertexCount> tones;
  for (int v = 0; v < kVertexCount; ++v) tones[v] = parse_tone(names[v]);
  return Assignment(tones);
}

Figure make_figure(const IcosaGraph& g, std::vector<VertexId> vertices, bool closed) {
  Figure f;
  f.vertices = std::move(vertices);
  f.closed = closed && f.vertices.size() > 2;
  const std::size_t n = f.vertices.size();
  for (std::size_t i = 0; i + 1 < n; ++i) f.chords.push_back(chord_kind(g, f.vertices[i], f.vertices[i + 1]));
  if (f.closed) f.chords.push_back(chord_kind(g, f.vertices[n - 1], f.vertices[0]));
  return f;
}

namespace {

void require_distinct(const std::vector<Tone>& seq) {
  ToneSet s(seq.begin(), seq.end());
  if (s.size() != static_cast<int>(seq.size())) throw std::invalid_argument("tone sequence repeats a tone");
}

}  // namespace

bool satisfies_neighboring(const Assignment& a, const std::vector<Tone>& seq, bool cyclic) {
  require_distinct(seq);
  if (seq.size() < 2) throw std::invalid_argument("neighboring condition needs at least two tones");
  const IcosaGraph& g = icosahedron();
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!g.adjacent(a.vertex_of(seq[i]), a.vertex_of(seq[i + 1]))) return false;
  if (cyclic && seq.size() > 2 && !g.adjacent(a.vertex_of(seq.back()), a.vertex_of(seq.front()))) return false;
  return true;
}

Figure figure_of(const Assignment& a, const std::vector<Tone>& seq, bool closed) {
  require_distinct(seq);
  std::vector<VertexId> vs;
  vs.reserve(seq.size());
  for (Tone t : seq) vs.push_back(a.vertex_of(t));
  return make_figure(icosahedron(), std::move(vs), closed);
}

Figure figure_of(const Assignment& a, const ScaleInstance& s) { return figure_of(a, s.tones(), s.cyclic()); }

std::vector<Tone> read_tones(const Assignment& a, const Figure& f) {
  std::vector<Tone> out;
  out.reserve(f.vertices.size());
  for (VertexId v : f.vertices) out.push_back(a.tone_at(v));
  return out;
}

ToneSet read_tone_set(const Assignment& a, const Figure& f) {
  auto t = read_tones(a, f);
  return ToneSet(t.begin(), t.end());
}

Assignment apply_symmetry(const Assignment& a, const VertexPerm& op) {
  std::array<Tone, kVertexCount> tones;
  for (int v = 0; v < kVertexCount; ++v) tones[op(VertexId(v)).index] = a.tone_at(VertexId(v));
  return Assignment(tones);
}

Figure apply_symmetry(const Figure& f, const VertexPerm& op) {
  Figure out = f;
  for (VertexId& v : out.vertices) v = op(v);
  return out;
}

Assignment transpose_assignment(const Assignment& a, int k) {
  std::array<Tone, kVertexCount> tones;
  for (int v = 0; v < kVertexCount; ++v) tones[v] = a.tone_at(VertexId(v)) + k;
  return Assignment(tones);
}

TranspositionMap transposition_vertex_map(const Assignment& a, int k, const SymmetryGroup& group) {
  std::array<int, kVertexCount> img{};
  for (int v = 0; v < kVertexCount; ++v) img[v] = a.vertex_of(a.tone_at(VertexId(v)) + k).index;
  VertexPerm p(img);
  return {p, group.contains(p)};
}

bool has_hexagon_symmetry(const Assignment& a, const SymmetryGroup& group) {
  return transposition_vertex_map(a, 2, group).in_group;
}

CanonicalKey canonical_form(const Assignment& a, const SymmetryGroup& group) {
  CanonicalKey best = a.word();
  for (const SymmetryOp& op : group.ops()) {
    CanonicalKey w;
    for (int v = 0; v < kVertexCount; ++v) w[v] = a.tone_at(op.perm(VertexId(v)));
    if (w < best) best = w;
  }
  return best;
}

std::string key_string(const CanonicalKey& key) {
  return join_names(std::vector<Tone>(key.begin(), key.end()));
}

namespace {

bool class_is_cycle(const Assignment& a, Tone start, ChordKind kind) {
  const IcosaGraph& g = icosahedron();
  for (int i = 0; i < 6; ++i) {
    Tone x = start + 2 * i;
    if (chord_kind(g, a.vertex_of(x), a.vertex_of(x + 2)) != kind) return false;
  }
  return true;
}

ToneSet whole_tone_class(Tone start) {
  ToneSet s;
  for (int i = 0; i < 6; ++i) s.insert(start + 2 * i);
  return s;
}

}  // namespace

HexagonPartition hexagon_partition(const Assignment& a) {
  for (int start = 0; start < 2; ++start) {
    Tone h(start);
    if (class_is_cycle(a, h, ChordKind::Edge) && class_is_cycle(a, h + 1, ChordKind::Middle)) {
      return {whole_tone_class(h), whole_tone_class(h + 1)};
    }
  }
  throw NotHexagonSymmetricError("no whole-tone class forms an Edge hexagon over a Middle hexagram");
}

bool on_hexagon(const Assignment& a, Tone t) { return hexagon_partition(a).hexagon.contains(t); }

Tone radial_partner(const Assignment& a, Tone t) {
  const HexagonPartition part = hexagon_partition(a);
  const IcosaGraph& g = icosahedron();
  auto spans = [&](Tone w, Tone x) {
    return g.adjacent(a.vertex_of(w), a.vertex_of(x - 2)) && g.adjacent(a.vertex_of(w), a.vertex_of(x)) &&
           g.adjacent(a.vertex_of(w), a.vertex_of(x + 2));
  };
  if (part.hexagon.contains(t)) {
    for (Tone w : part.hexagram.tones())
      if (spans(w, t)) return w;
  } else {
    for (Tone x : part.hexagon.tones())
      if (spans(t, x)) return x;
  }
  throw std::logic_error("radial partner not found");
}

Figure spatial_inversion(const Figure& f) { return apply_symmetry(f, central_inversion(icosahedron())); }

std::string to_string(Family family) {
  switch (family) {
    case Family::Chromatic: return "chromatic";
    case Family::Pythagorean: return "pythagorean";
    case Family::Exceptional: return "exceptional";
  }
  return "?";
}

std::string to_string(TypeLabel label) {
  std::string s = std::to_string(label.index);
  if (label.family == Family::Pythagorean) s += "'";
  if (label.family == Family::Exceptional) s += "*";
  return s;
}

TypeLabel parse_type_label(std::string_view text) {
  if (text.empty() || text[0] < '1' || text[0] > '4') throw ParseError("unknown type: " + std::string(text));
  TypeLabel label{Family::Chromatic, text[0] - '0'};
  std::string_view rest = text.substr(1);
  if (rest.empty()) return label;
  if (rest == "'" || rest == "p" || rest == "′") {
    label.family = Family::Pythagorean;
  } else if (rest == "*" || rest == "x") {
    label.family = Family::Exceptional;
  } else {
    throw ParseError("unknown type: " + std::string(text));
  }
  return label;
}

std::vector<TypeLabel> all_type_labels() {
  std::vector<TypeLabel> out;
  for (Family f : {Family::Chromatic, Family::Pythagorean, Family::Exceptional})
    for (int i = 1; i <= 4; ++i) out.push_back({f, i});
  return out;
}

ReferenceTypes::ReferenceTypes(std::map<TypeLabel, Assignment> types) : types_(std::move(types)) {
  for (const auto& [label, a] : types_) by_key_.emplace(canonical_form(a), label);
}

const Assignment& ReferenceTypes::at(TypeLabel label) const {
  auto it = types_.find(label);
  if (it == types_.end()) throw std::out_of_range("no reference assignment for type " + to_string(label));
  return it->second;
}

std::optional<TypeLabel> ReferenceTypes::label_of(const CanonicalKey& key) const {
  auto it = by_key_.find(key);
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

std::optional<TypeLabel> classify_type(const Assignment& a, const ReferenceTypes& refs) {
  return refs.label_of(canonical_form(a));
}

}  // namespace musico
