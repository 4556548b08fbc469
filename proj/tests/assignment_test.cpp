#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "musico/assignment.h"

using namespace musico;

namespace {

Assignment from_word(const std::string& words) {
  std::istringstream in(words);
  std::vector<std::string> names;
  for (std::string w; in >> w;) names.push_back(w);
  return assignment_from_names(names);
}

const char* kType1 = "C C# D Eb B Bb A F E G G# F#";

// the twelve canonical words, written out by hand
ReferenceTypes hand_types() {
  const std::pair<const char*, const char*> rows[] = {
      {"1", "C C# D Eb B Bb A F E G G# F#"},  {"2", "C C# D B Bb A F E Eb G G# F#"},
      {"3", "C C# Eb E G# B Bb D F G A F#"},  {"4", "C C# E G# A B D Eb F G Bb F#"},
      {"1'", "C D G Bb F A E B Eb G# C# F#"}, {"2'", "C D F Bb Eb G E A C# G# B F#"},
      {"3'", "C E G# F G A B C# Eb Bb D F#"}, {"4'", "C Eb F G E G# C# Bb D A B F#"},
      {"1*", "C D A Bb G B E C# F G# Eb F#"}, {"2*", "C C# F D Eb Bb G# A E G B F#"},
      {"3*", "C E G# G A B C# Eb F Bb D F#"}, {"4*", "C C# Eb F E G# B Bb D G A F#"},
  };
  std::map<TypeLabel, Assignment> m;
  for (auto [label, word] : rows) m.emplace(parse_type_label(label), from_word(word));
  return ReferenceTypes(m);
}

Assignment random_assignment(std::mt19937& rng) {
  std::array<Tone, 12> t;
  for (int i = 0; i < 12; ++i) t[i] = Tone(i);
  std::shuffle(t.begin(), t.end(), rng);
  return Assignment(t);
}

const VertexPerm& random_op(std::mt19937& rng) {
  const auto& ops = icosahedral_group().ops();
  return ops[std::uniform_int_distribution<std::size_t>(0, ops.size() - 1)(rng)].perm;
}

// direct adjacency oracle
bool neighbours_by_hand(const Assignment& a, const std::vector<Tone>& seq, bool cyclic) {
  const IcosaGraph& g = icosahedron();
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (g.distance(a.vertex_of(seq[i]), a.vertex_of(seq[i + 1])) != 1) return false;
  return !cyclic || g.distance(a.vertex_of(seq.back()), a.vertex_of(seq.front())) == 1;
}

}  // namespace

TEST(Assignment, RejectsNonBijection) {
  std::array<Tone, 12> t;
  for (int i = 0; i < 12; ++i) t[i] = Tone(i);
  t[3] = Tone(4);
  EXPECT_ANY_THROW(Assignment{t});
  EXPECT_ANY_THROW(from_word("C C# D Eb E F F# G G# A Bb"));
  EXPECT_ANY_THROW(from_word("C C# D Eb E F F# G G# A Bb Bb"));
}

TEST(Assignment, InverseMaps) {
  const Assignment a = from_word(kType1);
  for (int v = 0; v < 12; ++v) EXPECT_EQ(a.vertex_of(a.tone_at(VertexId(v))), VertexId(v));
  EXPECT_EQ(a.tone_at(VertexId(4)), parse_tone("B"));
}

TEST(Neighboring, Type1HoldsChromaticAndWholeTone) {
  const Assignment a = from_word(kType1);
  EXPECT_TRUE(satisfies_neighboring(a, scale("chromatic", Tone(0)).tones(), true));
  EXPECT_TRUE(satisfies_neighboring(a, scale("whole-tone", Tone(0)).tones(), true));
  EXPECT_FALSE(satisfies_neighboring(a, scale("pythagorean-chain", Tone(0)).tones(), true));
}

TEST(Neighboring, MatchesAdjacencyOracle) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const Assignment a = random_assignment(rng);
    std::vector<Tone> seq;
    const int len = 2 + trial % 6;
    for (int i = 0; i < len; ++i) seq.push_back(Tone(static_cast<int>(rng() % 12)));
    std::sort(seq.begin(), seq.end());
    seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
    if (seq.size() < 2) continue;
    std::shuffle(seq.begin(), seq.end(), rng);
    for (bool cyclic : {false, true}) EXPECT_EQ(satisfies_neighboring(a, seq, cyclic), neighbours_by_hand(a, seq, cyclic));
  }
}

TEST(Figure, ChordsAndReadBack) {
  const Assignment a = from_word(kType1);
  const auto s = scale("major", Tone(0));
  const Figure f = figure_of(a, s);
  EXPECT_FALSE(f.closed);
  ASSERT_EQ(f.vertices.size(), 7u);
  ASSERT_EQ(f.chords.size(), 6u);
  for (std::size_t i = 0; i < f.chords.size(); ++i)
    EXPECT_EQ(f.chords[i], chord_kind(icosahedron(), f.vertices[i], f.vertices[i + 1]));
  EXPECT_EQ(read_tones(a, f), s.tones());
  EXPECT_EQ(read_tone_set(a, f), s.tone_set());

  const Figure tri = figure_of(a, std::vector<Tone>{Tone(0), Tone(4), Tone(7)}, true);
  EXPECT_TRUE(tri.closed);
  EXPECT_EQ(tri.chords.size(), 3u);
}

TEST(Symmetry, ApplyMovesTones) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Assignment a = random_assignment(rng);
    const VertexPerm& op = random_op(rng);
    const Assignment b = apply_symmetry(a, op);
    for (int v = 0; v < 12; ++v) EXPECT_EQ(b.tone_at(op(VertexId(v))), a.tone_at(VertexId(v)));
  }
}

TEST(Symmetry, FigureKindsInvariant) {
  const Assignment a = from_word(kType1);
  const Figure f = figure_of(a, scale("minor", Tone(2)));
  for (const auto& op : icosahedral_group().ops()) {
    const Figure g = apply_symmetry(f, op.perm);
    EXPECT_EQ(g.chords, f.chords);
  }
}

TEST(Canonical, InvariantUnderSymmetry) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const Assignment a = random_assignment(rng);
    const CanonicalKey k = canonical_form(a);
    EXPECT_EQ(canonical_form(apply_symmetry(a, random_op(rng))), k);
    EXPECT_EQ(canonical_form(Assignment(k)), k);
    EXPECT_LE(k, a.word());
    EXPECT_EQ(k[0], Tone(0));
  }
}

TEST(Canonical, SeparatesNonIsomorphic) {
  std::mt19937 rng(9);
  const Assignment a = from_word(kType1);
  for (int trial = 0; trial < 100; ++trial) {
    std::array<Tone, 12> w = a.word();
    const int i = static_cast<int>(rng() % 12), j = static_cast<int>((i + 1 + rng() % 11) % 12);
    std::swap(w[i], w[j]);
    const Assignment b(w);
    bool image = false;
    for (const auto& op : icosahedral_group().ops()) image = image || apply_symmetry(a, op.perm) == b;
    EXPECT_EQ(canonical_form(b) == canonical_form(a), image);
  }
}

TEST(Canonical, KeyString) {
  const Assignment a = from_word(kType1);
  EXPECT_EQ(key_string(canonical_form(a)), "C C# D Eb B Bb A F E G G# F#");
}

TEST(Transposition, EvenShiftsAreSymmetries) {
  const ReferenceTypes refs = hand_types();
  for (const auto& [label, a] : refs.all()) {
    EXPECT_TRUE(has_hexagon_symmetry(a)) << to_string(label);
    for (int k = 0; k < 12; ++k) {
      const TranspositionMap m = transposition_vertex_map(a, k);
      EXPECT_EQ(m.in_group, k % 2 == 0) << to_string(label) << " k=" << k;
      for (int v = 0; v < 12; ++v) EXPECT_EQ(a.tone_at(m.perm(VertexId(v))), a.tone_at(VertexId(v)) + k);
    }
  }
}

TEST(Transposition, RandomAssignmentsLackSymmetry) {
  std::mt19937 rng(10);
  int symmetric = 0;
  for (int trial = 0; trial < 2000; ++trial) symmetric += has_hexagon_symmetry(random_assignment(rng));
  EXPECT_EQ(symmetric, 0);
}

TEST(Transposition, AssignmentShift) {
  const Assignment a = from_word(kType1);
  const Assignment b = transpose_assignment(a, 3);
  for (int v = 0; v < 12; ++v) EXPECT_EQ(b.tone_at(VertexId(v)), a.tone_at(VertexId(v)) + 3);
}

TEST(Hexagon, Partition) {
  const IcosaGraph& g = icosahedron();
  for (const auto& [label, a] : hand_types().all()) {
    const HexagonPartition p = hexagon_partition(a);
    EXPECT_EQ(p.hexagon.size(), 6);
    EXPECT_EQ(p.hexagon | p.hexagram, ToneSet::from_mask(0xFFF));
    for (Tone x : p.hexagon.tones()) {
      EXPECT_TRUE(g.adjacent(a.vertex_of(x), a.vertex_of(x + 2)));
      EXPECT_TRUE(on_hexagon(a, x));
    }
    for (Tone x : p.hexagram.tones()) EXPECT_EQ(chord_kind(g, a.vertex_of(x), a.vertex_of(x + 2)), ChordKind::Middle);
  }
}

TEST(Hexagon, RadialPartnerIsInvolution) {
  for (const auto& [label, a] : hand_types().all()) {
    const HexagonPartition p = hexagon_partition(a);
    ToneSet partners;
    for (int x = 0; x < 12; ++x) {
      const Tone r = radial_partner(a, Tone(x));
      EXPECT_NE(p.hexagon.contains(r), p.hexagon.contains(Tone(x)));
      EXPECT_EQ(radial_partner(a, r), Tone(x)) << to_string(label);
      if (p.hexagon.contains(Tone(x))) partners.insert(r);
    }
    EXPECT_EQ(partners, p.hexagram);
  }
}

TEST(Hexagon, NonSymmetricThrows) {
  const Assignment a = from_word("C D E F G A B C# Eb F# G# Bb");
  EXPECT_FALSE(has_hexagon_symmetry(a));
  EXPECT_THROW(hexagon_partition(a), NotHexagonSymmetricError);
}

TEST(Hexagon, SpatialInversionAddsTritone) {
  for (const auto& [label, a] : hand_types().all()) {
    const auto s = scale("major", Tone(2));
    const Figure f = spatial_inversion(figure_of(a, s));
    EXPECT_EQ(read_tone_set(a, f), s.tone_set().transposed(6)) << to_string(label);
  }
}

TEST(TypeLabel, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_type_label("3")), "3");
  EXPECT_EQ(to_string(parse_type_label("2'")), "2'");
  EXPECT_EQ(to_string(parse_type_label("2p")), "2'");
  EXPECT_EQ(to_string(parse_type_label("4*")), "4*");
  EXPECT_EQ(to_string(parse_type_label("4x")), "4*");
  EXPECT_THROW(parse_type_label("5"), ParseError);
  EXPECT_THROW(parse_type_label("1?"), ParseError);
  EXPECT_EQ(all_type_labels().size(), 12u);
}

TEST(Classify, RecognizesImagesOfEachType) {
  std::mt19937 rng(12);
  const ReferenceTypes refs = hand_types();
  for (const auto& [label, a] : refs.all()) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto got = classify_type(apply_symmetry(a, random_op(rng)), refs);
      ASSERT_TRUE(got.has_value());
      EXPECT_EQ(*got, label);
    }
  }
}

TEST(Classify, SwapFallsOutsideTheTypes) {
  const ReferenceTypes refs = hand_types();
  for (const auto& [label, a] : refs.all())
    for (int i = 0; i < 12; ++i)
      for (int j = i + 1; j < 12; ++j) {
        std::array<Tone, 12> w = a.word();
        std::swap(w[i], w[j]);
        EXPECT_FALSE(classify_type(Assignment(w), refs).has_value()) << to_string(label) << " " << i << "," << j;
      }
}

TEST(Classify, TypesAreDistinct) {
  std::set<CanonicalKey> keys;
  for (const auto& [label, a] : hand_types().all()) {
    EXPECT_EQ(canonical_form(a), a.word()) << to_string(label);
    keys.insert(canonical_form(a));
  }
  EXPECT_EQ(keys.size(), 12u);
}
