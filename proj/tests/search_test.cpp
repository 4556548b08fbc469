#include <gtest/gtest.h>

#include <set>

#include "musico/search.h"

using namespace musico;

namespace {

// Places tones 0..11 one at a time. keep(t, v, at) vetoes a placement given
// the partial map at[tone] (-1 when unplaced).
template <typename Keep>
void place(int t, std::array<int, 12>& at, std::array<bool, 12>& used, const Keep& keep,
           std::vector<Assignment>& out) {
  if (t == 12) {
    std::array<Tone, 12> word;
    for (int x = 0; x < 12; ++x) word[at[x]] = Tone(x);
    out.emplace_back(word);
    return;
  }
  for (int v = 0; v < 12; ++v) {
    if (used[v] || !keep(t, v, at)) continue;
    at[t] = v;
    used[v] = true;
    place(t + 1, at, used, keep, out);
    used[v] = false;
    at[t] = -1;
  }
}

template <typename Keep>
std::vector<Assignment> brute(const Keep& keep) {
  std::array<int, 12> at;
  at.fill(-1);
  std::array<bool, 12> used{};
  std::vector<Assignment> out;
  place(0, at, used, keep, out);
  return out;
}

// every pair distance survives the shift by two
std::vector<Assignment> brute_hexagon_symmetric() {
  const IcosaGraph& g = icosahedron();
  return brute([&g](int t, int v, std::array<int, 12> at) {
    at[t] = v;
    auto d = [&g](int a, int b) { return g.distance(VertexId(a), VertexId(b)); };
    for (int u = 0; u < 12; ++u) {
      if (u == t || at[u] < 0) continue;
      for (int k : {2, 10}) {
        const int t2 = (t + k) % 12, u2 = (u + k) % 12;
        if (at[t2] >= 0 && at[u2] >= 0 && d(v, at[u]) != d(at[t2], at[u2])) return false;
      }
    }
    return true;
  });
}

std::vector<Assignment> brute_edges(const std::vector<std::pair<int, int>>& demands) {
  const IcosaGraph& g = icosahedron();
  return brute([&](int t, int v, const std::array<int, 12>& at) {
    for (auto [x, y] : demands) {
      const int other = x == t ? y : y == t ? x : -1;
      if (other >= 0 && at[other] >= 0 && !g.adjacent(VertexId(v), VertexId(at[other]))) return false;
    }
    return true;
  });
}

std::vector<std::pair<int, int>> chromatic_and_wt_c() {
  std::vector<std::pair<int, int>> d;
  for (int x = 0; x < 12; ++x) d.emplace_back(x, (x + 1) % 12);
  for (int x = 0; x < 12; x += 2) d.emplace_back(x, (x + 2) % 12);
  return d;
}

std::set<CanonicalKey> keys_of(const std::vector<Assignment>& as) {
  std::set<CanonicalKey> out;
  for (const auto& a : as) out.insert(canonical_form(a));
  return out;
}

}  // namespace

TEST(Oracle, HexagonSymmetricCountsMatch) {
  std::vector<Assignment> want = brute_hexagon_symmetric();
  std::sort(want.begin(), want.end());
  EXPECT_EQ(want.size(), 1440u);
  EXPECT_EQ(keys_of(want).size(), 12u);
  for (const auto& a : want) ASSERT_TRUE(has_hexagon_symmetry(a));

  const EnumerationResult got = enumerate_hexagon_symmetric();
  EXPECT_EQ(got.assignments, want);
  EXPECT_EQ(got.class_count(), 12u);
  for (const auto& cls : got.classes) EXPECT_EQ(cls.members, 120u);
}

TEST(Oracle, ChromaticWholeToneMatchesBruteForce) {
  std::vector<Assignment> want = brute_edges(chromatic_and_wt_c());
  std::sort(want.begin(), want.end());
  ConstraintSet c{{chromatic_cycle(), whole_tone_cycle(Tone(0))}, false};
  const EnumerationResult got = enumerate(c);
  EXPECT_EQ(got.assignments, want);
  EXPECT_EQ(got.raw_count(), 960u);
  EXPECT_EQ(got.class_count(), 8u);
}

TEST(Enumerate, SymmetryLeavesTwoClasses) {
  ConstraintSet c{{chromatic_cycle(), whole_tone_cycle(Tone(0))}, true};
  const EnumerationResult r = enumerate(c);
  EXPECT_EQ(r.raw_count(), 240u);
  EXPECT_EQ(r.class_count(), 2u);
  for (const auto& cls : r.classes) {
    EXPECT_EQ(cls.representative.word(), cls.key);
    EXPECT_EQ(cls.members, 120u);
  }
}

TEST(Enumerate, PythagoreanAndWholeToneCsharp) {
  for (Tone start : {Tone(0), Tone(1)}) {
    ConstraintSet c{{pythagorean_cycle(), whole_tone_cycle(start)}, true};
    EXPECT_EQ(enumerate(c).class_count(), 2u);
  }
}

TEST(Enumerate, OpenChromaticChainSameUnderSymmetry) {
  ConstraintSet open{{chromatic_cycle(false), whole_tone_cycle(Tone(0))}, true};
  ConstraintSet closed{{chromatic_cycle(true), whole_tone_cycle(Tone(0))}, true};
  EXPECT_EQ(enumerate(open).assignments, enumerate(closed).assignments);
}

TEST(Enumerate, ThreadCountDoesNotMatter) {
  ConstraintSet c{{chromatic_cycle(), whole_tone_cycle(Tone(1))}, false};
  const EnumerationResult one = enumerate(c, 1), four = enumerate(c, 4), many = enumerate(c, 12);
  EXPECT_EQ(one.assignments, four.assignments);
  EXPECT_EQ(one.assignments, many.assignments);
  ASSERT_EQ(one.classes.size(), four.classes.size());
  for (std::size_t i = 0; i < one.classes.size(); ++i) EXPECT_EQ(one.classes[i].key, four.classes[i].key);
}

TEST(Enumerate, EveryResultSatisfiesDemands) {
  ConstraintSet c{{chromatic_cycle(), whole_tone_cycle(Tone(0))}, false};
  for (const auto& a : enumerate(c).assignments) {
    EXPECT_TRUE(satisfies_neighboring(a, chromatic_cycle().tones, true));
    EXPECT_TRUE(satisfies_neighboring(a, whole_tone_cycle(Tone(0)).tones, true));
  }
}

TEST(Prohibition, NothingSatisfiesAll) {
  EXPECT_EQ(prohibition_search().raw_count(), 0u);
  // the oracle agrees
  std::vector<std::pair<int, int>> d;
  for (int x = 0; x < 12; ++x) {
    d.emplace_back(x, (x + 1) % 12);
    d.emplace_back(x, (x + 2) % 12);
  }
  EXPECT_TRUE(brute_edges(d).empty());
}

TEST(Prohibition, Relaxations) {
  const auto rs = prohibition_relaxations();
  ASSERT_EQ(rs.size(), 3u);
  EXPECT_EQ(rs[0].raw, 30720u);
  EXPECT_EQ(rs[0].classes, 256u);
  EXPECT_EQ(rs[1].raw, 960u);
  EXPECT_EQ(rs[1].classes, 8u);
  EXPECT_EQ(rs[2].raw, 0u);
}

TEST(Collect, GroupsByKey) {
  const Assignment a = reference_types().at(parse_type_label("1"));
  std::vector<Assignment> as;
  for (const auto& op : icosahedral_group().ops()) as.push_back(apply_symmetry(a, op.perm));
  const EnumerationResult r = collect(as);
  EXPECT_EQ(r.raw_count(), 120u);
  ASSERT_EQ(r.class_count(), 1u);
  EXPECT_EQ(r.classes[0].key, a.word());
}

TEST(ReferenceTypes, MatchHandWords) {
  const std::pair<const char*, const char*> rows[] = {
      {"1", "C C# D Eb B Bb A F E G G# F#"},  {"2", "C C# D B Bb A F E Eb G G# F#"},
      {"3", "C C# Eb E G# B Bb D F G A F#"},  {"4", "C C# E G# A B D Eb F G Bb F#"},
      {"1'", "C D G Bb F A E B Eb G# C# F#"}, {"2'", "C D F Bb Eb G E A C# G# B F#"},
      {"3'", "C E G# F G A B C# Eb Bb D F#"}, {"4'", "C Eb F G E G# C# Bb D A B F#"},
      {"1*", "C D A Bb G B E C# F G# Eb F#"}, {"2*", "C C# F D Eb Bb G# A E G B F#"},
      {"3*", "C E G# G A B C# Eb F Bb D F#"}, {"4*", "C C# Eb F E G# B Bb D G A F#"},
  };
  const ReferenceTypes& refs = reference_types();
  for (auto [label, word] : rows) EXPECT_EQ(refs.at(parse_type_label(label)).to_string(), word) << label;
}

TEST(ReferenceTypes, FamiliesAndCycles) {
  for (const auto& [label, a] : reference_types().all()) {
    EXPECT_EQ(family_of(a), label.family);
    const bool chromatic = satisfies_neighboring(a, chromatic_cycle().tones, true);
    const bool fifths = satisfies_neighboring(a, pythagorean_cycle().tones, true);
    EXPECT_EQ(chromatic, label.family == Family::Chromatic) << to_string(label);
    EXPECT_EQ(fifths, label.family == Family::Pythagorean) << to_string(label);
  }
}

TEST(ReferenceTypes, SemitoneRaisePairs) {
  const ReferenceTypes& refs = reference_types();
  for (Family f : {Family::Chromatic, Family::Pythagorean, Family::Exceptional}) {
    for (auto [x, y] : {std::pair{1, 4}, std::pair{2, 3}}) {
      const auto got = classify_type(transpose_assignment(refs.at({f, x}), 1), refs);
      ASSERT_TRUE(got.has_value());
      EXPECT_EQ(*got, (TypeLabel{f, y}));
    }
  }
}

TEST(ConstraintSet, Describe) {
  ConstraintSet c{{chromatic_cycle(), whole_tone_cycle(Tone(1), false)}, true};
  const std::string d = c.describe();
  EXPECT_NE(d.find("chromatic"), std::string::npos);
}
