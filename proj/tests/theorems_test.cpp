#include <gtest/gtest.h>

#include <json.hpp>
#include <random>

#include "musico/theorems.h"

using namespace musico;

namespace {

TypeLabel L(const char* s) { return parse_type_label(s); }

ReferenceTypes with(const std::map<TypeLabel, Assignment>& changes) {
  std::map<TypeLabel, Assignment> m = reference_types().all();
  for (const auto& [label, a] : changes) m.insert_or_assign(label, a);
  return ReferenceTypes(m);
}

Assignment swapped(const Assignment& a, Tone x, Tone y) {
  std::array<Tone, 12> w = a.word();
  std::swap(w[a.vertex_of(x).index], w[a.vertex_of(y).index]);
  return Assignment(w);
}

bool fails(CheckResult (*check)(const ReferenceTypes&), const ReferenceTypes& refs) {
  try {
    return !check(refs).passed;
  } catch (const std::exception&) {
    return true;
  }
}

const std::set<std::string> kKnownFalse = {"major_minor_duality", "self_duality"};

}  // namespace

TEST(TriadKind, MajorTriadOnType1) {
  const Assignment& a = reference_types().at(L("1"));
  const TriangleKind k = triad_kind(a, {Tone(0), Tone(4), Tone(7)});
  EXPECT_EQ(k.shape, TriangleShape::GoldenTriangle);
  ASSERT_TRUE(k.apex.has_value());
  EXPECT_EQ(a.tone_at(*k.apex), Tone(0));
  const IcosaGraph& g = icosahedron();
  EXPECT_EQ(chord_kind(g, a.vertex_of(Tone(4)), a.vertex_of(Tone(7))), ChordKind::Edge);
  EXPECT_EQ(chord_kind(g, a.vertex_of(Tone(0)), a.vertex_of(Tone(4))), ChordKind::Middle);
}

TEST(TriadKind, OrderDoesNotMatter) {
  const Assignment& a = reference_types().at(L("2'"));
  for (int x = 0; x < 12; ++x) {
    const TriangleKind k = triad_kind(a, {Tone(x), Tone(x + 4), Tone(x + 7)});
    EXPECT_EQ(triad_kind(a, {Tone(x + 7), Tone(x), Tone(x + 4)}), k);
  }
}

TEST(TriadShape, Rerootings) {
  EXPECT_EQ(triad_shape(4, 7), triad_shape(3, 8));
  EXPECT_EQ(triad_shape(4, 7), triad_shape(5, 9));
  EXPECT_NE(triad_shape(4, 7), triad_shape(3, 7));
  EXPECT_EQ(triad_shape(7, 10), triad_shape(3, 5));
}

TEST(Uniqueness, ScanContainsTheTriads) {
  const auto& refs = reference_types();
  const std::vector<TypeLabel> t14 = {L("1"), L("4")};
  const auto hex = uniqueness_scan(refs, t14, TriangleShape::GoldenTriangle, ApexClass::Hexagon);
  EXPECT_NE(std::find(hex.begin(), hex.end(), std::pair{4, 7}), hex.end());
  for (auto [n, m] : hex) EXPECT_EQ(triad_shape(n, m), triad_shape(4, 7));
  const auto gram = uniqueness_scan(refs, t14, TriangleShape::GoldenTriangle, ApexClass::Hexagram);
  EXPECT_NE(std::find(gram.begin(), gram.end(), std::pair{7, 10}), gram.end());
}

TEST(Pristine, StructuralChecksPass) {
  EXPECT_TRUE(check_symmetry_group().passed);
  EXPECT_TRUE(check_triangle_census().passed);
  EXPECT_TRUE(check_prohibition_lemma().passed);
  EXPECT_TRUE(check_enumeration_counts().passed);
  EXPECT_TRUE(check_fundamental_hexatonic().passed);
}

TEST(Pristine, OnlyTheKnownFalseStatementsFail) {
  const VerificationReport rep = run_all();
  EXPECT_GE(rep.results.size(), 20u);
  for (const auto& r : rep.results) {
    EXPECT_EQ(r.passed, !kKnownFalse.count(r.name)) << r.name;
    EXPECT_EQ(r.passed, r.counterexamples.empty()) << r.name;
  }
  EXPECT_EQ(rep.failed_count(), 2);
}

TEST(Pristine, WeakerFormsHold) {
  EXPECT_TRUE(check_major_minor_duality_by_rotation().passed);
  EXPECT_TRUE(check_self_duality_by_hexagon().passed);
}

TEST(Pristine, KnownFalseCarryWitnesses) {
  const CheckResult mm = check_major_minor_duality();
  EXPECT_FALSE(mm.passed);
  EXPECT_FALSE(mm.counterexamples.empty());
  const CheckResult sd = check_self_duality();
  EXPECT_FALSE(sd.passed);
  EXPECT_EQ(sd.counterexamples.size(), 24u);
}

TEST(Invariance, SymmetricImagesChangeNothing) {
  std::mt19937 rng(21);
  const auto& ops = icosahedral_group().ops();
  std::map<TypeLabel, Assignment> moved;
  for (const auto& [label, a] : reference_types().all()) moved.emplace(label, apply_symmetry(a, ops[rng() % ops.size()].perm));
  const ReferenceTypes refs(moved);
  const VerificationReport rep = run_type_checks(refs);
  for (const auto& r : rep.results) EXPECT_EQ(r.passed, !kKnownFalse.count(r.name)) << r.name;
}

TEST(Mutation, SwappedMajorAndMinorTypesBreakGoldenTheorem) {
  const auto& base = reference_types();
  const ReferenceTypes refs = with({{L("1"), base.at(L("2"))}, {L("2"), base.at(L("1"))}});
  EXPECT_TRUE(fails(check_golden_theorem, refs));
  EXPECT_TRUE(fails(check_golden_duality, refs));
  EXPECT_TRUE(fails(check_tone_below_c, refs));
}

TEST(Mutation, SwappedPythagoreanTypesBreakGoldenTheorem2) {
  const auto& base = reference_types();
  const ReferenceTypes refs = with({{L("1'"), base.at(L("2'"))}, {L("2'"), base.at(L("1'"))}});
  EXPECT_TRUE(fails(check_golden_theorem_2, refs));
  EXPECT_FALSE(fails(check_golden_theorem, refs));
}

TEST(Mutation, RaisedTypeBreaksTypeMap) {
  const auto& base = reference_types();
  const ReferenceTypes refs = with({{L("3"), transpose_assignment(base.at(L("3")), 2)}});
  // an even raise is a symmetry, so nothing notices
  EXPECT_FALSE(fails(check_hexagon_symmetry_and_type_map, refs));
  const ReferenceTypes odd = with({{L("3"), base.at(L("2"))}});
  EXPECT_TRUE(fails(check_hexagon_symmetry_and_type_map, odd));
}

TEST(Mutation, ToneSwapIsCaught) {
  const auto& base = reference_types();
  const ReferenceTypes refs = with({{L("1"), swapped(base.at(L("1")), Tone(4), Tone(5))}});
  EXPECT_TRUE(fails(check_golden_theorem, refs));
  EXPECT_TRUE(fails(check_tritone_and_messiaen, refs));
  const VerificationReport rep = run_type_checks(refs);
  EXPECT_GT(rep.failed_count(), 2);
}

TEST(Mutation, ExceptionalSwapIsCaught) {
  const auto& base = reference_types();
  const ReferenceTypes refs = with({{L("1*"), swapped(base.at(L("1*")), Tone(0), Tone(2))}});
  EXPECT_TRUE(fails(check_self_duality_by_hexagon, refs) || fails(check_red_lines, refs));
}

TEST(Report, TextAndJson) {
  VerificationReport rep;
  CheckResult ok{"alpha", "always"};
  ok.detail("k", "v");
  rep.results.push_back(ok.finish());
  CheckResult bad{"beta", "never"};
  bad.fail("witness 1");
  rep.results.push_back(bad.finish());
  EXPECT_EQ(rep.passed_count(), 1);
  EXPECT_EQ(rep.failed_count(), 1);
  EXPECT_FALSE(rep.all_passed());
  ASSERT_NE(rep.find("beta"), nullptr);
  EXPECT_EQ(rep.find("gamma"), nullptr);

  const std::string text = rep.to_text();
  EXPECT_NE(text.find("[PASS] alpha: always"), std::string::npos);
  EXPECT_NE(text.find("[FAIL] beta: never"), std::string::npos);
  EXPECT_NE(text.find("witness 1"), std::string::npos);
  EXPECT_NE(text.find("summary: 1 passed, 1 failed"), std::string::npos);

  const auto j = nlohmann::json::parse(rep.to_json());
  ASSERT_TRUE(j.contains("results"));
  EXPECT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(j["results"][1]["name"], "beta");
  EXPECT_EQ(j["results"][1]["passed"], false);
}
