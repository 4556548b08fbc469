#include <gtest/gtest.h>

#include <random>

#include "musico/tones.h"

using namespace musico;

TEST(Tone, ArithmeticWraps) {
  EXPECT_EQ(Tone(11) + 1, Tone(0));
  EXPECT_EQ(Tone(0) - 1, Tone(11));
  EXPECT_EQ(Tone(-13), Tone(11));
  EXPECT_EQ(Tone(4).interval_to(Tone(0)), 8);
  EXPECT_EQ(Tone(0).interval_to(Tone(7)), 7);
}

TEST(Tone, Names) {
  const char* want[] = {"C", "C#", "D", "Eb", "E", "F", "F#", "G", "G#", "A", "Bb", "B"};
  for (int pc = 0; pc < 12; ++pc) EXPECT_EQ(Tone(pc).name(), want[pc]);
}

TEST(Tone, ParseRoundTrip) {
  for (int pc = 0; pc < 12; ++pc) EXPECT_EQ(parse_tone(Tone(pc).name()), Tone(pc));
}

TEST(Tone, ParseSpellings) {
  EXPECT_EQ(parse_tone("Ab"), Tone(8));
  EXPECT_EQ(parse_tone("G#"), Tone(8));
  EXPECT_EQ(parse_tone("Gs"), Tone(8));
  EXPECT_EQ(parse_tone("G♯"), Tone(8));
  EXPECT_EQ(parse_tone("A♭"), Tone(8));
  EXPECT_EQ(parse_tone("Cb"), Tone(11));
  EXPECT_EQ(parse_tone("B#"), Tone(0));
  EXPECT_EQ(parse_tone("e"), Tone(4));
  EXPECT_EQ(parse_tone("Dbb"), Tone(0));
}

TEST(Tone, ParseRejectsJunk) {
  EXPECT_THROW(parse_tone(""), ParseError);
  EXPECT_THROW(parse_tone("H"), ParseError);
  EXPECT_THROW(parse_tone("C+"), ParseError);
  EXPECT_THROW(parse_tone("#C"), ParseError);
}

TEST(ToneSet, Basics) {
  ToneSet s{Tone(0), Tone(4), Tone(7)};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(Tone(4)));
  EXPECT_FALSE(s.contains(Tone(5)));
  EXPECT_EQ(s.to_string(), "{C,E,G}");
  EXPECT_EQ(s.transposed(5), (ToneSet{Tone(5), Tone(9), Tone(0)}));
  EXPECT_EQ((s | ToneSet{Tone(1)}).size(), 4);
  EXPECT_EQ((s & ToneSet{Tone(0), Tone(1)}), ToneSet{Tone(0)});
}

TEST(ToneSet, TranspositionIsAGroupAction) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> mask(0, 0xFFF), k(-24, 24);
  for (int trial = 0; trial < 1000; ++trial) {
    const ToneSet s = ToneSet::from_mask(static_cast<std::uint16_t>(mask(rng)));
    const int a = k(rng), b = k(rng);
    EXPECT_EQ(s.transposed(a).transposed(b), s.transposed(a + b));
    EXPECT_EQ(s.transposed(12), s);
    EXPECT_EQ(s.transposed(a).size(), s.size());
  }
}

TEST(Catalog, MajorAndMinor) {
  EXPECT_EQ(join_names(scale("major", Tone(0)).tones()), "C D E F G A B");
  EXPECT_EQ(join_names(scale("minor", Tone(0)).tones()), "C D Eb F G G# Bb");
  EXPECT_EQ(join_names(scale("major", parse_tone("G")).tones()), "G A B C D E F#");
}

TEST(Catalog, Modes) {
  EXPECT_EQ(join_names(scale("dorian", Tone(2)).tones()), "D E F G A B C");
  EXPECT_EQ(join_names(scale("phrygian", Tone(4)).tones()), "E F G A B C D");
  EXPECT_EQ(join_names(scale("lydian", Tone(5)).tones()), "F G A B C D E");
  EXPECT_EQ(join_names(scale("mixolydian", Tone(7)).tones()), "G A B C D E F");
}

TEST(Catalog, ModesShareTheMajorSet) {
  const ToneSet c_major = scale("major", Tone(0)).tone_set();
  EXPECT_EQ(scale("dorian", Tone(2)).tone_set(), c_major);
  EXPECT_EQ(scale("phrygian", Tone(4)).tone_set(), c_major);
  EXPECT_EQ(scale("lydian", Tone(5)).tone_set(), c_major);
  EXPECT_EQ(scale("mixolydian", Tone(7)).tone_set(), c_major);
  EXPECT_EQ(scale("minor", Tone(9)).tone_set(), c_major);
}

TEST(Catalog, CyclesCoverAllTones) {
  for (const char* name : {"chromatic", "pythagorean-chain"}) {
    const auto s = scale(name, Tone(0));
    EXPECT_TRUE(s.cyclic());
    EXPECT_EQ(s.tone_set().size(), 12) << name;
  }
  const auto chain = scale("pythagorean-chain", Tone(0)).tones();
  for (std::size_t i = 0; i < chain.size(); ++i) EXPECT_EQ(chain[i].interval_to(chain[(i + 1) % 12]), 7);
  EXPECT_EQ(scale("whole-tone", Tone(1)).tone_set().size(), 6);
}

TEST(Catalog, FundamentalTriadsBuildHexatonicScales) {
  const auto& minor_f = catalog().triad("hexatonic-minor-fundamental");
  const auto& major_f = catalog().triad("hexatonic-major-fundamental");
  for (int x = 0; x < 12; ++x) {
    const Tone r(x);
    ToneSet hm, hM, pm, pM;
    for (int off : {0, 7, 5}) {
      auto t = triad_at(minor_f, r + off);
      hm = hm | ToneSet(t.begin(), t.end());
      auto u = triad_at(major_f, r + off);
      hM = hM | ToneSet(u.begin(), u.end());
    }
    for (int off : {0, 5}) {
      auto t = triad_at(minor_f, r + off);
      pm = pm | ToneSet(t.begin(), t.end());
    }
    for (int off : {0, 7}) {
      auto u = triad_at(major_f, r + off);
      pM = pM | ToneSet(u.begin(), u.end());
    }
    EXPECT_EQ(hm, scale("hexatonic-minor", r).tone_set());
    EXPECT_EQ(hM, scale("hexatonic-major", r).tone_set());
    EXPECT_EQ(pm, scale("pentatonic-minor", r).tone_set());
    EXPECT_EQ(pM, scale("pentatonic-major", r).tone_set());
  }
}

TEST(Catalog, ThreeTriadsBuildTheScale) {
  for (int x = 0; x < 12; ++x)
    for (const char* name : {"major", "minor"}) {
      ToneSet u;
      for (int off : {0, 5, 7}) {
        auto t = triad_at(catalog().triad(name), Tone(x + off));
        u = u | ToneSet(t.begin(), t.end());
      }
      EXPECT_EQ(u, scale(name, Tone(x)).tone_set());
    }
}

TEST(Catalog, OneTritonePerDiatonicSet) {
  for (const char* name : {"major", "minor", "dorian", "phrygian", "lydian", "mixolydian"}) {
    const ToneSet s = scale(name, Tone(0)).tone_set();
    int tritones = 0;
    for (Tone t : s.tones())
      if (t.pc() < 6 && s.contains(t + 6)) ++tritones;
    EXPECT_EQ(tritones, 1) << name;
  }
}

TEST(Catalog, UnknownNamesThrow) {
  EXPECT_THROW(catalog().scale("bebop"), ParseError);
  EXPECT_THROW(catalog().triad("augmented"), ParseError);
  EXPECT_FALSE(catalog().has_scale("bebop"));
  EXPECT_TRUE(catalog().has_scale("major"));
}

TEST(NormalForm, AscendingFromRoot) {
  const ToneSet s = scale("minor", Tone(9)).tone_set();
  EXPECT_EQ(join_names(ascending_normal_form(s, Tone(9))), "A B C D E F G");
  EXPECT_EQ(join_names(ascending_normal_form(s, Tone(0))), "C D E F G A B");
  EXPECT_THROW(ascending_normal_form(s, Tone(1)), std::invalid_argument);
}

TEST(ScaleInstance, TransposeMovesRoot) {
  const auto s = scale("major", Tone(0));
  EXPECT_EQ(transpose(s, 7), scale("major", Tone(7)));
  EXPECT_EQ(transpose(s, 7).tone_set(), s.tone_set().transposed(7));
}
