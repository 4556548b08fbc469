#include "musico/theorems.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "musico/generalize.h"

namespace musico {

namespace {

const IcosaGraph& graph() { return icosahedron(); }

TriadTones major_triad(Tone x) { return triad_at(catalog().triad("major"), x); }
TriadTones minor_triad(Tone x) { return triad_at(catalog().triad("minor"), x); }

std::string triad_name(const TriadTones& t) {
  return std::string(t[0].name()) + std::string(t[1].name()) + std::string(t[2].name());
}

std::string type_name(TypeLabel l) { return "type " + to_string(l); }

TypeLabel label(Family f, int i) { return {f, i}; }

std::string pairs_string(const std::vector<std::pair<int, int>>& ps) {
  std::string s = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ",";
    s += "(" + std::to_string(ps[i].first) + "," + std::to_string(ps[i].second) + ")";
  }
  return s + "}";
}

std::string count_string(int got, int of) { return std::to_string(got) + "/" + std::to_string(of); }

// Counts roots X for which the triad at X sits on the given shape.
int count_shape(const Assignment& a, const TriadTemplate& tmpl, TriangleShape shape, std::vector<Tone>* misses) {
  int n = 0;
  for (int x = 0; x < kToneCount; ++x) {
    if (triad_kind(a, triad_at(tmpl, Tone(x))).shape == shape) {
      ++n;
    } else if (misses) {
      misses->push_back(Tone(x));
    }
  }
  return n;
}

void expect_all_shape(CheckResult& r, const ReferenceTypes& refs, TypeLabel t, std::string_view triad,
                      TriangleShape shape) {
  std::vector<Tone> misses;
  const TriadTemplate& tmpl = catalog().triad(triad);
  int n = count_shape(refs.at(t), tmpl, shape, &misses);
  r.detail(type_name(t) + " " + std::string(triad) + " triads on " + std::string(to_string(shape)),
           count_string(n, 12));
  for (Tone x : misses) {
    r.fail(type_name(t) + ": " + triad_name(triad_at(tmpl, x)) + " is " +
           std::string(to_string(triad_kind(refs.at(t), triad_at(tmpl, x)).shape)));
  }
}

int odd_partner(int index) { return 5 - index; }  // 1<->4, 2<->3

}  // namespace

TriangleKind triad_kind(const Assignment& a, const TriadTones& t) {
  return classify_triangle(graph(), {a.vertex_of(t[0]), a.vertex_of(t[1]), a.vertex_of(t[2])});
}

std::vector<std::pair<int, int>> uniqueness_scan(const ReferenceTypes& refs, const std::vector<TypeLabel>& types,
                                                 TriangleShape shape, ApexClass apex) {
  std::vector<std::pair<int, int>> out;
  for (int n = 1; n < kToneCount; ++n) {
    for (int m = n + 1; m < kToneCount; ++m) {
      bool all = true;
      for (TypeLabel t : types) {
        const Assignment& a = refs.at(t);
        const HexagonPartition part = hexagon_partition(a);
        const ToneSet apexes = apex == ApexClass::Hexagon ? part.hexagon : part.hexagram;
        for (int x = 0; x < kToneCount; ++x) {
          TriangleKind k = triad_kind(a, {Tone(x), Tone(x + n), Tone(x + m)});
          if (k.shape != shape || !k.apex || !apexes.contains(a.tone_at(*k.apex))) {
            all = false;
            break;
          }
        }
        if (!all) break;
      }
      if (all) out.emplace_back(n, m);
    }
  }
  return out;
}

CheckResult check_symmetry_group() {
  CheckResult r{"symmetry_group", "The icosahedron has 120 symmetries, 60 of them rotations, regenerated by the word list"};
  const IcosaGraph& g = graph();
  const SymmetryGroup& G = icosahedral_group();
  r.detail("order", std::to_string(G.size()));
  r.detail("rotations", std::to_string(G.rotation_count()));
  r.expect(G.size() == 120, "group order " + std::to_string(G.size()));
  r.expect(G.rotation_count() == 60, "rotation count " + std::to_string(G.rotation_count()));

  int closure_misses = 0, parity_misses = 0;
  for (const auto& a : G.ops()) {
    for (const auto& b : G.ops()) {
      const VertexPerm ab = a.perm * b.perm;
      if (!G.contains(ab)) {
        ++closure_misses;
        continue;
      }
      if (G.find(ab).is_rotation != (a.is_rotation == b.is_rotation)) ++parity_misses;
    }
    if (!G.contains(a.perm.inverse())) r.fail("inverse missing for " + a.perm.to_string());
    for (int u = 0; u < kVertexCount; ++u)
      for (int v = u + 1; v < kVertexCount; ++v)
        if (chord_kind(g, VertexId(u), VertexId(v)) != chord_kind(g, a.perm(VertexId(u)), a.perm(VertexId(v)))) {
          r.fail("chord kind not preserved by " + a.perm.to_string());
        }
  }
  r.expect(closure_misses == 0, std::to_string(closure_misses) + " products outside the group");
  r.expect(parity_misses == 0, std::to_string(parity_misses) + " products with wrong orientation");
  r.expect(G.contains(VertexPerm()), "identity missing");
  const VertexPerm inv = central_inversion(g);
  r.expect(G.contains(inv) && !G.find(inv).is_rotation && G.find(inv).order == 2,
           "central inversion is not an order-2 reflection in the group");

  std::vector<VertexPerm> words = G.word_list();
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  r.detail("distinct words", std::to_string(words.size()));
  std::vector<VertexPerm> ops;
  for (const auto& op : G.ops()) ops.push_back(op.perm);
  r.expect(words == ops, "word list does not regenerate the group");
  const auto& gens = G.generators();
  r.detail("C5", gens.c5.to_string());
  r.detail("C3", gens.c3.to_string());
  r.detail("C2", gens.c2.to_string());
  r.detail("M", gens.m.to_string());
  return r.finish();
}

CheckResult check_triangle_census() {
  CheckResult r{"triangle_census", "The 220 vertex triples split 20/20/60/60/60 and there are 60 golden triangles"};
  const IcosaGraph& g = graph();
  std::map<TriangleShape, int> census;
  for (int a = 0; a < kVertexCount; ++a)
    for (int b = a + 1; b < kVertexCount; ++b)
      for (int c = b + 1; c < kVertexCount; ++c) {
        VertexTriple t{VertexId(a), VertexId(b), VertexId(c)};
        TriangleKind k = classify_triangle(g, t);
        ++census[k.shape];
        bool has_diameter = g.opposite(t[0]) == t[1] || g.opposite(t[0]) == t[2] || g.opposite(t[1]) == t[2];
        if (has_diameter && k.shape != TriangleShape::Scalene) r.fail("diameter triple not scalene");
      }
  const std::pair<TriangleShape, int> expected[] = {
      {TriangleShape::Face, 20},         {TriangleShape::LargeEquilateral, 20}, {TriangleShape::GoldenTriangle, 60},
      {TriangleShape::GoldenGnomon, 60}, {TriangleShape::Scalene, 60}};
  for (const auto& [shape, n] : expected) {
    r.detail(std::string(to_string(shape)), std::to_string(census[shape]));
    r.expect(census[shape] == n, std::string(to_string(shape)) + " count " + std::to_string(census[shape]));
  }
  int rects = static_cast<int>(golden_rectangles(g).size());
  r.detail("golden rectangles", std::to_string(rects));
  r.expect(rects == 15, "golden rectangle count " + std::to_string(rects));
  return r.finish();
}

CheckResult check_prohibition_lemma() {
  CheckResult r{"prohibition_lemma", "No assignment puts every X next to X+1 and X+2"};
  EnumerationResult full = prohibition_search();
  r.detail("assignments", std::to_string(full.raw_count()));
  r.expect(full.raw_count() == 0, std::to_string(full.raw_count()) + " assignments satisfy the circulant demand");
  for (const auto& relaxed : prohibition_relaxations()) {
    r.detail("relaxed: " + relaxed.name, std::to_string(relaxed.raw) + " assignments, " +
                                             std::to_string(relaxed.classes) + " classes");
    if (relaxed.name == "chromatic only") r.expect(relaxed.raw > 0, "engine finds no chromatic embedding");
  }
  return r.finish();
}

CheckResult check_enumeration_counts() {
  CheckResult r{"enumeration_counts",
                "Hexagon-symmetric assignments: chromatic+WT(C) gives 2 classes, chromatic or Pythagorean with either "
                "whole-tone scale gives 4 each, 1440 assignments in 12 classes overall (4+4+4)"};
  auto classes = [](const std::vector<ToneCycle>& cycles, bool sym) {
    return enumerate(ConstraintSet{cycles, sym});
  };
  auto keys = [](const EnumerationResult& e) {
    std::set<CanonicalKey> s;
    for (const auto& c : e.classes) s.insert(c.key);
    return s;
  };
  auto unite = [](std::set<CanonicalKey> a, const std::set<CanonicalKey>& b) {
    a.insert(b.begin(), b.end());
    return a;
  };

  std::map<Family, std::set<CanonicalKey>> by_family;
  for (Family f : {Family::Chromatic, Family::Pythagorean}) {
    const ToneCycle base = f == Family::Chromatic ? chromatic_cycle(true) : pythagorean_cycle(true);
    const std::string name = to_string(f);
    EnumerationResult with_c = classes({base, whole_tone_cycle(Tone(0))}, true);
    EnumerationResult with_cs = classes({base, whole_tone_cycle(Tone(1))}, true);
    auto both = unite(keys(with_c), keys(with_cs));
    r.detail(name + "+WT(C)", std::to_string(with_c.class_count()) + " classes");
    r.detail(name + "+WT(C#)", std::to_string(with_cs.class_count()) + " classes");
    r.detail(name + "+either", std::to_string(both.size()) + " classes");
    r.expect(with_c.class_count() == 2, name + "+WT(C) gives " + std::to_string(with_c.class_count()) + " classes");
    r.expect(both.size() == 4, name + "+either WT gives " + std::to_string(both.size()) + " classes");
    for (const auto& a : with_c.assignments) {
      if (!satisfies_neighboring(a, base.tones, true) ||
          !satisfies_neighboring(a, whole_tone_cycle(Tone(0)).tones, true)) {
        r.fail("enumerated assignment violates its constraints: " + a.to_string());
      }
    }
    by_family[f] = both;

    EnumerationResult plain = classes({base, whole_tone_cycle(Tone(0))}, false);
    r.detail(name + "+WT(C) without symmetry", std::to_string(plain.raw_count()) + " assignments, " +
                                                    std::to_string(plain.class_count()) + " classes");
    const ToneCycle open = f == Family::Chromatic ? chromatic_cycle(false) : pythagorean_cycle(false);
    EnumerationResult opened = classes({open, whole_tone_cycle(Tone(0))}, true);
    r.detail(open.label + "+WT(C)", std::to_string(opened.class_count()) + " classes");
  }

  EnumerationResult hex = enumerate_hexagon_symmetric();
  r.detail("hexagon symmetric", std::to_string(hex.raw_count()) + " assignments, " +
                                    std::to_string(hex.class_count()) + " classes");
  r.expect(hex.raw_count() == 1440, "hexagon-symmetric raw count " + std::to_string(hex.raw_count()));
  r.expect(hex.class_count() == 12, "hexagon-symmetric class count " + std::to_string(hex.class_count()));
  std::map<Family, int> split;
  for (const auto& c : hex.classes) {
    Family f = family_of(c.representative);
    ++split[f];
    r.expect(c.members == 120, "class of size " + std::to_string(c.members));
    if (f != Family::Exceptional) r.expect(by_family[f].count(c.key) == 1, "family class missing from enumeration");
  }
  r.detail("family split", std::to_string(split[Family::Chromatic]) + "+" + std::to_string(split[Family::Pythagorean]) +
                               "+" + std::to_string(split[Family::Exceptional]));
  for (Family f : {Family::Chromatic, Family::Pythagorean, Family::Exceptional}) {
    r.expect(split[f] == 4, to_string(f) + " family has " + std::to_string(split[f]) + " classes");
  }
  return r.finish();
}

CheckResult check_fundamental_hexatonic() {
  CheckResult r{"fundamental_hexatonic",
                "Unions of fundamental hexatonic triads give the hexatonic and pentatonic scales"};
  const TriadTemplate& fmin = catalog().triad("hexatonic-minor-fundamental");
  const TriadTemplate& fmaj = catalog().triad("hexatonic-major-fundamental");
  auto set_of = [](const TriadTemplate& t, Tone x) {
    TriadTones tt = triad_at(t, x);
    return ToneSet(tt.begin(), tt.end());
  };
  for (int i = 0; i < kToneCount; ++i) {
    Tone x(i);
    auto check = [&](std::string_view scale_name, ToneSet got) {
      ToneSet want = scale(scale_name, x).tone_set();
      r.expect(got == want, std::string(x.name()) + " " + std::string(scale_name) + ": " + got.to_string() +
                                " != " + want.to_string());
    };
    check("hexatonic-minor", set_of(fmin, x) | set_of(fmin, x + 7) | set_of(fmin, x + 5));
    check("hexatonic-major", set_of(fmaj, x) | set_of(fmaj, x + 7) | set_of(fmaj, x + 5));
    check("pentatonic-minor", set_of(fmin, x) | set_of(fmin, x + 5));
    check("pentatonic-major", set_of(fmaj, x) | set_of(fmaj, x + 7));
  }
  ToneSet alt = set_of(fmin, Tone(0)) | set_of(fmin, Tone(7));
  r.detail("CGBb + GDF", alt.to_string());
  r.expect(alt == ToneSet{Tone(0), Tone(2), Tone(5), Tone(7), Tone(10)}, "alternative pairing gives " + alt.to_string());
  r.expect(alt != scale("pentatonic-minor", Tone(0)).tone_set(), "alternative pairing is the pentatonic minor");
  return r.finish();
}

CheckResult check_golden_theorem(const ReferenceTypes& refs) {
  CheckResult r{"golden_theorem",
                "Major triads are golden triangles on types 1 and 4, minor triads on types 2 and 3"};
  expect_all_shape(r, refs, label(Family::Chromatic, 1), "major", TriangleShape::GoldenTriangle);
  expect_all_shape(r, refs, label(Family::Chromatic, 4), "major", TriangleShape::GoldenTriangle);
  expect_all_shape(r, refs, label(Family::Chromatic, 2), "minor", TriangleShape::GoldenTriangle);
  expect_all_shape(r, refs, label(Family::Chromatic, 3), "minor", TriangleShape::GoldenTriangle);
  TriangleKind control = triad_kind(refs.at(label(Family::Chromatic, 2)), major_triad(Tone(1)));
  r.detail("control: C#-major on type 2", std::string(to_string(control.shape)));
  return r.finish();
}

CheckResult check_golden_theorem_2(const ReferenceTypes& refs) {
  CheckResult r{"golden_theorem_2",
                "Minor triads are golden gnomons on types 1' and 4', major triads on types 2' and 3'; fundamental "
                "hexatonic triads are golden gnomons"};
  const Family p = Family::Pythagorean;
  for (int i : {1, 4}) {
    expect_all_shape(r, refs, label(p, i), "minor", TriangleShape::GoldenGnomon);
    expect_all_shape(r, refs, label(p, i), "hexatonic-major-fundamental", TriangleShape::GoldenGnomon);
  }
  for (int i : {2, 3}) {
    expect_all_shape(r, refs, label(p, i), "major", TriangleShape::GoldenGnomon);
    expect_all_shape(r, refs, label(p, i), "hexatonic-minor-fundamental", TriangleShape::GoldenGnomon);
  }
  const Assignment& one = refs.at(label(p, 1));
  TriangleKind cm = triad_kind(one, minor_triad(Tone(0)));
  TriangleKind csm = triad_kind(one, minor_triad(Tone(1)));
  auto apex_name = [&](const TriangleKind& k) {
    return k.apex ? std::string(one.tone_at(*k.apex).name()) : std::string("none");
  };
  r.detail("type 1' apex of CEbG", apex_name(cm));
  r.detail("type 1' apex of C#EG#", apex_name(csm));
  return r.finish();
}

CheckResult check_golden_duality(const ReferenceTypes& refs) {
  CheckResult r{"golden_duality", "Golden theorem and golden theorem 2 hold together"};
  for (const CheckResult& part : {check_golden_theorem(refs), check_golden_theorem_2(refs)}) {
    r.detail(part.name, part.passed ? "passed" : "failed");
    for (const auto& c : part.counterexamples) r.fail(part.name + ": " + c);
  }
  return r.finish();
}

ToneSet triad_shape(int n, int m) {
  const ToneSet s{Tone(0), Tone(n), Tone(m)};
  ToneSet best = s;
  for (Tone t : s.tones()) best = std::min(best, s.transposed(-t.pc()));
  return best;
}

CheckResult check_triad_uniqueness(const ReferenceTypes& refs) {
  CheckResult r{"triad_uniqueness",
                "For all X, triads X,X+n,X+m lie on golden triangles with apex on the hexagon only for (4,7) on types "
                "1,4 and (3,7) on types 2,3, and with apex on the hexagram only for (7,10) and (7,9), up to choice of "
                "root"};
  const Family c = Family::Chromatic;
  const std::vector<TypeLabel> t14 = {label(c, 1), label(c, 4)}, t23 = {label(c, 2), label(c, 3)};
  struct Case {
    std::string name;
    std::vector<TypeLabel> types;
    ApexClass apex;
    std::vector<std::pair<int, int>> want;
  };
  const Case cases[] = {
      {"types 1,4 hexagon apex", t14, ApexClass::Hexagon, {{4, 7}}},
      {"types 1,4 hexagram apex", t14, ApexClass::Hexagram, {{7, 10}}},
      {"types 2,3 hexagon apex", t23, ApexClass::Hexagon, {{3, 7}}},
      {"types 2,3 hexagram apex", t23, ApexClass::Hexagram, {{7, 9}}},
  };
  for (const auto& cs : cases) {
    auto got = uniqueness_scan(refs, cs.types, TriangleShape::GoldenTriangle, cs.apex);
    r.detail(cs.name, pairs_string(got));
    std::set<ToneSet> shapes;
    for (auto [n, m] : got) shapes.insert(triad_shape(n, m));
    const ToneSet want = triad_shape(cs.want[0].first, cs.want[0].second);
    r.expect(shapes == std::set<ToneSet>{want},
             cs.name + ": found " + pairs_string(got) + ", not all re-rootings of " + pairs_string(cs.want));
  }
  const Family p = Family::Pythagorean;
  const std::vector<TypeLabel> p14 = {label(p, 1), label(p, 4)}, p23 = {label(p, 2), label(p, 3)};
  r.detail("gnomons, types 1',4' hexagon apex",
           pairs_string(uniqueness_scan(refs, p14, TriangleShape::GoldenGnomon, ApexClass::Hexagon)));
  r.detail("gnomons, types 1',4' hexagram apex",
           pairs_string(uniqueness_scan(refs, p14, TriangleShape::GoldenGnomon, ApexClass::Hexagram)));
  r.detail("gnomons, types 2',3' hexagon apex",
           pairs_string(uniqueness_scan(refs, p23, TriangleShape::GoldenGnomon, ApexClass::Hexagon)));
  r.detail("gnomons, types 2',3' hexagram apex",
           pairs_string(uniqueness_scan(refs, p23, TriangleShape::GoldenGnomon, ApexClass::Hexagram)));
  return r.finish();
}

CheckResult check_tritone_and_messiaen(const ReferenceTypes& refs) {
  CheckResult r{"tritone_and_messiaen",
                "Tritones sit on opposite vertices on all types; Messiaen four-tone sets lie on golden rectangles on "
                "types 1-4"};
  const IcosaGraph& g = graph();
  std::set<ToneSet> messiaen;
  for (std::string_view name : {"messiaen-minor-thirds", "messiaen-semitone-tritone", "messiaen-whole-tone-tritone"})
    for (int x = 0; x < kToneCount; ++x) messiaen.insert(scale(name, Tone(x)).tone_set());
  r.detail("distinct Messiaen sets", std::to_string(messiaen.size()));
  r.expect(messiaen.size() == 15, "Messiaen transposition classes: " + std::to_string(messiaen.size()));

  for (const auto& [t, a] : refs.all()) {
    for (int x = 0; x < kToneCount; ++x) {
      if (g.opposite(a.vertex_of(Tone(x))) != a.vertex_of(Tone(x + 6))) {
        r.fail(type_name(t) + ": " + std::string(Tone(x).name()) + " and " + std::string(Tone(x + 6).name()) +
               " not opposite");
      }
    }
    int on_rect = 0;
    for (ToneSet s : messiaen) {
      auto tones = s.tones();
      std::array<VertexId, 4> q{a.vertex_of(tones[0]), a.vertex_of(tones[1]), a.vertex_of(tones[2]),
                                a.vertex_of(tones[3])};
      if (is_golden_rectangle(g, q)) {
        ++on_rect;
      } else if (t.family == Family::Chromatic) {
        r.fail(type_name(t) + ": " + s.to_string() + " not a golden rectangle");
      }
    }
    r.detail(type_name(t) + " Messiaen sets on golden rectangles", count_string(on_rect, 15));
  }
  return r.finish();
}

CheckResult check_hexagon_symmetry_and_type_map(const ReferenceTypes& refs) {
  CheckResult r{"hexagon_symmetry_and_type_map",
                "Even transpositions are symmetries on every type, odd ones map types 1<->4 and 2<->3, and hexagon "
                "tones X make faces X,X+1,X+2 on chromatic types"};
  const SymmetryGroup& G = icosahedral_group();
  const IcosaGraph& g = graph();
  std::map<TypeLabel, std::string> shift_map;
  for (const auto& [t, a] : refs.all()) {
    for (int k = 0; k < kToneCount; ++k) {
      TranspositionMap pk = transposition_vertex_map(a, k, G);
      bool want = k % 2 == 0;
      if (pk.in_group != want) {
        r.fail(type_name(t) + ": P_" + std::to_string(k) + (want ? " is not a symmetry" : " is a symmetry"));
      }
      for (int j = 0; j < kToneCount; ++j) {
        if (transposition_vertex_map(a, j, G).perm * pk.perm != transposition_vertex_map(a, j + k, G).perm) {
          r.fail(type_name(t) + ": P_j o P_k != P_(j+k)");
        }
      }
      if (k % 2 == 1) {
        auto got = classify_type(transpose_assignment(a, k), refs);
        TypeLabel want_label{t.family, odd_partner(t.index)};
        if (!got || *got != want_label) {
          r.fail(type_name(t) + " raised by " + std::to_string(k) + " is " + (got ? to_string(*got) : "unlabeled") +
                 ", expected " + to_string(want_label));
        }
        if (k == 1) shift_map[t] = got ? to_string(*got) : "none";
      }
    }
    if (t.family == Family::Chromatic) {
      for (Tone x : hexagon_partition(a).hexagon.tones()) {
        TriangleKind k = classify_triangle(g, {a.vertex_of(x), a.vertex_of(x + 1), a.vertex_of(x + 2)});
        if (k.shape != TriangleShape::Face) {
          r.fail(type_name(t) + ": " + triad_name({x, x + 1, x + 2}) + " is not a face");
        }
      }
    }
  }
  std::string m;
  for (const auto& [t, img] : shift_map) m += (m.empty() ? "" : ", ") + to_string(t) + "->" + img;
  r.detail("semitone raise", m);
  return r.finish();
}

namespace {

// Rotations (and all ops) carrying the X-major figure on type 1 onto the
// X-minor tone set read on type 3.
std::vector<const SymmetryOp*> duality_witnesses(const ReferenceTypes& refs, Tone x) {
  const Assignment& one = refs.at(label(Family::Chromatic, 1));
  const Assignment& three = refs.at(label(Family::Chromatic, 3));
  const Figure fig = figure_of(one, scale("major", x));
  const ToneSet want = scale("minor", x).tone_set();
  std::vector<const SymmetryOp*> out;
  for (const auto& op : icosahedral_group().ops()) {
    if (read_tone_set(three, apply_symmetry(fig, op.perm)) == want) out.push_back(&op);
  }
  return out;
}

}  // namespace

CheckResult check_major_minor_duality(const ReferenceTypes& refs) {
  CheckResult r{"major_minor_duality",
                "One two-fold rotation maps every X-major figure on type 1 to the X-minor scale on type 3"};
  std::vector<const SymmetryOp*> two_fold;
  for (const auto& op : icosahedral_group().ops())
    if (op.is_rotation && op.order == 2) two_fold.push_back(&op);
  r.detail("two-fold rotations", std::to_string(two_fold.size()));

  std::map<const SymmetryOp*, int> roots_served;
  for (int i = 0; i < kToneCount; ++i) {
    Tone x(i);
    std::vector<std::string> kinds;
    int n2 = 0;
    for (const SymmetryOp* op : duality_witnesses(refs, x)) {
      kinds.push_back((op->is_rotation ? "rot" : "refl") + std::to_string(op->order));
      if (op->is_rotation && op->order == 2) {
        ++n2;
        ++roots_served[op];
      }
    }
    std::sort(kinds.begin(), kinds.end());
    std::string joined;
    for (const auto& k : kinds) joined += (joined.empty() ? "" : " ") + k;
    r.detail(std::string(x.name()) + " witnesses", joined.empty() ? "none" : joined);
    if (n2 == 0) r.fail(std::string(x.name()) + "-major: no two-fold rotation reaches " + std::string(x.name()) + "-minor");
  }
  int best = 0;
  for (const auto& [op, n] : roots_served) best = std::max(best, n);
  r.detail("most roots served by one two-fold rotation", count_string(best, 12));
  r.expect(best == 12, "no single two-fold rotation serves all 12 roots");

  const Assignment& three = refs.at(label(Family::Chromatic, 3));
  ToneSet control = read_tone_set(three, figure_of(refs.at(label(Family::Chromatic, 1)), scale("major", Tone(0))));
  r.detail("control: identity reads", control.to_string());
  return r.finish();
}

CheckResult check_major_minor_duality_by_rotation(const ReferenceTypes& refs) {
  CheckResult r{"major_minor_duality_by_rotation",
                "For every X some rotation maps the X-major figure on type 1 to the X-minor scale on type 3"};
  for (int i = 0; i < kToneCount; ++i) {
    Tone x(i);
    int rotations = 0;
    std::set<int> orders;
    for (const SymmetryOp* op : duality_witnesses(refs, x)) {
      if (!op->is_rotation) continue;
      ++rotations;
      orders.insert(op->order);
    }
    std::string os;
    for (int o : orders) os += (os.empty() ? "" : ",") + std::to_string(o);
    r.detail(std::string(x.name()) + " rotation orders", os.empty() ? "none" : os);
    r.expect(rotations > 0, std::string(x.name()) + ": no rotation");
  }
  return r.finish();
}

CheckResult check_gregorian_duality(const ReferenceTypes& refs) {
  CheckResult r{"gregorian_duality",
                "Spatial inversion turns the 24 major and minor scales on types 1 and 4 into the 48 Gregorian mode "
                "instances"};
  std::set<std::pair<std::string, int>> covered;
  std::map<std::string, std::string> named;
  for (int idx : {1, 4}) {
    const TypeLabel t = label(Family::Chromatic, idx);
    const Assignment& a = refs.at(t);
    for (std::string_view base : {"major", "minor"}) {
      const std::vector<std::string_view> modes = base == "major" ? std::vector<std::string_view>{"lydian", "mixolydian"}
                                                                  : std::vector<std::string_view>{"dorian", "phrygian"};
      for (int i = 0; i < kToneCount; ++i) {
        Tone x(i);
        ToneSet got = read_tone_set(a, spatial_inversion(figure_of(a, scale(base, x))));
        Tone root = radial_partner(a, x);
        std::string hit;
        for (std::string_view mode : modes)
          if (scale(mode, root).tone_set() == got) hit = std::string(mode);
        std::string from = type_name(t) + " " + std::string(x.name()) + "-" + std::string(base);
        if (hit.empty()) {
          r.fail(from + " inverts to " + got.to_string() + ", no mode on " + std::string(root.name()));
          continue;
        }
        covered.insert({hit, root.pc()});
        if (idx == 1 && i < 2) named[from] = std::string(root.name()) + "-" + hit;
      }
    }
  }
  r.detail("distinct mode instances", std::to_string(covered.size()));
  r.expect(covered.size() == 48, "only " + std::to_string(covered.size()) + " mode instances reached");
  const std::pair<std::string, std::string> stated[] = {
      {"type 1 C-major", "C#-mixolydian"},
      {"type 1 C#-major", "C-lydian"},
      {"type 1 C-minor", "C#-phrygian"},
      {"type 1 C#-minor", "C-dorian"},
  };
  for (const auto& [from, to] : stated) {
    r.detail(from, named[from]);
    r.expect(named[from] == to, from + " inverts to " + named[from] + ", expected " + to);
  }
  return r.finish();
}

CheckResult check_chromatic_pythagorean_duality(const ReferenceTypes& refs) {
  CheckResult r{"chromatic_pythagorean_duality",
                "The fifth chain runs on middle lines in chromatic types and the chromatic scale in Pythagorean types"};
  for (const auto& [t, a] : refs.all()) {
    if (t.family == Family::Exceptional) continue;
    const bool chromatic = t.family == Family::Chromatic;
    Figure dual = figure_of(a, scale(chromatic ? "pythagorean-chain" : "chromatic", Tone(0)));
    Figure own = figure_of(a, scale(chromatic ? "chromatic" : "pythagorean-chain", Tone(0)));
    int mids = static_cast<int>(std::count(dual.chords.begin(), dual.chords.end(), ChordKind::Middle));
    int edges = static_cast<int>(std::count(own.chords.begin(), own.chords.end(), ChordKind::Edge));
    r.detail(type_name(t), std::to_string(mids) + " middles, " + std::to_string(edges) + " edges on its own cycle");
    r.expect(mids == 12 && dual.chords.size() == 12, type_name(t) + ": dual cycle has " + std::to_string(mids) + " middles");
    r.expect(edges == 12, type_name(t) + ": own cycle has " + std::to_string(edges) + " edges");
  }
  return r.finish();
}

CheckResult check_self_duality(const ReferenceTypes& refs) {
  CheckResult r{"self_duality",
                "On 1* and 4*, majors on C's whole-tone scale are golden triangles and minors on C#'s are golden "
                "gnomons; swapped on 2* and 3*"};
  const Family e = Family::Exceptional;
  for (int idx = 1; idx <= 4; ++idx) {
    const TypeLabel t = label(e, idx);
    const Assignment& a = refs.at(t);
    const int major_start = (idx == 1 || idx == 4) ? 0 : 1;
    int ok_major = 0, ok_minor = 0;
    for (int k = 0; k < 6; ++k) {
      Tone xm(major_start + 2 * k), xn(major_start + 1 + 2 * k);
      TriangleKind km = triad_kind(a, major_triad(xm));
      TriangleKind kn = triad_kind(a, minor_triad(xn));
      if (km.shape == TriangleShape::GoldenTriangle) {
        ++ok_major;
      } else {
        r.fail(type_name(t) + ": " + std::string(xm.name()) + "-major is " + std::string(to_string(km.shape)));
      }
      if (kn.shape == TriangleShape::GoldenGnomon) {
        ++ok_minor;
      } else {
        r.fail(type_name(t) + ": " + std::string(xn.name()) + "-minor is " + std::string(to_string(kn.shape)));
      }
    }
    r.detail(type_name(t) + " majors on WT(" + std::string(Tone(major_start).name()) + ") golden triangles",
             count_string(ok_major, 6));
    r.detail(type_name(t) + " minors on WT(" + std::string(Tone(major_start + 1).name()) + ") golden gnomons",
             count_string(ok_minor, 6));
  }
  return r.finish();
}

CheckResult check_self_duality_by_hexagon(const ReferenceTypes& refs) {
  CheckResult r{"self_duality_by_hexagon",
                "On exceptional types, X-major is a golden triangle and X-minor a golden gnomon for X on the hexagon, "
                "and the reverse for X on the hexagram"};
  for (int idx = 1; idx <= 4; ++idx) {
    const TypeLabel t = label(Family::Exceptional, idx);
    const Assignment& a = refs.at(t);
    const HexagonPartition part = hexagon_partition(a);
    int ok = 0;
    for (int i = 0; i < kToneCount; ++i) {
      Tone x(i);
      const bool hex = part.hexagon.contains(x);
      TriangleShape want_major = hex ? TriangleShape::GoldenTriangle : TriangleShape::GoldenGnomon;
      TriangleShape want_minor = hex ? TriangleShape::GoldenGnomon : TriangleShape::GoldenTriangle;
      TriangleShape km = triad_kind(a, major_triad(x)).shape;
      TriangleShape kn = triad_kind(a, minor_triad(x)).shape;
      if (km == want_major && kn == want_minor) {
        ++ok;
      } else {
        r.fail(type_name(t) + ": " + std::string(x.name()) + "-major " + std::string(to_string(km)) + ", minor " +
               std::string(to_string(kn)));
      }
    }
    r.detail(type_name(t) + " hexagon", part.hexagon.to_string());
    r.detail(type_name(t) + " roots behaving", count_string(ok, 12));
  }
  return r.finish();
}

CheckResult check_red_lines(const ReferenceTypes& refs) {
  CheckResult r{"modulo4_red_lines",
                "The four red-line scales are edge 12-cycles whose steps all agree modulo 4"};
  struct RedLine {
    int type;
    const char* tones;
    int residue;
  };
  const RedLine lines[] = {
      {1, "C A D B E C# F# Eb G# F Bb G", 1},
      {2, "C Eb D F E G F# A G# B Bb C#", 3},
      {3, "C B D C# E Eb F# F G# G Bb A", 3},
      {4, "C F D G E A F# B G# C# Bb Eb", 1},
  };
  for (const auto& line : lines) {
    const TypeLabel t = label(Family::Exceptional, line.type);
    std::vector<Tone> seq;
    std::istringstream in(line.tones);
    for (std::string w; in >> w;) seq.push_back(parse_tone(w));
    const Assignment& a = refs.at(t);
    r.expect(seq.size() == 12 && satisfies_neighboring(a, seq, true), type_name(t) + ": red line is not an edge cycle");
    std::set<int> steps;
    for (std::size_t i = 0; i < seq.size(); ++i) steps.insert(seq[i].interval_to(seq[(i + 1) % seq.size()]));
    std::string ss;
    for (int s : steps) {
      ss += (ss.empty() ? "" : ",") + std::to_string(s);
      r.expect(s % 4 == line.residue, type_name(t) + ": step " + std::to_string(s) + " is not " +
                                          std::to_string(line.residue) + " mod 4");
    }
    r.detail(type_name(t) + " steps", ss);
  }
  r.detail("uniqueness among all scales", "unverified");
  return r.finish();
}

CheckResult check_tone_below_c(const ReferenceTypes& refs) {
  CheckResult r{"tone_below_c", "In the hexagon drawing the tone just below C is C#, B, G, F, A, Eb on types 1, 2, 1', "
                                "2', 1*, 2*"};
  const std::pair<TypeLabel, const char*> table[] = {
      {label(Family::Chromatic, 1), "C#"},   {label(Family::Chromatic, 2), "B"},
      {label(Family::Pythagorean, 1), "G"},  {label(Family::Pythagorean, 2), "F"},
      {label(Family::Exceptional, 1), "A"},  {label(Family::Exceptional, 2), "Eb"},
  };
  for (const auto& [t, want] : table) {
    Tone got = radial_partner(refs.at(t), Tone(0));
    r.detail(type_name(t), std::string(got.name()));
    r.expect(got.name() == want, type_name(t) + ": " + std::string(got.name()) + " below C, expected " + want);
  }
  return r.finish();
}

VerificationReport run_type_checks(const ReferenceTypes& refs) {
  VerificationReport rep;
  auto guarded = [&](auto fn, const char* name) {
    try {
      rep.results.push_back(fn(refs));
    } catch (const std::exception& e) {
      CheckResult r{name, "check aborted"};
      r.fail(std::string("exception: ") + e.what());
      rep.results.push_back(r.finish());
    }
  };
  guarded(check_golden_theorem, "golden_theorem");
  guarded(check_golden_theorem_2, "golden_theorem_2");
  guarded(check_golden_duality, "golden_duality");
  guarded(check_triad_uniqueness, "triad_uniqueness");
  guarded(check_tritone_and_messiaen, "tritone_and_messiaen");
  guarded(check_hexagon_symmetry_and_type_map, "hexagon_symmetry_and_type_map");
  guarded(check_major_minor_duality, "major_minor_duality");
  guarded(check_major_minor_duality_by_rotation, "major_minor_duality_by_rotation");
  guarded(check_gregorian_duality, "gregorian_duality");
  guarded(check_chromatic_pythagorean_duality, "chromatic_pythagorean_duality");
  guarded(check_self_duality, "self_duality");
  guarded(check_self_duality_by_hexagon, "self_duality_by_hexagon");
  guarded(check_red_lines, "modulo4_red_lines");
  guarded(check_tone_below_c, "tone_below_c");
  for (AppendixListing l : all_appendix_listings()) {
    guarded([l](const ReferenceTypes& rt) { return reconcile_appendix(l, rt); }, "appendix");
  }
  return rep;
}

VerificationReport run_all(const ReferenceTypes& refs) {
  VerificationReport rep;
  rep.results.push_back(check_symmetry_group());
  rep.results.push_back(check_triangle_census());
  rep.results.push_back(check_prohibition_lemma());
  rep.results.push_back(check_enumeration_counts());
  rep.results.push_back(check_fundamental_hexatonic());
  VerificationReport typed = run_type_checks(refs);
  for (auto& r : typed.results) rep.results.push_back(std::move(r));
  return rep;
}

}  // namespace musico
