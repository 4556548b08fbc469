#include "musico/generalize.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "musico/theorems.h"

namespace musico {

std::string to_string(TriadPattern p) { return p == TriadPattern::Major ? "major" : "minor"; }
std::string to_string(Generation g) { return g == Generation::First ? "first" : "second"; }

std::string to_string(AppendixListing l) {
  switch (l) {
    case AppendixListing::MajorFirst: return "major_first";
    case AppendixListing::MinorFirst: return "minor_first";
    case AppendixListing::MajorSecond: return "major_second";
    case AppendixListing::MinorSecond: return "minor_second";
    case AppendixListing::TriadLists: return "triad_lists";
  }
  return "?";
}

std::vector<AppendixListing> all_appendix_listings() {
  return {AppendixListing::TriadLists, AppendixListing::MajorFirst, AppendixListing::MinorFirst, AppendixListing::MajorSecond,
          AppendixListing::MinorSecond};
}

std::vector<TypeLabel> triad_source_types(Family family, TriadPattern pattern) {
  const bool major = pattern == TriadPattern::Major;
  if (family == Family::Chromatic) {
    return major ? std::vector<TypeLabel>{{family, 1}, {family, 4}} : std::vector<TypeLabel>{{family, 2}, {family, 3}};
  }
  if (family == Family::Pythagorean) {
    return major ? std::vector<TypeLabel>{{family, 2}, {family, 3}} : std::vector<TypeLabel>{{family, 1}, {family, 4}};
  }
  throw std::invalid_argument("generalization is defined for the chromatic and Pythagorean families");
}

std::string pattern_name(ToneSet pattern) {
  std::string s;
  for (Tone t : ascending_normal_form(pattern, Tone(0))) s += t.name();
  return s;
}

GeneralizedTriadSet golden_triads(Family family, TriadPattern pattern, Generation generation,
                                  const ReferenceTypes& refs) {
  GeneralizedTriadSet out;
  out.family = family;
  out.pattern = pattern;
  out.generation = generation;
  out.source_types = triad_source_types(family, pattern);
  out.kind = family == Family::Chromatic ? TriangleShape::GoldenTriangle : TriangleShape::GoldenGnomon;
  const IcosaGraph& g = icosahedron();
  for (TypeLabel t : out.source_types) {
    const Assignment& a = refs.at(t);
    const ToneSet hexagon = hexagon_partition(a).hexagon;
    for (int x = 0; x < kVertexCount; ++x)
      for (int y = x + 1; y < kVertexCount; ++y)
        for (int z = y + 1; z < kVertexCount; ++z) {
          TriangleKind k = classify_triangle(g, {VertexId(x), VertexId(y), VertexId(z)});
          if (k.shape != out.kind) continue;
          const Tone apex = a.tone_at(*k.apex);
          if (generation == Generation::First && !hexagon.contains(apex)) continue;
          ToneSet triad{a.tone_at(VertexId(x)), a.tone_at(VertexId(y)), a.tone_at(VertexId(z))};
          out.triads.insert(triad);
          out.rooted.emplace(apex.pc(), triad);
          out.patterns.insert(triad.transposed(-apex.pc()));
        }
  }
  return out;
}

std::vector<GeneralizedScale> stabilizer_orbit(const Assignment& a, const ScaleInstance& s,
                                               const std::vector<TriadTones>& triads) {
  const Figure base = figure_of(a, s);
  std::vector<Figure> triad_figs;
  for (const auto& t : triads) triad_figs.push_back(figure_of(a, std::vector<Tone>(t.begin(), t.end()), true));
  std::vector<GeneralizedScale> out;
  for (const SymmetryOp& op : icosahedral_group().stabilizer(a.vertex_of(s.root()))) {
    GeneralizedScale gs;
    gs.op = op.perm;
    gs.tones = read_tone_set(a, apply_symmetry(base, op.perm));
    gs.ascending = ascending_normal_form(gs.tones, s.root());
    for (const auto& f : triad_figs) gs.triads.push_back(read_tone_set(a, apply_symmetry(f, op.perm)));
    std::sort(gs.triads.begin(), gs.triads.end());
    out.push_back(std::move(gs));
  }
  std::sort(out.begin(), out.end(), [](const GeneralizedScale& x, const GeneralizedScale& y) {
    return std::tie(x.ascending, x.triads) < std::tie(y.ascending, y.triads);
  });
  return out;
}

TypeLabel scale_source_type(Family family, TriadPattern base, Generation generation, const ReferenceTypes& refs) {
  const TriadTones c_triad = triad_at(catalog().triad(to_string(base)), Tone(0));
  std::vector<TypeLabel> first, second;
  for (TypeLabel t : triad_source_types(family, base)) {
    const Assignment& a = refs.at(t);
    TriangleKind k = triad_kind(a, c_triad);
    (k.apex && *k.apex == a.vertex_of(Tone(0)) ? first : second).push_back(t);
  }
  if (first.size() != 1 || second.size() != 1) {
    throw std::logic_error("C-rooted triad apex does not single out a first-generation type");
  }
  return generation == Generation::First ? first[0] : second[0];
}

GeneralizedScaleFamily stabilizer_orbit_scales(TriadPattern base, Generation generation, Family family,
                                               const ReferenceTypes& refs) {
  GeneralizedScaleFamily fam;
  fam.family = family;
  fam.base = base;
  fam.generation = generation;
  fam.source = scale_source_type(family, base, generation, refs);
  const TriadTemplate& tri = catalog().triad(to_string(base));
  const std::vector<TriadTones> triads = {triad_at(tri, Tone(0)), triad_at(tri, Tone(5)), triad_at(tri, Tone(7))};
  fam.entries = stabilizer_orbit(refs.at(fam.source), scale(to_string(base), Tone(0)), triads);
  return fam;
}

namespace {

std::string set_words(ToneSet s) { return join_names(s.tones()); }

std::vector<ToneSet> listed_triads(const AppendixEntry& e) {
  std::vector<ToneSet> out;
  for (const auto& t : e.triads) out.emplace_back(t.begin(), t.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

CheckResult reconcile(const AppendixTable& table, const GeneralizedScaleFamily& family,
                      const std::vector<AppendixException>& exceptions) {
  CheckResult r{"appendix_" + to_string(table.listing), table.title + " is reproduced by the stabilizer orbit"};
  r.detail("source type", to_string(family.source));
  std::vector<bool> used(family.entries.size(), false);
  int matched = 0, annotated = 0;
  for (const AppendixEntry& e : table.entries) {
    const ToneSet tones(e.tones.begin(), e.tones.end());
    ToneSet triad_union;
    for (const auto& t : e.triads) triad_union = triad_union | ToneSet(t.begin(), t.end());
    if (triad_union != tones) r.detail(e.name + " listed triads cover", set_words(triad_union));

    std::size_t hit = family.entries.size();
    for (std::size_t i = 0; i < family.entries.size(); ++i) {
      if (!used[i] && family.entries[i].tones == tones) {
        hit = i;
        break;
      }
    }
    if (hit == family.entries.size()) {
      r.fail("missing " + e.name + ": " + set_words(tones));
      continue;
    }
    used[hit] = true;
    const std::vector<ToneSet> want = listed_triads(e);
    const std::vector<ToneSet>& got = family.entries[hit].triads;
    if (want == got) {
      ++matched;
      continue;
    }
    std::vector<ToneSet> only_listed, only_generated;
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(only_listed));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(only_generated));
    std::string listed, generated;
    for (ToneSet s : only_listed) listed += (listed.empty() ? "" : "; ") + set_words(s);
    for (ToneSet s : only_generated) generated += (generated.empty() ? "" : "; ") + set_words(s);
    // exceptions are written in appendix spelling; compare as tone sets
    auto same = [](const std::string& a, ToneSet b) {
      std::vector<Tone> ts;
      std::istringstream in(a);
      for (std::string w; in >> w;) ts.push_back(parse_tone(w));
      return ToneSet(ts.begin(), ts.end()) == b;
    };
    bool known = only_listed.size() == 1 && only_generated.size() == 1 &&
                 std::any_of(exceptions.begin(), exceptions.end(), [&](const AppendixException& x) {
                   return x.listing == table.listing && x.entry == e.name && same(x.listed, only_listed[0]) &&
                          same(x.generated, only_generated[0]);
                 });
    if (known) {
      ++annotated;
      r.detail("annotated exception " + e.name, "listed " + listed + ", generated " + generated);
    } else {
      r.fail(e.name + ": listed triads " + listed + " vs generated " + generated);
    }
  }
  for (std::size_t i = 0; i < family.entries.size(); ++i) {
    if (!used[i]) r.fail("extra generated scale " + join_names(family.entries[i].ascending));
  }
  r.detail("entries matched", std::to_string(matched) + "/" + std::to_string(table.entries.size()));
  r.detail("annotated exceptions", std::to_string(annotated));
  return r.finish();
}

CheckResult reconcile_appendix(AppendixListing l, const ReferenceTypes& refs) {
  if (l == AppendixListing::TriadLists) return check_generalized_triads(refs);
  const AppendixTable& table = appendix_table(l);
  CheckResult r = reconcile(table, stabilizer_orbit_scales(table.base, table.generation, Family::Chromatic, refs));
  const GeneralizedScaleFamily pyth = stabilizer_orbit_scales(table.base, table.generation, Family::Pythagorean, refs);
  const CheckResult alt = reconcile(table, pyth);
  r.detail("pythagorean orbit on type " + to_string(pyth.source), alt.passed ? "reproduces the table" : "differs");
  return r.finish();
}

CheckResult check_generalized_triads(const ReferenceTypes& refs) {
  CheckResult r{"generalized_triads",
                "Golden-triangle triads give the listed first (5) and second (10) generalizations of major and minor "
                "triads, with the listed overlaps"};
  const TriadListData& data = triad_list_data();
  auto parse_patterns = [](const std::vector<std::string>& words) {
    std::set<ToneSet> out;
    for (const auto& w : words) {
      std::vector<Tone> ts;
      std::istringstream in(w);
      for (std::string x; in >> x;) ts.push_back(parse_tone(x));
      out.insert(ToneSet(ts.begin(), ts.end()));
    }
    return out;
  };
  auto names = [](const std::set<ToneSet>& ps) {
    std::string s;
    for (ToneSet p : ps) s += (s.empty() ? "" : " ") + pattern_name(p);
    return s;
  };
  auto all_transpositions = [](const std::set<ToneSet>& ps) {
    std::set<ToneSet> out;
    for (ToneSet p : ps)
      for (int k = 0; k < kToneCount; ++k) out.insert(p.transposed(k));
    return out;
  };

  std::map<std::pair<TriadPattern, Generation>, GeneralizedTriadSet> chrom;
  for (TriadPattern p : {TriadPattern::Major, TriadPattern::Minor})
    for (Generation g : {Generation::First, Generation::Second}) chrom[{p, g}] = golden_triads(Family::Chromatic, p, g, refs);

  const std::pair<std::pair<TriadPattern, Generation>, const std::vector<std::string>*> lists[] = {
      {{TriadPattern::Major, Generation::First}, &data.major_first},
      {{TriadPattern::Major, Generation::Second}, &data.major_second},
      {{TriadPattern::Minor, Generation::First}, &data.minor_first},
      {{TriadPattern::Minor, Generation::Second}, &data.minor_second},
  };
  for (const auto& [key, words] : lists) {
    const GeneralizedTriadSet& s = chrom[key];
    const std::string label = "chromatic " + to_string(key.first) + " " + to_string(key.second);
    r.detail(label, names(s.patterns));
    const std::set<ToneSet> want = parse_patterns(*words);
    r.expect(s.patterns == want, label + ": generated " + names(s.patterns) + ", listed " + names(want));
    r.expect(s.triads == all_transpositions(s.patterns), label + ": triads are not the transposed patterns");
  }

  auto common = [](const std::set<ToneSet>& a, const std::set<ToneSet>& b) {
    std::set<ToneSet> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.begin()));
    return out;
  };
  const auto first_common = common(chrom[{TriadPattern::Major, Generation::First}].patterns,
                                   chrom[{TriadPattern::Minor, Generation::First}].patterns);
  const auto second_common = common(chrom[{TriadPattern::Major, Generation::Second}].patterns,
                                    chrom[{TriadPattern::Minor, Generation::Second}].patterns);
  r.detail("first generation common", names(first_common));
  r.detail("second generation common", names(second_common));
  r.expect(first_common == parse_patterns(data.first_common), "first common patterns " + names(first_common));
  std::set<ToneSet> want_second = parse_patterns(data.second_common);
  want_second.insert(first_common.begin(), first_common.end());
  r.expect(second_common == want_second, "second common patterns " + names(second_common));
  const auto triads_common = common(chrom[{TriadPattern::Major, Generation::First}].triads,
                                    chrom[{TriadPattern::Minor, Generation::First}].triads);
  r.expect(triads_common == all_transpositions(first_common), "first common triads are not the transposed patterns");

  for (Family f : {Family::Chromatic, Family::Pythagorean})
    for (TriadPattern p : {TriadPattern::Major, TriadPattern::Minor})
      for (Generation g : {Generation::First, Generation::Second}) {
        const GeneralizedTriadSet s = golden_triads(f, p, g, refs);
        const std::string label = to_string(f) + " " + to_string(p) + " " + to_string(g);
        const std::size_t want = g == Generation::First ? 60 : 120;
        r.expect(s.rooted.size() == want, label + ": " + std::to_string(s.rooted.size()) + " rooted triads");
        bool closed = true;
        for (const auto& [apex, t] : s.rooted) closed = closed && s.rooted.count({(apex + 2) % kToneCount, t.transposed(2)});
        r.expect(closed, label + ": not closed under whole-tone transposition");
        if (f == Family::Pythagorean) r.detail(label, names(s.patterns));
      }
  return r.finish();
}

}  // namespace musico
