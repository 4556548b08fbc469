#include "musico/search.h"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <thread>

namespace musico {

ToneCycle chromatic_cycle(bool cyclic) {
  return {cyclic ? "chromatic" : "chromatic:open", scale("chromatic", Tone(0)).tones(), cyclic};
}

ToneCycle pythagorean_cycle(bool cyclic) {
  return {cyclic ? "pythagorean" : "pythagorean:open", scale("pythagorean-chain", Tone(0)).tones(), cyclic};
}

ToneCycle whole_tone_cycle(Tone start, bool cyclic) {
  std::string label = "wholetone:" + std::string(start.name());
  if (!cyclic) label += ":open";
  return {label, scale("whole-tone", start).tones(), cyclic};
}

std::string ConstraintSet::describe() const {
  std::string s;
  for (const auto& c : cycles) {
    if (!s.empty()) s += ",";
    s += c.label;
  }
  if (symmetry_required) s += " (hexagon symmetric)";
  return s;
}

namespace {

using Demand = std::array<std::array<bool, kToneCount>, kToneCount>;

Demand demand_graph(const ConstraintSet& c) {
  Demand d{};
  for (const auto& cyc : c.cycles) {
    const auto& t = cyc.tones;
    ToneSet seen(t.begin(), t.end());
    if (seen.size() != static_cast<int>(t.size())) throw std::invalid_argument("constraint repeats a tone");
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
      d[t[i].pc()][t[i + 1].pc()] = d[t[i + 1].pc()][t[i].pc()] = true;
    }
    if (cyc.cyclic && t.size() > 2) d[t.back().pc()][t.front().pc()] = d[t.front().pc()][t.back().pc()] = true;
  }
  return d;
}

struct Searcher {
  const IcosaGraph& g;
  const Demand& demand;
  std::vector<int> order;  // tones in placement order
  std::array<int, kToneCount> vertex{};  // per tone, -1 if unplaced
  std::array<bool, kVertexCount> used{};
  std::vector<Assignment> found;

  void run(std::size_t depth) {
    if (depth == order.size()) {
      std::array<Tone, kVertexCount> tones;
      for (int t = 0; t < kToneCount; ++t) tones[vertex[t]] = Tone(t);
      found.emplace_back(tones);
      return;
    }
    const int t = order[depth];
    for (int v = 0; v < kVertexCount; ++v) {
      if (!used[v] && fits(t, v)) {
        place(t, v);
        run(depth + 1);
        unplace(t, v);
      }
    }
  }

  bool fits(int t, int v) const {
    for (int s = 0; s < kToneCount; ++s) {
      if (demand[t][s] && vertex[s] >= 0 && !g.adjacent(VertexId(v), VertexId(vertex[s]))) return false;
    }
    return true;
  }
  void place(int t, int v) {
    vertex[t] = v;
    used[v] = true;
  }
  void unplace(int t, int v) {
    vertex[t] = -1;
    used[v] = false;
  }
};

std::vector<int> placement_order(const Demand& d) {
  std::array<int, kToneCount> degree{};
  for (int a = 0; a < kToneCount; ++a)
    for (int b = 0; b < kToneCount; ++b) degree[a] += d[a][b];
  std::vector<int> order(kToneCount);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree[a] > degree[b]; });
  return order;
}

}  // namespace

EnumerationResult collect(std::vector<Assignment> assignments) {
  std::sort(assignments.begin(), assignments.end());
  std::map<CanonicalKey, std::size_t> counts;
  for (const auto& a : assignments) ++counts[canonical_form(a)];
  EnumerationResult r;
  r.assignments = std::move(assignments);
  for (const auto& [key, n] : counts) r.classes.push_back({key, Assignment(key), n});
  return r;
}

EnumerationResult enumerate(const ConstraintSet& c, int threads) {
  const Demand demand = demand_graph(c);
  for (int t = 0; t < kToneCount; ++t) {
    int deg = 0;
    for (int s = 0; s < kToneCount; ++s) deg += demand[t][s];
    if (deg > 5) return {};
  }
  const IcosaGraph& g = icosahedron();
  const std::vector<int> order = placement_order(demand);

  auto branch = [&](int first_vertex) {
    Searcher s{g, demand, order, {}, {}, {}};
    s.vertex.fill(-1);
    s.place(order[0], first_vertex);
    s.run(1);
    return std::move(s.found);
  };

  if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::vector<Assignment>> parts(kVertexCount);
  if (threads == 1) {
    for (int v = 0; v < kVertexCount; ++v) parts[v] = branch(v);
  } else {
    for (int base = 0; base < kVertexCount; base += threads) {
      std::vector<std::future<std::vector<Assignment>>> futs;
      for (int v = base; v < std::min(kVertexCount, base + threads); ++v) {
        futs.push_back(std::async(std::launch::async, branch, v));
      }
      for (std::size_t i = 0; i < futs.size(); ++i) parts[base + i] = futs[i].get();
    }
  }

  std::vector<Assignment> all;
  const SymmetryGroup& group = icosahedral_group();
  for (auto& p : parts) {
    for (auto& a : p) {
      if (!c.symmetry_required || has_hexagon_symmetry(a, group)) all.push_back(std::move(a));
    }
  }
  return collect(std::move(all));
}

ConstraintSet prohibition_constraints() {
  return {{chromatic_cycle(true), whole_tone_cycle(Tone(0), true), whole_tone_cycle(Tone(1), true)}, false};
}

EnumerationResult prohibition_search() { return enumerate(prohibition_constraints()); }

std::vector<RelaxedCount> prohibition_relaxations() {
  std::vector<RelaxedCount> out;
  auto add = [&out](std::string name, const ConstraintSet& c) {
    EnumerationResult r = enumerate(c);
    out.push_back({std::move(name), r.raw_count(), r.class_count()});
  };
  add("chromatic only", {{chromatic_cycle(true)}, false});
  add("without whole-tone C#", {{chromatic_cycle(true), whole_tone_cycle(Tone(0), true)}, false});

  // Drop every demand touching C: the remaining 11 tones keep X~X+1, X~X+2.
  std::vector<Tone> chain;
  for (int t = 1; t < kToneCount; ++t) chain.emplace_back(t);
  std::vector<Tone> wt_even, wt_odd;
  for (int t = 2; t < kToneCount; t += 2) wt_even.emplace_back(t);
  for (int t = 1; t < kToneCount; t += 2) wt_odd.emplace_back(t);
  add("without demands on C", {{{"C# to B", chain, false}, {"D to Bb", wt_even, false}, {"wholetone:C#", wt_odd, true}},
                               false});
  return out;
}

EnumerationResult enumerate_hexagon_symmetric() {
  // P_2 = g forces vertex_of(t + 2) = g(vertex_of(t)); g needs two 6-cycles.
  const SymmetryGroup& group = icosahedral_group();
  std::vector<Assignment> found;
  for (const SymmetryOp& op : group.ops()) {
    if (op.order != 6) continue;
    const VertexPerm& g = op.perm;
    for (int c = 0; c < kVertexCount; ++c) {
      std::array<int, kVertexCount> orbit_of{};
      orbit_of.fill(-1);
      VertexId v(c);
      int len = 0;
      do {
        orbit_of[v.index] = 0;
        v = g(v);
        ++len;
      } while (v != VertexId(c));
      if (len != 6) break;  // g is not of type 6+6
      for (int cs = 0; cs < kVertexCount; ++cs) {
        if (orbit_of[cs] == 0) continue;
        std::array<Tone, kVertexCount> tones;
        VertexId a(c), b(cs);
        for (int k = 0; k < 6; ++k) {
          tones[a.index] = Tone(2 * k);
          tones[b.index] = Tone(2 * k + 1);
          a = g(a);
          b = g(b);
        }
        found.emplace_back(tones);
      }
    }
  }
  return collect(std::move(found));
}

Family family_of(const Assignment& a) {
  const ToneCycle chrom = chromatic_cycle(true);
  const ToneCycle chain = pythagorean_cycle(true);
  if (satisfies_neighboring(a, chrom.tones, true)) return Family::Chromatic;
  if (satisfies_neighboring(a, chain.tones, true)) return Family::Pythagorean;
  return Family::Exceptional;
}

namespace {

TriangleKind triad_kind(const Assignment& a, Tone x, Tone y, Tone z) {
  return classify_triangle(icosahedron(), {a.vertex_of(x), a.vertex_of(y), a.vertex_of(z)});
}

// True for the member of the WT(C)-hexagon pair that takes index 1.
bool is_first_of_pair(const Assignment& a, Family family) {
  const Tone c(0), eb(3), e(4), g(7);
  switch (family) {
    case Family::Chromatic:
      return triad_kind(a, c, e, g).shape == TriangleShape::GoldenTriangle;
    case Family::Pythagorean:
      return triad_kind(a, c, eb, g).shape == TriangleShape::GoldenGnomon;
    case Family::Exceptional: {
      TriangleKind k = triad_kind(a, c, eb, g);
      return k.apex && *k.apex == a.vertex_of(g);
    }
  }
  return false;
}

}  // namespace

ReferenceTypes derive_reference_types() {
  const EnumerationResult hex = enumerate_hexagon_symmetric();
  std::map<Family, std::vector<Assignment>> wt_c_pairs;
  for (const auto& cls : hex.classes) {
    const Assignment& a = cls.representative;
    if (hexagon_partition(a).hexagon.contains(Tone(0))) wt_c_pairs[family_of(a)].push_back(a);
  }

  std::map<TypeLabel, Assignment> types;
  for (Family f : {Family::Chromatic, Family::Pythagorean, Family::Exceptional}) {
    const auto& pair = wt_c_pairs[f];
    if (pair.size() != 2) {
      throw std::logic_error(to_string(f) + " family has " + std::to_string(pair.size()) +
                             " classes with the C whole-tone hexagon, expected 2");
    }
    const bool first0 = is_first_of_pair(pair[0], f);
    const bool first1 = is_first_of_pair(pair[1], f);
    if (first0 == first1) throw std::logic_error("cannot separate types 1 and 2 of the " + to_string(f) + " family");
    const Assignment& one = first0 ? pair[0] : pair[1];
    const Assignment& two = first0 ? pair[1] : pair[0];
    types.emplace(TypeLabel{f, 1}, one);
    types.emplace(TypeLabel{f, 2}, two);
    types.emplace(TypeLabel{f, 3}, Assignment(canonical_form(transpose_assignment(two, 1))));
    types.emplace(TypeLabel{f, 4}, Assignment(canonical_form(transpose_assignment(one, 1))));
  }
  return ReferenceTypes(std::move(types));
}

const ReferenceTypes& reference_types() {
  static const ReferenceTypes refs = derive_reference_types();
  return refs;
}

}  // namespace musico
