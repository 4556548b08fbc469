#include "musico/polyhedron.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace musico {

namespace {

using AdjMatrix = std::array<std::array<bool, kVertexCount>, kVertexCount>;

AdjMatrix canonical_adjacency() {
  AdjMatrix adj{};
  auto link = [&adj](int a, int b) {
    adj[a][b] = true;
    adj[b][a] = true;
  };
  for (int i = 1; i <= 5; ++i) {
    link(0, i);
    link(i, i % 5 + 1);
    link(i + 5, i % 5 + 6);
    link(i, i + 5);
    link(i, i % 5 + 6);
    link(11, i + 5);
  }
  return adj;
}

// Orients every face consistently, starting from (0,1,2), and reads the
// rotation system off the oriented faces.
std::array<std::array<VertexId, 5>, kVertexCount> rotation_system(
    const AdjMatrix& adj, const std::vector<VertexTriple>& faces) {
  using Dir = std::pair<int, int>;
  std::map<std::set<int>, VertexTriple> by_set;
  for (const auto& f : faces) {
    by_set[{f[0].index, f[1].index, f[2].index}] = f;
  }
  std::map<std::set<int>, std::array<int, 3>> oriented;
  std::deque<std::array<int, 3>> queue;
  queue.push_back({0, 1, 2});
  oriented[{0, 1, 2}] = {0, 1, 2};
  while (!queue.empty()) {
    auto f = queue.front();
    queue.pop_front();
    for (int e = 0; e < 3; ++e) {
      Dir d{f[e], f[(e + 1) % 3]};
      // The neighbouring face across this edge runs it backwards.
      for (int x = 0; x < kVertexCount; ++x) {
        if (x == f[(e + 2) % 3] || !adj[x][d.first] || !adj[x][d.second]) continue;
        std::set<int> key{d.first, d.second, x};
        if (oriented.count(key)) continue;
        std::array<int, 3> g{d.second, d.first, x};
        oriented[key] = g;
        queue.push_back(g);
      }
    }
  }
  if (oriented.size() != faces.size()) throw std::logic_error("face orientation incomplete");

  std::array<std::array<int, kVertexCount>, kVertexCount> succ{};
  for (auto& row : succ) row.fill(-1);
  for (const auto& [key, f] : oriented) {
    for (int i = 0; i < 3; ++i) succ[f[i]][f[(i + 1) % 3]] = f[(i + 2) % 3];
  }
  std::array<std::array<VertexId, 5>, kVertexCount> around{};
  for (int v = 0; v < kVertexCount; ++v) {
    int first = -1;
    for (int n = 0; n < kVertexCount && first < 0; ++n) {
      if (adj[v][n]) first = n;
    }
    int cur = first;
    for (int k = 0; k < 5; ++k) {
      around[v][k] = VertexId(cur);
      cur = succ[v][cur];
    }
    if (cur != first) throw std::logic_error("rotation system is not a 5-cycle");
  }
  return around;
}

}  // namespace

IcosaGraph::IcosaGraph() {
  const AdjMatrix adj = canonical_adjacency();

  for (int s = 0; s < kVertexCount; ++s) {
    std::array<int, kVertexCount> d;
    d.fill(-1);
    d[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v = 0; v < kVertexCount; ++v) {
        if (adj[u][v] && d[v] < 0) {
          d[v] = d[u] + 1;
          q.push_back(v);
        }
      }
    }
    for (int v = 0; v < kVertexCount; ++v) {
      if (d[v] < 0) throw std::logic_error("icosahedron graph disconnected");
      dist_[s][v] = static_cast<std::uint8_t>(d[v]);
    }
  }

  for (int v = 0; v < kVertexCount; ++v) {
    int found = 0;
    int counts[4] = {0, 0, 0, 0};
    for (int u = 0; u < kVertexCount; ++u) {
      if (dist_[v][u] > 3) throw std::logic_error("diameter exceeds 3");
      ++counts[dist_[v][u]];
      if (dist_[v][u] == 3) opposite_[v] = VertexId(u);
      if (dist_[v][u] == 3) ++found;
    }
    if (counts[1] != 5 || counts[2] != 5 || found != 1) {
      throw std::logic_error("icosahedron distance profile wrong");
    }
  }

  for (int a = 0; a < kVertexCount; ++a)
    for (int b = a + 1; b < kVertexCount; ++b)
      for (int c = b + 1; c < kVertexCount; ++c)
        if (adj[a][b] && adj[b][c] && adj[a][c]) faces_.push_back({VertexId(a), VertexId(b), VertexId(c)});
  if (faces_.size() != 20) throw std::logic_error("face count wrong");

  around_ = rotation_system(adj, faces_);
}

VertexId IcosaGraph::next_around(VertexId center, VertexId n) const {
  const auto& ring = around_[center.index];
  for (int k = 0; k < 5; ++k) {
    if (ring[k] == n) return ring[(k + 1) % 5];
  }
  throw std::invalid_argument("vertex is not a neighbour of the center");
}

std::vector<std::pair<VertexId, VertexId>> IcosaGraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (int a = 0; a < kVertexCount; ++a)
    for (int b = a + 1; b < kVertexCount; ++b)
      if (dist_[a][b] == 1) out.emplace_back(VertexId(a), VertexId(b));
  return out;
}

IcosaGraph build_graph() { return IcosaGraph(); }

const IcosaGraph& icosahedron() {
  static const IcosaGraph graph;
  return graph;
}

std::string_view to_string(ChordKind kind) {
  switch (kind) {
    case ChordKind::Edge: return "Edge";
    case ChordKind::Middle: return "Middle";
    case ChordKind::Diameter: return "Diameter";
  }
  return "?";
}

std::string_view to_string(TriangleShape shape) {
  switch (shape) {
    case TriangleShape::Face: return "Face";
    case TriangleShape::LargeEquilateral: return "LargeEquilateral";
    case TriangleShape::GoldenTriangle: return "GoldenTriangle";
    case TriangleShape::GoldenGnomon: return "GoldenGnomon";
    case TriangleShape::Scalene: return "Scalene";
  }
  return "?";
}

ChordKind chord_kind(const IcosaGraph& g, VertexId u, VertexId v) {
  switch (g.distance(u, v)) {
    case 1: return ChordKind::Edge;
    case 2: return ChordKind::Middle;
    case 3: return ChordKind::Diameter;
    default: throw DegenerateError("chord between a vertex and itself");
  }
}

TriangleKind classify_triangle(const IcosaGraph& g, const VertexTriple& t) {
  if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
    throw DegenerateError("triangle with a repeated vertex");
  }
  // side i is opposite to corner i
  ChordKind side[3] = {chord_kind(g, t[1], t[2]), chord_kind(g, t[0], t[2]),
                       chord_kind(g, t[0], t[1])};
  int e = 0, m = 0, d = 0;
  for (ChordKind k : side) {
    if (k == ChordKind::Edge) ++e;
    if (k == ChordKind::Middle) ++m;
    if (k == ChordKind::Diameter) ++d;
  }
  auto corner_opposite = [&](ChordKind k) {
    for (int i = 0; i < 3; ++i)
      if (side[i] == k) return t[i];
    return t[0];
  };
  if (e == 3) return {TriangleShape::Face, std::nullopt};
  if (m == 3) return {TriangleShape::LargeEquilateral, std::nullopt};
  if (e == 1 && m == 2) return {TriangleShape::GoldenTriangle, corner_opposite(ChordKind::Edge)};
  if (e == 2 && m == 1) return {TriangleShape::GoldenGnomon, corner_opposite(ChordKind::Middle)};
  if (e == 1 && m == 1 && d == 1) return {TriangleShape::Scalene, std::nullopt};
  throw std::logic_error("impossible chord multiset in icosahedron");
}

bool is_golden_rectangle(const IcosaGraph& g, const std::array<VertexId, 4>& q) {
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (q[i] == q[j]) throw DegenerateError("rectangle with a repeated vertex");
  // Pair each vertex with its opposite; both pairs must be inside q.
  for (int partner = 1; partner < 4; ++partner) {
    if (g.opposite(q[0]) != q[partner]) continue;
    std::array<VertexId, 2> rest;
    int r = 0;
    for (int i = 1; i < 4; ++i)
      if (i != partner) rest[r++] = q[i];
    if (g.opposite(rest[0]) != rest[1]) return false;
    // cycle q0 - rest0 - partner - rest1
    ChordKind a = chord_kind(g, q[0], rest[0]);
    ChordKind b = chord_kind(g, rest[0], q[partner]);
    if (a == ChordKind::Edge && b == ChordKind::Middle) return true;
    if (a == ChordKind::Middle && b == ChordKind::Edge) return true;
    return false;
  }
  return false;
}

std::vector<std::array<VertexId, 4>> golden_rectangles(const IcosaGraph& g) {
  std::vector<std::array<VertexId, 4>> out;
  for (int a = 0; a < kVertexCount; ++a)
    for (int b = a + 1; b < kVertexCount; ++b)
      for (int c = b + 1; c < kVertexCount; ++c)
        for (int d = c + 1; d < kVertexCount; ++d) {
          std::array<VertexId, 4> q{VertexId(a), VertexId(b), VertexId(c), VertexId(d)};
          if (is_golden_rectangle(g, q)) out.push_back(q);
        }
  return out;
}

VertexPerm::VertexPerm(const std::array<int, kVertexCount>& images) {
  std::array<bool, kVertexCount> seen{};
  for (int i = 0; i < kVertexCount; ++i) {
    int v = images[i];
    if (v < 0 || v >= kVertexCount || seen[v]) throw std::invalid_argument("not a vertex permutation");
    seen[v] = true;
    map_[i] = static_cast<std::uint8_t>(v);
  }
}

VertexPerm operator*(const VertexPerm& a, const VertexPerm& b) {
  VertexPerm r;
  for (int i = 0; i < kVertexCount; ++i) r.map_[i] = a.map_[b.map_[i]];
  return r;
}

VertexPerm VertexPerm::inverse() const {
  VertexPerm r;
  for (int i = 0; i < kVertexCount; ++i) r.map_[map_[i]] = static_cast<std::uint8_t>(i);
  return r;
}

int VertexPerm::order() const {
  VertexPerm p = *this;
  int n = 1;
  while (!p.is_identity()) {
    p = p * *this;
    ++n;
  }
  return n;
}

std::array<int, kVertexCount> VertexPerm::images() const {
  std::array<int, kVertexCount> out{};
  for (int i = 0; i < kVertexCount; ++i) out[i] = map_[i];
  return out;
}

std::string VertexPerm::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < kVertexCount; ++i) os << (i ? "," : "") << int(map_[i]);
  os << ')';
  return os.str();
}

bool is_automorphism(const IcosaGraph& g, const VertexPerm& p) {
  for (int a = 0; a < kVertexCount; ++a)
    for (int b = a + 1; b < kVertexCount; ++b)
      if (g.adjacent(VertexId(a), VertexId(b)) != g.adjacent(p(VertexId(a)), p(VertexId(b)))) return false;
  return true;
}

bool preserves_orientation(const IcosaGraph& g, const VertexPerm& p) {
  for (int v = 0; v < kVertexCount; ++v) {
    VertexId c(v);
    for (VertexId n : g.neighbors(c)) {
      if (p(g.next_around(c, n)) != g.next_around(p(c), p(n))) return false;
    }
  }
  return true;
}

namespace {

void extend(const IcosaGraph& g, std::array<int, kVertexCount>& img, std::array<bool, kVertexCount>& used,
            int v, std::vector<VertexPerm>& out) {
  if (v == kVertexCount) {
    out.emplace_back(img);
    return;
  }
  for (int cand = 0; cand < kVertexCount; ++cand) {
    if (used[cand]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) {
      ok = g.adjacent(VertexId(u), VertexId(v)) == g.adjacent(VertexId(img[u]), VertexId(cand));
    }
    if (!ok) continue;
    img[v] = cand;
    used[cand] = true;
    extend(g, img, used, v + 1, out);
    used[cand] = false;
  }
}

std::vector<VertexPerm> expand_words(const SymmetryGroup::Generators& gen) {
  auto pw = [](const VertexPerm& p, int k) {
    VertexPerm r;
    for (int i = 0; i < k; ++i) r = r * p;
    return r;
  };
  const VertexPerm& c5 = gen.c5;
  const VertexPerm& c3 = gen.c3;
  const VertexPerm& c2 = gen.c2;
  const std::vector<VertexPerm> prefixes = {
      VertexPerm(),       c3,
      c3 * c3,            c2,
      c2 * c3,            c2 * c3 * c3,
      c5 * c3,            pw(c5, 3) * c3,
      pw(c5, 4) * c3,     c5 * c3 * c2,
      pw(c5, 2) * c3 * c2, pw(c5, 4) * c3 * c2,
  };
  std::vector<VertexPerm> words;
  for (const VertexPerm& y : prefixes) {
    for (int k = 0; k < 5; ++k) words.push_back(y * pw(c5, k));
  }
  const std::size_t n = words.size();
  for (std::size_t i = 0; i < n; ++i) words.push_back(gen.m * words[i]);
  return words;
}

bool words_cover_group(const SymmetryGroup::Generators& gen) {
  auto words = expand_words(gen);
  std::sort(words.begin(), words.end());
  return std::adjacent_find(words.begin(), words.end()) == words.end() && words.size() == 120;
}

}  // namespace

SymmetryGroup::SymmetryGroup(std::vector<SymmetryOp> ops, Generators gens)
    : ops_(std::move(ops)), gens_(gens) {
  std::sort(ops_.begin(), ops_.end(), [](const SymmetryOp& a, const SymmetryOp& b) { return a.perm < b.perm; });
}

int SymmetryGroup::rotation_count() const {
  return static_cast<int>(std::count_if(ops_.begin(), ops_.end(), [](const SymmetryOp& o) { return o.is_rotation; }));
}

bool SymmetryGroup::contains(const VertexPerm& p) const {
  auto it = std::lower_bound(ops_.begin(), ops_.end(), p,
                             [](const SymmetryOp& o, const VertexPerm& q) { return o.perm < q; });
  return it != ops_.end() && it->perm == p;
}

const SymmetryOp& SymmetryGroup::find(const VertexPerm& p) const {
  auto it = std::lower_bound(ops_.begin(), ops_.end(), p,
                             [](const SymmetryOp& o, const VertexPerm& q) { return o.perm < q; });
  if (it == ops_.end() || it->perm != p) throw std::invalid_argument("permutation is not a symmetry");
  return *it;
}

std::vector<SymmetryOp> SymmetryGroup::stabilizer(VertexId v) const {
  std::vector<SymmetryOp> out;
  for (const auto& op : ops_)
    if (op.perm(v) == v) out.push_back(op);
  return out;
}

std::vector<VertexPerm> SymmetryGroup::word_list() const { return expand_words(gens_); }

std::vector<VertexPerm> SymmetryGroup::word_list_heads() const {
  auto all = expand_words(gens_);
  std::vector<VertexPerm> heads;
  for (std::size_t i = 0; i < all.size(); i += 5) heads.push_back(all[i]);
  return heads;
}

SymmetryGroup automorphism_group(const IcosaGraph& g) {
  std::vector<VertexPerm> perms;
  std::array<int, kVertexCount> img{};
  std::array<bool, kVertexCount> used{};
  extend(g, img, used, 0, perms);

  std::vector<SymmetryOp> ops;
  ops.reserve(perms.size());
  for (const auto& p : perms) ops.push_back({p, preserves_orientation(g, p), p.order()});

  const VertexId pole(0);
  const VertexId ring(1);
  std::vector<VertexPerm> c5s, c3s, c2s, mirrors;
  for (const auto& op : ops) {
    if (op.is_rotation && op.order == 5 && op.perm(pole) == pole) c5s.push_back(op.perm);
    if (op.is_rotation && op.order == 3) c3s.push_back(op.perm);
    if (op.is_rotation && op.order == 2) c2s.push_back(op.perm);
    if (!op.is_rotation && op.order == 2 && op.perm(pole) == pole && op.perm(ring) == ring) {
      mirrors.push_back(op.perm);
    }
  }
  for (const auto& c5 : c5s)
    for (const auto& m : mirrors)
      for (const auto& c3 : c3s)
        for (const auto& c2 : c2s) {
          SymmetryGroup::Generators gen{c5, c3, c2, m};
          if (words_cover_group(gen)) return SymmetryGroup(std::move(ops), gen);
        }
  throw std::logic_error("no generator tuple regenerates the symmetry group");
}

const SymmetryGroup& icosahedral_group() {
  static const SymmetryGroup group = automorphism_group(icosahedron());
  return group;
}

VertexPerm central_inversion(const IcosaGraph& g) {
  std::array<int, kVertexCount> img{};
  for (int v = 0; v < kVertexCount; ++v) img[v] = g.opposite(VertexId(v)).index;
  return VertexPerm(img);
}

}  // namespace musico
