#include "musico/render.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace musico {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

std::string dash_of(ChordKind k) {
  switch (k) {
    case ChordKind::Edge: return "";
    case ChordKind::Middle: return "8,5";
    case ChordKind::Diameter: return "2,4";
  }
  return "";
}

std::string dot_kind(ChordKind k) {
  switch (k) {
    case ChordKind::Edge: return "edge";
    case ChordKind::Middle: return "middle";
    case ChordKind::Diameter: return "diameter";
  }
  return "?";
}

std::string dot_style(ChordKind k) {
  switch (k) {
    case ChordKind::Edge: return "solid";
    case ChordKind::Middle: return "dashed";
    case ChordKind::Diameter: return "dotted";
  }
  return "solid";
}

// Chord list of a figure as vertex pairs.
std::vector<std::pair<VertexId, VertexId>> chords_of(const Figure& f) {
  std::vector<std::pair<VertexId, VertexId>> out;
  const std::size_t n = f.vertices.size();
  for (std::size_t i = 0; i + 1 < n; ++i) out.emplace_back(f.vertices[i], f.vertices[i + 1]);
  if (f.closed) out.emplace_back(f.vertices[n - 1], f.vertices[0]);
  return out;
}

constexpr const char* kLayoutNote =
    "layout: hexagon (edge 6-cycle) on the outer ring r=200, starting at the top and running clockwise in "
    "whole-tone steps; hexagram (middle 6-cycle) on the inner ring r=100, each tone under its radial partner; "
    "highlighted chords solid = edge, dashed = middle, dotted = diameter";

}  // namespace

Hexagram2D layout_hexagram(const Assignment& a) {
  const HexagonPartition part = hexagon_partition(a);
  Hexagram2D out;
  out.top = part.hexagon.contains(Tone(0)) ? Tone(0) : radial_partner(a, Tone(0));
  out.below_top = radial_partner(a, out.top);
  const double c = kCanvasSize / 2;
  for (int k = 0; k < 6; ++k) {
    const Tone x = out.top + 2 * k;
    const double theta = k * std::numbers::pi / 3;
    const VertexId vo = a.vertex_of(x);
    const VertexId vi = a.vertex_of(radial_partner(a, x));
    out.position[vo.index] = {c + kOuterRadius * std::sin(theta), c - kOuterRadius * std::cos(theta)};
    out.outer[vo.index] = true;
    out.position[vi.index] = {c + kInnerRadius * std::sin(theta), c - kInnerRadius * std::cos(theta)};
  }
  return out;
}

std::string render_svg(const RenderSpec& spec) {
  const Assignment& a = spec.assignment;
  const Hexagram2D lay = layout_hexagram(a);
  const IcosaGraph& g = icosahedron();
  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<!-- " << kLayoutNote << " -->\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kCanvasSize) << "\" height=\""
     << num(kCanvasSize) << "\" viewBox=\"0 0 " << num(kCanvasSize) << " " << num(kCanvasSize) << "\">\n";
  if (spec.type) os << "  <title>type " << to_string(*spec.type) << "</title>\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  os << "  <g id=\"edges\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
  for (const auto& [u, v] : g.edges()) {
    const Point p = lay.position[u.index], q = lay.position[v.index];
    os << "    <line x1=\"" << num(p.x) << "\" y1=\"" << num(p.y) << "\" x2=\"" << num(q.x) << "\" y2=\"" << num(q.y)
       << "\"/>\n";
  }
  os << "  </g>\n";

  int index = 0;
  for (const Highlight& h : spec.highlights) {
    os << "  <g class=\"figure\" id=\"figure-" << index++ << "\"";
    if (!h.label.empty()) os << " data-label=\"" << h.label << "\"";
    os << ">\n";
    if (h.fill) {
      os << "    <polygon points=\"";
      for (std::size_t i = 0; i < h.figure.vertices.size(); ++i) {
        const Point p = lay.position[h.figure.vertices[i].index];
        os << (i ? " " : "") << num(p.x) << "," << num(p.y);
      }
      os << "\" fill=\"" << h.color << "\" fill-opacity=\"0.25\" stroke=\"none\"/>\n";
    }
    for (const auto& [u, v] : chords_of(h.figure)) {
      const ChordKind k = chord_kind(g, u, v);
      const Point p = lay.position[u.index], q = lay.position[v.index];
      os << "    <line class=\"chord " << dot_kind(k) << "\" x1=\"" << num(p.x) << "\" y1=\"" << num(p.y)
         << "\" x2=\"" << num(q.x) << "\" y2=\"" << num(q.y) << "\" stroke=\"" << h.color << "\" stroke-width=\"3\"";
      if (!dash_of(k).empty()) os << " stroke-dasharray=\"" << dash_of(k) << "\"";
      os << "/>\n";
    }
    os << "  </g>\n";
  }

  os << "  <g id=\"vertices\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">\n";
  for (int v = 0; v < kVertexCount; ++v) {
    const Point p = lay.position[v];
    const Tone t = a.tone_at(VertexId(v));
    os << "    <circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"15\" fill=\""
       << (lay.outer[v] ? "#ffffff" : "#eef3ff") << "\" stroke=\"#333333\"/>\n";
    os << "    <text x=\"" << num(p.x) << "\" y=\"" << num(p.y + 5) << "\">" << t.name() << "</text>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

std::string render_dot(const RenderSpec& spec) {
  const Assignment& a = spec.assignment;
  const Hexagram2D lay = layout_hexagram(a);
  const IcosaGraph& g = icosahedron();
  std::ostringstream os;
  os << "// " << kLayoutNote << "\n";
  os << "graph icosahedron {\n";
  if (spec.type) os << "  label=\"type " << to_string(*spec.type) << "\";\n";
  os << "  node [shape=circle];\n";
  for (int v = 0; v < kVertexCount; ++v) {
    const Point p = lay.position[v];
    os << "  v" << v << " [label=\"" << a.tone_at(VertexId(v)).name() << "\", ring=\""
       << (lay.outer[v] ? "hexagon" : "hexagram") << "\", pos=\"" << num(p.x) << "," << num(kCanvasSize - p.y)
       << "!\"];\n";
  }
  for (const auto& [u, v] : g.edges()) {
    os << "  v" << int(u.index) << " -- v" << int(v.index) << " [kind=edge, color=\"#bbbbbb\"];\n";
  }
  int index = 0;
  for (const Highlight& h : spec.highlights) {
    for (const auto& [u, v] : chords_of(h.figure)) {
      const ChordKind k = chord_kind(g, u, v);
      os << "  v" << int(u.index) << " -- v" << int(v.index) << " [kind=" << dot_kind(k) << ", style=" << dot_style(k)
         << ", color=\"" << h.color << "\", penwidth=3, figure=" << index << "];\n";
    }
    ++index;
  }
  os << "}\n";
  return os.str();
}

}  // namespace musico
