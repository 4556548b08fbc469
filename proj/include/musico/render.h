#ifndef MUSICO_RENDER_H
#define MUSICO_RENDER_H

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "musico/assignment.h"

namespace musico {

constexpr double kCanvasSize = 480.0;
constexpr double kOuterRadius = 200.0;  // hexagon ring
constexpr double kInnerRadius = 100.0;  // hexagram ring

struct Highlight {
  Figure figure;
  std::string color = "#d62728";
  bool fill = false;  // fill the figure as a polygon
  std::string label;
};

struct RenderSpec {
  Assignment assignment;
  std::vector<Highlight> highlights;
  std::optional<TypeLabel> type;
};

struct Point {
  double x = 0;
  double y = 0;
};

/// @brief Flat drawing along the axis through two opposite faces.
///
/// Hexagon tones go on the outer ring in whole-tone steps clockwise from the
/// top; each hexagram tone sits on the inner ring under its radial partner.
struct Hexagram2D {
  std::array<Point, kVertexCount> position;  // by vertex
  std::array<bool, kVertexCount> outer{};
  Tone top;         // topmost outer tone
  Tone below_top;   // inner tone directly under it
};

Hexagram2D layout_hexagram(const Assignment& a);

std::string render_svg(const RenderSpec& spec);
std::string render_dot(const RenderSpec& spec);

}  // namespace musico

#endif  // MUSICO_RENDER_H
