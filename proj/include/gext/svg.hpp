#pragma once

// Static SVG drawings of one or two rims. Integer coordinates only, so the
// output is byte-stable.

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gext/rim.hpp"
#include "gext/trapezia.hpp"

namespace gext {

struct SvgLayout {
  int unit = 40;        // horizontal length of one edge
  int half_step = 20;   // vertical drop of one edge
  int margin = 30;
  int label_band = 20;  // strip above the drawing holding edge labels
  int rim_gap = 40;     // J's highest point sits this far below I's lowest
};

inline constexpr SvgLayout kSvgLayout{};

namespace detail {

inline std::string points(const HeightProfile& h, int x0, int y_top, int top_height, const SvgLayout& L) {
  std::string s;
  for (int v = 0; v <= h.n(); ++v) {
    if (v) s += ' ';
    s += std::to_string(x0 + v * L.unit) + "," + std::to_string(y_top + (top_height - h(v)) * L.half_step);
  }
  return s;
}

}  // namespace detail

/// One polyline per rim; with two rims J is drawn below I, dotted verticals
/// mark trapezium boundaries and each trapezium carries its letter.
inline std::string render_svg(const Rim& i, const std::optional<Rim>& j = std::nullopt,
                              const SvgLayout& L = kSvgLayout) {
  if (j) require_same_parameters(i, *j);
  const int n = i.n();
  const auto hi = height_profile(i);
  const int i_max = *std::max_element(hi.heights.begin(), hi.heights.end());
  const int i_min = *std::min_element(hi.heights.begin(), hi.heights.end());

  const int x0 = L.margin;
  const int y_i = L.margin + L.label_band;
  const int i_bottom = y_i + (i_max - i_min) * L.half_step;
  int bottom = i_bottom;

  std::string body;
  body += "  <polyline class=\"rim-i\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"" +
          detail::points(hi, x0, y_i, i_max, L) + "\"/>\n";

  if (j) {
    const auto hj = height_profile(*j);
    const int j_max = *std::max_element(hj.heights.begin(), hj.heights.end());
    const int j_min = *std::min_element(hj.heights.begin(), hj.heights.end());
    const int y_j = i_bottom + L.rim_gap;
    bottom = y_j + (j_max - j_min) * L.half_step;
    body += "  <polyline class=\"rim-j\" fill=\"none\" stroke=\"gray\" stroke-width=\"2\" points=\"" +
            detail::points(hj, x0, y_j, j_max, L) + "\"/>\n";

    const auto word = build_word(i, *j);
    std::set<int> cuts;
    for (const auto& t : word.letters) {
      const int start = t.first_edge - 1;
      cuts.insert(start);
      cuts.insert((start + t.length) % n);
      const int mid2 = 2 * start + t.length;  // twice the midpoint, in edges
      const int cx = x0 + (mid2 % (2 * n)) * L.unit / 2;
      body += "  <text class=\"letter\" x=\"" + std::to_string(cx) + "\" y=\"" +
              std::to_string((i_bottom + y_j) / 2) + "\" text-anchor=\"middle\">" + static_cast<char>(t.side) +
              "</text>\n";
    }
    for (int c : cuts) {
      const std::string x = std::to_string(x0 + c * L.unit);
      body += "  <line class=\"boundary\" x1=\"" + x + "\" y1=\"" + std::to_string(y_i) + "\" x2=\"" + x +
              "\" y2=\"" + std::to_string(bottom) + "\" stroke=\"gray\" stroke-dasharray=\"2,4\"/>\n";
    }
  }

  for (int e = 1; e <= n; ++e) {
    body += "  <text class=\"edge\" x=\"" + std::to_string(x0 + e * L.unit - L.unit / 2) + "\" y=\"" +
            std::to_string(L.margin + L.label_band / 2) + "\" text-anchor=\"middle\">" + std::to_string(e) +
            "</text>\n";
  }

  const int width = 2 * L.margin + n * L.unit;
  const int height = bottom + L.margin;
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
         std::to_string(width) + " " + std::to_string(height) + "\" font-family=\"sans-serif\" font-size=\"12\">\n" +
         body + "</svg>\n";
}

}  // namespace gext
