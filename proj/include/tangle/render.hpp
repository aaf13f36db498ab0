#pragma once

// Layered drawings of tangles. One row per layer; wire w sits in the column of
// its position in that layer. Swaps of one move cross in the same row gap.
//
// ASCII:
//   1 2 3
//   | | |      <- '|' for wires that keep their column
//    X  |      <- 'X' in the gap between swapped columns
//   2 1 3
//
// SVG: one <path> per wire, a gray <line> per layer, <text> labels on top.

#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tangle/core.hpp"
#include "tangle/io.hpp"

namespace tangle::render {

enum class Format { Svg, Ascii };

struct RenderOptions {
  Format format = Format::Ascii;
  double column_width = 40.0;
  double row_height = 40.0;
  std::set<WireId> highlight;
  std::map<WireId, std::string> labels;  // e.g. gadget roles
};

namespace detail {

inline std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string layer_row(const Layer& layer, std::size_t cell) {
  std::string row;
  for (std::size_t p = 0; p < layer.order.size(); ++p) {
    if (p) row += ' ';
    std::string id = std::to_string(layer.order[p]);
    row += std::string(cell - id.size(), ' ') + id;
  }
  return row;
}

/// Wires right-aligned in cells of width `cell`; the '|' or 'X' goes under
/// the last character of a cell, or in the gap after it.
inline std::string crossing_row(int n, const Move& move, std::size_t cell) {
  std::string row((cell + 1) * static_cast<std::size_t>(n) - 1, ' ');
  std::vector<bool> swapped(static_cast<std::size_t>(n), false);
  for (int p : move.positions) {
    swapped[static_cast<std::size_t>(p - 1)] = swapped[static_cast<std::size_t>(p)] = true;
    row[static_cast<std::size_t>(p) * (cell + 1) - 1] = 'X';
  }
  for (int p = 0; p < n; ++p)
    if (!swapped[static_cast<std::size_t>(p)]) row[static_cast<std::size_t>(p) * (cell + 1) + cell - 1] = '|';
  while (!row.empty() && row.back() == ' ') row.pop_back();
  return row;
}

inline std::string format_number(double v) {
  std::ostringstream ss;
  ss << v;
  return ss.str();
}

}  // namespace detail

inline std::string render_ascii(const Tangle& t, const RenderOptions& opts = {}) {
  validate_tangle(t);
  const std::size_t cell = std::to_string(t.wires()).size();
  std::string out;
  for (const auto& [w, label] : opts.labels) out += "# " + std::to_string(w) + ' ' + label + '\n';
  std::vector<Layer> layers = t.layers();
  for (std::size_t k = 0; k < layers.size(); ++k) {
    if (k) out += detail::crossing_row(t.wires(), t.moves[k - 1], cell) + '\n';
    out += detail::layer_row(layers[k], cell) + '\n';
  }
  return out;
}

/// Layer sequence back from an ASCII drawing: rows holding digits are layers,
/// rows of '|'/'X' and '#' comment rows are skipped.
inline std::vector<Layer> parse_ascii(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string layers_text;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] == '#') continue;
    bool has_digit = false;
    for (char c : line) has_digit = has_digit || std::isdigit(static_cast<unsigned char>(c));
    if (has_digit) layers_text += line + '\n';
  }
  return io::tangle_from_string(layers_text).layers();
}

inline std::string render_svg(const Tangle& t, const RenderOptions& opts = {}) {
  validate_tangle(t);
  if (!(opts.column_width > 0) || !(opts.row_height > 0))
    throw Error(Errc::InvalidArgument, "column width and row height must be positive");
  using detail::format_number;
  const double cw = opts.column_width, rh = opts.row_height;
  const int n = t.wires();
  std::vector<Layer> layers = t.layers();
  const double top = rh;  // room for labels
  auto x_of = [&](int pos) { return cw * (pos + 1); };
  auto y_of = [&](std::size_t layer) { return top + rh * static_cast<double>(layer + 1); };
  const double width = cw * (n + 1);
  const double height = y_of(layers.size() - 1) + rh;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << format_number(width)
      << "\" height=\"" << format_number(height) << "\" viewBox=\"0 0 " << format_number(width) << ' '
      << format_number(height) << "\">\n";
  for (std::size_t k = 0; k < layers.size(); ++k)
    svg << "<line x1=\"" << format_number(cw / 2) << "\" y1=\"" << format_number(y_of(k)) << "\" x2=\""
        << format_number(width - cw / 2) << "\" y2=\"" << format_number(y_of(k))
        << "\" stroke=\"#d0d0d0\" stroke-width=\"" << format_number(rh / 5) << "\"/>\n";

  std::vector<std::vector<int>> position(layers.size(), std::vector<int>(static_cast<std::size_t>(n) + 1));
  for (std::size_t k = 0; k < layers.size(); ++k)
    for (int p = 0; p < n; ++p) position[k][static_cast<std::size_t>(layers[k].order[static_cast<std::size_t>(p)])] = p;
  for (WireId w = 1; w <= n; ++w) {
    const bool hot = opts.highlight.count(w) != 0;
    svg << "<path d=\"";
    for (std::size_t k = 0; k < layers.size(); ++k) {
      svg << (k ? " L" : "M") << format_number(x_of(position[k][static_cast<std::size_t>(w)])) << ','
          << format_number(y_of(k));
    }
    svg << "\" fill=\"none\" stroke=\"" << (hot ? "#d62728" : "#000000") << "\" stroke-width=\""
        << (hot ? "3" : "1.5") << "\"/>\n";
  }
  for (WireId w = 1; w <= n; ++w) {
    auto it = opts.labels.find(w);
    std::string label = it == opts.labels.end() ? std::to_string(w) : it->second;
    svg << "<text x=\"" << format_number(x_of(w - 1)) << "\" y=\"" << format_number(top)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"" << format_number(rh / 3) << "\">"
        << detail::xml_escape(label) << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

inline std::string render_tangle(const Tangle& t, const RenderOptions& opts = {}) {
  return opts.format == Format::Svg ? render_svg(t, opts) : render_ascii(t, opts);
}

}  // namespace tangle::render
