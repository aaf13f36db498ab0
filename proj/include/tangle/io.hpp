#pragma once

// Text formats.
//
// List:   line 1 `wires <n>`, then `<i> <j> <count>` per nonzero pair, i < j.
//         `#` starts a comment anywhere on a line.
// Tangle: one layer per line, wire ids separated by single spaces; the first
//         line is the start layer.
//
// The writers emit the canonical form, which the readers accept unchanged.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "tangle/core.hpp"

namespace tangle::io {

namespace detail {

inline std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

inline bool is_blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

inline std::vector<long long> parse_integers(const std::string& text, int line_no) {
  std::istringstream ss(text);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size())
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected integer, got '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace detail

inline SwapList read_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long wires = -1;
  std::vector<RawEntry> entries;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = detail::strip_comment(line);
    if (detail::is_blank(body)) continue;
    if (wires < 0) {
      std::istringstream ss(body);
      std::string keyword;
      ss >> keyword;
      if (keyword != "wires")
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 'wires <n>'");
      std::string rest;
      std::getline(ss, rest);
      auto nums = detail::parse_integers(rest, line_no);
      if (nums.size() != 1 || nums[0] < 1)
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad wire count");
      wires = nums[0];
      continue;
    }
    auto nums = detail::parse_integers(body, line_no);
    if (nums.size() != 3)
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected '<i> <j> <count>'");
    entries.push_back({nums[0], nums[1], nums[2]});
  }
  if (wires < 0) throw Error(Errc::ParseError, "missing 'wires <n>' header");
  return validate_list(wires, entries);
}

inline void write_list(std::ostream& out, const SwapList& list) {
  out << "wires " << list.wires() << '\n';
  for (const PairCount& e : list.entries()) out << e.i << ' ' << e.j << ' ' << e.count << '\n';
}

inline std::string list_to_string(const SwapList& list) {
  std::ostringstream ss;
  write_list(ss, list);
  return ss.str();
}

inline SwapList list_from_string(const std::string& text) {
  std::istringstream ss(text);
  return read_list(ss);
}

/// Recovers the move between two consecutive layers. Throws ParseError when
/// the layers do not differ by disjoint adjacent transpositions.
inline Move move_between(const Layer& a, const Layer& b, int line_no = 0) {
  std::vector<int> positions;
  const int n = a.size();
  for (int p = 0; p < n;) {
    auto up = static_cast<std::size_t>(p);
    if (a.order[up] == b.order[up]) {
      ++p;
      continue;
    }
    if (p + 1 >= n || a.order[up] != b.order[up + 1] || a.order[up + 1] != b.order[up])
      throw Error(Errc::ParseError,
                  "line " + std::to_string(line_no) + ": layer is not reachable by adjacent swaps");
    positions.push_back(p + 1);
    p += 2;
  }
  if (positions.empty())
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": repeated layer (empty move)");
  return Move(std::move(positions));
}

inline Tangle tangle_from_layers(const std::vector<Layer>& layers) {
  if (layers.empty()) throw Error(Errc::ParseError, "tangle has no layers");
  Tangle t;
  t.start = layers.front();
  for (std::size_t k = 1; k < layers.size(); ++k)
    t.moves.push_back(move_between(layers[k - 1], layers[k], static_cast<int>(k + 1)));
  return t;
}

inline Tangle read_tangle(std::istream& in) {
  std::vector<Layer> layers;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = detail::strip_comment(line);
    if (detail::is_blank(body)) continue;
    Layer layer;
    for (long long v : detail::parse_integers(body, line_no)) {
      if (v < 1 || v > 65535) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": bad wire id");
      layer.order.push_back(static_cast<WireId>(v));
    }
    if (!is_permutation(layer))
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": layer is not a permutation of 1..n");
    if (!layers.empty() && layer.size() != layers.front().size())
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": layer length differs from the start");
    layers.push_back(std::move(layer));
  }
  return tangle_from_layers(layers);
}

inline void write_tangle(std::ostream& out, const Tangle& t) {
  for (const Layer& layer : t.layers()) {
    for (std::size_t p = 0; p < layer.order.size(); ++p) {
      if (p) out << ' ';
      out << layer.order[p];
    }
    out << '\n';
  }
}

inline std::string tangle_to_string(const Tangle& t) {
  std::ostringstream ss;
  write_tangle(ss, t);
  return ss.str();
}

inline Tangle tangle_from_string(const std::string& text) {
  std::istringstream ss(text);
  return read_tangle(ss);
}

}  // namespace tangle::io
