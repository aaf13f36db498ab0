#pragma once

// Formula files are DIMACS-flavored:
//
//   c optional comment
//   p nae3 <variables> <clauses>
//   1 -2 3 0
//
// Positive formulas use the same format with positive literals only. A
// reduction instance is written in the list format with a role table as
// `# role <wire> <name>` comment lines right after the header.

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include "tangle/io.hpp"
#include "tangle/reduction.hpp"

namespace tangle::reduction {

inline NaeFormula read_nae_formula(std::istream& in) {
  std::string line;
  int line_no = 0;
  long long vars = -1, clauses = -1;
  NaeFormula f;
  std::vector<long long> pending;
  while (std::getline(in, line)) {
    ++line_no;
    std::string body = io::detail::strip_comment(line);
    if (io::detail::is_blank(body)) continue;
    std::istringstream ss(body);
    std::string first;
    ss >> first;
    if (first == "c") continue;
    if (first == "p") {
      std::string kind;
      if (vars >= 0 || !(ss >> kind >> vars >> clauses) || kind != "nae3" || vars < 0 || clauses < 0)
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected 'p nae3 <vars> <clauses>'");
      std::string extra;
      if (ss >> extra) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": trailing text in header");
      f.variables = static_cast<int>(vars);
      continue;
    }
    if (vars < 0) throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": clause before header");
    for (long long lit : io::detail::parse_integers(body, line_no)) {
      if (lit != 0) {
        if (lit < -vars || lit > vars)
          throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": literal " + std::to_string(lit) +
                                            " out of range");
        pending.push_back(lit);
        continue;
      }
      if (pending.size() != 3)
        throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": clause must have exactly 3 literals");
      NaeClause c;
      for (std::size_t k = 0; k < 3; ++k)
        c[k] = Literal{static_cast<int>(pending[k] < 0 ? -pending[k] : pending[k]), pending[k] < 0};
      f.clauses.push_back(c);
      pending.clear();
    }
  }
  if (vars < 0) throw Error(Errc::ParseError, "missing 'p nae3' header");
  if (!pending.empty()) throw Error(Errc::ParseError, "last clause lacks its 0 terminator");
  if (static_cast<long long>(f.clauses.size()) != clauses)
    throw Error(Errc::ParseError, "header announces " + std::to_string(clauses) + " clauses, found " +
                                      std::to_string(f.clauses.size()));
  return f;
}

inline PositiveDiffFormula read_positive_diff(std::istream& in) {
  NaeFormula f = read_nae_formula(in);
  PositiveDiffFormula out{f.variables, {}};
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    PositiveClause c{};
    for (std::size_t k = 0; k < 3; ++k) {
      if (f.clauses[j][k].negated)
        throw Error(Errc::ParseError, "clause " + std::to_string(j + 1) + " has a negative literal");
      c[k] = f.clauses[j][k].var;
    }
    out.clauses.push_back(c);
  }
  try {
    validate(out);
  } catch (const Error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  return out;
}

inline void write_formula(std::ostream& out, const NaeFormula& f) {
  out << "p nae3 " << f.variables << ' ' << f.clauses.size() << '\n';
  for (const NaeClause& c : f.clauses)
    out << (c[0].negated ? -c[0].var : c[0].var) << ' ' << (c[1].negated ? -c[1].var : c[1].var) << ' '
        << (c[2].negated ? -c[2].var : c[2].var) << " 0\n";
}

inline void write_formula(std::ostream& out, const PositiveDiffFormula& f) { write_formula(out, as_nae(f)); }

/// Signed literals: +v sets variable v true, -v false. Tokens `v`/`s` and a
/// trailing 0 are ignored. Every variable must be set exactly once.
inline Assignment read_assignment(std::istream& in, int variables) {
  std::vector<int> state(static_cast<std::size_t>(variables), -1);
  std::string tok;
  while (in >> tok) {
    if (tok == "v" || tok == "s" || tok == "0") continue;
    if (tok[0] == '#' || tok[0] == 'c') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    std::size_t used = 0;
    long long lit = 0;
    try {
      lit = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || lit == 0 || lit < -variables || lit > variables)
      throw Error(Errc::ParseError, "bad assignment literal '" + tok + "'");
    auto& slot = state[static_cast<std::size_t>((lit < 0 ? -lit : lit) - 1)];
    if (slot != -1) throw Error(Errc::ParseError, "variable " + std::to_string(lit < 0 ? -lit : lit) + " set twice");
    slot = lit > 0 ? 1 : 0;
  }
  Assignment a;
  for (int v = 1; v <= variables; ++v) {
    int s = state[static_cast<std::size_t>(v - 1)];
    if (s < 0) throw Error(Errc::ParseError, "variable " + std::to_string(v) + " not assigned");
    a.push_back(s == 1);
  }
  return a;
}

inline void write_assignment(std::ostream& out, const Assignment& a) {
  for (std::size_t v = 0; v < a.size(); ++v) out << (a[v] ? "" : "-") << v + 1 << ' ';
  out << "0\n";
}

inline void write_instance(std::ostream& out, const ReductionInstance& inst) {
  out << "wires " << inst.list.wires() << '\n';
  for (std::size_t w = 0; w < inst.roles.size(); ++w) out << "# role " << w + 1 << ' ' << inst.roles[w].name() << '\n';
  for (const PairCount& e : inst.list.entries()) out << e.i << ' ' << e.j << ' ' << e.count << '\n';
}

/// Role labels from `# role <wire> <name>` lines; other lines are ignored.
inline std::map<WireId, std::string> read_role_labels(std::istream& in) {
  std::map<WireId, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string hash, keyword, name;
    long long wire = 0;
    if (ss >> hash >> keyword >> wire >> name && hash == "#" && keyword == "role" && wire > 0)
      out[static_cast<WireId>(wire)] = name;
  }
  return out;
}

}  // namespace tangle::reduction
