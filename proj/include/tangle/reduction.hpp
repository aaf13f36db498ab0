#pragma once

// Reduction from not-all-equal 3-SAT to list feasibility.
//
//   NaeFormula --to_positive_diff--> PositiveDiffFormula --build_list--> ReductionInstance
//
// brute_force_nae is the satisfiability oracle for both formula kinds, and
// embed_assignment maps an NAE assignment onto the loops of the gadget list.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tangle/core.hpp"

namespace tangle::reduction {

struct Literal {
  int var = 0;  // 1-based
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
};

using NaeClause = std::array<Literal, 3>;
using PositiveClause = std::array<int, 3>;

struct NaeFormula {
  int variables = 0;
  std::vector<NaeClause> clauses;

  friend bool operator==(const NaeFormula&, const NaeFormula&) = default;
};

/// Positive literals only, three different variables per clause.
struct PositiveDiffFormula {
  int variables = 0;
  std::vector<PositiveClause> clauses;

  friend bool operator==(const PositiveDiffFormula&, const PositiveDiffFormula&) = default;
};

/// Truth value per variable; entry v-1 belongs to variable v.
using Assignment = std::vector<bool>;

inline void validate(const NaeFormula& f) {
  if (f.variables < 0) throw Error(Errc::InvalidFormula, "negative variable count");
  for (std::size_t c = 0; c < f.clauses.size(); ++c)
    for (const Literal& l : f.clauses[c])
      if (l.var < 1 || l.var > f.variables)
        throw Error(Errc::InvalidFormula,
                    "clause " + std::to_string(c + 1) + " uses variable " + std::to_string(l.var));
}

inline void validate(const PositiveDiffFormula& f) {
  if (f.variables < 0) throw Error(Errc::InvalidFormula, "negative variable count");
  for (std::size_t c = 0; c < f.clauses.size(); ++c) {
    const PositiveClause& cl = f.clauses[c];
    for (int v : cl)
      if (v < 1 || v > f.variables)
        throw Error(Errc::InvalidFormula, "clause " + std::to_string(c + 1) + " uses variable " + std::to_string(v));
    if (cl[0] == cl[1] || cl[0] == cl[2] || cl[1] == cl[2])
      throw Error(Errc::InvalidFormula, "clause " + std::to_string(c + 1) + " repeats a variable");
  }
}

inline NaeFormula as_nae(const PositiveDiffFormula& f) {
  NaeFormula out{f.variables, {}};
  for (const PositiveClause& c : f.clauses) out.clauses.push_back({Literal{c[0]}, Literal{c[1]}, Literal{c[2]}});
  return out;
}

inline bool nae_satisfies(const NaeFormula& f, const Assignment& a) {
  for (const NaeClause& c : f.clauses) {
    bool v0 = a.at(static_cast<std::size_t>(c[0].var - 1)) != c[0].negated;
    bool v1 = a.at(static_cast<std::size_t>(c[1].var - 1)) != c[1].negated;
    bool v2 = a.at(static_cast<std::size_t>(c[2].var - 1)) != c[2].negated;
    if (v0 == v1 && v1 == v2) return false;
  }
  return true;
}

inline bool nae_satisfies(const PositiveDiffFormula& f, const Assignment& a) { return nae_satisfies(as_nae(f), a); }

inline constexpr int kMaxBruteForceVariables = 26;

/// First NAE assignment in lexicographic order (variable 1 most significant,
/// false before true), or nullopt.
inline std::optional<Assignment> brute_force_nae(const NaeFormula& f) {
  validate(f);
  const int n = f.variables;
  if (n > kMaxBruteForceVariables)
    throw Error(Errc::TooManyVariables, std::to_string(n) + " variables (limit " +
                                            std::to_string(kMaxBruteForceVariables) + ")");
  // Each literal becomes (bit, flip) so a clause is all-equal iff the three
  // flipped bits agree.
  struct Packed {
    std::array<int, 3> shift;
    std::array<std::uint32_t, 3> flip;
  };
  std::vector<Packed> packed;
  packed.reserve(f.clauses.size());
  for (const NaeClause& c : f.clauses) {
    Packed p{};
    for (int k = 0; k < 3; ++k) {
      p.shift[static_cast<std::size_t>(k)] = n - c[static_cast<std::size_t>(k)].var;
      p.flip[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k)].negated ? 1u : 0u;
    }
    packed.push_back(p);
  }
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    bool ok = true;
    for (const Packed& p : packed) {
      auto b0 = static_cast<std::uint32_t>(mask >> p.shift[0]) & 1u ^ p.flip[0];
      auto b1 = static_cast<std::uint32_t>(mask >> p.shift[1]) & 1u ^ p.flip[1];
      auto b2 = static_cast<std::uint32_t>(mask >> p.shift[2]) & 1u ^ p.flip[2];
      if (b0 == b1 && b1 == b2) {
        ok = false;
        break;
      }
    }
    if (ok) {
      Assignment a(static_cast<std::size_t>(n));
      for (int v = 1; v <= n; ++v) a[static_cast<std::size_t>(v - 1)] = (mask >> (n - v)) & 1u;
      return a;
    }
  }
  return std::nullopt;
}

inline std::optional<Assignment> brute_force_nae(const PositiveDiffFormula& f) { return brute_force_nae(as_nae(f)); }

/// Where each original variable went in the positive formula.
struct VariableTrace {
  std::vector<int> positive;  // x_i, indexed i-1
  std::vector<int> negative;  // y_i, indexed i-1
  int a = 0, b = 0, d = 0;
  std::vector<int> auxiliary;  // fresh variables for all-same clauses

  /// Original assignment read off the x variables.
  Assignment project(const Assignment& lifted) const {
    Assignment out;
    for (int x : positive) out.push_back(lifted.at(static_cast<std::size_t>(x - 1)));
    return out;
  }
};

struct PositiveDiffResult {
  PositiveDiffFormula formula;
  VariableTrace trace;
};

/// Removes negations and repeated variables while preserving NAE
/// satisfiability.
///
/// Every v_i becomes x_i and every not-v_i becomes y_i; the clause
/// (x_i, y_i, y_i) forces y_i = not x_i. One shared triple (a, b, d) with
/// clause (a, b, d) serves all duplicate eliminations: a clause on p, p, q is
/// replaced by (p, q, a), (p, q, b), (p, q, d), which hold iff p != q. This is
/// applied to the link clauses too. A clause on a single variable z is never
/// NAE-satisfiable; it becomes the odd cycle z != e1, e1 != e2, e2 != z over
/// two fresh variables, each inequality expanded the same way.
inline PositiveDiffResult to_positive_diff(const NaeFormula& f) {
  validate(f);
  const int n = f.variables;
  PositiveDiffResult r;
  VariableTrace& tr = r.trace;
  for (int i = 1; i <= n; ++i) {
    tr.positive.push_back(i);
    tr.negative.push_back(n + i);
  }
  tr.a = 2 * n + 1;
  tr.b = 2 * n + 2;
  tr.d = 2 * n + 3;
  int next_var = 2 * n + 4;
  std::vector<PositiveClause>& out = r.formula.clauses;

  auto differ = [&](int p, int q) {
    out.push_back({p, q, tr.a});
    out.push_back({p, q, tr.b});
    out.push_back({p, q, tr.d});
  };
  auto map_literal = [&](const Literal& l) {
    return l.negated ? tr.negative[static_cast<std::size_t>(l.var - 1)] : tr.positive[static_cast<std::size_t>(l.var - 1)];
  };

  for (const NaeClause& c : f.clauses) {
    std::array<int, 3> v{map_literal(c[0]), map_literal(c[1]), map_literal(c[2])};
    // Distinct variables in order of first occurrence.
    std::vector<int> distinct;
    for (int x : v)
      if (std::find(distinct.begin(), distinct.end(), x) == distinct.end()) distinct.push_back(x);
    if (distinct.size() == 3) {
      out.push_back(v);
    } else if (distinct.size() == 2) {
      differ(distinct[0], distinct[1]);
    } else {
      int e1 = next_var++;
      int e2 = next_var++;
      tr.auxiliary.push_back(e1);
      tr.auxiliary.push_back(e2);
      differ(distinct[0], e1);
      differ(e1, e2);
      differ(e2, distinct[0]);
    }
  }
  for (int i = 1; i <= n; ++i) differ(tr.positive[static_cast<std::size_t>(i - 1)], tr.negative[static_cast<std::size_t>(i - 1)]);
  out.push_back({tr.a, tr.b, tr.d});
  r.formula.variables = next_var - 1;
  return r;
}

// ---------------------------------------------------------------------------
// Gadget list

enum class RoleKind : std::uint8_t {
  Lambda,
  LambdaPrime,
  Alpha,       // index = i
  AlphaPrime,  // index = i
  Beta,        // index = i, sub = t in 1..5
  BetaPrime,   // index = i, sub = t in 1..5
  Variable,    // index = i
  Clause,      // index = j
  Gamma,       // index = j, occurrence = k
  Psi,         // index = j, occurrence = k, sub = t in 1..3
  Phi,         // index = k in 1..7
};

struct GadgetRole {
  RoleKind kind = RoleKind::Lambda;
  int index = 0;
  int occurrence = 0;
  int sub = 0;

  std::string name() const {
    auto s = [](int v) { return std::to_string(v); };
    switch (kind) {
      case RoleKind::Lambda: return "lambda";
      case RoleKind::LambdaPrime: return "lambda'";
      case RoleKind::Alpha: return "alpha_" + s(index);
      case RoleKind::AlphaPrime: return "alpha'_" + s(index);
      case RoleKind::Beta: return "beta_" + s(index) + "_" + s(sub);
      case RoleKind::BetaPrime: return "beta'_" + s(index) + "_" + s(sub);
      case RoleKind::Variable: return "v_" + s(index);
      case RoleKind::Clause: return "c_" + s(index);
      case RoleKind::Gamma: return "gamma_" + s(index) + "^" + s(occurrence);
      case RoleKind::Psi: return "psi_" + s(index) + "_" + s(sub) + "^" + s(occurrence);
      case RoleKind::Phi: return "phi_" + s(index);
    }
    return "?";
  }

  friend bool operator==(const GadgetRole&, const GadgetRole&) = default;
  friend auto operator<=>(const GadgetRole&, const GadgetRole&) = default;
};

namespace roles {
inline GadgetRole lambda() { return {RoleKind::Lambda}; }
inline GadgetRole lambda_prime() { return {RoleKind::LambdaPrime}; }
inline GadgetRole alpha(int i) { return {RoleKind::Alpha, i}; }
inline GadgetRole alpha_prime(int i) { return {RoleKind::AlphaPrime, i}; }
inline GadgetRole beta(int i, int t) { return {RoleKind::Beta, i, 0, t}; }
inline GadgetRole beta_prime(int i, int t) { return {RoleKind::BetaPrime, i, 0, t}; }
inline GadgetRole variable(int i) { return {RoleKind::Variable, i}; }
inline GadgetRole clause(int j) { return {RoleKind::Clause, j}; }
inline GadgetRole gamma(int j, int k) { return {RoleKind::Gamma, j, k}; }
inline GadgetRole psi(int j, int k, int t) { return {RoleKind::Psi, j, k, t}; }
inline GadgetRole phi(int k) { return {RoleKind::Phi, k}; }
}  // namespace roles

struct ReductionOptions {
  /// Swaps between two variable wires. 8 leaves two per loop; 6 is the
  /// alternative reading that treats v_i like the rest of its gadget.
  int variable_pair_swaps = 8;
};

struct GadgetContext {
  const PositiveDiffFormula& formula;
  ReductionOptions options;
};

namespace detail {

inline bool is(const GadgetRole& r, RoleKind k) { return r.kind == k; }

// Left group V_i: beta_{i,*} and alpha_i.
inline bool in_left_group(const GadgetRole& r, int i) {
  return (is(r, RoleKind::Alpha) || is(r, RoleKind::Beta)) && r.index == i;
}
// Right group V'_i: alpha'_i, beta'_{i,*}, v_i.
inline bool in_right_group(const GadgetRole& r, int i) {
  return (is(r, RoleKind::AlphaPrime) || is(r, RoleKind::BetaPrime) || is(r, RoleKind::Variable)) && r.index == i;
}
inline bool is_variable_side(const GadgetRole& r) {
  return is(r, RoleKind::Alpha) || is(r, RoleKind::Beta) || is(r, RoleKind::AlphaPrime) ||
         is(r, RoleKind::BetaPrime) || is(r, RoleKind::Variable);
}
inline bool in_clause_gadget(const GadgetRole& r) {
  return is(r, RoleKind::Clause) || is(r, RoleKind::Gamma) || is(r, RoleKind::Psi);
}
// D^k_j: psi^k_{j,*} and gamma^k_j.
inline bool in_occurrence_group(const GadgetRole& r, int j, int k) {
  return (is(r, RoleKind::Gamma) || is(r, RoleKind::Psi)) && r.index == j && r.occurrence == k;
}
inline bool clause_has(const PositiveDiffFormula& f, int j, int var) {
  const PositiveClause& c = f.clauses.at(static_cast<std::size_t>(j - 1));
  return std::find(c.begin(), c.end(), var) != c.end();
}

/// Multiplicity ledger read in one direction: `a` is the role the rule is
/// phrased about. Returns nullopt when no rule covers (a, b).
inline std::optional<int> directed_multiplicity(const GadgetRole& a, const GadgetRole& b, const GadgetContext& ctx) {
  using K = RoleKind;
  const PositiveDiffFormula& f = ctx.formula;
  switch (a.kind) {
    case K::Lambda:
      if (is(b, K::LambdaPrime)) return 8;
      break;
    case K::Variable:
      if (is(b, K::Lambda)) return 4;
      if (is(b, K::Clause) && clause_has(f, b.index, a.index)) return 2;
      if (b.index < a.index) {
        if (is(b, K::Alpha)) return 6;
        if (is(b, K::Variable)) return ctx.options.variable_pair_swaps;
        if (in_right_group(b, b.index)) return 6;
      }
      break;
    case K::Alpha:
    case K::AlphaPrime:
      if (is(b, K::Lambda) || is(b, K::LambdaPrime)) return 2;
      if (is(b, K::Phi)) return 2;
      if (is_variable_side(b) && b.index < a.index) return 2;
      break;
    case K::Beta:
      if (is(b, K::Beta) && b.index == a.index && b.sub != a.sub) return 1;
      if (a.sub % 2 == 1 && is(b, K::Lambda)) return 2;
      if (a.sub % 2 == 0 && is(b, K::LambdaPrime)) return 2;
      if (b.index < a.index && (is(b, K::AlphaPrime) || in_left_group(b, b.index))) return 2;
      break;
    case K::BetaPrime:
      if (is(b, K::BetaPrime) && b.index == a.index && b.sub != a.sub) return 1;
      if (is(b, K::Variable) && b.index == a.index) return 4;
      if (a.sub % 2 == 0 && is(b, K::Lambda)) return 2;
      if (a.sub % 2 == 1 && is(b, K::LambdaPrime)) return 2;
      if (b.index < a.index && (is(b, K::Alpha) || in_right_group(b, b.index))) return 2;
      break;
    case K::Phi:
      if (is(b, K::Phi) && b.index != a.index) return 1;
      if (a.index % 2 == 1 && (is(b, K::Lambda) || is(b, K::Clause) || is(b, K::Gamma))) return 2;
      if (a.index % 2 == 0 && is(b, K::LambdaPrime)) return 2;
      break;
    case K::Clause:
    case K::Gamma:
    case K::Psi:
      if (is(a, K::Clause) && is(b, K::LambdaPrime)) return 8;
      if (is(a, K::Gamma) && is(b, K::LambdaPrime)) return 8;
      if (is(a, K::Gamma) && is(b, K::Clause) && b.index == a.index) return 2;
      if (is(a, K::Psi)) {
        if (is(b, K::Psi) && b.index == a.index && b.occurrence == a.occurrence && b.sub != a.sub) return 1;
        if ((a.sub == 1 || a.sub == 3) && is(b, K::Clause) && b.index == a.index) return 2;
        if (a.sub == 2 && is(b, K::LambdaPrime)) return 2;
        if (a.sub == 2 && is(b, K::Variable) &&
            f.clauses.at(static_cast<std::size_t>(a.index - 1)).at(static_cast<std::size_t>(a.occurrence - 1)) == b.index)
          return 2;
      }
      // Later occurrence groups of the same clause cross the earlier ones.
      if ((is(a, K::Gamma) || is(a, K::Psi)) && (is(b, K::Gamma) || is(b, K::Psi)) && b.index == a.index &&
          b.occurrence < a.occurrence)
        return is(a, K::Gamma) ? 8 : 2;
      if (is(b, K::Alpha) || is(b, K::Beta) || is(b, K::AlphaPrime)) return 2;
      break;
    case K::LambdaPrime:
      break;
  }
  return std::nullopt;
}

}  // namespace detail

/// Swap count between two gadget wires; pairs no rule covers get 0.
inline int pair_multiplicity(const GadgetRole& a, const GadgetRole& b, const GadgetContext& ctx) {
  if (a == b) return 0;
  if (auto m = detail::directed_multiplicity(a, b, ctx)) return *m;
  if (auto m = detail::directed_multiplicity(b, a, ctx)) return *m;
  return 0;
}

/// Wire roles in initial order:
///   V_n < ... < V_1 < C_m < ... < C_1 < lambda < lambda' < phi_1..phi_7 < V'_1 < ... < V'_n
/// with V_i = beta_{i,5..1}, alpha_i;  C_j = D^3_j, D^2_j, D^1_j, c_j where
/// D^k_j = psi^k_{j,3..1}, gamma^k_j;  V'_i = alpha'_i, beta'_{i,1..5}, v_i.
inline std::vector<GadgetRole> wire_roles(int variables, int clauses) {
  std::vector<GadgetRole> out;
  for (int i = variables; i >= 1; --i) {
    for (int t = 5; t >= 1; --t) out.push_back(roles::beta(i, t));
    out.push_back(roles::alpha(i));
  }
  for (int j = clauses; j >= 1; --j) {
    for (int k = 3; k >= 1; --k) {
      for (int t = 3; t >= 1; --t) out.push_back(roles::psi(j, k, t));
      out.push_back(roles::gamma(j, k));
    }
    out.push_back(roles::clause(j));
  }
  out.push_back(roles::lambda());
  out.push_back(roles::lambda_prime());
  for (int k = 1; k <= 7; ++k) out.push_back(roles::phi(k));
  for (int i = 1; i <= variables; ++i) {
    out.push_back(roles::alpha_prime(i));
    for (int t = 1; t <= 5; ++t) out.push_back(roles::beta_prime(i, t));
    out.push_back(roles::variable(i));
  }
  return out;
}

struct ReductionInstance {
  SwapList list;
  std::vector<GadgetRole> roles;  // entry w-1 is the role of wire w

  WireId wire_of(const GadgetRole& role) const {
    auto it = std::find(roles.begin(), roles.end(), role);
    if (it == roles.end()) throw Error(Errc::InvalidArgument, "no wire has role " + role.name());
    return static_cast<WireId>(it - roles.begin()) + 1;
  }
  const GadgetRole& role_of(WireId w) const { return roles.at(static_cast<std::size_t>(w - 1)); }
};

inline ReductionInstance build_list(const PositiveDiffFormula& f, const ReductionOptions& options = {}) {
  validate(f);
  ReductionInstance inst;
  inst.roles = wire_roles(f.variables, static_cast<int>(f.clauses.size()));
  const int n = static_cast<int>(inst.roles.size());
  inst.list = SwapList(n);
  GadgetContext ctx{f, options};
  for (WireId i = 1; i <= n; ++i)
    for (WireId j = i + 1; j <= n; ++j)
      if (int m = pair_multiplicity(inst.role_of(i), inst.role_of(j), ctx); m != 0) inst.list.set(i, j, m);
  return inst;
}

// ---------------------------------------------------------------------------
// Assignment embedding

enum class Side { TrueLoops, FalseLoops };

struct ArmVisit {
  int clause = 0;
  int variable = 0;

  friend bool operator==(const ArmVisit&, const ArmVisit&) = default;
};

/// Loops are numbered 1..4 in tangle order; 1 and 2 are the true-loops.
struct LoopPlan {
  std::vector<Side> side;                        // per variable
  std::vector<std::array<int, 3>> clause_loops;  // per clause, loop of each listed variable
  std::array<std::vector<ArmVisit>, 4> arm_order;

  std::string to_text() const {
    std::string s;
    for (std::size_t i = 0; i < side.size(); ++i)
      s += "variable " + std::to_string(i + 1) + (side[i] == Side::TrueLoops ? " true\n" : " false\n");
    for (std::size_t j = 0; j < clause_loops.size(); ++j) {
      s += "clause " + std::to_string(j + 1);
      for (int l : clause_loops[j]) s += " " + std::to_string(l);
      s += '\n';
    }
    for (std::size_t l = 0; l < arm_order.size(); ++l) {
      s += "loop " + std::to_string(l + 1);
      for (const ArmVisit& v : arm_order[l]) s += " c" + std::to_string(v.clause) + ":v" + std::to_string(v.variable);
      s += '\n';
    }
    return s;
  }
};

inline bool is_true_loop(int loop) { return loop == 1 || loop == 2; }

/// Checks a plan against the formula and assignment: each clause meets its
/// variables in three different loops with at least one true-loop and one
/// false-loop, every variable stays on its side, and inside each loop every
/// clause arm is visited at most once and each variable's arms are
/// consecutive.
inline void check_loop_plan(const PositiveDiffFormula& f, const Assignment& a, const LoopPlan& plan) {
  if (plan.side.size() != static_cast<std::size_t>(f.variables) || plan.clause_loops.size() != f.clauses.size())
    throw Error(Errc::InvalidArgument, "plan does not match the formula's shape");
  for (int v = 1; v <= f.variables; ++v)
    if ((plan.side[static_cast<std::size_t>(v - 1)] == Side::TrueLoops) != a.at(static_cast<std::size_t>(v - 1)))
      throw Error(Errc::InvalidArgument, "variable " + std::to_string(v) + " is on the wrong side");
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    const auto& loops = plan.clause_loops[j];
    bool any_true = false, any_false = false;
    for (std::size_t k = 0; k < 3; ++k) {
      int l = loops[k];
      if (l < 1 || l > 4) throw Error(Errc::InvalidArgument, "loop index " + std::to_string(l));
      for (std::size_t k2 = 0; k2 < k; ++k2)
        if (loops[k2] == l) throw Error(Errc::InvalidArgument, "clause " + std::to_string(j + 1) + " reuses a loop");
      bool side_true = plan.side[static_cast<std::size_t>(f.clauses[j][k] - 1)] == Side::TrueLoops;
      if (side_true != is_true_loop(l))
        throw Error(Errc::InvalidArgument, "clause " + std::to_string(j + 1) + " sends a variable off its side");
      (is_true_loop(l) ? any_true : any_false) = true;
    }
    if (!any_true || !any_false) throw Error(Errc::NotNAE, "clause " + std::to_string(j + 1) + " is monochromatic");
  }
  for (std::size_t l = 0; l < plan.arm_order.size(); ++l) {
    const auto& order = plan.arm_order[l];
    std::vector<int> seen_clause, closed_variable;
    for (std::size_t p = 0; p < order.size(); ++p) {
      const ArmVisit& v = order[p];
      if (std::find(seen_clause.begin(), seen_clause.end(), v.clause) != seen_clause.end())
        throw Error(Errc::ArmInterleaving, "loop " + std::to_string(l + 1) + " visits clause " +
                                               std::to_string(v.clause) + " twice");
      seen_clause.push_back(v.clause);
      if (std::find(closed_variable.begin(), closed_variable.end(), v.variable) != closed_variable.end())
        throw Error(Errc::ArmInterleaving, "loop " + std::to_string(l + 1) + ": arms of v" +
                                               std::to_string(v.variable) + " are not consecutive");
      if (p > 0 && order[p - 1].variable != v.variable) closed_variable.push_back(order[p - 1].variable);
    }
  }
}

/// Places each variable on the true- or false-loops according to its value
/// and, per clause, sends true variables to loops 1, 2 and false variables to
/// loops 3, 4 in clause order. Arms inside a loop are grouped by variable.
inline LoopPlan embed_assignment(const PositiveDiffFormula& f, const Assignment& a) {
  validate(f);
  if (a.size() != static_cast<std::size_t>(f.variables))
    throw Error(Errc::InvalidArgument, "assignment has " + std::to_string(a.size()) + " values for " +
                                           std::to_string(f.variables) + " variables");
  LoopPlan plan;
  for (bool v : a) plan.side.push_back(v ? Side::TrueLoops : Side::FalseLoops);
  for (std::size_t j = 0; j < f.clauses.size(); ++j) {
    int next_true = 1, next_false = 3;
    std::array<int, 3> loops{};
    for (std::size_t k = 0; k < 3; ++k) {
      bool value = a[static_cast<std::size_t>(f.clauses[j][k] - 1)];
      int& next = value ? next_true : next_false;
      if (next > (value ? 2 : 4))
        throw Error(Errc::NotNAE, "clause " + std::to_string(j + 1) + " has all variables " + (value ? "true" : "false"));
      loops[k] = next++;
    }
    plan.clause_loops.push_back(loops);
  }
  for (int l = 1; l <= 4; ++l) {
    // Variables ordered by the first clause that sends them into this loop.
    std::vector<int> variables;
    std::map<int, std::vector<int>> arms;
    for (std::size_t j = 0; j < f.clauses.size(); ++j)
      for (std::size_t k = 0; k < 3; ++k)
        if (plan.clause_loops[j][k] == l) {
          int v = f.clauses[j][k];
          if (!arms.count(v)) variables.push_back(v);
          arms[v].push_back(static_cast<int>(j + 1));
        }
    auto& order = plan.arm_order[static_cast<std::size_t>(l - 1)];
    for (int v : variables)
      for (int c : arms[v]) order.push_back({c, v});
  }
  check_loop_plan(f, a, plan);
  return plan;
}

}  // namespace tangle::reduction
