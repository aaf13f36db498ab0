#pragma once

// Command-line front end. `run` is the whole program; tools/tangle.cpp only
// forwards argv and the standard streams.
//
// Exit codes: 0 success / FEASIBLE / OK, 1 negative verdict (INFEASIBLE,
// violation, NotNAE, ...), 2 verdict unknown (budget or limit), 64 usage,
// 65 malformed input, 66 input or output file cannot be opened.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "tangle/core.hpp"
#include "tangle/explore.hpp"
#include "tangle/io.hpp"
#include "tangle/reduction.hpp"
#include "tangle/reduction_io.hpp"
#include "tangle/render.hpp"
#include "tangle/search.hpp"
#include "tangle/simple.hpp"

namespace tangle::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUnknown = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitMalformed = 65;
inline constexpr int kExitNoFile = 66;

inline constexpr std::uint64_t kDefaultMaxNodes = 50'000'000;
inline constexpr const char* kThreadsEnv = "TANGLE_THREADS";

namespace detail {

struct Exit {
  int code;
  std::string message;
};

inline unsigned default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Reads a whole input ("-" is stdin) and parses it; any parse or validation
/// failure becomes exit 65.
template <typename Parse>
auto read_input(const std::string& path, std::istream& stdin_stream, Parse&& parse) {
  std::ifstream file;
  std::istream* in = &stdin_stream;
  if (path != "-") {
    file.open(path);
    if (!file) throw Exit{kExitNoFile, "cannot open " + path};
    in = &file;
  }
  try {
    return parse(*in);
  } catch (const Error& e) {
    throw Exit{kExitMalformed, path + ": " + e.what()};
  }
}

/// Output sink for "-" (stdout) or a file.
class Output {
 public:
  Output(const std::string& path, std::ostream& stdout_stream) : stream_(&stdout_stream) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Exit{kExitNoFile, "cannot write " + path};
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }
  bool is_stdout() const { return file_ == nullptr; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

inline void print_stats(std::ostream& out, const search::Stats& s) {
  out << "# nodes " << s.nodes_expanded << " memoized " << s.states_memoized << " seconds " << s.wall_seconds
      << '\n';
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  using detail::Exit;
  using detail::Output;
  using detail::read_input;

  CLI::App app{"Tangle toolkit: realize swap lists, build hardness gadgets, explore conjectures", "tangle"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  std::uint64_t max_nodes = kDefaultMaxNodes;
  unsigned threads = detail::default_threads();
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--max-nodes", max_nodes, "Search node budget")->capture_default_str();
    sub->add_option("--threads", threads, std::string("Worker threads (default: $") + kThreadsEnv + " or all cores)");
  };
  auto search_opts = [&] {
    search::SearchOptions o;
    o.max_nodes = max_nodes;
    o.threads = threads;
    return o;
  };
  auto load_list = [&](const std::string& path) {
    return read_input(path, in, [](std::istream& s) { return io::read_list(s); });
  };
  auto load_tangle = [&](const std::string& path) {
    return read_input(path, in, [](std::istream& s) { return io::read_tangle(s); });
  };

  std::string list_path, tangle_path, formula_path, assignment_path, output = "-";

  auto* check = app.add_subcommand("check", "Decide whether a list is feasible");
  check->add_option("list", list_path, "List file ('-' for stdin)")->required();
  std::string witness_path;
  check->add_option("--witness", witness_path, "Write the witness tangle here");
  bool no_prune = false;
  check->add_flag("--no-prune", no_prune, "Disable pruning (same verdicts, more nodes)");
  add_budget(check);

  auto* solve = app.add_subcommand("solve", "Find a realizing tangle");
  solve->add_option("list", list_path)->required();
  bool min_height = false;
  solve->add_flag("--min-height", min_height, "Return a minimum-height witness");
  solve->add_option("-o,--output", output, "Witness tangle file");
  add_budget(solve);

  auto* enumerate = app.add_subcommand("enumerate", "Count (and optionally print) all realizing tangles");
  enumerate->add_option("list", list_path)->required();
  std::optional<std::uint64_t> limit;
  enumerate->add_option("--limit", limit, "Fail with exit 2 beyond this many realizations");
  bool print_all = false;
  enumerate->add_flag("--print", print_all, "Print every realization");

  auto* unique = app.add_subcommand("unique-order", "Check that all realizations share per-wire swap orders");
  unique->add_option("list", list_path)->required();
  unique->add_option("--limit", limit);

  auto* simple_cmd = app.add_subcommand("simple", "Odd-even transposition realization of a simple list");
  simple_cmd->add_option("list", list_path)->required();
  simple_cmd->add_option("-o,--output", output);

  auto* gen = app.add_subcommand("gen-ln", "Write the rigid family list L_n");
  int ln_wires = 0;
  gen->add_option("--n", ln_wires, "Wire count (>= 3)")->required();
  gen->add_option("-o,--output", output);

  auto* reduce = app.add_subcommand("reduce", "NAE 3-SAT formula to positive, distinct-variable form");
  reduce->add_option("formula", formula_path)->required();
  reduce->add_option("-o,--output", output);

  auto* build = app.add_subcommand("build-gadgets", "Gadget list for a positive distinct-variable formula");
  build->add_option("formula", formula_path)->required();
  build->add_option("-o,--output", output);
  int vv_swaps = 8;
  build->add_option("--variable-pair-swaps", vv_swaps, "Swaps between two variable wires")
      ->check(CLI::IsMember({6, 8}))
      ->capture_default_str();

  auto* embed = app.add_subcommand("embed", "Map an NAE assignment onto gadget loops");
  embed->add_option("formula", formula_path)->required();
  embed->add_option("assignment", assignment_path)->required();

  auto* explore_cmd = app.add_subcommand("explore", "Test all non-separable even lists for feasibility");
  int ex_wires = 0, ex_mult = 0;
  explore_cmd->add_option("--wires", ex_wires)->required();
  explore_cmd->add_option("--max-mult", ex_mult)->required();
  explore_cmd->add_option("-o,--output", output, "Report file");
  std::string out_dir;
  explore_cmd->add_option("--out-dir", out_dir, "Directory for counterexample list files");
  add_budget(explore_cmd);

  auto* render_cmd = app.add_subcommand("render", "Draw a tangle");
  render_cmd->add_option("tangle", tangle_path)->required();
  std::string format = "ascii";
  render_cmd->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}))->capture_default_str();
  render_cmd->add_option("-o,--output", output);
  render::RenderOptions ropts;
  render_cmd->add_option("--column-width", ropts.column_width)->check(CLI::PositiveNumber);
  render_cmd->add_option("--row-height", ropts.row_height)->check(CLI::PositiveNumber);
  std::vector<int> highlight;
  render_cmd->add_option("--highlight", highlight, "Wires to emphasize");
  std::string roles_path;
  render_cmd->add_option("--roles", roles_path, "List file with '# role' labels");

  auto* verify = app.add_subcommand("verify", "Check that a tangle realizes a list");
  verify->add_option("tangle", tangle_path)->required();
  verify->add_option("list", list_path)->required();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (threads == 0) threads = 1;

  try {
    if (*check) {
      SwapList list = load_list(list_path);
      search::SearchOptions o = search_opts();
      if (no_prune) o.parity_prune = o.blocker_prune = false;
      search::FeasibilityResult r;
      try {
        r = search::decide_feasible(list, o);
      } catch (const Error& e) {
        if (e.code() != Errc::BudgetExhausted) throw;
        out << "UNKNOWN\n";
        err << e.what() << '\n';
        return kExitUnknown;
      }
      out << (r.feasible() ? "FEASIBLE" : "INFEASIBLE") << '\n';
      detail::print_stats(out, r.stats);
      if (r.feasible() && !witness_path.empty()) {
        Output w(witness_path, out);
        io::write_tangle(*w, *r.witness);
      }
      return r.feasible() ? kExitOk : kExitNegative;
    }

    if (*solve) {
      SwapList list = load_list(list_path);
      search::FeasibilityResult r;
      try {
        r = min_height ? search::minimize_height(list, search_opts()) : search::decide_feasible(list, search_opts());
      } catch (const Error& e) {
        if (e.code() != Errc::BudgetExhausted) throw;
        out << "UNKNOWN\n";
        return kExitUnknown;
      }
      if (!r.feasible()) {
        out << "INFEASIBLE\n";
        return kExitNegative;
      }
      Output o(output, out);
      if (o.is_stdout()) {
        out << "# height " << r.witness->height() << '\n';
      } else {
        out << "height " << r.witness->height() << '\n';
      }
      io::write_tangle(*o, *r.witness);
      return kExitOk;
    }

    if (*enumerate) {
      SwapList list = load_list(list_path);
      std::uint64_t k = 0;
      std::uint64_t count = search::enumerate_realizations(
          list,
          [&](const Tangle& t) {
            if (!print_all) return;
            out << "# realization " << ++k << '\n';
            io::write_tangle(out, t);
            out << '\n';
          },
          limit);
      out << "realizations " << count << '\n';
      return kExitOk;
    }

    if (*unique) {
      SwapList list = load_list(list_path);
      search::UniqueOrderResult r = search::check_unique_swap_order(list, limit);
      out << "unique " << (r.unique ? "true" : "false") << '\n'
          << "realizations " << r.realizations << '\n'
          << "signatures " << r.distinct_signatures << '\n';
      return r.unique ? kExitOk : kExitNegative;
    }

    if (*simple_cmd) {
      SwapList list = load_list(list_path);
      simple::SimpleListTarget target = simple::target_permutation(list);
      Tangle t = simple::odd_even_realize(Layer::identity(list.wires()), target.target);
      Output o(output, out);
      if (o.is_stdout()) out << "# height " << t.height() << '\n';
      io::write_tangle(*o, t);
      return kExitOk;
    }

    if (*gen) {
      SwapList list;
      try {
        list = gen_ln(ln_wires);
      } catch (const Error& e) {
        throw Exit{kExitUsage, e.what()};
      }
      Output o(output, out);
      io::write_list(*o, list);
      return kExitOk;
    }

    if (*reduce) {
      auto f = read_input(formula_path, in, [](std::istream& s) { return reduction::read_nae_formula(s); });
      reduction::PositiveDiffResult r = reduction::to_positive_diff(f);
      Output o(output, out);
      for (std::size_t i = 0; i < r.trace.positive.size(); ++i)
        *o << "c variable " << i + 1 << " positive " << r.trace.positive[i] << " negative " << r.trace.negative[i]
           << '\n';
      *o << "c abd " << r.trace.a << ' ' << r.trace.b << ' ' << r.trace.d << '\n';
      reduction::write_formula(*o, r.formula);
      return kExitOk;
    }

    if (*build) {
      auto f = read_input(formula_path, in, [](std::istream& s) { return reduction::read_positive_diff(s); });
      reduction::ReductionInstance inst = reduction::build_list(f, reduction::ReductionOptions{vv_swaps});
      Output o(output, out);
      reduction::write_instance(*o, inst);
      return kExitOk;
    }

    if (*embed) {
      auto f = read_input(formula_path, in, [](std::istream& s) { return reduction::read_positive_diff(s); });
      auto a = read_input(assignment_path, in,
                          [&](std::istream& s) { return reduction::read_assignment(s, f.variables); });
      try {
        out << reduction::embed_assignment(f, a).to_text();
      } catch (const Error& e) {
        if (e.code() != Errc::NotNAE && e.code() != Errc::ArmInterleaving) throw;
        out << errc_name(e.code()) << '\n';
        err << e.what() << '\n';
        return kExitNegative;
      }
      return kExitOk;
    }

    if (*explore_cmd) {
      explore::ConjectureReport r;
      try {
        r = explore::test_conjecture(ex_wires, ex_mult, max_nodes, threads);
      } catch (const Error& e) {
        if (e.code() == Errc::InvalidArgument) throw Exit{kExitUsage, e.what()};
        throw;
      }
      Output o(output, out);
      *o << r.to_text();
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (std::size_t k = 0; k < r.counterexamples.size(); ++k) {
          std::ofstream f(std::filesystem::path(out_dir) / ("counterexample-" + std::to_string(k + 1) + ".list"));
          io::write_list(f, r.counterexamples[k]);
        }
      }
      return r.unknowns.empty() ? kExitOk : kExitUnknown;
    }

    if (*render_cmd) {
      Tangle t = load_tangle(tangle_path);
      ropts.format = format == "svg" ? render::Format::Svg : render::Format::Ascii;
      ropts.highlight.insert(highlight.begin(), highlight.end());
      if (!roles_path.empty())
        ropts.labels = read_input(roles_path, in, [](std::istream& s) { return reduction::read_role_labels(s); });
      Output o(output, out);
      *o << render::render_tangle(t, ropts);
      return kExitOk;
    }

    if (*verify) {
      Tangle t = load_tangle(tangle_path);
      SwapList list = load_list(list_path);
      if (!t.start.is_identity()) throw Exit{kExitMalformed, "tangle must start from the identity order"};
      Verdict v;
      try {
        v = verify_realizes(t, list);
      } catch (const Error& e) {
        throw Exit{kExitMalformed, e.what()};
      }
      out << (v.ok ? "OK" : "VIOLATION " + v.describe()) << '\n';
      return v.ok ? kExitOk : kExitNegative;
    }
  } catch (const Exit& e) {
    err << e.message << '\n';
    return e.code;
  } catch (const Error& e) {
    err << e.what() << '\n';
    switch (e.code()) {
      case Errc::BudgetExhausted:
      case Errc::LimitReached: return kExitUnknown;
      case Errc::TooFewWires:
      case Errc::InvalidArgument: return kExitUsage;
      default: return kExitNegative;
    }
  }
  return kExitUsage;
}

inline int run(int argc, const char* const* argv, std::istream& in = std::cin, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, in, out, err);
}

}  // namespace tangle::cli
