#include "gp/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <string>

#include "gp/amalgam.hpp"
#include "gp/conjugacy.hpp"
#include "gp/oracles.hpp"
#include "gp/trace.hpp"

namespace gp::cli {

namespace {

std::string join(const std::vector<std::string>& syms) {
  std::string out;
  for (const auto& s : syms) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

// Stable rendering for reduced results: the same vertex-selection rule
// shortlex_nf linearizes with, printed as node:element tokens.
std::string canonical_str(const GraphProductSpec& spec, const GWord& w) {
  return word_str(spec,
                  canonical_linearization(spec, build_dependence_graph(spec, w)));
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"word problem, normal forms, geodesics and conjugacy in "
               "graph products"};
  app.require_subcommand(1);

  std::string specPath, w1, w2, baseName;
  bool full = false;
  uint64_t seed = 0;
  int bound = 5;

  auto add = [&](const std::string& name, const std::string& desc,
                 int words) {
    CLI::App* c = app.add_subcommand(name, desc);
    c->add_option("spec", specPath, "group spec file")->required();
    if (words >= 1) c->add_option("word", w1, "input word")->required();
    if (words >= 2) c->add_option("word2", w2, "second input word")->required();
    return c;
  };
  add("wp", "decide whether a word is the identity", 1);
  add("nf", "print the normal form", 1);
  add("shortlex", "print the shortlex normal form", 1);
  add("geodesic", "print a geodesic word and its length", 1);
  add("cycred", "print a cyclically reduced conjugate", 1);
  add("conj", "decide conjugacy of two words", 2);
  CLI::App* awp =
      add("amalgam-wp", "decide the word problem via the amalgam "
                        "decomposition", 1);
  awp->add_option("--base", baseName, "node to split off");
  CLI::App* dot = add("dot", "emit the dependence graph as DOT", 1);
  dot->add_flag("--full", full, "all arcs, not only the Hasse diagram");

  // Debug access to the reference implementations; hidden from help.
  CLI::App* onf = add("oracle-nf", "", 1);
  onf->group("");
  onf->add_option("--seed", seed);
  CLI::App* oconj = add("oracle-conj", "", 2);
  oconj->group("");
  oconj->add_option("--bound", bound);
  CLI::App* ogeo = add("oracle-geodesic", "", 1);
  ogeo->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    GraphProductSpec spec = load_spec_file(specPath);
    CLI::App* cmd = app.get_subcommands().front();
    const std::string name = cmd->get_name();
    if (name == "wp") {
      bool trivial = word_problem(spec, parse_word(spec, w1));
      out << (trivial ? "TRIVIAL" : "NONTRIVIAL") << "\n";
      return trivial ? 0 : 1;
    }
    if (name == "nf") {
      DependenceGraph g = normal_form(spec, parse_word(spec, w1));
      out << word_str(spec, canonical_linearization(spec, g)) << "\n";
      return 0;
    }
    if (name == "shortlex") {
      out << join(shortlex_nf(spec, parse_word(spec, w1))) << "\n";
      return 0;
    }
    if (name == "geodesic") {
      auto syms = shortlex_nf(spec, parse_word(spec, w1));
      out << join(syms) << "\n";
      out << "length " << syms.size() << "\n";
      return 0;
    }
    if (name == "cycred") {
      GWord core = cyclically_reduce(spec, parse_word(spec, w1));
      out << canonical_str(spec, core) << "\n";
      return 0;
    }
    if (name == "conj") {
      bool c = conjugate(spec, parse_word(spec, w1), parse_word(spec, w2));
      out << (c ? "CONJUGATE" : "NOT-CONJUGATE") << "\n";
      return c ? 0 : 1;
    }
    if (name == "amalgam-wp") {
      std::optional<NodeId> base;
      if (!baseName.empty()) base = spec.nodeId(baseName);
      bool trivial = wp_via_decomposition(spec, parse_word(spec, w1), base);
      out << (trivial ? "TRIVIAL" : "NONTRIVIAL") << "\n";
      return trivial ? 0 : 1;
    }
    if (name == "dot") {
      out << emit_dot(spec, build_dependence_graph(spec, parse_word(spec, w1)),
                      full);
      return 0;
    }
    if (name == "oracle-nf") {
      out << word_str(spec, naive_normal_form(spec, parse_word(spec, w1),
                                              seed))
          << "\n";
      return 0;
    }
    if (name == "oracle-conj") {
      OracleBudget budget;
      budget.maxConjugatorLength = bound;
      bool c = brute_conjugate(spec, parse_word(spec, w1),
                               parse_word(spec, w2), budget);
      out << (c ? "CONJUGATE" : "NOT-CONJUGATE") << "\n";
      return c ? 0 : 1;
    }
    if (name == "oracle-geodesic") {
      for (const auto& syms :
           enumerate_geodesics(spec, parse_word(spec, w1), OracleBudget{}))
        out << join(syms) << "\n";
      return 0;
    }
    err << "unhandled command '" << name << "'\n";
    return 2;
  } catch (const InternalCheckError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

} // namespace gp::cli
