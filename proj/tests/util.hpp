#pragma once

#include <random>
#include <string>

#include "gp/graph_spec.hpp"
#include "gp/word.hpp"

namespace gptest {

inline std::string fixture_path(const std::string& name) {
  return std::string(GP_FIXTURES_DIR) + "/" + name;
}

inline gp::GraphProductSpec load_fixture(const std::string& name) {
  return gp::load_spec_file(fixture_path(name));
}

// Uniform random word of at most maxSyms generator symbols. Goes through
// parse_word, so same-node runs are already folded.
inline gp::GWord random_word(const gp::GraphProductSpec& spec,
                             std::mt19937_64& rng, int maxSyms) {
  std::uniform_int_distribution<int> lenD(0, maxSyms);
  std::uniform_int_distribution<size_t> genD(0, spec.gens.size() - 1);
  int len = lenD(rng);
  std::string s;
  for (int i = 0; i < len; ++i) {
    if (i) s += ' ';
    s += spec.gens[genD(rng)].symbol;
  }
  return gp::parse_word(spec, s);
}

} // namespace gptest
