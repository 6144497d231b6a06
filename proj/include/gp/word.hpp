#pragma once

#include <set>
#include <string>
#include <vector>

#include "gp/graph_spec.hpp"

namespace gp {

/// A non-identity node-group element tagged with its node.
struct Letter {
  NodeId node;
  Element elem;
};

/// A word over the letters of all node groups. May be empty.
struct GWord {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  int size() const { return static_cast<int>(letters.size()); }
};

bool letter_equal(const GraphProductSpec& spec, const Letter& a,
                  const Letter& b);

/// Tokenized input to a word: whitespace-separated generator symbols or
/// `node:element-literal` tokens. Maximal runs of same-node tokens are
/// multiplied into one letter and identity letters are dropped.
GWord parse_word(const GraphProductSpec& spec, const std::string& text);

/// One letter per token, `node:element-literal` syntax. parse_word accepts
/// the output.
std::string word_str(const GraphProductSpec& spec, const GWord& w);

GWord concat(const GWord& a, const GWord& b);
GWord invert_word(const GraphProductSpec& spec, const GWord& w);
GWord project(const GraphProductSpec& spec, const GWord& w,
              const std::set<NodeId>& nodes);

int alpha_length(const GWord& w, NodeId node);
std::set<NodeId> alph(const GWord& w);

/// Per-node letter counts, indexable by node id.
std::vector<int> length_vector(const GraphProductSpec& spec, const GWord& w);

/// Letters reinterpreted in a sub-spec (node ids translated via map). All
/// letters must belong to kept nodes.
GWord translate_word(const GWord& w, const std::vector<NodeId>& idMap);

} // namespace gp
