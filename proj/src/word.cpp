#include "gp/word.hpp"

#include <sstream>

namespace gp {

bool letter_equal(const GraphProductSpec& spec, const Letter& a,
                  const Letter& b) {
  return a.node == b.node && ng_equal(spec.groups[a.node], a.elem, b.elem);
}

GWord parse_word(const GraphProductSpec& spec, const std::string& text) {
  std::stringstream ss(text);
  std::string tok;
  GWord out;
  // Pending same-node run, multiplied out when the node changes.
  NodeId runNode = -1;
  Element runElem;
  auto flush = [&] {
    if (runNode < 0) return;
    if (!ng_is_identity(spec.groups[runNode], runElem))
      out.letters.push_back({runNode, runElem});
    runNode = -1;
  };
  while (ss >> tok) {
    NodeId node;
    Element elem;
    auto colon = tok.find(':');
    if (colon != std::string::npos) {
      node = spec.nodeId(tok.substr(0, colon));
      elem = ng_parse_element(spec.groups[node], tok.substr(colon + 1));
    } else {
      auto it = spec.genBySymbol.find(tok);
      if (it == spec.genBySymbol.end())
        throw ParseError("unknown generator symbol '" + tok + "'");
      node = spec.gens[it->second].node;
      elem = spec.gens[it->second].elem;
    }
    if (node == runNode) {
      runElem = ng_multiply(spec.groups[node], runElem, elem);
    } else {
      flush();
      runNode = node;
      runElem = elem;
    }
  }
  flush();
  return out;
}

std::string word_str(const GraphProductSpec& spec, const GWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += ' ';
    out += spec.nodeNames[l.node];
    out += ':';
    out += ng_element_str(spec.groups[l.node], l.elem);
  }
  return out;
}

GWord concat(const GWord& a, const GWord& b) {
  GWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

GWord invert_word(const GraphProductSpec& spec, const GWord& w) {
  GWord out;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back({it->node, ng_invert(spec.groups[it->node], it->elem)});
  return out;
}

GWord project(const GraphProductSpec&, const GWord& w,
              const std::set<NodeId>& nodes) {
  GWord out;
  for (const auto& l : w.letters)
    if (nodes.count(l.node)) out.letters.push_back(l);
  return out;
}

int alpha_length(const GWord& w, NodeId node) {
  int n = 0;
  for (const auto& l : w.letters)
    if (l.node == node) ++n;
  return n;
}

std::set<NodeId> alph(const GWord& w) {
  std::set<NodeId> out;
  for (const auto& l : w.letters) out.insert(l.node);
  return out;
}

std::vector<int> length_vector(const GraphProductSpec& spec, const GWord& w) {
  std::vector<int> out(spec.nodeCount(), 0);
  for (const auto& l : w.letters) ++out[l.node];
  return out;
}

GWord translate_word(const GWord& w, const std::vector<NodeId>& idMap) {
  GWord out;
  for (const auto& l : w.letters) {
    NodeId t = idMap[l.node];
    if (t < 0) throw UnknownNode("letter outside the translated node set");
    out.letters.push_back({t, l.elem});
  }
  return out;
}

} // namespace gp
