#include "gp/oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>

#include "gp/amalgam.hpp"
#include "gp/conjugacy.hpp"

namespace gp {

namespace {

std::string word_key(const GraphProductSpec& spec, const GWord& w) {
  return word_str(spec, w);
}

// Canonical linearization by the dependence relation alone: repeatedly take
// the minimal position whose (node, element literal) pair is least. Keeps
// this file independent of the trace module's normal-form machinery.
GWord canon_trace(const GraphProductSpec& spec, const GWord& w) {
  int n = w.size();
  std::vector<char> done(n, 0);
  GWord out;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    std::pair<NodeId, std::string> bestKey;
    for (int v = 0; v < n; ++v) {
      if (done[v]) continue;
      bool minimal = true;
      for (int u = 0; u < n && minimal; ++u)
        if (!done[u] && u < v &&
            spec.dependent(w.letters[u].node, w.letters[v].node))
          minimal = false;
      if (!minimal) continue;
      std::pair<NodeId, std::string> key{
          w.letters[v].node,
          ng_element_str(spec.groups[w.letters[v].node], w.letters[v].elem)};
      if (best < 0 || key < bestKey) {
        best = v;
        bestKey = key;
      }
    }
    done[best] = 1;
    out.letters.push_back(w.letters[best]);
  }
  return out;
}

} // namespace

bool spec_is_finite(const GraphProductSpec& spec) {
  for (const auto& g : spec.groups)
    if (g.kind == GroupKind::Integers || g.kind == GroupKind::FreeGroup)
      return false;
  for (NodeId a = 0; a < spec.nodeCount(); ++a)
    for (NodeId b = a + 1; b < spec.nodeCount(); ++b)
      if (!spec.indep[a][b]) return false;
  return true;
}

GWord naive_normal_form(const GraphProductSpec& spec, const GWord& w,
                        uint64_t seed, const OracleBudget& budget) {
  std::mt19937_64 rng(seed);
  GWord cur = w;
  for (;;) {
    // Walk the commutation class by adjacent swaps of independent letters
    // and collect every adjacent same-node pair seen anywhere in it. No
    // pair in the whole class means no length-decreasing move exists.
    std::map<std::string, GWord> seen;
    std::deque<const GWord*> queue;
    std::vector<std::pair<GWord, int>> merges;
    auto visit = [&](GWord g) {
      std::string key = word_key(spec, g);
      auto [it, fresh] = seen.emplace(std::move(key), std::move(g));
      if (fresh) queue.push_back(&it->second);
    };
    visit(cur);
    while (!queue.empty()) {
      if (static_cast<int>(seen.size()) > budget.maxStates)
        throw BudgetExceeded("commutation class larger than the state cap");
      const GWord& g = *queue.front();
      queue.pop_front();
      for (int i = 0; i + 1 < g.size(); ++i) {
        NodeId a = g.letters[i].node, b = g.letters[i + 1].node;
        if (a == b)
          merges.emplace_back(g, i);
        else if (!spec.dependent(a, b)) {
          GWord h = g;
          std::swap(h.letters[i], h.letters[i + 1]);
          visit(std::move(h));
        }
      }
    }
    if (merges.empty()) return cur;
    auto& [host, pos] = merges[rng() % merges.size()];
    const NodeGroup& ng = spec.groups[host.letters[pos].node];
    Element prod =
        ng_multiply(ng, host.letters[pos].elem, host.letters[pos + 1].elem);
    host.letters.erase(host.letters.begin() + pos + 1);
    if (ng_is_identity(ng, prod))
      host.letters.erase(host.letters.begin() + pos);
    else
      host.letters[pos].elem = prod;
    cur = host;
  }
}

bool brute_conjugate(const GraphProductSpec& spec, const GWord& u,
                     const GWord& v, const OracleBudget& budget) {
  GWord vInv = invert_word(spec, v);
  auto witness = [&](const GWord& z) {
    GWord t = concat(concat(invert_word(spec, z), u), concat(z, vInv));
    return word_problem(spec, t);
  };
  if (spec_is_finite(spec)) {
    // Complete independence graph of finite groups: the product is finite
    // and an element is just its tuple of per-node components, so every
    // element can serve as a candidate conjugator.
    long total = 1;
    for (const auto& g : spec.groups) {
      long n = g.kind == GroupKind::Cyclic ? g.modulus : g.order;
      if (total > budget.maxStates / n)
        throw BudgetExceeded("finite group larger than the state cap");
      total *= n;
    }
    std::vector<std::vector<Element>> tuples;
    std::map<std::string, size_t> index;
    auto tuple_key = [&](const std::vector<Element>& t) {
      std::string k;
      for (NodeId a = 0; a < spec.nodeCount(); ++a) {
        k += ng_element_str(spec.groups[a], t[a]);
        k += '|';
      }
      return k;
    };
    std::vector<Element> id;
    for (const auto& g : spec.groups) id.push_back(ng_identity(g));
    tuples.push_back(id);
    index[tuple_key(id)] = 0;
    for (size_t qi = 0; qi < tuples.size(); ++qi) {
      for (const auto& gb : spec.gens) {
        std::vector<Element> next = tuples[qi];
        next[gb.node] = ng_multiply(spec.groups[gb.node], next[gb.node],
                                    gb.elem);
        std::string k = tuple_key(next);
        if (!index.count(k)) {
          index[k] = tuples.size();
          tuples.push_back(std::move(next));
        }
      }
    }
    for (const auto& t : tuples) {
      GWord z;
      for (NodeId a = 0; a < spec.nodeCount(); ++a)
        if (!ng_is_identity(spec.groups[a], t[a])) z.letters.push_back({a, t[a]});
      if (witness(z)) return true;
    }
    return false;
  }
  // Infinite (or not obviously finite) group: try every generator word up
  // to the budgeted length. Only a positive answer is authoritative here.
  int ng = static_cast<int>(spec.gens.size());
  for (int len = 0; len <= budget.maxConjugatorLength; ++len) {
    std::vector<int> idx(len, 0);
    for (;;) {
      GWord z;
      for (int i = 0; i < len; ++i)
        z.letters.push_back({spec.gens[idx[i]].node, spec.gens[idx[i]].elem});
      if (witness(z)) return true;
      int d = len - 1;
      while (d >= 0 && ++idx[d] == ng) idx[d--] = 0;
      if (d < 0) break;
    }
  }
  return false;
}

bool transposition_bfs(const GraphProductSpec& spec, const GWord& u,
                       const GWord& v, const OracleBudget& budget) {
  if (length_vector(spec, u) != length_vector(spec, v)) return false;
  int n = u.size();
  if (n > 20)
    throw BudgetExceeded("split enumeration word too long");
  std::string target = word_key(spec, canon_trace(spec, v));
  std::map<std::string, GWord> seen;
  std::deque<const GWord*> queue;
  auto visit = [&](const GWord& raw) {
    GWord c = canon_trace(spec, raw);
    std::string key = word_key(spec, c);
    auto [it, fresh] = seen.emplace(std::move(key), std::move(c));
    if (fresh) queue.push_back(&it->second);
  };
  visit(u);
  while (!queue.empty()) {
    if (static_cast<int>(seen.size()) > budget.maxStates)
      throw BudgetExceeded("transposition class larger than the state cap");
    const GWord& w = *queue.front();
    queue.pop_front();
    if (word_key(spec, w) == target) return true;
    // Every way of writing w as r s corresponds to a downward-closed
    // position set for r; emit the transposed word s r.
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (spec.dependent(w.letters[i].node, w.letters[j].node))
          arcs.emplace_back(i, j);
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
      bool ideal = true;
      for (const auto& [i, j] : arcs)
        if ((mask >> j & 1) && !(mask >> i & 1)) {
          ideal = false;
          break;
        }
      if (!ideal) continue;
      GWord sr;
      for (int i = 0; i < n; ++i)
        if (!(mask >> i & 1)) sr.letters.push_back(w.letters[i]);
      for (int i = 0; i < n; ++i)
        if (mask >> i & 1) sr.letters.push_back(w.letters[i]);
      visit(sr);
    }
  }
  return false;
}

std::vector<std::vector<std::string>> enumerate_geodesics(
    const GraphProductSpec& spec, const GWord& w, const OracleBudget& budget) {
  int ng = static_cast<int>(spec.gens.size());
  for (int len = 0; len <= budget.maxWordLength; ++len) {
    std::vector<std::vector<std::string>> found;
    std::vector<int> idx(len, 0);
    for (;;) {
      GWord x;
      std::vector<std::string> syms;
      for (int i = 0; i < len; ++i) {
        x.letters.push_back({spec.gens[idx[i]].node, spec.gens[idx[i]].elem});
        syms.push_back(spec.gens[idx[i]].symbol);
      }
      if (word_problem(spec, concat(w, invert_word(spec, x))))
        found.push_back(std::move(syms));
      int d = len - 1;
      while (d >= 0 && ++idx[d] == ng) idx[d--] = 0;
      if (d < 0) break;
    }
    if (!found.empty()) return found;
  }
  throw BudgetExceeded("no representative within the length budget");
}

} // namespace gp
