#include "gp/trace.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace gp {

namespace {

// The leftmost mergeable pair: positions i < j with the same node such that
// everything strictly between is independent of that node. Equivalently, a
// same-node Hasse arc: scanning right from i, the first dependent letter is
// the only possible partner.
std::optional<std::pair<int, int>> candidate_at(const GraphProductSpec& spec,
                                                const GWord& w, int i) {
  NodeId a = w.letters[i].node;
  for (int j = i + 1; j < w.size(); ++j) {
    if (!spec.dependent(a, w.letters[j].node)) continue;
    if (w.letters[j].node == a) return std::make_pair(i, j);
    return std::nullopt;
  }
  return std::nullopt;
}

std::vector<std::pair<int, int>> all_candidates(const GraphProductSpec& spec,
                                                const GWord& w) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i + 1 < w.size(); ++i)
    if (auto c = candidate_at(spec, w, i)) out.push_back(*c);
  return out;
}

void apply_merge(const GraphProductSpec& spec, GWord& w, int i, int j) {
  const NodeGroup& g = spec.groups[w.letters[i].node];
  Element prod = ng_multiply(g, w.letters[i].elem, w.letters[j].elem);
  w.letters.erase(w.letters.begin() + j);
  if (ng_is_identity(g, prod))
    w.letters.erase(w.letters.begin() + i);
  else
    w.letters[i].elem = prod;
}

GWord single(NodeId node, const Element& e) {
  GWord w;
  w.letters.push_back({node, e});
  return w;
}

} // namespace

DependenceGraph build_dependence_graph(const GraphProductSpec& spec,
                                       const GWord& w) {
  DependenceGraph g;
  g.labels = w.letters;
  int n = w.size();
  std::vector<std::vector<int>> succ(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (spec.dependent(w.letters[i].node, w.letters[j].node)) {
        g.arcs.emplace_back(i, j);
        succ[i].push_back(j);
      }
  // reach[i][j]: a path of length >= 1 from i to j. Arcs only increase the
  // index, so a single back-to-front pass suffices.
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int i = n - 1; i >= 0; --i)
    for (int k : succ[i]) {
      reach[i][k] = 1;
      for (int j = k + 1; j < n; ++j)
        if (reach[k][j]) reach[i][j] = 1;
    }
  for (const auto& [i, j] : g.arcs) {
    bool transitive = false;
    for (int k : succ[i])
      if (k != j && reach[k][j]) {
        transitive = true;
        break;
      }
    if (!transitive) g.hasse.emplace_back(i, j);
  }
  return g;
}

GWord linearize(const DependenceGraph& g) {
  GWord w;
  w.letters = g.labels;
  return w;
}

bool is_reduced(const GraphProductSpec& spec, const GWord& w) {
  for (int i = 0; i + 1 < w.size(); ++i)
    if (candidate_at(spec, w, i)) return false;
  return true;
}

GWord reduce_word(const GraphProductSpec& spec, GWord w,
                  std::optional<uint64_t> seed) {
  if (!seed) {
    for (;;) {
      std::optional<std::pair<int, int>> c;
      for (int i = 0; i + 1 < w.size() && !c; ++i) c = candidate_at(spec, w, i);
      if (!c) return w;
      apply_merge(spec, w, c->first, c->second);
    }
  }
  std::mt19937_64 rng(*seed);
  for (;;) {
    auto cands = all_candidates(spec, w);
    if (cands.empty()) return w;
    auto [i, j] = cands[rng() % cands.size()];
    apply_merge(spec, w, i, j);
  }
}

DependenceGraph reduce_graph(const GraphProductSpec& spec,
                             const DependenceGraph& g,
                             std::optional<uint64_t> seed) {
  return build_dependence_graph(spec, reduce_word(spec, linearize(g), seed));
}

AlphaFactorization alpha_factorize(const GraphProductSpec&, const GWord& w,
                                   NodeId node) {
  AlphaFactorization f;
  f.u.emplace_back();
  for (const auto& l : w.letters) {
    if (l.node == node) {
      f.a.push_back(l);
      f.u.emplace_back();
    } else {
      f.u.back().letters.push_back(l);
    }
  }
  return f;
}

GWord alpha_reduce(const GraphProductSpec& spec, const GWord& w, NodeId node) {
  const NodeGroup& ng = spec.groups[node];
  AlphaFactorization f = alpha_factorize(spec, w, node);
  size_t n = f.a.size();
  GWord out = f.u[0];
  size_t i = 1;
  while (i <= n) {
    // Grow the block a_i .. a_m while the accumulated gap word commutes
    // with the next block letter; then the whole block multiplies into one
    // letter ahead of its gaps.
    Element acc = f.a[i - 1].elem;
    GWord gaps = f.u[i];
    size_t m = i;
    while (m < n) {
      const Letter& next = f.a[m];
      GWord comm = concat(concat(gaps, single(node, next.elem)),
                          concat(invert_word(spec, gaps),
                                 single(node, ng_invert(ng, next.elem))));
      if (!reduce_word(spec, comm).empty()) break;
      ++m;
      acc = ng_multiply(ng, acc, f.a[m - 1].elem);
      gaps = concat(gaps, f.u[m]);
    }
    if (!ng_is_identity(ng, acc)) out.letters.push_back({node, acc});
    out = concat(out, gaps);
    i = m + 1;
  }
  return out;
}

GWord alpha_round(const GraphProductSpec& spec, GWord w) {
  for (NodeId node = 0; node < spec.nodeCount(); ++node)
    w = alpha_reduce(spec, w, node);
  return w;
}

DependenceGraph normal_form(const GraphProductSpec& spec, const GWord& w) {
  GWord cur = w;
  std::vector<int> lv = length_vector(spec, cur);
  for (;;) {
    cur = alpha_round(spec, cur);
    std::vector<int> lv2 = length_vector(spec, cur);
    if (lv2 == lv) break;
    lv = std::move(lv2);
  }
  // Stable per-node counts leave no mergeable pair, hence a reduced word;
  // cheap to assert since everything downstream relies on it.
  if (!is_reduced(spec, cur))
    throw InternalCheckError("round-stable word is not reduced");
  return build_dependence_graph(spec, cur);
}

bool trace_equal(const GraphProductSpec& spec, const GWord& u, const GWord& v) {
  if (length_vector(spec, u) != length_vector(spec, v)) return false;
  for (NodeId x = 0; x < spec.nodeCount(); ++x)
    for (NodeId y = x; y < spec.nodeCount(); ++y) {
      if (!spec.dependent(x, y)) continue;
      std::set<NodeId> pair{x, y};
      GWord pu = project(spec, u, pair);
      GWord pv = project(spec, v, pair);
      for (int i = 0; i < pu.size(); ++i)
        if (!letter_equal(spec, pu.letters[i], pv.letters[i])) return false;
    }
  return true;
}

bool word_problem(const GraphProductSpec& spec, const GWord& w) {
  return normal_form(spec, w).labels.empty();
}

GWord canonical_linearization(const GraphProductSpec&,
                              const DependenceGraph& g) {
  int n = static_cast<int>(g.labels.size());
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> succ(n);
  for (const auto& [i, j] : g.arcs) {
    ++indeg[j];
    succ[i].push_back(j);
  }
  std::vector<char> done(n, 0);
  GWord out;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v) {
      if (done[v] || indeg[v] > 0) continue;
      if (best < 0 || g.labels[v].node < g.labels[best].node) best = v;
    }
    if (best < 0) throw InternalCheckError("dependence graph has a cycle");
    done[best] = 1;
    for (int j : succ[best]) --indeg[j];
    out.letters.push_back(g.labels[best]);
  }
  return out;
}

std::vector<std::string> shortlex_nf(const GraphProductSpec& spec,
                                     const GWord& w) {
  GWord lin = canonical_linearization(spec, normal_form(spec, w));
  std::vector<std::string> out;
  for (const auto& l : lin.letters)
    for (const auto& sym : ng_shortlex(spec.groups[l.node], l.elem))
      out.push_back(sym);
  return out;
}

bool factor_match(const GraphProductSpec& spec, const GWord& p,
                  const GWord& t) {
  if (p.empty()) return true;
  std::vector<int> lp = length_vector(spec, p), lt = length_vector(spec, t);
  for (size_t i = 0; i < lp.size(); ++i)
    if (lp[i] > lt[i]) return false;

  DependenceGraph dp = build_dependence_graph(spec, p);
  DependenceGraph dt = build_dependence_graph(spec, t);
  int np = p.size(), nt = t.size();
  std::vector<int> indegP(np, 0), outdegP(np, 0);
  for (const auto& [i, j] : dp.arcs) {
    ++indegP[j];
    ++outdegP[i];
  }
  std::vector<int> minsP, maxsP;
  for (int v = 0; v < np; ++v) {
    if (indegP[v] == 0) minsP.push_back(v);
    if (outdegP[v] == 0) maxsP.push_back(v);
  }
  std::vector<std::vector<int>> succT(nt), predT(nt);
  for (const auto& [i, j] : dt.arcs) {
    succT[i].push_back(j);
    predT[j].push_back(i);
  }
  // Candidate target positions per pattern vertex, by equal label.
  auto candidates = [&](const std::vector<int>& verts) {
    std::vector<std::vector<int>> cand;
    for (int v : verts) {
      std::vector<int> c;
      for (int u = 0; u < nt; ++u)
        if (letter_equal(spec, dp.labels[v], dt.labels[u])) c.push_back(u);
      cand.push_back(std::move(c));
    }
    return cand;
  };
  auto candMin = candidates(minsP);
  auto candMax = candidates(maxsP);
  for (const auto& c : candMin)
    if (c.empty()) return false;
  for (const auto& c : candMax)
    if (c.empty()) return false;

  // Odometer over placements of the pattern minima. Minimal vertices have
  // pairwise distinct nodes, so distinctness of targets is automatic.
  std::vector<size_t> pick(minsP.size(), 0);
  for (;;) {
    std::vector<char> inR(nt, 0);
    std::vector<int> stack;
    for (size_t k = 0; k < minsP.size(); ++k) {
      int u = candMin[k][pick[k]];
      if (!inR[u]) {
        inR[u] = 1;
        stack.push_back(u);
      }
    }
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int s : succT[v])
        if (!inR[s]) {
          inR[s] = 1;
          stack.push_back(s);
        }
    }
    // Symmetric placement of the pattern maxima inside the reachable set,
    // followed by the backward closure; the enclosed piece is a factor of t
    // by construction, so trace_equal against p settles this placement.
    std::vector<std::vector<int>> candMaxR(maxsP.size());
    bool feasible = true;
    for (size_t k = 0; k < maxsP.size() && feasible; ++k) {
      for (int u : candMax[k])
        if (inR[u]) candMaxR[k].push_back(u);
      feasible = !candMaxR[k].empty();
    }
    if (feasible) {
      std::vector<size_t> pick2(maxsP.size(), 0);
      for (;;) {
        std::vector<char> inQ(nt, 0);
        std::vector<int> stack2;
        for (size_t k = 0; k < maxsP.size(); ++k) {
          int u = candMaxR[k][pick2[k]];
          if (!inQ[u]) {
            inQ[u] = 1;
            stack2.push_back(u);
          }
        }
        while (!stack2.empty()) {
          int v = stack2.back();
          stack2.pop_back();
          for (int s : predT[v])
            if (inR[s] && !inQ[s]) {
              inQ[s] = 1;
              stack2.push_back(s);
            }
        }
        GWord q;
        for (int v = 0; v < nt; ++v)
          if (inQ[v]) q.letters.push_back(dt.labels[v]);
        if (q.size() == np && trace_equal(spec, q, p)) return true;
        size_t d = 0;
        while (d < pick2.size() && ++pick2[d] == candMaxR[d].size())
          pick2[d++] = 0;
        if (d == pick2.size()) break;
      }
    }
    size_t d = 0;
    while (d < pick.size() && ++pick[d] == candMin[d].size()) pick[d++] = 0;
    if (d == pick.size()) break;
  }
  return false;
}

std::string emit_dot(const GraphProductSpec& spec, const DependenceGraph& g,
                     bool full) {
  std::ostringstream out;
  out << "digraph dependence {\n";
  for (size_t v = 0; v < g.labels.size(); ++v) {
    const Letter& l = g.labels[v];
    out << "  v" << (v + 1) << " [label=\"" << spec.nodeNames[l.node] << ":";
    auto syms = ng_shortlex(spec.groups[l.node], l.elem);
    for (size_t i = 0; i < syms.size(); ++i) {
      if (i) out << ' ';
      out << syms[i];
    }
    out << "\"];\n";
  }
  for (const auto& [i, j] : full ? g.arcs : g.hasse)
    out << "  v" << (i + 1) << " -> v" << (j + 1) << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace gp
