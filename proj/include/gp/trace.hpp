#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gp/word.hpp"

namespace gp {

/// The dependence graph of a word: vertices are letter positions (0-based
/// here), arcs join earlier letters to later letters of dependent nodes,
/// and `hasse` is the transitive reduction of `arcs`. The stored label
/// order is a topological sorting, so `labels` doubles as a linearization.
struct DependenceGraph {
  std::vector<Letter> labels;
  std::vector<std::pair<int, int>> arcs;
  std::vector<std::pair<int, int>> hasse;
};

DependenceGraph build_dependence_graph(const GraphProductSpec& spec,
                                       const GWord& w);

GWord linearize(const DependenceGraph& g);

/// True iff no factor b u b' exists with b, b' from one node group and u
/// made of letters independent of that node. Equivalent: no same-node pair
/// of labels is adjacent in the Hasse diagram.
bool is_reduced(const GraphProductSpec& spec, const GWord& w);

/// Repeatedly multiplies Hasse-adjacent same-node labels ([bb'] = 1 deletes
/// both vertices) until none remain. Deterministic: always the leftmost
/// pair. Pass a seed to pick pairs at random instead; all orders converge
/// to the same trace.
GWord reduce_word(const GraphProductSpec& spec, GWord w,
                  std::optional<uint64_t> seed = std::nullopt);

DependenceGraph reduce_graph(const GraphProductSpec& spec,
                             const DependenceGraph& g,
                             std::optional<uint64_t> seed = std::nullopt);

/// The unique factorization w = u0 a1 u1 ... an un with the ai exactly the
/// letters of `node`.
struct AlphaFactorization {
  std::vector<Letter> a;  // n letters of the chosen node
  std::vector<GWord> u;   // n+1 gaps, u[0] before a[1]
};
AlphaFactorization alpha_factorize(const GraphProductSpec& spec,
                                   const GWord& w, NodeId node);

/// Left-to-right block merge: at each stop, the maximal run of `node`
/// letters whose gaps commute with the later letters of the run is
/// multiplied into one letter (dropped if trivial). The result has minimal
/// `node`-length among words equal to w in the group.
GWord alpha_reduce(const GraphProductSpec& spec, const GWord& w, NodeId node);

/// One alpha_reduce per node, in node order.
GWord alpha_round(const GraphProductSpec& spec, GWord w);

/// Reduced dependence graph of w, computed by alpha_round passes until no
/// node length changes. Represents the group element's unique normal form.
DependenceGraph normal_form(const GraphProductSpec& spec, const GWord& w);

/// u and v have isomorphic dependence graphs. Decided by the projection
/// criterion: equal per-node counts and, for every dependent node pair,
/// equal projected subsequences.
bool trace_equal(const GraphProductSpec& spec, const GWord& u, const GWord& v);

/// w = 1 in the graph product.
bool word_problem(const GraphProductSpec& spec, const GWord& w);

/// The linearization shortlex_nf is built from: repeatedly emit, among the
/// minimal vertices of what remains, the one with the least node. Minimal
/// vertices carry pairwise independent nodes, so there is never a tie.
GWord canonical_linearization(const GraphProductSpec& spec,
                              const DependenceGraph& g);

/// Least word over the generator alphabet representing w: linearizes the
/// normal form by always emitting the minimal vertex with the least node,
/// expanding letters via ng_shortlex.
std::vector<std::string> shortlex_nf(const GraphProductSpec& spec,
                                     const GWord& w);

/// Is t ≡ x p y for some words x, y? Places the minimal vertices of D(p)
/// onto equal labels in D(t), keeps the vertices above the placement, then
/// places the maximal vertices symmetrically and compares the enclosed
/// factor against p.
bool factor_match(const GraphProductSpec& spec, const GWord& p,
                  const GWord& t);

/// DOT rendering; full=false keeps only Hasse arcs. Vertex labels are
/// "node:shortlex(element)". Deterministic output.
std::string emit_dot(const GraphProductSpec& spec, const DependenceGraph& g,
                     bool full);

} // namespace gp
