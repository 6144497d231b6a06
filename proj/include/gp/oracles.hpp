#pragma once

#include <cstdint>
#include <vector>

#include "gp/trace.hpp"

namespace gp {

/// Caps for the brute-force reference implementations. Every search aborts
/// with BudgetExceeded instead of running away.
struct OracleBudget {
  int maxWordLength = 12;
  int maxConjugatorLength = 5;
  int maxStates = 100000;
};

/// Reference normal form, independent of the trace machinery: explores the
/// commutation class of the word (adjacent independent swaps) for an
/// adjacent same-node pair, multiplies one picked by the seeded RNG, and
/// repeats until the whole class is merge-free.
GWord naive_normal_form(const GraphProductSpec& spec, const GWord& w,
                        uint64_t seed,
                        const OracleBudget& budget = OracleBudget{});

/// Conjugacy by conjugator enumeration: some generator word z of length at
/// most maxConjugatorLength satisfies z̄ u z v̄ = 1. On finite graph
/// products (all node groups finite, complete graph) it enumerates group
/// elements instead, making both answers authoritative; otherwise only
/// `true` is.
bool brute_conjugate(const GraphProductSpec& spec, const GWord& u,
                     const GWord& v, const OracleBudget& budget);

/// True iff the whole graph product is finite: every node group is finite
/// and the graph is complete (a direct product).
bool spec_is_finite(const GraphProductSpec& spec);

/// Transposition closure by breadth-first search: every split u ≡ rs
/// (prefix-closed vertex subsets of D(u)) emits sr, deduplicated by a
/// canonical linearization, until v is found or the class is exhausted.
bool transposition_bfs(const GraphProductSpec& spec, const GWord& u,
                       const GWord& v, const OracleBudget& budget);

/// All minimal-length generator words equal to w in the group, in
/// lexicographic order (generator order of the spec).
std::vector<std::vector<std::string>> enumerate_geodesics(
    const GraphProductSpec& spec, const GWord& w, const OracleBudget& budget);

} // namespace gp
