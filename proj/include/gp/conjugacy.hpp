#pragma once

#include "gp/trace.hpp"

namespace gp {

/// Decomposition u ≡ p r m s p̄ of a reduced word, where p collects the
/// cancelling minimal/maximal pairs, r and s hold at most one letter per
/// node (the same node set, with [sr] nontrivial nodewise), and m[sr] is
/// the cyclically reduced core conjugate to u.
struct CyclicForm {
  GWord p, r, m, s;
};

/// True iff no distinct minimal and maximal vertex of D(w) carry labels of
/// the same node. Throws NotReduced if w is not reduced.
bool is_cyclically_reduced(const GraphProductSpec& spec, const GWord& w);

/// Builds the decomposition directly: strips inverse minimal/maximal pairs
/// into p, then extracts the boundary pairs into r and s. Input is reduced
/// internally first.
CyclicForm cyclic_form(const GraphProductSpec& spec, const GWord& u);

/// A cyclically reduced conjugate of u (the core m[sr]). Computed from the
/// reduction of u·u by per-node length arithmetic; inputs whose core would
/// lose letters in the doubling (negative solved lengths) fall back to the
/// direct cyclic_form construction.
GWord cyclically_reduce(const GraphProductSpec& spec, const GWord& u);

/// Transitive closure of the transposition relation rs ~ sr on cyclically
/// reduced words: equal per-node lengths and u occurs as a factor of
/// v^|L|. Throws NotCyclicallyReduced on bad input.
bool transposition_equiv(const GraphProductSpec& spec, const GWord& u,
                         const GWord& v);

/// Conjugacy in the graph product: reduce, cyclically reduce, split into
/// connected alphabet components, compare alphabets, then delegate to the
/// node group (singleton alphabet) or decide transposition equivalence.
bool conjugate(const GraphProductSpec& spec, const GWord& u, const GWord& v);

} // namespace gp
