#pragma once

#include <gmpxx.h>

#include <string>
#include <variant>
#include <vector>

#include "gp/errors.hpp"

namespace gp {

enum class GroupKind { Integers, Cyclic, FiniteCayley, FreeGroup };

// Element payload. Interpretation depends on the owning group's kind:
//   Integers     -> mpz_class (arbitrary precision)
//   Cyclic       -> long residue in [0, modulus)
//   FiniteCayley -> long index in [0, order)
//   FreeGroup    -> freely reduced word of signed 1-based generator indices
using Element = std::variant<mpz_class, long, std::vector<int>>;

struct Generator {
  std::string symbol;
  Element elem;
};

/// One node group: the kind, its defining data, and its ordered generating
/// set. Immutable after construction/validation; all operations below are
/// pure functions of it.
struct NodeGroup {
  GroupKind kind = GroupKind::Integers;
  long modulus = 0; // Cyclic
  long order = 0;   // FiniteCayley
  std::vector<long> table;      // FiniteCayley, row-major order*order
  std::vector<long> inverseMap; // FiniteCayley
  long identityIndex = -1;      // FiniteCayley
  long rank = 0;                // FreeGroup
  // Generators in shortlex order (the global `order` declaration restricted
  // to this node).
  std::vector<Generator> gens;
  // For finite kinds: per element, the shortlex word as generator indices
  // into `gens`. Filled by ng_validate.
  std::vector<std::vector<int>> shortlexTable;
};

NodeGroup make_integers();
NodeGroup make_cyclic(long modulus);
NodeGroup make_finite(long order, std::vector<long> table);
NodeGroup make_free(long rank);

Element ng_identity(const NodeGroup& g);
bool ng_is_identity(const NodeGroup& g, const Element& x);
bool ng_equal(const NodeGroup& g, const Element& x, const Element& y);

Element ng_multiply(const NodeGroup& g, const Element& x, const Element& y);
Element ng_invert(const NodeGroup& g, const Element& x);

/// Shortest generator word evaluating to x, lexicographic ties broken by
/// generator order. Throws IdentityElement on x = 1.
std::vector<std::string> ng_shortlex(const NodeGroup& g, const Element& x);

/// Is some z with z^-1 x z = y? Integers/Cyclic: equality. FiniteCayley:
/// exhaustive search. FreeGroup: cyclic reduction plus rotation.
bool ng_conjugate_test(const NodeGroup& g, const Element& x, const Element& y);

/// Checks group-table axioms, generator invariants (no identity, closed
/// under inversion, generating) and precomputes shortlexTable for finite
/// kinds. Must be called once after the generators are attached.
/// `where` names the node in error messages.
void ng_validate(NodeGroup& g, const std::string& where);

/// Parses an element literal: decimal integer (Integers, Cyclic; cyclic
/// values are taken mod modulus), element index (FiniteCayley), or a
/// comma-separated signed generator word like "1,-2" (FreeGroup, freely
/// reduced on input).
Element ng_parse_element(const NodeGroup& g, const std::string& literal);

/// Canonical literal, inverse of ng_parse_element.
std::string ng_element_str(const NodeGroup& g, const Element& x);

void ng_check_element(const NodeGroup& g, const Element& x);

} // namespace gp
