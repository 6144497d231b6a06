#pragma once

#include <array>
#include <string>
#include <vector>

#include "gp/trace.hpp"

namespace gp {

/// The shape G = P *_A (A x B) obtained by removing one node: P is the
/// graph product without it, B its node group, A the subgroup of P
/// generated by the link nodes. Membership in A is decided by projection:
/// w is in A iff erasing the non-link letters does not change it in P.
struct AmalgamInstance {
  Decomposition dec;

  bool wp_P(const GWord& w) const;        // word problem in P
  bool member_A(const GWord& w) const;    // w in A, for words over P
};

AmalgamInstance make_amalgam(const GraphProductSpec& spec, NodeId base);

/// w regrouped around the base node: alternating P-words g0..gm and
/// non-identity base-group elements b1..bm.
struct SyllableWord {
  std::vector<GWord> g;    // m+1 entries over P (node ids of P)
  std::vector<Element> b;  // m entries in B
};

/// Splits a word of the parent spec at the base node and normalizes:
/// adjacent base letters are multiplied, identity products dropped.
SyllableWord to_syllables(const AmalgamInstance& inst, const GWord& w);

/// Word over a free basis, as signed 1-based symbol ids. Symbol k stands
/// for the pair (coset index i != 0, base element g != 1) recorded in
/// `basis`, numbered in order of first use.
struct FreeWord {
  std::vector<int> syms;
  std::vector<std::pair<int, std::string>> basis;
};

/// Rewrites a syllable word known to vanish in both P and B into the free
/// basis: coset indices of the prefix products turn each b_i into a triple
/// (i, g, j), trivial triples are dropped and the rest split over the
/// basis. Throws NotInKernel if a precondition fails.
FreeWord to_basis_word(const AmalgamInstance& inst, const SyllableWord& w);

using Mat2 = std::array<mpz_class, 4>; // row-major 2x2

Mat2 mat_identity();
Mat2 mat_mul(const Mat2& a, const Mat2& b);
Mat2 mat_x();     // [[0,1],[-1,-2]]
Mat2 mat_y();     // [[2,-1],[1,0]]
Mat2 mat_x_inv();
Mat2 mat_y_inv();

/// Evaluates u under basis symbol k -> x^k y x^-k in SL(2,Z), exactly.
/// Returns the matrix and whether it is the identity. The boolean is
/// cross-checked against stack-based free reduction of u; disagreement
/// throws InternalCheckError.
std::pair<Mat2, bool> f2_encode_eval(const FreeWord& u);

/// Full decision: w = 1 in the parent group. Tests the projection to P,
/// the product of the b's in B, then triviality of the basis word.
/// Throws InvalidSyllableWord when the alternation shape is broken.
bool amalgam_wp(const AmalgamInstance& inst, const SyllableWord& w);

/// Word problem by recursive decomposition: one node delegates to the node
/// group, otherwise the spec is split at `base` (default: the last node)
/// and amalgam_wp decides, with P-side questions answered recursively.
bool wp_via_decomposition(const GraphProductSpec& spec, const GWord& w,
                          std::optional<NodeId> base = std::nullopt);

} // namespace gp
