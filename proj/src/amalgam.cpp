#include "gp/amalgam.hpp"

#include <cstdlib>
#include <map>

namespace gp {

bool AmalgamInstance::wp_P(const GWord& w) const {
  return wp_via_decomposition(dec.P, w);
}

bool AmalgamInstance::member_A(const GWord& w) const {
  std::set<NodeId> aset(dec.A.begin(), dec.A.end());
  return wp_P(concat(w, invert_word(dec.P, project(dec.P, w, aset))));
}

AmalgamInstance make_amalgam(const GraphProductSpec& spec, NodeId base) {
  return AmalgamInstance{decompose(spec, base)};
}

SyllableWord to_syllables(const AmalgamInstance& inst, const GWord& w) {
  const NodeGroup& B = inst.dec.B;
  NodeId base = inst.dec.base;
  SyllableWord out;
  out.g.emplace_back();
  std::optional<Element> pend;
  auto flush = [&] {
    if (!pend) return;
    if (!ng_is_identity(B, *pend)) {
      out.b.push_back(*pend);
      out.g.emplace_back();
    }
    pend.reset();
  };
  for (const auto& l : w.letters) {
    if (l.node == base) {
      pend = pend ? ng_multiply(B, *pend, l.elem) : l.elem;
    } else {
      flush();
      out.g.back().letters.push_back({inst.dec.toP[l.node], l.elem});
    }
  }
  flush();
  return out;
}

FreeWord to_basis_word(const AmalgamInstance& inst, const SyllableWord& w) {
  const NodeGroup& B = inst.dec.B;
  size_t m = w.b.size();
  FreeWord out;
  if (m == 0) {
    if (!inst.wp_P(w.g.empty() ? GWord{} : w.g[0]))
      throw NotInKernel("syllable word does not vanish in the quotient P");
    return out;
  }

  // Prefixes p_i = g_0 ... g_i and their coset indices: nu(i) is the least
  // j with inverse(p_j) p_i in A.
  std::vector<GWord> prefix(m);
  prefix[0] = w.g[0];
  for (size_t i = 1; i < m; ++i) prefix[i] = concat(prefix[i - 1], w.g[i]);
  {
    GWord whole = prefix[m - 1];
    for (size_t i = m; i < w.g.size(); ++i) whole = concat(whole, w.g[i]);
    if (!inst.wp_P(whole))
      throw NotInKernel("syllable word does not vanish in the quotient P");
  }
  std::vector<size_t> nu(m);
  for (size_t i = 0; i < m; ++i) {
    size_t j = 0;
    for (;; ++j) {
      if (inst.member_A(concat(invert_word(inst.dec.P, prefix[j]), prefix[i])))
        break;
      if (j == i)
        throw InternalCheckError("coset index search passed its own prefix");
    }
    nu[i] = j;
  }

  // Partial products h_i = b_1 ... b_i; the whole product must vanish in B.
  std::vector<Element> h(m + 1);
  h[0] = ng_identity(B);
  for (size_t i = 1; i <= m; ++i) h[i] = ng_multiply(B, h[i - 1], w.b[i - 1]);
  if (!ng_is_identity(B, h[m]))
    throw NotInKernel("syllable word does not vanish in the base group");

  // b_i lives in the copy indexed by its conjugating prefix p_{i-1}, so the
  // telescoped triples are (nu(i-1), h_i, nu(i)) for i = 1 .. m-1. A triple
  // (i, g, j) splits over the basis as X_(i,g) X_(j,g)^-1, halves with
  // index 0 dropped.
  std::map<std::pair<size_t, std::string>, int> basisId;
  auto symbol = [&](size_t idx, const Element& g) {
    std::pair<size_t, std::string> key{idx, ng_element_str(B, g)};
    auto it = basisId.find(key);
    if (it == basisId.end()) {
      int id = static_cast<int>(out.basis.size()) + 1;
      it = basisId.emplace(key, id).first;
      out.basis.emplace_back(static_cast<int>(idx), key.second);
    }
    return it->second;
  };
  for (size_t i = 1; i < m; ++i) {
    size_t ci = nu[i - 1], cj = nu[i];
    if (ci == cj || ng_is_identity(B, h[i])) continue;
    if (ci != 0) out.syms.push_back(symbol(ci, h[i]));
    if (cj != 0) out.syms.push_back(-symbol(cj, h[i]));
  }
  return out;
}

Mat2 mat_identity() { return {1, 0, 0, 1}; }

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
          a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 mat_x() { return {0, 1, -1, -2}; }
Mat2 mat_y() { return {2, -1, 1, 0}; }
Mat2 mat_x_inv() { return {-2, -1, 1, 0}; }
Mat2 mat_y_inv() { return {0, 1, -1, 2}; }

std::pair<Mat2, bool> f2_encode_eval(const FreeWord& u) {
  Mat2 acc = mat_identity();
  for (int s : u.syms) {
    long k = std::abs(s);
    Mat2 m = s > 0 ? mat_y() : mat_y_inv();
    for (long i = 0; i < k; ++i) m = mat_mul(mat_x(), m);
    for (long i = 0; i < k; ++i) m = mat_mul(m, mat_x_inv());
    acc = mat_mul(acc, m);
  }
  bool isId = acc == mat_identity();
  if (acc[0] * acc[3] - acc[1] * acc[2] != 1)
    throw InternalCheckError("matrix evaluation left the unimodular group");
  std::vector<int> stack;
  for (int s : u.syms) {
    if (!stack.empty() && stack.back() == -s)
      stack.pop_back();
    else
      stack.push_back(s);
  }
  if (stack.empty() != isId)
    throw InternalCheckError(
        "matrix triviality disagrees with free reduction");
  return {acc, isId};
}

bool amalgam_wp(const AmalgamInstance& inst, const SyllableWord& w) {
  if (w.g.size() != w.b.size() + 1)
    throw InvalidSyllableWord("expected m+1 quotient factors for m base "
                              "elements");
  const NodeGroup& B = inst.dec.B;
  for (const auto& b : w.b) {
    ng_check_element(B, b);
    if (ng_is_identity(B, b))
      throw InvalidSyllableWord("identity base factor in a syllable word");
  }
  GWord whole;
  for (const auto& g : w.g) whole = concat(whole, g);
  if (!inst.wp_P(whole)) return false;
  Element prod = ng_identity(B);
  for (const auto& b : w.b) prod = ng_multiply(B, prod, b);
  if (!ng_is_identity(B, prod)) return false;
  return f2_encode_eval(to_basis_word(inst, w)).second;
}

bool wp_via_decomposition(const GraphProductSpec& spec, const GWord& w,
                          std::optional<NodeId> base) {
  if (spec.nodeCount() == 1) {
    const NodeGroup& g = spec.groups[0];
    Element acc = ng_identity(g);
    for (const auto& l : w.letters) acc = ng_multiply(g, acc, l.elem);
    return ng_is_identity(g, acc);
  }
  NodeId b = base.value_or(spec.nodeCount() - 1);
  if (b < 0 || b >= spec.nodeCount())
    throw UnknownNode("decomposition base out of range");
  AmalgamInstance inst = make_amalgam(spec, b);
  return amalgam_wp(inst, to_syllables(inst, w));
}

} // namespace gp
