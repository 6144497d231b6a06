#include "gp/node_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace gp {

namespace {

const mpz_class& as_z(const Element& e) { return std::get<mpz_class>(e); }
long as_l(const Element& e) { return std::get<long>(e); }
const std::vector<int>& as_fw(const Element& e) {
  return std::get<std::vector<int>>(e);
}

std::vector<int> free_concat(const std::vector<int>& a,
                             const std::vector<int>& b) {
  std::vector<int> out = a;
  for (int s : b) {
    if (!out.empty() && out.back() == -s)
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

bool is_int_literal(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(i), s.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

long parse_long(const std::string& s, const std::string& what) {
  if (!is_int_literal(s)) throw ParseError(what + ": bad integer '" + s + "'");
  errno = 0;
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (errno != 0 || *end != '\0')
    throw ParseError(what + ": integer out of range '" + s + "'");
  return v;
}

// Shortlex table over a finite carrier by breadth-first search from the
// identity, multiplying generators on the right in generator order. FIFO
// processing makes the first discovery the lexicographically least word of
// minimal length.
std::vector<std::vector<int>> bfs_shortlex(
    long size, long identity, const std::vector<long>& genElems,
    const std::function<long(long, long)>& compose, const std::string& where) {
  std::vector<int> parentGen(size, -1);
  std::vector<long> parentElem(size, -1);
  std::vector<char> seen(size, 0);
  std::vector<long> queue;
  seen[identity] = 1;
  queue.push_back(identity);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    long e = queue[qi];
    for (size_t gi = 0; gi < genElems.size(); ++gi) {
      long e2 = compose(e, genElems[gi]);
      if (!seen[e2]) {
        seen[e2] = 1;
        parentGen[e2] = static_cast<int>(gi);
        parentElem[e2] = e;
        queue.push_back(e2);
      }
    }
  }
  if (queue.size() != static_cast<size_t>(size))
    throw InvalidGenerator(where + ": generators do not generate the group");
  std::vector<std::vector<int>> words(size);
  for (long e = 0; e < size; ++e) {
    std::vector<int> w;
    for (long x = e; x != identity; x = parentElem[x]) w.push_back(parentGen[x]);
    std::reverse(w.begin(), w.end());
    words[e] = std::move(w);
  }
  return words;
}

void check_generator_set(const NodeGroup& g, const std::string& where) {
  if (g.gens.empty())
    throw InvalidGenerator(where + ": node has no generators");
  for (const auto& gen : g.gens) {
    ng_check_element(g, gen.elem);
    if (ng_is_identity(g, gen.elem))
      throw InvalidGenerator(where + ": generator '" + gen.symbol +
                             "' is the identity");
  }
  // Closure under inversion, as a set of elements.
  for (const auto& gen : g.gens) {
    Element inv = ng_invert(g, gen.elem);
    bool found = false;
    for (const auto& other : g.gens)
      if (ng_equal(g, other.elem, inv)) found = true;
    if (!found)
      throw InvalidGenerator(where + ": no generator for the inverse of '" +
                             gen.symbol + "'");
  }
}

} // namespace

NodeGroup make_integers() {
  NodeGroup g;
  g.kind = GroupKind::Integers;
  return g;
}

NodeGroup make_cyclic(long modulus) {
  NodeGroup g;
  g.kind = GroupKind::Cyclic;
  g.modulus = modulus;
  return g;
}

NodeGroup make_finite(long order, std::vector<long> table) {
  NodeGroup g;
  g.kind = GroupKind::FiniteCayley;
  g.order = order;
  g.table = std::move(table);
  return g;
}

NodeGroup make_free(long rank) {
  NodeGroup g;
  g.kind = GroupKind::FreeGroup;
  g.rank = rank;
  return g;
}

Element ng_identity(const NodeGroup& g) {
  switch (g.kind) {
    case GroupKind::Integers: return mpz_class(0);
    case GroupKind::Cyclic: return 0L;
    case GroupKind::FiniteCayley: return g.identityIndex;
    case GroupKind::FreeGroup: return std::vector<int>{};
  }
  throw Error("unreachable");
}

bool ng_is_identity(const NodeGroup& g, const Element& x) {
  return ng_equal(g, x, ng_identity(g));
}

bool ng_equal(const NodeGroup&, const Element& x, const Element& y) {
  return x == y;
}

void ng_check_element(const NodeGroup& g, const Element& x) {
  switch (g.kind) {
    case GroupKind::Integers:
      if (!std::holds_alternative<mpz_class>(x))
        throw InvalidElement("integer element expected");
      return;
    case GroupKind::Cyclic:
      if (!std::holds_alternative<long>(x) || as_l(x) < 0 ||
          as_l(x) >= g.modulus)
        throw InvalidElement("cyclic residue out of range");
      return;
    case GroupKind::FiniteCayley:
      if (!std::holds_alternative<long>(x) || as_l(x) < 0 || as_l(x) >= g.order)
        throw InvalidElement("element index out of range");
      return;
    case GroupKind::FreeGroup: {
      if (!std::holds_alternative<std::vector<int>>(x))
        throw InvalidElement("free-group word expected");
      const auto& w = as_fw(x);
      for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0 || std::abs(w[i]) > g.rank)
          throw InvalidElement("free-group generator index out of range");
        if (i + 1 < w.size() && w[i] == -w[i + 1])
          throw InvalidElement("free-group word not freely reduced");
      }
      return;
    }
  }
}

Element ng_multiply(const NodeGroup& g, const Element& x, const Element& y) {
  ng_check_element(g, x);
  ng_check_element(g, y);
  switch (g.kind) {
    case GroupKind::Integers: return mpz_class(as_z(x) + as_z(y));
    case GroupKind::Cyclic: return (as_l(x) + as_l(y)) % g.modulus;
    case GroupKind::FiniteCayley: return g.table[as_l(x) * g.order + as_l(y)];
    case GroupKind::FreeGroup: return free_concat(as_fw(x), as_fw(y));
  }
  throw Error("unreachable");
}

Element ng_invert(const NodeGroup& g, const Element& x) {
  ng_check_element(g, x);
  switch (g.kind) {
    case GroupKind::Integers: return mpz_class(-as_z(x));
    case GroupKind::Cyclic: return (g.modulus - as_l(x)) % g.modulus;
    case GroupKind::FiniteCayley: return g.inverseMap[as_l(x)];
    case GroupKind::FreeGroup: {
      std::vector<int> w = as_fw(x);
      std::reverse(w.begin(), w.end());
      for (int& s : w) s = -s;
      return w;
    }
  }
  throw Error("unreachable");
}

std::vector<std::string> ng_shortlex(const NodeGroup& g, const Element& x) {
  ng_check_element(g, x);
  if (ng_is_identity(g, x))
    throw IdentityElement("shortlex of the identity requested");
  std::vector<std::string> out;
  switch (g.kind) {
    case GroupKind::Integers: {
      mpz_class v = as_z(x);
      bool neg = v < 0;
      mpz_class n = abs(v);
      if (!n.fits_ulong_p())
        throw Error("shortlex word too long to materialize");
      Element want = neg ? Element(mpz_class(-1)) : Element(mpz_class(1));
      const Generator* sym = nullptr;
      for (const auto& gen : g.gens)
        if (ng_equal(g, gen.elem, want)) { sym = &gen; break; }
      if (!sym) throw InvalidGenerator("no unit generator bound");
      out.assign(n.get_ui(), sym->symbol);
      return out;
    }
    case GroupKind::Cyclic:
    case GroupKind::FiniteCayley: {
      for (int gi : g.shortlexTable[as_l(x)]) out.push_back(g.gens[gi].symbol);
      return out;
    }
    case GroupKind::FreeGroup: {
      for (int s : as_fw(x)) {
        const Generator* sym = nullptr;
        for (const auto& gen : g.gens) {
          const auto& w = as_fw(gen.elem);
          if (w.size() == 1 && w[0] == s) { sym = &gen; break; }
        }
        if (!sym) throw InvalidGenerator("missing standard free generator");
        out.push_back(sym->symbol);
      }
      return out;
    }
  }
  throw Error("unreachable");
}

bool ng_conjugate_test(const NodeGroup& g, const Element& x, const Element& y) {
  ng_check_element(g, x);
  ng_check_element(g, y);
  switch (g.kind) {
    case GroupKind::Integers:
    case GroupKind::Cyclic:
      return ng_equal(g, x, y); // abelian
    case GroupKind::FiniteCayley: {
      for (long z = 0; z < g.order; ++z) {
        long zx = g.table[g.inverseMap[z] * g.order + as_l(x)];
        if (g.table[zx * g.order + z] == as_l(y)) return true;
      }
      return false;
    }
    case GroupKind::FreeGroup: {
      auto cyc = [](std::vector<int> w) {
        size_t n = w.size();
        size_t cut = 0;
        while (n - 2 * cut >= 2 && w[cut] == -w[n - 1 - cut]) ++cut;
        return std::vector<int>(w.begin() + static_cast<long>(cut),
                                w.end() - static_cast<long>(cut));
      };
      std::vector<int> a = cyc(as_fw(x)), b = cyc(as_fw(y));
      if (a.size() != b.size()) return false;
      if (a.empty()) return true;
      for (size_t r = 0; r < a.size(); ++r) {
        bool ok = true;
        for (size_t i = 0; i < a.size() && ok; ++i)
          ok = a[(r + i) % a.size()] == b[i];
        if (ok) return true;
      }
      return false;
    }
  }
  throw Error("unreachable");
}

void ng_validate(NodeGroup& g, const std::string& where) {
  switch (g.kind) {
    case GroupKind::Integers: {
      check_generator_set(g, where);
      // Shortlex needs the two units and nothing else works as a standard
      // generating set here.
      if (g.gens.size() != 2)
        throw InvalidGenerator(where + ": expected the two unit generators");
      bool plus = false, minus = false;
      for (const auto& gen : g.gens) {
        if (as_z(gen.elem) == 1) plus = true;
        if (as_z(gen.elem) == -1) minus = true;
      }
      if (!plus || !minus)
        throw InvalidGenerator(where + ": generators must be 1 and -1");
      return;
    }
    case GroupKind::Cyclic: {
      if (g.modulus < 2)
        throw InvalidGroupTable(where + ": cyclic modulus must be at least 2");
      check_generator_set(g, where);
      std::vector<long> genElems;
      for (const auto& gen : g.gens) genElems.push_back(as_l(gen.elem));
      g.shortlexTable = bfs_shortlex(
          g.modulus, 0, genElems,
          [&](long a, long b) { return (a + b) % g.modulus; }, where);
      return;
    }
    case GroupKind::FiniteCayley: {
      long k = g.order;
      if (k < 2)
        throw InvalidGroupTable(where + ": group order must be at least 2");
      if (static_cast<long>(g.table.size()) != k * k)
        throw InvalidGroupTable(where + ": table must list order*order entries");
      for (long v : g.table)
        if (v < 0 || v >= k)
          throw InvalidGroupTable(where + ": table entry out of range");
      // Identity: a two-sided neutral element.
      g.identityIndex = -1;
      for (long e = 0; e < k && g.identityIndex < 0; ++e) {
        bool ok = true;
        for (long x = 0; x < k && ok; ++x)
          ok = g.table[e * k + x] == x && g.table[x * k + e] == x;
        if (ok) g.identityIndex = e;
      }
      if (g.identityIndex < 0)
        throw InvalidGroupTable(where + ": table has no identity element");
      for (long a = 0; a < k; ++a)
        for (long b = 0; b < k; ++b)
          for (long c = 0; c < k; ++c)
            if (g.table[g.table[a * k + b] * k + c] !=
                g.table[a * k + g.table[b * k + c]])
              throw InvalidGroupTable(where + ": table is not associative");
      g.inverseMap.assign(k, -1);
      for (long x = 0; x < k; ++x) {
        for (long y = 0; y < k; ++y)
          if (g.table[x * k + y] == g.identityIndex &&
              g.table[y * k + x] == g.identityIndex)
            g.inverseMap[x] = y;
        if (g.inverseMap[x] < 0)
          throw InvalidGroupTable(where + ": element without inverse");
      }
      check_generator_set(g, where);
      std::vector<long> genElems;
      for (const auto& gen : g.gens) genElems.push_back(as_l(gen.elem));
      g.shortlexTable = bfs_shortlex(
          k, g.identityIndex, genElems,
          [&](long a, long b) { return g.table[a * k + b]; }, where);
      return;
    }
    case GroupKind::FreeGroup: {
      if (g.rank < 1)
        throw InvalidGroupTable(where + ": free rank must be at least 1");
      check_generator_set(g, where);
      // Standard generating set: one symbol per signed index.
      std::vector<char> have(2 * g.rank + 1, 0);
      for (const auto& gen : g.gens) {
        const auto& w = as_fw(gen.elem);
        if (w.size() != 1)
          throw InvalidGenerator(where +
                                 ": free generators must be single letters");
        long slot = w[0] > 0 ? w[0] : g.rank - w[0];
        if (have[slot])
          throw InvalidGenerator(where + ": duplicate free generator");
        have[slot] = 1;
      }
      for (long i = 1; i <= 2 * g.rank; ++i)
        if (!have[i])
          throw InvalidGenerator(where + ": free generators must cover every "
                                         "signed index");
      return;
    }
  }
}

Element ng_parse_element(const NodeGroup& g, const std::string& literal) {
  switch (g.kind) {
    case GroupKind::Integers: {
      if (!is_int_literal(literal))
        throw ParseError("bad integer literal '" + literal + "'");
      return mpz_class(literal);
    }
    case GroupKind::Cyclic: {
      long v = parse_long(literal, "cyclic element");
      long m = g.modulus;
      return ((v % m) + m) % m;
    }
    case GroupKind::FiniteCayley: {
      long v = parse_long(literal, "element index");
      if (v < 0 || v >= g.order)
        throw ParseError("element index out of range '" + literal + "'");
      return v;
    }
    case GroupKind::FreeGroup: {
      std::vector<int> w;
      std::stringstream ss(literal);
      std::string part;
      while (std::getline(ss, part, ',')) {
        long v = parse_long(part, "free-group letter");
        if (v == 0 || std::abs(v) > g.rank)
          throw ParseError("free-group letter out of range '" + part + "'");
        if (!w.empty() && w.back() == -v)
          w.pop_back();
        else
          w.push_back(static_cast<int>(v));
      }
      return w;
    }
  }
  throw Error("unreachable");
}

std::string ng_element_str(const NodeGroup& g, const Element& x) {
  switch (g.kind) {
    case GroupKind::Integers: return as_z(x).get_str();
    case GroupKind::Cyclic:
    case GroupKind::FiniteCayley: return std::to_string(as_l(x));
    case GroupKind::FreeGroup: {
      std::string out;
      const auto& w = as_fw(x);
      for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(w[i]);
      }
      return out;
    }
  }
  throw Error("unreachable");
}

} // namespace gp
