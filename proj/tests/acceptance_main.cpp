// Acceptance checks: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gp/amalgam.hpp"
#include "gp/conjugacy.hpp"
#include "gp/oracles.hpp"
#include "util.hpp"

using namespace gp;
using gptest::load_fixture;
using gptest::random_word;

namespace {

const char* kCorpus[4] = {"fig2.gp", "racg.gp", "free_prod.gp",
                          "direct_prod.gp"};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<GWord> seeded_words(const GraphProductSpec& spec, uint64_t seed,
                                int count, int maxLen) {
  std::mt19937_64 rng(seed);
  std::vector<GWord> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(random_word(spec, rng, maxLen));
  return out;
}

std::string join(const std::vector<std::string>& syms) {
  std::string s;
  for (size_t i = 0; i < syms.size(); ++i) {
    if (i) s += ' ';
    s += syms[i];
  }
  return s;
}

// Fig. 2 word: normal form, arc counts of the dependence graph.
Outcome criterion1() {
  GraphProductSpec spec = load_fixture("fig2.gp");
  GWord w = parse_word(spec, "a b a- c a b-");
  GWord nf = linearize(normal_form(spec, w));
  if (!trace_equal(spec, nf, parse_word(spec, "b c b- a")))
    return {false, "normal form is not the expected trace"};
  DependenceGraph g = build_dependence_graph(spec, w);
  if (g.arcs.size() != 9 || g.hasse.size() != 5)
    return {false, "arc counts " + std::to_string(g.arcs.size()) + "/" +
                       std::to_string(g.hasse.size())};
  auto arrows = [](const std::string& s) {
    size_t n = 0, pos = 0;
    while ((pos = s.find(" -> ", pos)) != std::string::npos) {
      ++n;
      pos += 4;
    }
    return n;
  };
  if (arrows(emit_dot(spec, g, true)) != 9 ||
      arrows(emit_dot(spec, g, false)) != 5)
    return {false, "dot output arc counts are off"};
  return {true, "normal form and 9/5 arcs reproduced"};
}

// Normal forms against the commutation-class oracle on the whole corpus.
Outcome criterion2() {
  int checked = 0;
  for (int s = 0; s < 4; ++s) {
    GraphProductSpec spec = load_fixture(kCorpus[s]);
    auto words = seeded_words(spec, 20260 + s, 1000, 12);
    for (size_t i = 0; i < words.size(); ++i) {
      GWord fast = linearize(normal_form(spec, words[i]));
      GWord slow = naive_normal_form(spec, words[i], 7000 + i);
      if (!trace_equal(spec, fast, slow))
        return {false, std::string("normal form mismatch on ") + kCorpus[s]};
      if (word_problem(spec, words[i]) != slow.empty())
        return {false, std::string("word problem mismatch on ") + kCorpus[s]};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " words agree with the oracle"};
}

// Randomized reduction orders land on one trace.
Outcome criterion3() {
  GraphProductSpec spec = load_fixture("fig2.gp");
  auto words = seeded_words(spec, 333, 500, 12);
  for (size_t i = 0; i < words.size(); ++i) {
    DependenceGraph g = build_dependence_graph(spec, words[i]);
    GWord a = linearize(reduce_graph(spec, g, 2 * i));
    GWord b = linearize(reduce_graph(spec, g, 2 * i + 1));
    if (!trace_equal(spec, a, b))
      return {false, "two reduction orders disagree at word " +
                         std::to_string(i)};
    if (!trace_equal(spec, a, reduce_word(spec, words[i])))
      return {false, "randomized and deterministic reduction disagree"};
  }
  return {true, "500 words, seeded reduction pairs confluent"};
}

// Per-node rounds give the reduced trace, and a second pass is a no-op.
Outcome criterion4() {
  int checked = 0;
  for (int s = 0; s < 4; ++s) {
    GraphProductSpec spec = load_fixture(kCorpus[s]);
    auto words = seeded_words(spec, 20260 + s, 1000, 12);
    for (const GWord& w : words) {
      GWord byRounds = linearize(normal_form(spec, w));
      GWord byMerges = linearize(reduce_graph(spec,
                                              build_dependence_graph(spec, w)));
      if (!trace_equal(spec, byRounds, byMerges))
        return {false, std::string("round result differs on ") + kCorpus[s]};
      GWord again = alpha_round(spec, byRounds);
      if (length_vector(spec, again) != length_vector(spec, byRounds))
        return {false, "a second round still changed a letter count"};
      if (!trace_equal(spec, again, byRounds))
        return {false, "a second round changed the trace"};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " words, second pass inert"};
}

// Shortlex equals the least enumerated geodesic on short elements.
Outcome criterion5() {
  GraphProductSpec spec = load_fixture("racg.gp");
  auto words = seeded_words(spec, 20261, 1000, 12);
  std::map<std::string, GWord> elements;
  for (const GWord& w : words) {
    auto syms = shortlex_nf(spec, w);
    if (syms.size() <= 6) elements.emplace(join(syms), w);
  }
  OracleBudget budget;
  for (const auto& [key, w] : elements) {
    auto geos = enumerate_geodesics(spec, w, budget);
    if (geos.empty()) return {false, "no geodesic found for " + key};
    if (join(geos.front()) != key)
      return {false, "shortlex '" + key + "' vs geodesic '" +
                         join(geos.front()) + "'"};
  }
  return {true, std::to_string(elements.size()) +
                    " distinct short elements match their least geodesic"};
}

// Conjugacy against conjugator search, failures only where it is
// authoritative.
Outcome criterion6() {
  GraphProductSpec spec = load_fixture("racg.gp");
  std::vector<GWord> all;
  std::vector<std::string> stack{""};
  all.push_back(parse_word(spec, ""));
  std::vector<std::string> syms = {"a", "b", "c"};
  std::vector<int> idx;
  for (int len = 1; len <= 5; ++len) {
    idx.assign(len, 0);
    for (;;) {
      std::string text;
      for (int k = 0; k < len; ++k) {
        if (k) text += ' ';
        text += syms[idx[k]];
      }
      all.push_back(parse_word(spec, text));
      int d = len - 1;
      while (d >= 0 && ++idx[d] == 3) idx[d--] = 0;
      if (d < 0) break;
    }
  }
  if (all.size() != 364)
    return {false, "expected 364 words, got " + std::to_string(all.size())};
  std::mt19937_64 rng(606);
  std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
  OracleBudget bound5, bound8;
  bound5.maxConjugatorLength = 5;
  bound8.maxConjugatorLength = 8;
  int unconfirmed = 0, agreements = 0;
  for (int i = 0; i < 2000; ++i) {
    const GWord& u = all[pick(rng)];
    const GWord& v = all[pick(rng)];
    bool fast = conjugate(spec, u, v);
    bool brute = brute_conjugate(spec, u, v, bound5);
    if (brute && !fast)
      return {false, "missed a conjugator for pair " + std::to_string(i)};
    if (fast && !brute) {
      if (brute_conjugate(spec, u, v, bound8))
        ++agreements;
      else
        ++unconfirmed;
      continue;
    }
    ++agreements;
  }
  return {true, std::to_string(agreements) + " pairs agree, " +
                    std::to_string(unconfirmed) +
                    " positives beyond the search bound"};
}

// Transposition decision versus breadth-first closure.
Outcome criterion7() {
  GraphProductSpec spec = load_fixture("racg.gp");
  std::mt19937_64 rng(777);
  std::map<std::vector<int>, std::vector<GWord>> buckets;
  for (int i = 0; i < 500; ++i) {
    GWord w = cyclically_reduce(spec, random_word(spec, rng, 8));
    buckets[length_vector(spec, w)].push_back(w);
  }
  OracleBudget budget;
  int pairs = 0, positives = 0;
  auto check = [&](const GWord& u, const GWord& v) -> const char* {
    bool fast = transposition_equiv(spec, u, v);
    bool slow = transposition_bfs(spec, u, v, budget);
    if (fast != slow) return "transposition decision disagrees with the search";
    if (fast != transposition_equiv(spec, v, u))
      return "transposition decision is not symmetric";
    ++pairs;
    positives += fast;
    return nullptr;
  };
  const GWord* prevBucket = nullptr;
  for (const auto& [lv, ws] : buckets) {
    for (size_t i = 1; i < ws.size(); ++i) {
      if (const char* err = check(ws[i - 1], ws[i])) return {false, err};
      if (i > 1)
        if (const char* err = check(ws[0], ws[i])) return {false, err};
    }
    if (!transposition_equiv(spec, ws[0], ws[0]))
      return {false, "a word is not transposition-equivalent to itself"};
    // Unequal letter counts across buckets must come out negative in both.
    if (prevBucket)
      if (const char* err = check(*prevBucket, ws[0])) return {false, err};
    prevBucket = &ws[0];
  }
  if (positives == 0 || positives == pairs)
    return {false, "sample exercised only one outcome"};
  return {true, std::to_string(pairs) + " bucket pairs agree, " +
                    std::to_string(positives) + " positive"};
}

// Cyclic reduction: output shape, conjugacy, doubling arithmetic.
Outcome criterion8() {
  GraphProductSpec spec = load_fixture("racg.gp");
  auto words = seeded_words(spec, 888, 1000, 8);
  OracleBudget bound5;
  bound5.maxConjugatorLength = 5;
  int degenerate = 0;
  for (const GWord& u : words) {
    GWord core = cyclically_reduce(spec, u);
    if (!is_cyclically_reduced(spec, core))
      return {false, "output failed the cyclic reducedness check"};
    if (!brute_conjugate(spec, u, core, bound5))
      return {false, "no short conjugator back to the input"};
    GWord r = reduce_word(spec, u);
    GWord rr = reduce_word(spec, concat(r, r));
    std::vector<int> n = length_vector(spec, r), k = length_vector(spec, rr);
    CyclicForm cf = cyclic_form(spec, u);
    bool degen = false;
    for (int a = 0; a < spec.nodeCount(); ++a) {
      int eps = k[a] % 2;
      int plen = (2 * n[a] - k[a] - eps) / 2;
      int mlen = n[a] - 2 * plen - 2 * eps;
      if (plen < 0 || mlen < 0) degen = true;
    }
    for (int a = 0; a < spec.nodeCount(); ++a) {
      int epsForm = alpha_length(cf.r, a);
      if (epsForm != alpha_length(cf.s, a) || epsForm > 1)
        return {false, "boundary pair shape violated"};
      if (!degen && 2 * n[a] - k[a] != 2 * alpha_length(cf.p, a) + epsForm)
        return {false, "doubling arithmetic violated at node " +
                           spec.nodeNames[a]};
    }
    degenerate += degen;
  }
  return {true, "1000 words reduced, conjugacy and arithmetic verified (" +
                    std::to_string(degenerate) + " via direct construction)"};
}

// Decomposition word problem, with the matrix encoding cross-checked.
Outcome criterion9() {
  Mat2 comm = mat_mul(mat_mul(mat_x(), mat_y()),
                      mat_mul(mat_x_inv(), mat_y_inv()));
  bool identity = comm[0] == 1 && comm[1] == 0 && comm[2] == 0 && comm[3] == 1;
  if (identity || comm[0] * comm[3] - comm[1] * comm[2] != 1)
    return {false, "encoding matrices do not generate freely"};
  int checked = 0;
  try {
    for (int s = 0; s < 4; ++s) {
      GraphProductSpec spec = load_fixture(kCorpus[s]);
      auto words = seeded_words(spec, 9900 + s, 500, 10);
      for (const GWord& w : words) {
        if (wp_via_decomposition(spec, w) != word_problem(spec, w))
          return {false, std::string("decision mismatch on ") + kCorpus[s]};
        ++checked;
      }
    }
  } catch (const InternalCheckError& e) {
    return {false, std::string("cross-check fired: ") + e.what()};
  }
  return {true, std::to_string(checked) + " words agree across both routes"};
}

// Node-group layer: axioms, shortlex round-trips, conjugacy relations.
Outcome criterion10() {
  GraphProductSpec s3spec = load_fixture("s3.gp");
  NodeGroup s3 = s3spec.groups[0];

  NodeGroup ints = make_integers();
  ints.gens.push_back({"a", Element(mpz_class(1))});
  ints.gens.push_back({"a-", Element(mpz_class(-1))});
  ng_validate(ints, "integers");

  NodeGroup cyc = make_cyclic(5);
  cyc.gens.push_back({"t", Element(long{1})});
  cyc.gens.push_back({"t-", Element(long{4})});
  ng_validate(cyc, "cyclic");

  NodeGroup fr = make_free(2);
  fr.gens.push_back({"p", Element(std::vector<int>{1})});
  fr.gens.push_back({"p-", Element(std::vector<int>{-1})});
  fr.gens.push_back({"q", Element(std::vector<int>{2})});
  fr.gens.push_back({"q-", Element(std::vector<int>{-2})});
  ng_validate(fr, "free");

  struct Case {
    const NodeGroup* g;
    std::vector<Element> sample;
    const char* name;
  };
  std::vector<Case> cases = {
      {&ints,
       {Element(mpz_class(0)), Element(mpz_class(3)), Element(mpz_class(-2))},
       "integers"},
      {&cyc, {Element(long{0}), Element(long{1}), Element(long{3})}, "cyclic"},
      {&s3,
       {Element(long{0}), Element(long{1}), Element(long{4}),
        Element(long{5})},
       "table"},
      {&fr,
       {Element(std::vector<int>{}), Element(std::vector<int>{1, 2}),
        Element(std::vector<int>{-2, 1})},
       "free"},
  };
  for (const Case& c : cases) {
    const NodeGroup& g = *c.g;
    for (const Element& x : c.sample) {
      if (!ng_equal(g, ng_multiply(g, x, ng_identity(g)), x) ||
          !ng_is_identity(g, ng_multiply(g, x, ng_invert(g, x))))
        return {false, std::string("axiom failure in ") + c.name};
      for (const Element& y : c.sample)
        for (const Element& z : c.sample)
          if (!ng_equal(g, ng_multiply(g, ng_multiply(g, x, y), z),
                        ng_multiply(g, x, ng_multiply(g, y, z))))
            return {false, std::string("associativity failure in ") + c.name};
      // Shortlex words evaluate back to the element.
      if (!ng_is_identity(g, x)) {
        Element acc = ng_identity(g);
        for (const std::string& sym : ng_shortlex(g, x)) {
          bool found = false;
          for (const auto& gen : g.gens)
            if (gen.symbol == sym) {
              acc = ng_multiply(g, acc, gen.elem);
              found = true;
              break;
            }
          if (!found)
            return {false, std::string("unknown shortlex symbol in ") + c.name};
        }
        if (!ng_equal(g, acc, x))
          return {false, std::string("shortlex round-trip failure in ") +
                             c.name};
      }
      // Conjugacy is reflexive and symmetric on the sample.
      for (const Element& y : c.sample) {
        if (!ng_conjugate_test(g, x, x))
          return {false, std::string("conjugacy not reflexive in ") + c.name};
        if (ng_conjugate_test(g, x, y) != ng_conjugate_test(g, y, x))
          return {false, std::string("conjugacy not symmetric in ") + c.name};
      }
    }
  }
  // Class structure of the table group: transpositions, 3-cycles, identity.
  if (!ng_conjugate_test(s3, Element(long{1}), Element(long{3})) ||
      !ng_conjugate_test(s3, Element(long{4}), Element(long{5})) ||
      ng_conjugate_test(s3, Element(long{1}), Element(long{4})) ||
      ng_conjugate_test(s3, Element(long{0}), Element(long{1})))
    return {false, "table group conjugacy classes are wrong"};
  // Free group: cyclic permutations conjugate, inverse letters not.
  if (!ng_conjugate_test(fr, Element(std::vector<int>{1, 2}),
                         Element(std::vector<int>{2, 1})) ||
      ng_conjugate_test(fr, Element(std::vector<int>{1}),
                        Element(std::vector<int>{-1})))
    return {false, "free group conjugacy is wrong"};
  return {true, "axioms, shortlex round-trips and conjugacy hold on all four "
                "kinds"};
}

} // namespace

int main() {
  struct Entry {
    double budget; // seconds; 0 = unbounded
    std::function<Outcome()> fn;
  };
  std::vector<Entry> entries = {
      {1.0, criterion1},   {60.0, criterion2}, {10.0, criterion3},
      {0.0, criterion4},   {120.0, criterion5}, {300.0, criterion6},
      {60.0, criterion7},  {0.0, criterion8},  {60.0, criterion9},
      {0.0, criterion10},
  };
  bool all = true;
  for (size_t i = 0; i < entries.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = entries[i].fn();
    } catch (const std::exception& e) {
      o = {false, std::string("unexpected exception: ") + e.what()};
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    bool onTime = entries[i].budget == 0.0 || secs < entries[i].budget;
    bool pass = o.pass && onTime;
    all = all && pass;
    std::printf("criterion %zu: %s (%s%s%.1fs)\n", i + 1,
                pass ? "PASS" : "FAIL", o.detail.c_str(),
                o.detail.empty() ? "" : ", ", secs);
    if (!onTime && o.pass) std::printf("  over the time budget\n");
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
