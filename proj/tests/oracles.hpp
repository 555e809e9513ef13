#pragma once

// Independent oracles used by the test suites. These deliberately avoid
// the library's evaluation path: matchings are enumerated by brute force,
// diagrams are composed by direct strand-chasing with explicit loop
// counting, and permutations are composed positionally.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "apa/expr.hpp"
#include "apa/permutation.hpp"
#include "apa/tl.hpp"

namespace oracle {

/// All perfect matchings of {1..n} as partner vectors, crossing ones
/// filtered out afterwards.
inline std::vector<std::vector<int>> brute_force_noncrossing(int n) {
  std::vector<std::vector<int>> all;
  std::vector<int> partner(n + 1, 0);
  std::function<void()> rec = [&] {
    int a = 0;
    for (int q = 1; q <= n; ++q)
      if (partner[q] == 0) {
        a = q;
        break;
      }
    if (a == 0) {
      all.push_back(partner);
      return;
    }
    for (int b = a + 1; b <= n; ++b) {
      if (partner[b] != 0) continue;
      partner[a] = b;
      partner[b] = a;
      rec();
      partner[a] = 0;
      partner[b] = 0;
    }
  };
  if (n % 2 == 0) rec();
  std::vector<std::vector<int>> out;
  for (const auto& p : all) {
    bool crossing = false;
    for (int i = 1; i <= n && !crossing; ++i)
      for (int j = i + 1; j < p[i]; ++j)
        if (j < p[i] && i < j && (p[j] < i || p[j] > p[i])) {
          crossing = true;
          break;
        }
    if (!crossing) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// A single diagram with an explicit loop count; the value of a tangle
/// expression on basis diagrams, computed by strand chasing rather than
/// linear algebra.
struct Diagram {
  std::vector<int> partner;  // 1-based
  long loops = 0;
  int points() const { return static_cast<int>(partner.size()) - 1; }
};

inline Diagram apply_generator(const apa::Generator& g, const std::vector<Diagram>& in) {
  using GK = apa::Generator::Kind;
  switch (g.kind) {
    case GK::Unit:
      return {std::vector<int>(1, 0), 0};
    case GK::Id:
      return in.at(0);
    case GK::Cup: {
      const Diagram& x = in.at(0);
      Diagram y{std::vector<int>(g.n + 3, 0), x.loops};
      auto rel = [&](int q) { return q <= g.i ? q : q + 2; };
      for (int q = 1; q <= g.n; ++q) y.partner[rel(q)] = rel(x.partner[q]);
      y.partner[g.i + 1] = g.i + 2;
      y.partner[g.i + 2] = g.i + 1;
      return y;
    }
    case GK::Cap: {
      const Diagram& x = in.at(0);
      Diagram y{std::vector<int>(g.n + 1, 0), x.loops};
      auto rel = [&](int q) { return q <= g.i ? q : q - 2; };
      if (x.partner[g.i + 1] == g.i + 2) {
        y.loops += 1;
        for (int q = 1; q <= g.n + 2; ++q) {
          if (q == g.i + 1 || q == g.i + 2) continue;
          y.partner[rel(q)] = rel(x.partner[q]);
        }
      } else {
        int u = x.partner[g.i + 1], v = x.partner[g.i + 2];
        for (int q = 1; q <= g.n + 2; ++q) {
          if (q == g.i + 1 || q == g.i + 2) continue;
          int pq = x.partner[q];
          if (q == u) pq = v;
          if (q == v) pq = u;
          y.partner[rel(q)] = rel(pq);
        }
      }
      return y;
    }
    case GK::Pin: {
      const Diagram& x = in.at(0);
      const Diagram& z = in.at(1);
      Diagram y{std::vector<int>(g.n + g.j + 1, 0), x.loops + z.loops};
      auto rel = [&](int q) { return q <= g.i ? q : q + g.j; };
      for (int q = 1; q <= g.n; ++q) y.partner[rel(q)] = rel(x.partner[q]);
      for (int q = 1; q <= g.j; ++q) y.partner[g.i + q] = g.i + z.partner[q];
      return y;
    }
  }
  throw apa::Error("unreachable");
}

/// Evaluates an expression on one basis diagram per input slot. Braids act
/// by their permutation only (symmetric backend).
inline Diagram eval_diagram(const apa::ExprPtr& e, const std::vector<Diagram>& inputs) {
  using K = apa::TangleExpr::Kind;
  switch (e->kind()) {
    case K::Gen:
      return apply_generator(e->generator(), inputs);
    case K::Comp: {
      size_t before = e->slot() - 1;
      size_t inner_arity = e->inner()->type().inputs.size();
      std::vector<Diagram> inner_in(inputs.begin() + before,
                                    inputs.begin() + before + inner_arity);
      Diagram mid = eval_diagram(e->inner(), inner_in);
      std::vector<Diagram> outer_in(inputs.begin(), inputs.begin() + before);
      outer_in.push_back(mid);
      outer_in.insert(outer_in.end(), inputs.begin() + before + inner_arity, inputs.end());
      return eval_diagram(e->outer(), outer_in);
    }
    case K::Act: {
      apa::Permutation pi = e->braid().permutation();
      std::vector<Diagram> permuted(inputs.size());
      for (size_t a = 1; a <= inputs.size(); ++a)
        permuted[pi(static_cast<int>(a)) - 1] = inputs[a - 1];
      return eval_diagram(e->body(), permuted);
    }
  }
  throw apa::Error("unreachable");
}

/// Expected permutation of the operadic braid composite: strand slot of
/// the outer permutation is replaced by a block carrying the inner one.
inline apa::Permutation block_composite(const apa::Permutation& outer, int slot,
                                        const apa::Permutation& inner) {
  int r = outer.degree(), s = inner.degree();
  auto expand_bottom = [&](int strand) {  // start of strand's block at the bottom
    return strand < slot ? strand : (strand == slot ? slot : strand + s - 1);
  };
  // Top block layout is induced by where the strands land.
  std::vector<int> top_start(r + 1);
  {
    apa::Permutation inv = outer.inverse();
    int pos = 1;
    for (int p = 1; p <= r; ++p) {
      int strand = inv(p);
      top_start[strand] = pos;
      pos += strand == slot ? s : 1;
    }
  }
  std::vector<int> images(r + s - 1);
  for (int strand = 1; strand <= r; ++strand) {
    if (strand != slot) {
      images[expand_bottom(strand) - 1] = top_start[strand];
    } else {
      for (int q = 1; q <= s; ++q) images[slot + q - 2] = top_start[slot] + inner(q) - 1;
    }
  }
  return apa::Permutation(std::move(images));
}

/// Free reduction with randomized cancellation order; free reduction is
/// confluent, so the result must match the deterministic one.
inline std::vector<int> randomized_reduce(std::vector<int> word, std::mt19937_64& rng) {
  for (;;) {
    std::vector<size_t> sites;
    for (size_t i = 0; i + 1 < word.size(); ++i)
      if (word[i] == -word[i + 1]) sites.push_back(i);
    if (sites.empty()) return word;
    size_t pick = sites[std::uniform_int_distribution<size_t>(0, sites.size() - 1)(rng)];
    word.erase(word.begin() + pick, word.begin() + pick + 2);
  }
}

}  // namespace oracle
