#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "apa/expr.hpp"
#include "apa/tl.hpp"

namespace apa {

/// Deterministic generator of random well-typed expressions, used by the
/// property suites. Box sizes stay <= max_arity and the TL domain
/// dimension of every produced expression stays small enough to evaluate.
class RandomExprGen {
 public:
  explicit RandomExprGen(std::uint64_t seed, int max_arity = 6, long long max_dom_dim = 4096)
      : rng_(seed), max_arity_(max_arity), max_dom_dim_(max_dom_dim) {}

  int random_size() { return pick_size(); }

  /// Random expression with the given output box size.
  ExprPtr expr_with_output(int out, int size_budget) {
    ExprPtr e = build(out, size_budget);
    int b = size_budget;
    while (TLMap::tuple_dim(e->type().inputs) > max_dom_dim_) {
      b = std::max(1, b / 2);
      e = build(out, b);
    }
    return e;
  }

  ExprPtr expr(int size_budget) { return expr_with_output(pick_size(), size_budget); }

  RibbonBraid random_braid(int strands, int word_len) {
    std::vector<std::pair<char, int>> word;
    if (strands > 0) {
      for (int t = 0; t < word_len; ++t) {
        bool twist = strands == 1 || chance(3);
        if (twist) word.emplace_back(chance(2) ? 't' : 'T', uniform(1, strands));
        else word.emplace_back(chance(2) ? 'e' : 'E', uniform(1, strands - 1));
      }
    }
    return RibbonBraid::from_word(strands, word);
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64& rng() { return rng_; }

 private:
  bool chance(int one_in) { return uniform(1, one_in) == 1; }

  int pick_size() {
    // Mostly even sizes: odd box spaces are zero-dimensional in TL.
    static const int sizes[] = {0, 2, 2, 4, 4, 6, 1, 3};
    return std::min(sizes[uniform(0, 7)], max_arity_);
  }

  ExprPtr base(int out) {
    for (int attempt = 0; attempt < 32; ++attempt) {
      switch (uniform(0, 4)) {
        case 0:
          if (out == 0) return TangleExpr::gen(Generator::unit());
          break;
        case 1:
          return TangleExpr::gen(Generator::id(out));
        case 2:
          if (out + 2 <= max_arity_) return TangleExpr::gen(Generator::cap(uniform(0, out), out));
          break;
        case 3:
          if (out >= 2) return TangleExpr::gen(Generator::cup(uniform(0, out - 2), out - 2));
          break;
        case 4: {
          int j = uniform(0, out);
          int n = out - j;
          return TangleExpr::gen(Generator::pin(uniform(0, n), j, n));
        }
      }
    }
    return TangleExpr::gen(Generator::id(out));
  }

  ExprPtr build(int out, int budget) {
    if (budget <= 1) return base(out);
    switch (uniform(0, 3)) {
      case 0:
        return base(out);
      case 1:
      case 2: {
        ExprPtr outer = build(out, budget / 2);
        if (outer->type().inputs.empty()) return outer;
        int slot = uniform(1, static_cast<int>(outer->type().inputs.size()));
        ExprPtr inner = build(outer->type().inputs[slot - 1], budget - outer->size());
        return TangleExpr::comp(std::move(outer), slot, std::move(inner));
      }
      default: {
        ExprPtr body = build(out, budget - 1);
        int r = static_cast<int>(body->type().inputs.size());
        return TangleExpr::act(std::move(body), random_braid(r, uniform(0, 4)));
      }
    }
  }

  std::mt19937_64 rng_;
  int max_arity_;
  long long max_dom_dim_;
};

}  // namespace apa
