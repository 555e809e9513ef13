#pragma once

#include <string>
#include <vector>

#include "apa/expr.hpp"

namespace apa {

/// A tangle in standard form: a left-nested chain of generating tangles
/// g_N o_1 ... o_1 g_0 with g_0 = Unit (word[0] is the outermost g_N,
/// word.back() the Unit), together with one ribbon braid acting below the
/// chain. Inputs are numbered by the side slots of the Pin generators,
/// innermost (closest to the Unit) first; braid strand a feeds input a of
/// the word.
struct StandardForm {
  std::vector<Generator> word;
  RibbonBraid braid{0};

  /// Input sizes of the bare word: Pin side slots, innermost first.
  std::vector<int> word_inputs() const {
    std::vector<int> in;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
      if (it->kind == Generator::Kind::Pin) in.push_back(it->j);
    return in;
  }

  int output() const { return word.empty() ? 0 : word.front().type().output; }

  TangleType type() const {
    std::vector<int> win = word_inputs();
    Permutation pi = braid.permutation();
    TangleType t;
    t.output = output();
    t.inputs.resize(win.size());
    for (size_t a = 1; a <= win.size(); ++a) t.inputs[a - 1] = win[pi(static_cast<int>(a)) - 1];
    return t;
  }

  /// Word index (into `word`) of the Pin whose side slot is word input c.
  size_t pin_index(int c) const {
    int seen = 0;
    for (size_t k = word.size(); k-- > 0;) {
      if (word[k].kind == Generator::Kind::Pin && ++seen == c) return k;
    }
    throw Error("standard form: no pin for input " + std::to_string(c));
  }

  /// Input number (1-based, innermost first) of the Pin at word index k.
  int input_of_pin(size_t k) const {
    int c = 0;
    for (size_t t = word.size(); t-- > k;)
      if (word[t].kind == Generator::Kind::Pin) ++c;
    return c;
  }

  ExprPtr to_expr() const {
    ExprPtr e;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      if (it->kind == Generator::Kind::Unit && !e) {
        e = TangleExpr::gen(*it);
        continue;
      }
      e = TangleExpr::comp(TangleExpr::gen(*it), 1, std::move(e));
    }
    return TangleExpr::act(std::move(e), braid);
  }

  std::string render() const { return render_expr(to_expr()); }

  /// Dedup key: exact word plus the canonical form of the braid element.
  std::string key() const {
    std::string s;
    for (const Generator& g : word) s += g.render();
    s += '#';
    s += braid.canonical_key();
    return s;
  }

  bool operator==(const StandardForm& o) const {
    return word == o.word && braid.equals(o.braid);
  }

  /// Chain well-formedness: each generator's slot-1 size matches the
  /// output of the chain below it, and the word ends in the unit tangle.
  void validate() const {
    if (word.empty() || word.back().kind != Generator::Kind::Unit)
      throw Error("standard form: word must end in u");
    int cur = 0;
    for (size_t k = word.size(); k-- > 0;) {
      const Generator& g = word[k];
      if (g.kind == Generator::Kind::Unit) {
        if (k + 1 != word.size()) throw Error("standard form: interior unit");
        cur = 0;
        continue;
      }
      if (g.kind == Generator::Kind::Id) throw Error("standard form: id in word");
      if (g.type().inputs[0] != cur)
        throw Error("standard form: chain mismatch at position " + std::to_string(k));
      cur = g.type().output;
    }
    if (static_cast<int>(word_inputs().size()) != braid.strands())
      throw Error("standard form: braid strand count mismatch");
  }
};

namespace detail {

/// Rewrites word o_c g into a pure chain, in place. The c-th input's Pin
/// absorbs g through the slot-two gluing identities
///   p_{i,0} o_2 u       = id            (pin deleted)
///   p_{i,j} o_2 a_k     = a_{i+k}  o_1 p_{i,j+2}
///   p_{i,j} o_2 abar_k  = abar_{i+k} o_1 p_{i,j-2}
///   p_{i,j} o_2 p_{k,l} = p_{i+k,l} o_1 p_{i,j-l}
/// leaving the chain continuation at input c.
inline void insert_generator(std::vector<Generator>& word, int c, const Generator& g) {
  int seen = 0;
  size_t k = word.size();
  while (k-- > 0) {
    if (word[k].kind == Generator::Kind::Pin && ++seen == c) break;
  }
  const Generator pin = word[k];  // Pin(i, j, amb)
  const int i = pin.i, j = pin.j, amb = pin.n;
  if (g.type().output != j)
    throw Error("insert_generator: output " + std::to_string(g.type().output) +
                " does not fit slot of size " + std::to_string(j));
  switch (g.kind) {
    case Generator::Kind::Unit:
      word.erase(word.begin() + k);
      return;
    case Generator::Kind::Cap:
      word[k] = Generator::pin(i, j + 2, amb);
      word.insert(word.begin() + k, Generator::cap(i + g.i, amb + j));
      return;
    case Generator::Kind::Cup:
      word[k] = Generator::pin(i, j - 2, amb);
      word.insert(word.begin() + k, Generator::cup(i + g.i, amb + j - 2));
      return;
    case Generator::Kind::Pin:
      word[k] = Generator::pin(i, j - g.j, amb);
      word.insert(word.begin() + k, Generator::pin(i + g.i, g.j, amb + j - g.j));
      return;
    case Generator::Kind::Id:
      throw Error("insert_generator: id cannot appear in a normalized word");
  }
}

/// Splices the chain `inner` into input c of `host`, one generator at a
/// time from the outermost in; the continuation stays at input c, so the
/// spliced inputs come out innermost-first, matching the composite's
/// numbering.
inline void merge_word(std::vector<Generator>& host, int c, const std::vector<Generator>& inner) {
  for (const Generator& g : inner) insert_generator(host, c, g);
}

}  // namespace detail

/// Deterministic normalization to standard form. Children are normalized
/// first; Act combines into the braid (the acting braid goes below the
/// body's braid); Comp merges the inner word into the host word at the
/// slot reached through the host braid's permutation, and composes the
/// braids operadically.
inline StandardForm normalize(const ExprPtr& e) {
  switch (e->kind()) {
    case TangleExpr::Kind::Gen: {
      const Generator& g = e->generator();
      StandardForm sf;
      switch (g.kind) {
        case Generator::Kind::Unit:
          sf.word = {Generator::unit()};
          sf.braid = RibbonBraid(0);
          break;
        case Generator::Kind::Id:
          sf.word = {Generator::pin(0, g.n, 0), Generator::unit()};
          sf.braid = RibbonBraid(1);
          break;
        case Generator::Kind::Cap:
          sf.word = {g, Generator::pin(0, g.n + 2, 0), Generator::unit()};
          sf.braid = RibbonBraid(1);
          break;
        case Generator::Kind::Cup:
          sf.word = {g, Generator::pin(0, g.n, 0), Generator::unit()};
          sf.braid = RibbonBraid(1);
          break;
        case Generator::Kind::Pin:
          sf.word = {g, Generator::pin(0, g.n, 0), Generator::unit()};
          sf.braid = RibbonBraid(2);
          break;
      }
      return sf;
    }
    case TangleExpr::Kind::Comp: {
      StandardForm host = normalize(e->outer());
      StandardForm inner = normalize(e->inner());
      int a = e->slot();
      StandardForm r;
      r.word = host.word;
      detail::merge_word(r.word, host.braid.permutation()(a), inner.word);
      r.braid = host.braid.compose_at(a, inner.braid);
      return r;
    }
    case TangleExpr::Kind::Act: {
      StandardForm body = normalize(e->body());
      StandardForm r;
      r.word = body.word;
      r.braid = e->braid().multiply(body.braid);
      return r;
    }
  }
  throw Error("unreachable");
}

}  // namespace apa
