#pragma once

#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "apa/standard_form.hpp"

namespace apa {

/// A move instance at a word position. For M1-M5, pos is the index of the
/// upper generator of the adjacent pair (word[pos], word[pos+1]); for M6
/// it is the index of the Pin being rotated. dir = +1 applies the move as
/// printed, dir = -1 the reverse.
struct Move {
  int family = 1;  // 1..6
  size_t pos = 0;
  int dir = +1;
  // disambiguates overlapping patterns at the same position (0 or 1)
  int variant = 0;
};

namespace detail {

using GK = Generator::Kind;

inline std::optional<std::pair<Generator, Generator>> m1_rewrite(const Generator& U,
                                                                 const Generator& L, int dir) {
  if (U.kind != GK::Pin || L.kind != GK::Pin) return std::nullopt;
  const int A = U.i, B = U.j, i = L.i, j = L.j, amb = L.n;
  if (dir > 0) {
    if (A < i + j) return std::nullopt;
    return std::make_pair(Generator::pin(i, j, amb + B), Generator::pin(A - j, B, amb));
  }
  if (A > i) return std::nullopt;
  return std::make_pair(Generator::pin(i + B, j, amb + B), Generator::pin(A, B, amb));
}

inline std::optional<std::pair<Generator, Generator>> m2_rewrite(const Generator& U,
                                                                 const Generator& L,
                                                                 int variant) {
  if (U.kind == GK::Cap && L.kind == GK::Pin) {
    const int x = U.i, i = L.i, j = L.j, amb = L.n;
    if (variant == 0 && x + 1 < i)
      return std::make_pair(Generator::pin(i - 2, j, amb - 2), Generator::cap(x, amb - 2));
    if (variant == 1 && x >= i + j)
      return std::make_pair(Generator::pin(i, j, amb - 2), Generator::cap(x - j, amb - 2));
  }
  if (U.kind == GK::Cup && L.kind == GK::Pin) {
    const int x = U.i, i = L.i, j = L.j, amb = L.n;
    if (variant == 0 && x <= i)
      return std::make_pair(Generator::pin(i + 2, j, amb + 2), Generator::cup(x, amb));
    if (variant == 1 && x >= i + j)
      return std::make_pair(Generator::pin(i, j, amb + 2), Generator::cup(x - j, amb));
  }
  if (U.kind == GK::Pin && L.kind == GK::Cap) {
    const int p = U.i, q = U.j, r = U.n, c = L.i;
    if (variant == 0 && c <= p)
      return std::make_pair(Generator::cap(c, r + q), Generator::pin(p + 2, q, r + 2));
    if (variant == 1 && c >= p)
      return std::make_pair(Generator::cap(c + q, r + q), Generator::pin(p, q, r + 2));
  }
  if (U.kind == GK::Pin && L.kind == GK::Cup) {
    const int p = U.i, q = U.j, r = U.n, c = L.i;
    if (variant == 0 && c <= p - 2)
      return std::make_pair(Generator::cup(c, r + q - 2), Generator::pin(p - 2, q, r - 2));
    if (variant == 1 && c >= p)
      return std::make_pair(Generator::cup(c + q, r + q - 2), Generator::pin(p, q, r - 2));
  }
  return std::nullopt;
}

inline std::optional<std::pair<Generator, Generator>> m3_rewrite(const Generator& U,
                                                                 const Generator& L,
                                                                 int variant) {
  if (U.kind == GK::Cap && L.kind == GK::Cap) {
    const int x = U.i, y = L.i, N = U.n;
    if (variant == 0 && x + 1 < y)
      return std::make_pair(Generator::cap(y - 2, N), Generator::cap(x, N + 2));
    if (variant == 1 && y <= x)
      return std::make_pair(Generator::cap(y, N), Generator::cap(x + 2, N + 2));
  }
  if (U.kind == GK::Cup && L.kind == GK::Cup) {
    const int x = U.i, y = L.i, N = U.n;
    if (variant == 0 && x <= y)
      return std::make_pair(Generator::cup(y + 2, N), Generator::cup(x, N - 2));
    if (variant == 1 && y >= x + 2)
      return std::make_pair(Generator::cup(y - 2, N), Generator::cup(x, N - 2));
  }
  if (U.kind == GK::Cap && L.kind == GK::Cup) {
    const int x = U.i, y = L.i, N = U.n;
    if (variant == 0 && x < y - 1)
      return std::make_pair(Generator::cup(y - 2, N - 2), Generator::cap(x, N - 2));
    if (variant == 1 && x > y + 1)
      return std::make_pair(Generator::cup(y, N - 2), Generator::cap(x - 2, N - 2));
  }
  if (U.kind == GK::Cup && L.kind == GK::Cap) {
    const int x = U.i, y = L.i, M = L.n;
    if (variant == 0 && y <= x)
      return std::make_pair(Generator::cap(y, M + 2), Generator::cup(x + 2, M + 2));
    if (variant == 1 && y >= x)
      return std::make_pair(Generator::cap(y + 2, M + 2), Generator::cup(x, M + 2));
  }
  return std::nullopt;
}

inline bool m4_applicable(const Generator& U, const Generator& L) {
  return U.kind == GK::Cap && L.kind == GK::Cup && (U.i == L.i + 1 || U.i + 1 == L.i);
}

inline bool m5_applicable(const Generator& U, const Generator& L) {
  return U.kind == GK::Cap && L.kind == GK::Pin && (U.i + 1 == L.i || U.i + 1 == L.i + L.j);
}

/// The one-notch-short-of-2pi rotation of a Pin, written out in
/// generators: j cups below, the shifted Pin, j caps above. Composing with
/// a compensating twist on the Pin's input yields an isotopic tangle.
inline std::vector<Generator> rotation_fragment(const Generator& pin) {
  const int i = pin.i, j = pin.j, amb = pin.n;
  std::vector<Generator> frag;
  for (int t = 0; t < j; ++t) frag.push_back(Generator::cap(i + j + t, amb + j + 2 * t));
  frag.push_back(Generator::pin(i + j, j, amb + 2 * j));
  for (int t = j - 1; t >= 0; --t) frag.push_back(Generator::cup(i + t, amb + 2 * t));
  return frag;
}

/// Matches rotation_fragment(pin) at word index k; returns the Pin it
/// contracts to.
inline std::optional<Generator> match_rotation_fragment(const std::vector<Generator>& word,
                                                        size_t k) {
  for (size_t t = k; t < word.size(); ++t) {
    if (word[t].kind != GK::Pin) {
      if (word[t].kind == GK::Unit) return std::nullopt;
      continue;
    }
    size_t j = t - k;
    if (word[t].j != static_cast<int>(j)) return std::nullopt;
    int i = word[t].i - static_cast<int>(j);
    int amb = word[t].n - 2 * static_cast<int>(j);
    if (i < 0 || amb < 0 || i > amb || k + 2 * j >= word.size()) return std::nullopt;
    Generator pin = Generator::pin(i, static_cast<int>(j), amb);
    std::vector<Generator> frag = rotation_fragment(pin);
    for (size_t s = 0; s < frag.size(); ++s)
      if (word[k + s] != frag[s]) return std::nullopt;
    return pin;
  }
  return std::nullopt;
}

}  // namespace detail

/// All moves applicable to sf, in a fixed deterministic order.
inline std::vector<Move> applicable_moves(const StandardForm& sf) {
  std::vector<Move> out;
  const auto& w = sf.word;
  for (size_t k = 0; k + 1 < w.size(); ++k) {
    for (int dir : {+1, -1})
      if (detail::m1_rewrite(w[k], w[k + 1], dir)) out.push_back({1, k, dir, 0});
    for (int v : {0, 1})
      if (detail::m2_rewrite(w[k], w[k + 1], v)) out.push_back({2, k, +1, v});
    for (int v : {0, 1})
      if (detail::m3_rewrite(w[k], w[k + 1], v)) out.push_back({3, k, +1, v});
    if (detail::m4_applicable(w[k], w[k + 1])) out.push_back({4, k, +1, 0});
    if (detail::m5_applicable(w[k], w[k + 1])) out.push_back({5, k, +1, 0});
  }
  for (size_t k = 0; k < w.size(); ++k) {
    if (w[k].kind == Generator::Kind::Pin) out.push_back({6, k, +1, 0});
    if (detail::match_rotation_fragment(w, k)) out.push_back({6, k, -1, 0});
  }
  return out;
}

/// Applies one move. The result is a standard form of an isotopic anchored
/// tangle; backend evaluation is unchanged.
inline StandardForm apply_move(const StandardForm& sf, const Move& m) {
  StandardForm r = sf;
  auto& w = r.word;
  auto need = [&](bool ok) {
    if (!ok) throw Error("apply_move: move not applicable at position " + std::to_string(m.pos));
  };
  switch (m.family) {
    case 1: {
      need(m.pos + 1 < w.size());
      auto rw = detail::m1_rewrite(w[m.pos], w[m.pos + 1], m.dir);
      need(rw.has_value());
      int a = sf.input_of_pin(m.pos + 1);
      w[m.pos] = rw->first;
      w[m.pos + 1] = rw->second;
      r.braid = sf.braid.multiply(RibbonBraid::eps(sf.braid.strands(), a, m.dir));
      return r;
    }
    case 2: {
      need(m.pos + 1 < w.size());
      auto rw = detail::m2_rewrite(w[m.pos], w[m.pos + 1], m.variant);
      need(rw.has_value());
      w[m.pos] = rw->first;
      w[m.pos + 1] = rw->second;
      return r;
    }
    case 3: {
      need(m.pos + 1 < w.size());
      auto rw = detail::m3_rewrite(w[m.pos], w[m.pos + 1], m.variant);
      need(rw.has_value());
      w[m.pos] = rw->first;
      w[m.pos + 1] = rw->second;
      return r;
    }
    case 4: {
      need(m.pos + 1 < w.size() && detail::m4_applicable(w[m.pos], w[m.pos + 1]));
      w.erase(w.begin() + m.pos, w.begin() + m.pos + 2);
      return r;
    }
    case 5: {
      // Boundary-point slide around a disk. Strings cross anchor lines
      // freely, so the two routes standardize to the same chain; the move
      // is the identity rewrite on standard forms.
      need(m.pos + 1 < w.size() && detail::m5_applicable(w[m.pos], w[m.pos + 1]));
      return r;
    }
    case 6: {
      if (m.dir > 0) {
        need(m.pos < w.size() && w[m.pos].kind == Generator::Kind::Pin);
        Generator pin = w[m.pos];
        int a = sf.input_of_pin(m.pos);
        std::vector<Generator> frag = detail::rotation_fragment(pin);
        w.erase(w.begin() + m.pos);
        w.insert(w.begin() + m.pos, frag.begin(), frag.end());
        r.braid = sf.braid.multiply(RibbonBraid::theta(sf.braid.strands(), a, -1));
        return r;
      }
      auto pin = detail::match_rotation_fragment(w, m.pos);
      need(pin.has_value());
      size_t len = 2 * static_cast<size_t>(pin->j) + 1;
      w.erase(w.begin() + m.pos, w.begin() + m.pos + len);
      w.insert(w.begin() + m.pos, *pin);
      int a = r.input_of_pin(m.pos);
      r.braid = sf.braid.multiply(RibbonBraid::theta(sf.braid.strands(), a, +1));
      return r;
    }
    default:
      throw Error("apply_move: unknown family");
  }
}

enum class Equiv { Proven, NotProven };

/// Bounded isotopy prover: breadth-first search over standard forms from
/// both endpoints, with moves as edges. Proven implies the two tangles are
/// isotopic; NotProven is inconclusive beyond the budget.
inline Equiv equivalent(const ExprPtr& a, const ExprPtr& b, int budget) {
  if (a->type() != b->type())
    throw Error("equivalent: type mismatch " + a->type().to_string() + " vs " +
                b->type().to_string());
  StandardForm sa = normalize(a), sb = normalize(b);

  std::unordered_map<std::string, int> seen_a{{sa.key(), 0}}, seen_b{{sb.key(), 0}};
  std::deque<StandardForm> frontier_a{sa}, frontier_b{sb};
  if (seen_b.count(sa.key())) return Equiv::Proven;
  int depth_a = 0, depth_b = 0;

  auto expand = [](std::deque<StandardForm>& frontier,
                   std::unordered_map<std::string, int>& seen,
                   const std::unordered_map<std::string, int>& other, int depth) -> bool {
    std::deque<StandardForm> next;
    for (const StandardForm& sf : frontier) {
      for (const Move& m : applicable_moves(sf)) {
        if (m.family == 5) continue;  // identity rewrite, no new state
        StandardForm ns = apply_move(sf, m);
        std::string key = ns.key();
        if (seen.count(key)) continue;
        seen.emplace(std::move(key), depth);
        if (other.count(ns.key())) return true;
        next.push_back(std::move(ns));
      }
    }
    frontier = std::move(next);
    return false;
  };

  while (depth_a + depth_b < budget) {
    bool expand_a = frontier_a.size() <= frontier_b.size();
    if (expand_a && frontier_a.empty()) expand_a = false;
    if (!expand_a && frontier_b.empty()) {
      if (frontier_a.empty()) break;
      expand_a = true;
    }
    if (expand_a) {
      if (expand(frontier_a, seen_a, seen_b, ++depth_a)) return Equiv::Proven;
    } else {
      if (expand(frontier_b, seen_b, seen_a, ++depth_b)) return Equiv::Proven;
    }
  }
  return Equiv::NotProven;
}

}  // namespace apa
