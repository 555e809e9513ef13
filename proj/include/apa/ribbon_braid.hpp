#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "apa/permutation.hpp"

namespace apa {

/// One Artin generator occurrence: crossing of the strands at positions
/// index, index+1, read at that height. sign +1 means the strand at
/// position index passes over the strand at position index+1.
struct Crossing {
  int index = 1;
  int sign = +1;
  bool operator==(const Crossing& o) const { return index == o.index && sign == o.sign; }
};

namespace detail {

/// Reduced word in the free group F_n; letters are +-g for g in 1..n.
using FreeWord = std::vector<int>;

inline void push_reduced(FreeWord& w, int letter) {
  if (!w.empty() && w.back() == -letter) w.pop_back();
  else w.push_back(letter);
}

inline void append_reduced(FreeWord& w, const FreeWord& v) {
  for (int l : v) push_reduced(w, l);
}

inline FreeWord inverse_word(const FreeWord& w) {
  FreeWord r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

}  // namespace detail

/// Element of the ribbon braid group RB_n = B_n x| Z^n. The stored normal
/// position puts all twists at the bottom, indexed by bottom strand
/// position; the crossing word is read bottom to top.
///
/// Conventions (fixed here, validated end-to-end by the TL backend tests):
///  - multiply(a, b) stacks a at the bottom and b on top of it;
///  - permutation() maps bottom position to top position, and
///    permutation(a*b) = permutation(a).then(permutation(b));
///  - a positive crossing at index i takes the strand at position i over
///    the strand at position i+1.
class RibbonBraid {
 public:
  explicit RibbonBraid(int strands) : strands_(strands), twists_(strands, 0) {
    if (strands < 0) throw Error("RibbonBraid: negative strand count");
  }

  static RibbonBraid identity(int strands) { return RibbonBraid(strands); }

  static RibbonBraid eps(int strands, int i, int sign = +1) {
    RibbonBraid b(strands);
    if (i < 1 || i >= strands) throw Error("RibbonBraid::eps: index out of range");
    b.crossings_.push_back({i, sign >= 0 ? +1 : -1});
    return b;
  }

  static RibbonBraid theta(int strands, int i, std::int64_t count = 1) {
    RibbonBraid b(strands);
    if (i < 1 || i > strands) throw Error("RibbonBraid::theta: index out of range");
    b.twists_[i - 1] = count;
    return b;
  }

  /// Build from a word of generator tokens read bottom to top. Tokens are
  /// pairs (kind, index) with kind in {'e','E','t','T'}; 'E'/'T' denote the
  /// inverses e'/t'. Twists are pushed to the bottom through the crossings
  /// below them (eps_i theta_i = theta_{i+1} eps_i, i.e. relabel by the
  /// crossing's transposition).
  static RibbonBraid from_word(int strands,
                               const std::vector<std::pair<char, int>>& word) {
    RibbonBraid b(strands);
    // origin[p] = bottom strand currently at position p (1-based).
    std::vector<int> origin(strands + 1);
    for (int p = 1; p <= strands; ++p) origin[p] = p;
    for (auto [kind, idx] : word) {
      switch (kind) {
        case 'e':
        case 'E':
          if (idx < 1 || idx >= strands)
            throw Error("braid word: crossing index out of range");
          b.crossings_.push_back({idx, kind == 'e' ? +1 : -1});
          std::swap(origin[idx], origin[idx + 1]);
          break;
        case 't':
        case 'T':
          if (idx < 1 || idx > strands)
            throw Error("braid word: twist index out of range");
          b.twists_[origin[idx] - 1] += (kind == 't' ? 1 : -1);
          break;
        default:
          throw Error("braid word: unknown token kind");
      }
    }
    return b;
  }

  int strands() const { return strands_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<std::int64_t>& twists() const { return twists_; }

  /// this at the bottom, then b on top.
  RibbonBraid multiply(const RibbonBraid& b) const {
    if (b.strands_ != strands_) throw Error("RibbonBraid::multiply: strand-count mismatch");
    RibbonBraid r(strands_);
    r.crossings_ = crossings_;
    r.crossings_.insert(r.crossings_.end(), b.crossings_.begin(), b.crossings_.end());
    Permutation p = permutation();
    for (int i = 1; i <= strands_; ++i)
      r.twists_[i - 1] = twists_[i - 1] + b.twists_[p(i) - 1];
    return r;
  }
  RibbonBraid operator*(const RibbonBraid& b) const { return multiply(b); }

  RibbonBraid inverse() const {
    RibbonBraid r(strands_);
    for (auto it = crossings_.rbegin(); it != crossings_.rend(); ++it)
      r.crossings_.push_back({it->index, -it->sign});
    Permutation p = permutation();
    for (int i = 1; i <= strands_; ++i) r.twists_[p(i) - 1] = -twists_[i - 1];
    return r;
  }

  Permutation permutation() const {
    std::vector<int> pos(strands_);  // pos[s-1] = current position of bottom strand s
    for (int s = 0; s < strands_; ++s) pos[s] = s + 1;
    std::vector<int> at(strands_ + 1);  // at[p] = strand at position p
    for (int p = 1; p <= strands_; ++p) at[p] = p;
    for (const Crossing& c : crossings_) {
      int a = at[c.index], b = at[c.index + 1];
      std::swap(at[c.index], at[c.index + 1]);
      pos[a - 1] = c.index + 1;
      pos[b - 1] = c.index;
    }
    return Permutation(std::move(pos));
  }

  bool is_pure() const { return permutation().is_identity(); }

  /// Exact word-problem equality: twist vectors (already in normal
  /// position) must agree, and the underlying braids must act identically
  /// on the free group via the faithful Artin representation.
  bool equals(const RibbonBraid& o) const {
    if (o.strands_ != strands_) throw Error("RibbonBraid::equals: strand-count mismatch");
    if (twists_ != o.twists_) return false;
    return artin_images() == o.artin_images();
  }

  bool is_identity() const { return equals(identity(strands_)); }

  /// Images of the free generators x_1..x_n under the Artin action of the
  /// crossing word. A positive crossing at index i acts by
  ///   x_i -> x_i x_{i+1} x_i^{-1},   x_{i+1} -> x_i.
  /// The tuple of reduced images is a canonical form for the braid part.
  std::vector<detail::FreeWord> artin_images() const {
    std::vector<detail::FreeWord> im(strands_);
    for (int g = 0; g < strands_; ++g) im[g] = {g + 1};
    for (const Crossing& c : crossings_) {
      int i = c.index - 1;
      detail::FreeWord xi = im[i], xj = im[i + 1];
      if (c.sign > 0) {
        detail::FreeWord w = xi;
        detail::append_reduced(w, xj);
        detail::append_reduced(w, detail::inverse_word(xi));
        im[i] = std::move(w);
        im[i + 1] = std::move(xi);
      } else {
        detail::FreeWord w = detail::inverse_word(xj);
        detail::append_reduced(w, xi);
        detail::append_reduced(w, xj);
        im[i] = std::move(xj);
        im[i + 1] = std::move(w);
      }
    }
    return im;
  }

  /// Canonical serialization of the group element (twists + Artin images);
  /// two elements are equal iff their keys coincide.
  std::string canonical_key() const {
    std::ostringstream os;
    os << strands_ << ';';
    for (auto t : twists_) os << t << ',';
    os << ';';
    for (const auto& w : artin_images()) {
      for (int l : w) os << l << ',';
      os << '|';
    }
    return os.str();
  }

  /// Positive full twist on s strands, (e_1 e_2 .. e_{s-1})^s.
  static RibbonBraid full_twist(int s) {
    RibbonBraid b(s);
    for (int rep = 0; rep < s; ++rep)
      for (int i = 1; i < s; ++i) b.crossings_.push_back({i, +1});
    return b;
  }

  /// Operadic composition: cable strand `slot` of this braid into
  /// tau.strands() parallel strands, expand crossings through the cable to
  /// blocks of parallel crossings, expand each twist unit on the cabled
  /// strand to (full twist) * (one twist per cabled strand), and insert tau
  /// at the bottom of the cabled slot.
  RibbonBraid compose_at(int slot, const RibbonBraid& tau) const {
    if (slot < 1 || slot > strands_) throw Error("RibbonBraid::compose_at: slot out of range");
    int s = tau.strands_;
    RibbonBraid r(strands_ + s - 1);
    auto width = [&](int strand) { return strand == slot ? s : 1; };
    auto offset = [&](int strand) {  // expanded start position at the bottom
      return strand < slot ? strand : (strand == slot ? slot : strand + s - 1);
    };

    for (const Crossing& c : tau.crossings_)
      r.crossings_.push_back({c.index + slot - 1, c.sign});

    std::int64_t cable_twist = twists_[slot - 1];
    if (s > 1 && cable_twist != 0) {
      RibbonBraid ft = full_twist(s);
      if (cable_twist < 0) ft = ft.inverse();
      std::int64_t reps = cable_twist < 0 ? -cable_twist : cable_twist;
      for (std::int64_t k = 0; k < reps; ++k)
        for (const Crossing& c : ft.crossings_)
          r.crossings_.push_back({c.index + slot - 1, c.sign});
    }

    // Expand this braid's crossings, tracking where the cable currently is.
    std::vector<int> at(strands_ + 1);
    for (int p = 1; p <= strands_; ++p) at[p] = p;
    for (const Crossing& c : crossings_) {
      int left = at[c.index], right = at[c.index + 1];
      int wl = width(left), wr = width(right);
      int base = 0;
      for (int p = 1; p < c.index; ++p) base += width(at[p]);
      for (int rr = 0; rr < wr; ++rr)
        for (int ll = wl - 1; ll >= 0; --ll)
          r.crossings_.push_back({base + ll + rr + 1, c.sign});
      std::swap(at[c.index], at[c.index + 1]);
    }

    for (int strand = 1; strand <= strands_; ++strand) {
      if (strand == slot) continue;
      r.twists_[offset(strand) - 1] = twists_[strand - 1];
    }
    for (int q = 0; q < s; ++q)
      r.twists_[slot - 1 + q] = tau.twists_[q] + cable_twist;
    return r;
  }

  // --- token syntax: rb(n)[e 1 e' 2 t 3 t' 1] ------------------------------

  static RibbonBraid parse(const std::string& text) {
    size_t pos = 0;
    RibbonBraid b = parse_prefix(text, pos);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos != text.size())
      throw Error("braid parse: trailing input at offset " + std::to_string(pos));
    return b;
  }

  /// Parses a braid literal starting at text[pos]; advances pos past it.
  static RibbonBraid parse_prefix(const std::string& text, size_t& pos) {
    auto skip_ws = [&] {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto expect = [&](const char* lit) {
      skip_ws();
      for (const char* c = lit; *c; ++c, ++pos)
        if (pos >= text.size() || text[pos] != *c)
          throw Error(std::string("braid parse: expected '") + lit + "' at offset " +
                      std::to_string(pos));
    };
    auto read_int = [&]() -> int {
      skip_ws();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw Error("braid parse: expected integer at offset " + std::to_string(pos));
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      return v;
    };
    expect("rb");
    expect("(");
    int n = read_int();
    expect(")");
    expect("[");
    std::vector<std::pair<char, int>> word;
    for (;;) {
      skip_ws();
      if (pos < text.size() && text[pos] == ']') { ++pos; break; }
      if (pos >= text.size()) throw Error("braid parse: unterminated braid word");
      char c = text[pos];
      if (c != 'e' && c != 't')
        throw Error("braid parse: expected 'e' or 't' at offset " + std::to_string(pos));
      ++pos;
      bool inv = (pos < text.size() && text[pos] == '\'');
      if (inv) ++pos;
      char kind = inv ? (c == 'e' ? 'E' : 'T') : c;
      word.emplace_back(kind, read_int());
    }
    return from_word(n, word);
  }

  std::string render() const {
    std::ostringstream os;
    os << "rb(" << strands_ << ")[";
    bool first = true;
    auto emit = [&](const std::string& tok) {
      if (!first) os << ' ';
      os << tok;
      first = false;
    };
    for (int i = 1; i <= strands_; ++i) {
      std::int64_t t = twists_[i - 1];
      for (std::int64_t k = 0; k < (t > 0 ? t : -t); ++k)
        emit(std::string(t > 0 ? "t " : "t' ") + std::to_string(i));
    }
    for (const Crossing& c : crossings_)
      emit(std::string(c.sign > 0 ? "e " : "e' ") + std::to_string(c.index));
    os << ']';
    return os.str();
  }

 private:
  int strands_;
  std::vector<Crossing> crossings_;
  std::vector<std::int64_t> twists_;
};

}  // namespace apa
