#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "apa/delta_poly.hpp"
#include "apa/standard_form.hpp"

namespace apa {

/// Non-crossing perfect matching of {1,..,n}, stored as the partner
/// function: partner[q] is the partner of q, 1-based, partner[0] unused.
struct Pairing {
  std::vector<int> partner;

  explicit Pairing(int n = 0) : partner(n + 1, 0) {}
  int points() const { return static_cast<int>(partner.size()) - 1; }

  bool operator==(const Pairing& o) const { return partner == o.partner; }
  bool operator<(const Pairing& o) const { return partner < o.partner; }

  std::string to_string() const {
    std::ostringstream os;
    for (int q = 1; q <= points(); ++q) {
      if (q > 1) os << ' ';
      os << partner[q];
    }
    return os.str();
  }
};

namespace tl_detail {

inline void match_interval(int lo, int hi, Pairing& p,
                           const std::function<void()>& done) {
  if (lo > hi) {
    done();
    return;
  }
  for (int m = lo + 1; m <= hi; m += 2) {
    p.partner[lo] = m;
    p.partner[m] = lo;
    match_interval(lo + 1, m - 1, p, [&] { match_interval(m + 1, hi, p, done); });
  }
}

}  // namespace tl_detail

/// All non-crossing perfect matchings of n points, lexicographic on the
/// partner function; empty for odd n, the single empty pairing for n = 0.
/// The cache is guarded so callers may evaluate concurrently.
inline const std::vector<Pairing>& enumerate_basis(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Pairing>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Pairing> out;
  if (n >= 0 && n % 2 == 0) {
    Pairing p(n);
    tl_detail::match_interval(1, n, p, [&] { out.push_back(p); });
    std::sort(out.begin(), out.end(),
              [](const Pairing& a, const Pairing& b) { return a < b; });
  }
  return cache.emplace(n, std::move(out)).first->second;
}

inline int box_dim(int n) {
  if (n < 0 || n % 2 != 0) return 0;
  return static_cast<int>(enumerate_basis(n).size());
}

inline int pairing_index(const Pairing& p) {
  const auto& basis = enumerate_basis(p.points());
  auto it = std::lower_bound(basis.begin(), basis.end(), p,
                             [](const Pairing& a, const Pairing& b) { return a < b; });
  if (it == basis.end() || !(*it == p)) throw Error("pairing_index: not a basis diagram");
  return static_cast<int>(it - basis.begin());
}

/// Exact linear map between tensor products of box spaces, in the
/// enumerate_basis bases. dom and cod are lists of box sizes; entries are
/// delta-polynomials with integer coefficients, stored row-major.
struct TLMap {
  std::vector<int> dom, cod;
  std::vector<DeltaPoly> a;

  static long long tuple_dim(const std::vector<int>& sizes) {
    long long d = 1;
    for (int k : sizes) d *= box_dim(k);
    return d;
  }
  long long rows() const { return tuple_dim(cod); }
  long long cols() const { return tuple_dim(dom); }

  static TLMap zero(std::vector<int> dom, std::vector<int> cod) {
    TLMap m;
    m.dom = std::move(dom);
    m.cod = std::move(cod);
    long long cells = m.rows() * m.cols();
    if (cells > 8LL * 1000 * 1000) throw Error("TLMap: matrix too large");
    m.a.assign(static_cast<size_t>(cells), DeltaPoly());
    return m;
  }

  DeltaPoly& at(long long r, long long c) { return a[static_cast<size_t>(r * cols() + c)]; }
  const DeltaPoly& at(long long r, long long c) const {
    return a[static_cast<size_t>(r * cols() + c)];
  }

  bool operator==(const TLMap& o) const { return dom == o.dom && cod == o.cod && a == o.a; }
  bool operator!=(const TLMap& o) const { return !(*this == o); }

  TLMap scaled(const DeltaPoly& s) const {
    TLMap r = *this;
    for (DeltaPoly& e : r.a) e *= s;
    return r;
  }

  /// Tuple index arithmetic: last factor varies fastest.
  static std::vector<long long> strides(const std::vector<int>& sizes) {
    std::vector<long long> st(sizes.size(), 1);
    for (size_t i = sizes.size(); i-- > 1;) st[i - 1] = st[i] * box_dim(sizes[i]);
    return st;
  }

  std::string to_tsv() const {
    std::ostringstream os;
    for (long long r = 0; r < rows(); ++r) {
      for (long long c = 0; c < cols(); ++c) {
        if (c) os << '\t';
        os << at(r, c).to_string();
      }
      os << '\n';
    }
    return os.str();
  }
};

/// Plain composition f . h where h's codomain signature equals f's domain
/// signature.
inline TLMap tl_compose(const TLMap& f, const TLMap& h) {
  if (f.dom != h.cod) throw Error("tl_compose: signature mismatch");
  TLMap r = TLMap::zero(h.dom, f.cod);
  for (long long i = 0; i < f.rows(); ++i)
    for (long long k = 0; k < f.cols(); ++k) {
      const DeltaPoly& fik = f.at(i, k);
      if (fik.is_zero()) continue;
      for (long long j = 0; j < h.cols(); ++j) {
        const DeltaPoly& hkj = h.at(k, j);
        if (hkj.is_zero()) continue;
        r.at(i, j) += fik * hkj;
      }
    }
  return r;
}

/// Operadic composition f o_slot g: plug g (whose codomain is a single box
/// space) into input `slot` of f.
inline TLMap tl_compose_at(const TLMap& f, int slot, const TLMap& g) {
  if (slot < 1 || slot > static_cast<int>(f.dom.size()))
    throw Error("tl_compose_at: slot out of range");
  if (g.cod.size() != 1 || g.cod[0] != f.dom[slot - 1])
    throw Error("tl_compose_at: codomain does not fit slot");
  std::vector<int> dom;
  dom.insert(dom.end(), f.dom.begin(), f.dom.begin() + (slot - 1));
  dom.insert(dom.end(), g.dom.begin(), g.dom.end());
  dom.insert(dom.end(), f.dom.begin() + slot, f.dom.end());
  TLMap r = TLMap::zero(dom, f.cod);

  long long pre = 1, post = 1;
  for (int s = 0; s < slot - 1; ++s) pre *= box_dim(f.dom[s]);
  for (size_t s = slot; s < f.dom.size(); ++s) post *= box_dim(f.dom[s]);
  long long mid_f = box_dim(f.dom[slot - 1]);
  long long gcols = g.cols();

  for (long long row = 0; row < r.rows(); ++row)
    for (long long p = 0; p < pre; ++p)
      for (long long q = 0; q < post; ++q)
        for (long long y = 0; y < mid_f; ++y) {
          long long fcol = (p * mid_f + y) * post + q;
          const DeltaPoly& fv = f.at(row, fcol);
          if (fv.is_zero()) continue;
          for (long long gc = 0; gc < gcols; ++gc) {
            const DeltaPoly& gv = g.at(y, gc);
            if (gv.is_zero()) continue;
            long long rcol = (p * gcols + gc) * post + q;
            r.at(row, rcol) += fv * gv;
          }
        }
  return r;
}

/// The action P(sigma) of a ribbon braid on a tensor product, with strand
/// a carrying the tensor product of blocks[a-1]: in Vec the braiding is
/// the flip and the twist is the identity, so only the underlying
/// permutation acts, moving whole blocks.
inline TLMap tl_block_perm_action(const RibbonBraid& braid,
                                  const std::vector<std::vector<int>>& blocks) {
  if (braid.strands() != static_cast<int>(blocks.size()))
    throw Error("tl_block_perm_action: strand count mismatch");
  const int r = braid.strands();
  Permutation inv = braid.permutation().inverse();
  std::vector<int> dom, cod;
  std::vector<long long> bdim(r);
  for (int a = 0; a < r; ++a) {
    dom.insert(dom.end(), blocks[a].begin(), blocks[a].end());
    bdim[a] = TLMap::tuple_dim(blocks[a]);
  }
  for (int p = 1; p <= r; ++p) {
    const auto& blk = blocks[inv(p) - 1];
    cod.insert(cod.end(), blk.begin(), blk.end());
  }
  TLMap m = TLMap::zero(dom, cod);
  std::vector<long long> dst(r, 1), cst(r, 1);
  for (int a = r - 1; a >= 1; --a) dst[a - 1] = dst[a] * bdim[a];
  for (int p = r - 1; p >= 1; --p) cst[p - 1] = cst[p] * bdim[inv(p + 1) - 1];
  for (long long col = 0; col < m.cols(); ++col) {
    std::vector<long long> d(r);
    long long rest = col;
    for (int a = 0; a < r; ++a) {
      d[a] = bdim[a] == 0 ? 0 : rest / dst[a];
      if (bdim[a] != 0) rest %= dst[a];
    }
    long long row = 0;
    for (int p = 1; p <= r; ++p) row += d[inv(p) - 1] * cst[p - 1];
    m.at(row, col) = DeltaPoly(1);
  }
  return m;
}

/// P(sigma) on single box spaces; bottom_sizes are the box sizes at the
/// bottom of the braid (the domain).
inline TLMap tl_perm_action(const RibbonBraid& braid, const std::vector<int>& bottom_sizes) {
  std::vector<std::vector<int>> blocks(bottom_sizes.size());
  for (size_t a = 0; a < bottom_sizes.size(); ++a) blocks[a] = {bottom_sizes[a]};
  return tl_block_perm_action(braid, blocks);
}

/// Evaluation of a generating tangle as an exact matrix.
inline TLMap tl_generator(const Generator& g) {
  using GK = Generator::Kind;
  switch (g.kind) {
    case GK::Unit: {
      TLMap m = TLMap::zero({}, {0});
      m.at(0, 0) = DeltaPoly(1);
      return m;
    }
    case GK::Id: {
      TLMap m = TLMap::zero({g.n}, {g.n});
      for (long long c = 0; c < m.cols(); ++c) m.at(c, c) = DeltaPoly(1);
      return m;
    }
    case GK::Cap: {
      const int n = g.n, i = g.i;
      TLMap m = TLMap::zero({n + 2}, {n});
      const auto& dom = enumerate_basis(n + 2);
      for (size_t c = 0; c < dom.size(); ++c) {
        const Pairing& x = dom[c];
        Pairing y(n);
        DeltaPoly coeff(1);
        auto relabel = [&](int q) { return q <= i ? q : q - 2; };
        if (x.partner[i + 1] == i + 2) {
          coeff = DeltaPoly::delta();
          for (int q = 1; q <= n + 2; ++q) {
            if (q == i + 1 || q == i + 2) continue;
            y.partner[relabel(q)] = relabel(x.partner[q]);
          }
        } else {
          int u = x.partner[i + 1], v = x.partner[i + 2];
          for (int q = 1; q <= n + 2; ++q) {
            if (q == i + 1 || q == i + 2) continue;
            int pq = x.partner[q];
            if (q == u) pq = v;
            else if (q == v) pq = u;
            y.partner[relabel(q)] = relabel(pq);
          }
        }
        m.at(pairing_index(y), static_cast<long long>(c)) = coeff;
      }
      return m;
    }
    case GK::Cup: {
      const int n = g.n, i = g.i;
      TLMap m = TLMap::zero({n}, {n + 2});
      const auto& dom = enumerate_basis(n);
      for (size_t c = 0; c < dom.size(); ++c) {
        const Pairing& x = dom[c];
        Pairing y(n + 2);
        auto relabel = [&](int q) { return q <= i ? q : q + 2; };
        for (int q = 1; q <= n; ++q) y.partner[relabel(q)] = relabel(x.partner[q]);
        y.partner[i + 1] = i + 2;
        y.partner[i + 2] = i + 1;
        m.at(pairing_index(y), static_cast<long long>(c)) = DeltaPoly(1);
      }
      return m;
    }
    case GK::Pin: {
      const int n = g.n, i = g.i, j = g.j;
      TLMap m = TLMap::zero({n, j}, {n + j});
      const auto& bx = enumerate_basis(n);
      const auto& by = enumerate_basis(j);
      for (size_t cx = 0; cx < bx.size(); ++cx)
        for (size_t cy = 0; cy < by.size(); ++cy) {
          Pairing z(n + j);
          auto rel_x = [&](int q) { return q <= i ? q : q + j; };
          for (int q = 1; q <= n; ++q) z.partner[rel_x(q)] = rel_x(bx[cx].partner[q]);
          for (int q = 1; q <= j; ++q) z.partner[i + q] = i + by[cy].partner[q];
          long long col = static_cast<long long>(cx) * by.size() + static_cast<long long>(cy);
          m.at(pairing_index(z), col) = DeltaPoly(1);
        }
      return m;
    }
  }
  throw Error("unreachable");
}

/// Structural evaluation of an expression tree; does not normalize.
inline TLMap tl_eval(const ExprPtr& e) {
  switch (e->kind()) {
    case TangleExpr::Kind::Gen:
      return tl_generator(e->generator());
    case TangleExpr::Kind::Comp:
      return tl_compose_at(tl_eval(e->outer()), e->slot(), tl_eval(e->inner()));
    case TangleExpr::Kind::Act: {
      TLMap body = tl_eval(e->body());
      return tl_compose(body, tl_perm_action(e->braid(), e->type().inputs));
    }
  }
  throw Error("unreachable");
}

namespace tl_detail {

/// One diagram with an explicit loop count; chain words act on these
/// without ever forming linear combinations.
struct Diag {
  std::vector<int> partner;  // 1-based
  long loops = 0;
};

inline void chain_apply(Diag& cur, const Generator& g, const Pairing* side) {
  using GK = Generator::Kind;
  switch (g.kind) {
    case GK::Cap: {
      std::vector<int> next(g.n + 1, 0);
      auto rel = [&](int q) { return q <= g.i ? q : q - 2; };
      if (cur.partner[g.i + 1] == g.i + 2) {
        cur.loops += 1;
        for (int q = 1; q <= g.n + 2; ++q) {
          if (q == g.i + 1 || q == g.i + 2) continue;
          next[rel(q)] = rel(cur.partner[q]);
        }
      } else {
        int u = cur.partner[g.i + 1], v = cur.partner[g.i + 2];
        for (int q = 1; q <= g.n + 2; ++q) {
          if (q == g.i + 1 || q == g.i + 2) continue;
          int pq = cur.partner[q];
          if (q == u) pq = v;
          if (q == v) pq = u;
          next[rel(q)] = rel(pq);
        }
      }
      cur.partner = std::move(next);
      return;
    }
    case GK::Cup: {
      std::vector<int> next(g.n + 3, 0);
      auto rel = [&](int q) { return q <= g.i ? q : q + 2; };
      for (int q = 1; q <= g.n; ++q) next[rel(q)] = rel(cur.partner[q]);
      next[g.i + 1] = g.i + 2;
      next[g.i + 2] = g.i + 1;
      cur.partner = std::move(next);
      return;
    }
    case GK::Pin: {
      std::vector<int> next(g.n + g.j + 1, 0);
      auto rel = [&](int q) { return q <= g.i ? q : q + g.j; };
      for (int q = 1; q <= g.n; ++q) next[rel(q)] = rel(cur.partner[q]);
      for (int q = 1; q <= g.j; ++q) next[g.i + q] = g.i + side->partner[q];
      cur.partner = std::move(next);
      return;
    }
    case GK::Unit:
    case GK::Id:
      throw Error("chain_apply: unexpected generator");
  }
}

}  // namespace tl_detail

/// Evaluation of a standard form, column by column: the word chain maps
/// every tuple of basis diagrams to a single diagram times a power of
/// delta, so no intermediate matrix is ever formed (rotation fragments can
/// pass through large box sizes harmlessly).
inline TLMap tl_eval(const StandardForm& sf) {
  TangleType t = sf.type();
  TLMap m = TLMap::zero(t.inputs, {t.output});
  const int r = static_cast<int>(t.inputs.size());
  Permutation pi = sf.braid.permutation();
  auto strides = TLMap::strides(m.dom);
  for (long long col = 0; col < m.cols(); ++col) {
    std::vector<const Pairing*> word_in(r, nullptr);
    long long rest = col;
    for (int a = 0; a < r; ++a) {
      long long d = rest / strides[a];
      rest %= strides[a];
      word_in[pi(a + 1) - 1] = &enumerate_basis(t.inputs[a])[static_cast<size_t>(d)];
    }
    tl_detail::Diag cur{std::vector<int>(1, 0), 0};
    int next_input = 0;
    for (size_t k = sf.word.size() - 1; k-- > 0;) {
      const Generator& g = sf.word[k];
      const Pairing* side = nullptr;
      if (g.kind == Generator::Kind::Pin) side = word_in[next_input++];
      tl_detail::chain_apply(cur, g, side);
    }
    Pairing out(t.output);
    out.partner = std::move(cur.partner);
    m.at(pairing_index(out), col) = DeltaPoly::delta(static_cast<int>(cur.loops));
  }
  return m;
}

}  // namespace apa
