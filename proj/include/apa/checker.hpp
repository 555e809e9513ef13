#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "apa/moves.hpp"
#include "apa/random_expr.hpp"
#include "apa/tl.hpp"

namespace apa {

/// One instance of a relation family: two well-typed expressions of equal
/// type, the right side possibly carried with a power of delta (the closed
/// loop of the cap-over-cup case).
struct RelationInstance {
  std::string family;
  std::string params;
  ExprPtr lhs, rhs;
  int rhs_delta_power = 0;
};

struct Report {
  struct Row {
    std::string family;
    std::string params;
    bool pass = true;
  };
  struct Counterexample {
    std::string family;
    std::string params;
    std::string lhs_matrix;
    std::string rhs_matrix;
  };
  std::vector<Row> rows;
  std::vector<Counterexample> counterexamples;
  double elapsed_ms = 0;

  bool all_pass() const {
    for (const Row& r : rows)
      if (!r.pass) return false;
    return true;
  }

  std::string to_tsv() const {
    std::ostringstream os;
    for (const Row& r : rows)
      os << r.family << '\t' << r.params << '\t' << (r.pass ? "pass" : "FAIL") << '\n';
    return os.str();
  }
};

namespace checker_detail {

inline ExprPtr g(const Generator& gen) { return TangleExpr::gen(gen); }

inline std::string par(std::initializer_list<int> vals) {
  std::string s;
  for (int v : vals) {
    if (!s.empty()) s += ',';
    s += std::to_string(v);
  }
  return s;
}

/// The (C9) rotation composite around an n-strand input, ambient empty:
/// caps, the shifted insertion, a cascade of cups, the unit.
inline ExprPtr rotation_expr(int n) {
  ExprPtr e = g(Generator::unit());
  for (int t = 0; t < n; ++t) e = compose(g(Generator::cup(t, 2 * t)), 1, std::move(e));
  e = compose(g(Generator::pin(n, n, 2 * n)), 1, std::move(e));
  int cur = 3 * n;
  for (int t = 2 * n - 1; t >= n; --t) {
    e = compose(g(Generator::cap(t, cur - 2)), 1, std::move(e));
    cur -= 2;
  }
  return e;
}

}  // namespace checker_detail

/// Every legal index combination of the family with all box sizes <= nmax,
/// in deterministic order. The C families follow the printed case splits,
/// including the overlapping boundary cases; A4 additionally carries the
/// i = j loop case with a delta on the right side.
inline std::vector<RelationInstance> enumerate_instances(const std::string& family, int nmax) {
  using checker_detail::g;
  using checker_detail::par;
  std::vector<RelationInstance> out;
  auto add = [&](std::string params, ExprPtr lhs, ExprPtr rhs, int dpow = 0) {
    out.push_back({family, std::move(params), std::move(lhs), std::move(rhs), dpow});
  };

  if (family == "A1" || family == "C1") {
    for (int j = 0; j <= nmax; ++j)
      add("a:" + par({j}), compose(g(Generator::pin(0, j, 0)), 1, g(Generator::unit())),
          g(Generator::id(j)));
    for (int n = 0; n <= nmax; ++n)
      for (int i = 0; i <= n; ++i)
        add("b:" + par({i, n}), compose(g(Generator::pin(i, 0, n)), 2, g(Generator::unit())),
            g(Generator::id(n)));
    return out;
  }
  if (family == "A2" || family == "C2") {
    for (int n = 0; n + 4 <= nmax; ++n)
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n + 2; ++j) {
          if (i + 1 >= j) continue;
          add(par({i, j, n}), compose(g(Generator::cap(i, n)), 1, g(Generator::cap(j, n + 2))),
              compose(g(Generator::cap(j - 2, n)), 1, g(Generator::cap(i, n + 2))));
        }
    return out;
  }
  if (family == "A3" || family == "C3") {
    for (int n = 0; n + 4 <= nmax; ++n)
      for (int i = 0; i <= n + 2; ++i)
        for (int j = 0; j <= n; ++j) {
          if (i > j) continue;
          add(par({i, j, n}), compose(g(Generator::cup(i, n + 2)), 1, g(Generator::cup(j, n))),
              compose(g(Generator::cup(j + 2, n + 2)), 1, g(Generator::cup(i, n))));
        }
    return out;
  }
  if (family == "A4" || family == "C4") {
    for (int n = 0; n + 2 <= nmax; ++n)
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
          ExprPtr lhs = compose(g(Generator::cap(i, n)), 1, g(Generator::cup(j, n)));
          if (i < j - 1)
            add(par({i, j, n}), std::move(lhs),
                compose(g(Generator::cup(j - 2, n - 2)), 1, g(Generator::cap(i, n - 2))));
          else if (i == j + 1 || i + 1 == j)
            add(par({i, j, n}), std::move(lhs), g(Generator::id(n)));
          else if (i > j + 1)
            add(par({i, j, n}), std::move(lhs),
                compose(g(Generator::cup(j, n - 2)), 1, g(Generator::cap(i - 2, n - 2))));
          else if (family == "A4")  // i == j: free loop worth delta
            add(par({i, j, n}), std::move(lhs), g(Generator::id(n)), 1);
        }
    return out;
  }
  if (family == "A5" || family == "C5") {
    for (int n = 0; n <= nmax; ++n)
      for (int k = 0; n + k <= nmax; ++k)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i + 2 <= n + k; ++i) {
            ExprPtr lhs =
                compose(g(Generator::cap(i, n + k - 2)), 1, g(Generator::pin(j, k, n)));
            if (i + 1 < j)
              add(par({i, j, k, n}), std::move(lhs),
                  compose(g(Generator::pin(j - 2, k, n - 2)), 1, g(Generator::cap(i, n - 2))));
            else if (j < i + 1 && i + 1 < j + k)
              add(par({i, j, k, n}), std::move(lhs),
                  compose(g(Generator::pin(j, k - 2, n)), 2, g(Generator::cap(i - j, k - 2))));
            else if (i + 1 > j + k)
              add(par({i, j, k, n}), std::move(lhs),
                  compose(g(Generator::pin(j, k, n - 2)), 1, g(Generator::cap(i - k, n - 2))));
          }
    return out;
  }
  if (family == "A6" || family == "C6") {
    for (int n = 0; n <= nmax; ++n)
      for (int k = 0; n + k + 2 <= nmax; ++k)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= n + k; ++i) {
            auto lhs = [&] {
              return compose(g(Generator::cup(i, n + k)), 1, g(Generator::pin(j, k, n)));
            };
            if (i <= j)
              add(par({i, j, k, n}) + ":1", lhs(),
                  compose(g(Generator::pin(j + 2, k, n + 2)), 1, g(Generator::cup(i, n))));
            if (j <= i && i <= j + k)
              add(par({i, j, k, n}) + ":2", lhs(),
                  compose(g(Generator::pin(j, k + 2, n)), 2, g(Generator::cup(i - j, k))));
            if (i >= j + k)
              add(par({i, j, k, n}) + ":3", lhs(),
                  compose(g(Generator::pin(j, k, n + 2)), 1, g(Generator::cup(i - k, n))));
          }
    return out;
  }
  if (family == "A7" || family == "C7") {
    for (int i = 0; i <= nmax; ++i)
      for (int m = 0; i + m <= nmax; ++m)
        for (int j = 0; j <= nmax; ++j)
          for (int k = 0; k <= nmax; ++k)
            for (int l = 0; i + m + j + k + l <= nmax; ++l) {
              int n = i + m;
              add(par({i, j, k, l, n}),
                  compose(g(Generator::pin(i + j, k, n + j + l)), 1,
                          g(Generator::pin(i, j + l, n))),
                  compose(g(Generator::pin(i, j + k + l, n)), 2,
                          g(Generator::pin(j, k, j + l))));
            }
    return out;
  }
  if (family == "C8") {
    for (int i = 0; i <= nmax; ++i)
      for (int k = 0; k <= nmax; ++k)
        for (int m = 0; i + k + m <= nmax; ++m)
          for (int j = 0; j <= nmax; ++j)
            for (int l = 0; i + k + m + j + l <= nmax; ++l) {
              int n = i + k + m;
              ExprPtr lhs = compose(g(Generator::pin(i + j + k, l, n + j)), 1,
                                    g(Generator::pin(i, j, n)));
              ExprPtr rhs = act(
                  compose(g(Generator::pin(i, j, n + l)), 1, g(Generator::pin(i + k, l, n))),
                  RibbonBraid::eps(3, 2));
              add(par({i, j, k, l, n}), std::move(lhs), std::move(rhs));
            }
    return out;
  }
  if (family == "C9") {
    for (int n = 0; 3 * n <= nmax; ++n)
      add(par({n}), checker_detail::rotation_expr(n),
          act(g(Generator::id(n)), RibbonBraid::theta(1, 1)));
    return out;
  }
  throw Error("enumerate_instances: unknown family " + family);
}

inline const std::vector<std::string>& all_relation_families() {
  static const std::vector<std::string> fams = {"A1", "A2", "A3", "A4", "A5", "A6", "A7",
                                                "C1", "C2", "C3", "C4", "C5", "C6", "C7",
                                                "C8", "C9"};
  return fams;
}

/// Evaluates both sides of every instance in the TL backend and compares
/// the matrices exactly.
inline Report check_relations(const std::string& family, int nmax) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  std::vector<std::string> fams =
      family == "all" ? all_relation_families() : std::vector<std::string>{family};
  for (const std::string& fam : fams) {
    for (const RelationInstance& inst : enumerate_instances(fam, nmax)) {
      if (inst.lhs->type() != inst.rhs->type())
        throw Error("relation instance is ill-typed: " + fam + " " + inst.params);
      TLMap lhs = tl_eval(inst.lhs);
      TLMap rhs = tl_eval(inst.rhs);
      if (inst.rhs_delta_power != 0) rhs = rhs.scaled(DeltaPoly::delta(inst.rhs_delta_power));
      bool ok = lhs == rhs;
      rep.rows.push_back({inst.family, inst.params, ok});
      if (!ok)
        rep.counterexamples.push_back({inst.family, inst.params, lhs.to_tsv(), rhs.to_tsv()});
    }
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// P(sigma o_i tau) = P(sigma) o_i P(tau) on random box-size tuples, with
/// the braid action realized by the TL backend (flip braiding, trivial
/// twist).
inline Report check_equivariance(int n, int trials, std::uint64_t seed) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  RandomExprGen gen(seed);
  for (int t = 0; t < trials; ++t) {
    int r = gen.uniform(1, std::max(1, n));
    int s = gen.uniform(0, std::max(1, n));
    int slot = gen.uniform(1, r);
    RibbonBraid sigma = gen.random_braid(r, gen.uniform(0, 6));
    RibbonBraid tau = gen.random_braid(s, gen.uniform(0, 6));
    RibbonBraid comp = sigma.compose_at(slot, tau);

    static const int size_choices[] = {0, 2, 2, 4};
    std::vector<int> flat(r + s - 1);
    for (int& v : flat) v = size_choices[gen.uniform(0, 3)];

    TLMap lhs = tl_perm_action(comp, flat);

    std::vector<int> tau_sizes(flat.begin() + (slot - 1), flat.begin() + (slot - 1) + s);
    TLMap ptau = tl_perm_action(tau, tau_sizes);
    // id (x) P(tau) (x) id on the flat factors
    std::vector<std::vector<int>> blocks;
    for (int q = 1; q < slot; ++q) blocks.push_back({flat[q - 1]});
    blocks.push_back(ptau.cod);
    for (size_t q = slot - 1 + s; q < flat.size(); ++q) blocks.push_back({flat[q]});

    TLMap embedded = TLMap::zero(flat, [&] {
      std::vector<int> cod(flat.begin(), flat.begin() + (slot - 1));
      cod.insert(cod.end(), ptau.cod.begin(), ptau.cod.end());
      cod.insert(cod.end(), flat.begin() + (slot - 1) + s, flat.end());
      return cod;
    }());
    {
      long long pre = 1, post = 1;
      for (int q = 0; q < slot - 1; ++q) pre *= box_dim(flat[q]);
      for (size_t q = slot - 1 + s; q < flat.size(); ++q) post *= box_dim(flat[q]);
      for (long long p = 0; p < pre; ++p)
        for (long long rr = 0; rr < ptau.rows(); ++rr)
          for (long long cc = 0; cc < ptau.cols(); ++cc) {
            if (ptau.at(rr, cc).is_zero()) continue;
            for (long long q = 0; q < post; ++q)
              embedded.at((p * ptau.rows() + rr) * post + q,
                          (p * ptau.cols() + cc) * post + q) = ptau.at(rr, cc);
          }
    }

    TLMap psigma = tl_block_perm_action(sigma, blocks);
    TLMap rhs = tl_compose(psigma, embedded);
    bool ok = lhs == rhs;
    rep.rows.push_back({"RB-equivariance",
                        "trial " + std::to_string(t) + " r=" + std::to_string(r) +
                            " s=" + std::to_string(s) + " i=" + std::to_string(slot),
                        ok});
    if (!ok)
      rep.counterexamples.push_back({"RB-equivariance", std::to_string(t), lhs.to_tsv(),
                                     rhs.to_tsv()});
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

/// Random standard forms; every applicable move must preserve the TL
/// evaluation exactly.
inline Report check_move_invariance(int trials, std::uint64_t seed, int size_budget = 8) {
  auto t0 = std::chrono::steady_clock::now();
  Report rep;
  RandomExprGen gen(seed);
  for (int t = 0; t < trials; ++t) {
    StandardForm sf = normalize(gen.expr(size_budget));
    TLMap base = tl_eval(sf);
    std::vector<Move> moves = applicable_moves(sf);
    bool ok = true;
    for (const Move& m : moves) {
      StandardForm moved = apply_move(sf, m);
      if (tl_eval(moved) != base) {
        ok = false;
        rep.counterexamples.push_back({"M" + std::to_string(m.family),
                                       "trial " + std::to_string(t), base.to_tsv(),
                                       tl_eval(moved).to_tsv()});
        break;
      }
    }
    rep.rows.push_back({"M-invariance",
                        "trial " + std::to_string(t) + " moves=" +
                            std::to_string(moves.size()),
                        ok});
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace apa
