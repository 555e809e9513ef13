#pragma once

#include <gmpxx.h>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "apa/permutation.hpp"

namespace apa {

using Int = mpz_class;
using IVec = std::vector<Int>;
using IMat = std::vector<IVec>;  // row major: m[row][col]

inline IVec mat_apply(const IMat& m, const IVec& v) {
  IVec r(m.size(), 0);
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

inline IMat mat_mul(const IMat& a, const IMat& b) {
  IMat r(a.size(), IVec(b.empty() ? 0 : b[0].size(), 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < b[k].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

inline IMat mat_transpose(const IMat& m) {
  if (m.empty()) return {};
  IMat r(m[0].size(), IVec(m.size(), 0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) r[j][i] = m[i][j];
  return r;
}

/// Fusion ring presented by non-negative integer structure constants:
/// a (x) b = sum_c N[a][b][c] c.
struct FusionRing {
  std::vector<std::string> simples;
  int unit = 0;
  std::vector<IMat> N;  // N[a][b][c]

  int rank() const { return static_cast<int>(simples.size()); }

  int index_of(const std::string& label) const {
    for (int i = 0; i < rank(); ++i)
      if (simples[i] == label) return i;
    throw Error("fusion ring: unknown simple '" + label + "'");
  }

  /// Matrix of right multiplication by simple b: column a is a (x) b.
  IMat right_mult_matrix(int b) const {
    IMat m(rank(), IVec(rank(), 0));
    for (int a = 0; a < rank(); ++a)
      for (int c = 0; c < rank(); ++c) m[c][a] = N[a][b][c];
    return m;
  }

  IVec fuse(const IVec& v, const IVec& w) const {
    IVec r(rank(), 0);
    for (int a = 0; a < rank(); ++a) {
      if (v[a] == 0) continue;
      for (int b = 0; b < rank(); ++b) {
        if (w[b] == 0) continue;
        for (int c = 0; c < rank(); ++c) r[c] += v[a] * w[b] * N[a][b][c];
      }
    }
    return r;
  }

  /// Group ring of Z/n.
  static FusionRing cyclic(int n) {
    if (n < 1) throw Error("cyclic ring: n must be >= 1");
    FusionRing r;
    for (int i = 0; i < n; ++i) r.simples.push_back(std::to_string(i));
    r.unit = 0;
    r.N.assign(n, IMat(n, IVec(n, 0)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) r.N[a][b][(a + b) % n] = 1;
    return r;
  }

  /// Truncated Chebyshev fusion (the A_n Verlinde ring of the strand
  /// object): a (x) b = sum of c with |a-b|+1 <= c <= min(a+b-1, 2n+1-a-b),
  /// c = |a-b|+1 (mod 2), labels 1..n.
  static FusionRing tlj(int n) {
    if (n < 1) throw Error("tlj ring: n must be >= 1");
    FusionRing r;
    for (int i = 1; i <= n; ++i) r.simples.push_back(std::to_string(i));
    r.unit = 0;
    r.N.assign(n, IMat(n, IVec(n, 0)));
    for (int a = 1; a <= n; ++a)
      for (int b = 1; b <= n; ++b) {
        int lo = std::abs(a - b) + 1;
        int hi = std::min(a + b - 1, 2 * n + 1 - a - b);
        for (int c = lo; c <= hi; c += 2) r.N[a - 1][b - 1][c - 1] = 1;
      }
    return r;
  }

  /// Deligne product at the Grothendieck level: simples are pairs, labels
  /// "p,q", structure constants multiply.
  static FusionRing product(const FusionRing& x, const FusionRing& y) {
    FusionRing r;
    int ny = y.rank();
    for (int p = 0; p < x.rank(); ++p)
      for (int q = 0; q < ny; ++q) r.simples.push_back(x.simples[p] + "," + y.simples[q]);
    r.unit = x.unit * ny + y.unit;
    int n = r.rank();
    r.N.assign(n, IMat(n, IVec(n, 0)));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          r.N[a][b][c] = x.N[a / ny][b / ny][c / ny] * y.N[a % ny][b % ny][c % ny];
    return r;
  }
};

struct AxiomReport {
  bool unit_ok = true;
  bool assoc_ok = true;
  std::string witness;

  bool pass() const { return unit_ok && assoc_ok; }
  std::string to_string() const {
    std::ostringstream os;
    os << "unit\t" << (unit_ok ? "pass" : "FAIL") << '\n'
       << "associativity\t" << (assoc_ok ? "pass" : "FAIL") << '\n';
    if (!witness.empty()) os << "witness\t" << witness << '\n';
    return os.str();
  }
};

inline AxiomReport verify_axioms(const FusionRing& r) {
  AxiomReport rep;
  const int n = r.rank();
  for (int b = 0; b < n && rep.unit_ok; ++b)
    for (int c = 0; c < n; ++c) {
      Int want = (b == c) ? 1 : 0;
      if (r.N[r.unit][b][c] != want || r.N[b][r.unit][c] != want) {
        rep.unit_ok = false;
        rep.witness = "unit law at (b,c)=(" + r.simples[b] + "," + r.simples[c] + ")";
        break;
      }
    }
  for (int a = 0; a < n && rep.assoc_ok; ++a)
    for (int b = 0; b < n && rep.assoc_ok; ++b)
      for (int c = 0; c < n && rep.assoc_ok; ++c)
        for (int d = 0; d < n; ++d) {
          Int lhs = 0, rhs = 0;
          for (int e = 0; e < n; ++e) lhs += r.N[a][b][e] * r.N[e][c][d];
          for (int f = 0; f < n; ++f) rhs += r.N[b][c][f] * r.N[a][f][d];
          if (lhs != rhs) {
            rep.assoc_ok = false;
            rep.witness = "associativity at (a,b,c,d)=(" + r.simples[a] + "," + r.simples[b] +
                          "," + r.simples[c] + "," + r.simples[d] + ")";
            break;
          }
        }
  return rep;
}

/// Module tensor category data at the Grothendieck level: the fusion ring
/// of C, the simples of M with the action-by-m matrix, and the matrix of
/// the central functor Phi. The trace is its transpose (Frobenius
/// reciprocity on simples).
struct ModuleTensorData {
  FusionRing ring;
  std::vector<std::string> moduleSimples;
  int unitM = 0;
  IMat actionByM;  // column x is x (x) m over module simples
  IMat phi;        // |M| x |C|, column c is Phi(c) over module simples

  int module_rank() const { return static_cast<int>(moduleSimples.size()); }

  int module_index(const std::string& label) const {
    for (int i = 0; i < module_rank(); ++i)
      if (moduleSimples[i] == label) return i;
    throw Error("module data: unknown simple '" + label + "'");
  }

  IMat trace() const { return mat_transpose(phi); }

  void validate() const {
    if (static_cast<int>(phi.size()) != module_rank()) throw Error("module data: phi rows");
    for (const IVec& row : phi)
      if (static_cast<int>(row.size()) != ring.rank()) throw Error("module data: phi cols");
    for (int x = 0; x < module_rank(); ++x)
      if (phi[x][ring.unit] != ((x == unitM) ? 1 : 0))
        throw Error("module data: phi at the unit of C must be the unit of M");
  }
};

/// m^{(x)k} decomposed over the module simples.
inline IVec tensor_power_decomp(const ModuleTensorData& d, int k) {
  IVec v(d.module_rank(), 0);
  v[d.unitM] = 1;
  for (int t = 0; t < k; ++t) v = mat_apply(d.actionByM, v);
  return v;
}

/// Box object P[k] = Tr_C(m^{(x)k}) as a multiplicity vector over the
/// simples of C.
inline IVec box_vector(const ModuleTensorData& d, int k) {
  return mat_apply(d.trace(), tensor_power_decomp(d, k));
}

inline std::vector<IVec> box_table(const ModuleTensorData& d, int kmax) {
  std::vector<IVec> rows;
  IVec v(d.module_rank(), 0);
  v[d.unitM] = 1;
  IMat tr = d.trace();
  for (int k = 0; k <= kmax; ++k) {
    rows.push_back(mat_apply(tr, v));
    v = mat_apply(d.actionByM, v);
  }
  return rows;
}

inline std::string box_table_tsv(const ModuleTensorData& d, int kmax) {
  std::ostringstream os;
  auto rows = box_table(d, kmax);
  for (int k = 0; k <= kmax; ++k) {
    os << k;
    for (const Int& m : rows[k]) os << '\t' << m.get_str();
    os << '\n';
  }
  return os.str();
}

/// Near-group multiplicity f(k): f(1)=0, f(2)=1, f(k+1) = N(f(k)+f(k-1)).
inline Int near_group_f(int N, int k) {
  if (k < 1) throw Error("near_group_f: k must be >= 1");
  Int prev = 0, cur = 0;  // f(0) := 0 extends the recursion to k = 2
  for (int t = 2; t <= k; ++t) {
    Int next = (t == 2) ? Int(1) : Int(N) * (cur + prev);
    prev = cur;
    cur = next;
  }
  return k == 1 ? Int(0) : cur;
}

/// Closed form: sum over i of C(k-i, i-2) N^{k-i}, i = 2 .. floor(k/2)+1
/// (diagonal sums in Pascal's triangle).
inline Int near_group_f_closed(int N, int k) {
  if (k < 1) throw Error("near_group_f_closed: k must be >= 1");
  Int total = 0;
  for (int i = 2; i <= k / 2 + 1; ++i) {
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), k - i, i - 2);
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), N, k - i);
    total += binom * power;
  }
  return total;
}

/// The E6 counting pair: a_k = a_{k-1} + b_{k-1}, b_k = b_{k-1} + 2a_k - 1,
/// a_0 = 1, b_0 = 0.
inline std::pair<Int, Int> e6_ab(int k) {
  if (k < 0) throw Error("e6_ab: k must be >= 0");
  Int a = 1, b = 0;
  for (int t = 1; t <= k; ++t) {
    a = a + b;
    b = b + 2 * a - 1;
  }
  return {a, b};
}

namespace groth_detail {

inline IMat graph_adjacency(int n, const std::vector<std::pair<int, int>>& edges) {
  IMat m(n, IVec(n, 0));
  for (auto [u, v] : edges) {
    m[u][v] += 1;
    m[v][u] += 1;
  }
  return m;
}

/// Phi by the Chebyshev recursion Phi(c_{t+1}) = A.Phi(c_t) - Phi(c_{t-1})
/// with Phi(unit) the unit of M and A the action matrix of the generator.
/// Entries must stay non-negative; a negative entry means the module data
/// is incompatible with the ring.
inline IMat chebyshev_phi(int c_rank, int m_rank, int unitM, const IMat& gen_action) {
  IMat phi(m_rank, IVec(c_rank, 0));
  IVec prev(m_rank, 0), cur(m_rank, 0);
  cur[unitM] = 1;
  for (int t = 0; t < c_rank; ++t) {
    for (int x = 0; x < m_rank; ++x) {
      if (cur[x] < 0) throw Error("chebyshev phi: negative multiplicity");
      phi[x][t] = cur[x];
    }
    IVec next = mat_apply(gen_action, cur);
    for (int x = 0; x < m_rank; ++x) next[x] -= prev[x];
    prev = cur;
    cur = next;
  }
  return phi;
}

inline IMat identity_mat(int n) {
  IMat m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

/// The 17-simple bimodule category of the D10-E7 pair: two generators m
/// and m', fusion with each encoded by one edge colour. Both colour
/// classes split the vertex set into a 10-vertex and a 7-vertex component.
struct E7XGraph {
  std::vector<std::string> names = {"a", "b", "c", "d", "m", "n", "p", "q", "r",
                                    "s", "t", "u", "v", "w", "x", "y", "z"};
  std::vector<std::pair<int, int>> orange, blue;

  E7XGraph() {
    auto idx = [&](const std::string& s) {
      for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == s) return static_cast<int>(i);
      throw Error("e7x: bad vertex");
    };
    auto edges = [&](std::initializer_list<std::pair<const char*, const char*>> list) {
      std::vector<std::pair<int, int>> out;
      for (auto [u, v] : list) out.emplace_back(idx(u), idx(v));
      return out;
    };
    orange = edges({{"x", "c"}, {"c", "d"}, {"d", "m"}, {"m", "y"}, {"y", "q"},
                    {"q", "z"}, {"z", "s"}, {"s", "u"}, {"s", "b"}, {"a", "v"},
                    {"v", "t"}, {"t", "w"}, {"w", "p"}, {"r", "p"}, {"w", "n"}});
    blue = edges({{"x", "a"}, {"a", "b"}, {"b", "n"}, {"n", "y"}, {"y", "p"},
                  {"p", "z"}, {"z", "t"}, {"t", "u"}, {"t", "d"}, {"c", "v"},
                  {"v", "s"}, {"s", "w"}, {"w", "q"}, {"r", "q"}, {"w", "m"}});
  }
};

}  // namespace groth_detail

/// Built-in module tensor data. Names: group:N, tlj:n, ty:N, ng:N, d2n:n,
/// d4z, e6, e6d, e7x.
inline ModuleTensorData preset(const std::string& name) {
  using groth_detail::chebyshev_phi;
  using groth_detail::graph_adjacency;
  using groth_detail::identity_mat;

  std::string base = name;
  int param = -1;
  if (auto colon = name.find(':'); colon != std::string::npos) {
    base = name.substr(0, colon);
    try {
      param = std::stoi(name.substr(colon + 1));
    } catch (...) {
      throw Error("preset: bad parameter in '" + name + "'");
    }
  }

  ModuleTensorData d;
  if (base == "group") {
    if (param < 1) throw Error("preset group:N needs N >= 1");
    d.ring = FusionRing::cyclic(param);
    d.moduleSimples = d.ring.simples;
    d.unitM = 0;
    d.actionByM = d.ring.right_mult_matrix(param == 1 ? 0 : 1);
    d.phi = identity_mat(param);
  } else if (base == "tlj") {
    if (param < 1) throw Error("preset tlj:n needs n >= 1");
    d.ring = FusionRing::tlj(param);
    d.moduleSimples = d.ring.simples;
    d.unitM = 0;
    std::vector<std::pair<int, int>> path;
    for (int i = 0; i + 1 < param; ++i) path.emplace_back(i, i + 1);
    d.actionByM = graph_adjacency(param, path);
    d.phi = identity_mat(param);
  } else if (base == "ty" || base == "ng") {
    if (param < 1) throw Error("preset " + base + ":N needs N >= 1");
    const int N = param;
    d.ring = FusionRing::cyclic(N);
    d.moduleSimples = d.ring.simples;
    d.moduleSimples.push_back("m");
    d.unitM = 0;
    d.actionByM.assign(N + 1, IVec(N + 1, 0));
    for (int a = 0; a < N; ++a) d.actionByM[N][a] = 1;  // a (x) m = m
    for (int a = 0; a < N; ++a) d.actionByM[a][N] = 1;  // m (x) m ) a
    if (base == "ng") d.actionByM[N][N] = N;            // ... + N m
    d.phi.assign(N + 1, IVec(N, 0));
    for (int a = 0; a < N; ++a) d.phi[a][a] = 1;
  } else if (base == "d2n") {
    if (param < 2) throw Error("preset d2n:n needs n >= 2");
    const int n = param;
    d.ring = FusionRing::tlj(4 * n - 3);
    const int mr = 2 * n;
    for (int i = 1; i <= 2 * n - 2; ++i) d.moduleSimples.push_back(std::to_string(i));
    d.moduleSimples.push_back(std::to_string(2 * n - 1));
    d.moduleSimples.push_back(std::to_string(2 * n - 1) + "'");
    d.unitM = 0;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < 2 * n - 2; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(2 * n - 3, 2 * n - 2);
    edges.emplace_back(2 * n - 3, 2 * n - 1);
    d.actionByM = graph_adjacency(mr, edges);
    d.phi = chebyshev_phi(d.ring.rank(), mr, d.unitM, d.actionByM);
  } else if (base == "e6" || base == "e6d") {
    // 1 - m - x - pm - p path with s hanging off x
    d.moduleSimples = {"1", "m", "x", "pm", "p", "s"};
    d.unitM = 0;
    d.actionByM = graph_adjacency(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
    if (base == "e6") {
      d.ring = FusionRing::tlj(11);
      d.phi = chebyshev_phi(11, 6, 0, d.actionByM);
    } else {
      d.ring = FusionRing::tlj(3);
      d.ring.simples = {"1", "s", "p"};
      d.phi.assign(6, IVec(3, 0));
      d.phi[0][0] = 1;  // 1 -> 1
      d.phi[5][1] = 1;  // s -> s
      d.phi[4][2] = 1;  // p -> p
    }
  } else if (base == "d4z") {
    d.ring = FusionRing::product(FusionRing::tlj(5), FusionRing::cyclic(3));
    for (auto& label : d.ring.simples) {  // cyclic labels 0,1,2 name 1,3,3'
      auto comma = label.find(',');
      std::string q = label.substr(comma + 1);
      label = label.substr(0, comma + 1) + (q == "0" ? "1" : q == "1" ? "3" : "3'");
    }
    d.moduleSimples = {"1", "2", "3", "3'"};
    d.unitM = 0;
    d.actionByM = graph_adjacency(4, {{1, 0}, {1, 2}, {1, 3}});
    // Phi on the fifteen simples (p,q), p in A5, q in {1,3,3'}; column
    // order matches the product ring order p major, q minor.
    d.phi.assign(4, IVec(15, 0));
    auto set_phi = [&](int p, int q, std::initializer_list<int> targets) {
      for (int x : targets) d.phi[x][(p - 1) * 3 + q] += 1;
    };
    // q = 0 ('1'), targets by module index: 1->0, 2->1, 3->2, 3'->3
    set_phi(1, 0, {0});
    set_phi(2, 0, {1});
    set_phi(3, 0, {2, 3});
    set_phi(4, 0, {1});
    set_phi(5, 0, {0});
    // q = 1 ('3')
    set_phi(1, 1, {2});
    set_phi(2, 1, {1});
    set_phi(3, 1, {0, 3});
    set_phi(4, 1, {1});
    set_phi(5, 1, {2});
    // q = 2 ('3'')
    set_phi(1, 2, {3});
    set_phi(2, 2, {1});
    set_phi(3, 2, {0, 2});
    set_phi(4, 2, {1});
    set_phi(5, 2, {3});
  } else if (base == "e7x") {
    groth_detail::E7XGraph g;
    d.ring = FusionRing::tlj(17);
    d.moduleSimples = g.names;
    d.unitM = 14;  // vertex x
    d.actionByM = graph_adjacency(17, g.orange);
    IMat blue = graph_adjacency(17, g.blue);
    d.phi = chebyshev_phi(17, 17, d.unitM, blue);
  } else {
    throw Error("preset: unknown preset '" + name + "'");
  }
  d.validate();
  return d;
}

/// Parses the fusion-data text format:
///
///   [ring]
///   simples a b c
///   unit a
///   fuse a b -> c:1 d:2
///   [module]
///   simples x y
///   unit x
///   act x -> y:1
///   phi a -> x:1            (or: phi-recursion chebyshev b)
///
/// Products with the ring unit may be omitted from fuse lines; all other
/// unspecified products are zero.
inline ModuleTensorData load_fusion_data(const std::string& text) {
  ModuleTensorData d;
  enum class Sect { None, Ring, Module } sect = Sect::None;
  bool ring_simples_seen = false, module_simples_seen = false;
  std::vector<std::array<std::string, 3>> fuse_lines;  // a, b, rhs
  std::vector<std::pair<std::string, std::string>> act_lines, phi_lines;
  std::string cheb_generator;
  std::string ring_unit_label, module_unit_label;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw Error("fusion data, line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "[ring]") { sect = Sect::Ring; continue; }
    if (tok == "[module]") { sect = Sect::Module; continue; }
    if (sect == Sect::None) fail("content before a section header");
    if (tok == "simples") {
      std::vector<std::string>& target =
          sect == Sect::Ring ? d.ring.simples : d.moduleSimples;
      std::string s;
      while (ls >> s) target.push_back(s);
      (sect == Sect::Ring ? ring_simples_seen : module_simples_seen) = true;
    } else if (tok == "unit") {
      std::string s;
      if (!(ls >> s)) fail("unit needs a label");
      (sect == Sect::Ring ? ring_unit_label : module_unit_label) = s;
    } else if (tok == "fuse" && sect == Sect::Ring) {
      std::string a, b, arrow, rest;
      if (!(ls >> a >> b >> arrow) || arrow != "->") fail("fuse syntax: fuse a b -> c:m ...");
      std::getline(ls, rest);
      fuse_lines.push_back({a, b, rest});
    } else if (tok == "act" && sect == Sect::Module) {
      std::string x, arrow, rest;
      if (!(ls >> x >> arrow) || arrow != "->") fail("act syntax: act x -> y:m ...");
      std::getline(ls, rest);
      act_lines.emplace_back(x, rest);
    } else if (tok == "phi" && sect == Sect::Module) {
      std::string c, arrow, rest;
      if (!(ls >> c >> arrow) || arrow != "->") fail("phi syntax: phi c -> x:m ...");
      std::getline(ls, rest);
      phi_lines.emplace_back(c, rest);
    } else if (tok == "phi-recursion" && sect == Sect::Module) {
      std::string kind;
      if (!(ls >> kind) || kind != "chebyshev") fail("only chebyshev recursion is supported");
      if (!(ls >> cheb_generator)) fail("phi-recursion chebyshev needs the generator label");
    } else {
      fail("unknown directive '" + tok + "'");
    }
  }
  if (!ring_simples_seen || !module_simples_seen) throw Error("fusion data: missing simples");
  if (ring_unit_label.empty() || module_unit_label.empty())
    throw Error("fusion data: missing unit");

  d.ring.unit = d.ring.index_of(ring_unit_label);
  d.unitM = d.module_index(module_unit_label);
  const int cr = d.ring.rank(), mr = d.module_rank();
  d.ring.N.assign(cr, IMat(cr, IVec(cr, 0)));
  for (int b = 0; b < cr; ++b) {  // unit products default to the unit law
    d.ring.N[d.ring.unit][b][b] = 1;
    d.ring.N[b][d.ring.unit][b] = 1;
  }
  d.ring.N[d.ring.unit][d.ring.unit][d.ring.unit] = 1;

  auto parse_terms = [&](const std::string& rest, int size,
                         const std::function<int(const std::string&)>& index) {
    IVec v(size, 0);
    std::istringstream ts(rest);
    std::string term;
    while (ts >> term) {
      std::string label = term;
      long mult = 1;
      if (auto colon = term.rfind(':'); colon != std::string::npos) {
        label = term.substr(0, colon);
        try {
          mult = std::stol(term.substr(colon + 1));
        } catch (...) {
          throw Error("fusion data: bad multiplicity in '" + term + "'");
        }
      }
      v[index(label)] += mult;
    }
    return v;
  };
  auto ring_index = [&](const std::string& s) { return d.ring.index_of(s); };
  auto mod_index = [&](const std::string& s) { return d.module_index(s); };

  for (const auto& [a, b, rest] : fuse_lines) {
    IVec v = parse_terms(rest, cr, ring_index);
    int ai = d.ring.index_of(a), bi = d.ring.index_of(b);
    for (int c = 0; c < cr; ++c) d.ring.N[ai][bi][c] = v[c];
  }

  d.actionByM.assign(mr, IVec(mr, 0));
  for (const auto& [x, rest] : act_lines) {
    IVec v = parse_terms(rest, mr, mod_index);
    int xi = d.module_index(x);
    for (int y = 0; y < mr; ++y) d.actionByM[y][xi] = v[y];
  }

  if (!cheb_generator.empty()) {
    if (!phi_lines.empty()) throw Error("fusion data: give phi lines or a recursion, not both");
    if (d.ring.index_of(cheb_generator) != (cr > 1 ? 1 : 0))
      throw Error("fusion data: chebyshev generator must be the second listed simple");
    d.phi = groth_detail::chebyshev_phi(cr, mr, d.unitM, d.actionByM);
  } else {
    d.phi.assign(mr, IVec(cr, 0));
    for (const auto& [c, rest] : phi_lines) {
      IVec v = parse_terms(rest, mr, mod_index);
      int ci = d.ring.index_of(c);
      for (int x = 0; x < mr; ++x) d.phi[x][ci] = v[x];
    }
  }
  d.validate();
  return d;
}

}  // namespace apa
