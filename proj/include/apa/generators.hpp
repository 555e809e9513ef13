#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "apa/permutation.hpp"

namespace apa {

/// Arity signature of a tangle: input box sizes (k_1,..,k_r) and the
/// output box size k_0.
struct TangleType {
  std::vector<int> inputs;
  int output = 0;

  bool operator==(const TangleType& o) const {
    return inputs == o.inputs && output == o.output;
  }
  bool operator!=(const TangleType& o) const { return !(*this == o); }

  std::string to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < inputs.size(); ++i) {
      if (i) os << ',';
      os << inputs[i];
    }
    os << ';' << output << ')';
    return os.str();
  }
};

/// Generating tangles. Parameters follow the index bounds of the defining
/// pictures:
///   Unit          type (;0)
///   Id(n)         type (n;n)
///   Cap(i,n)      type (n+2;n),   0 <= i <= n, caps input points i+1,i+2
///   Cup(i,n)      type (n;n+2),   0 <= i <= n, cups output points i+1,i+2
///   Pin(i,j,n)    type (n,j;n+j), 0 <= i <= n, inserts the j-block after
///                 position i of the n ambient points
struct Generator {
  enum class Kind { Unit, Id, Cap, Cup, Pin };
  Kind kind = Kind::Unit;
  int i = 0, j = 0, n = 0;

  static Generator unit() { return {Kind::Unit, 0, 0, 0}; }
  static Generator id(int n) {
    check(n >= 0, "id: n must be >= 0");
    return {Kind::Id, 0, 0, n};
  }
  static Generator cap(int i, int n) {
    check(n >= 0 && i >= 0 && i <= n, "cap: need 0 <= i <= n");
    return {Kind::Cap, i, 0, n};
  }
  static Generator cup(int i, int n) {
    check(n >= 0 && i >= 0 && i <= n, "cup: need 0 <= i <= n");
    return {Kind::Cup, i, 0, n};
  }
  static Generator pin(int i, int j, int n) {
    check(n >= 0 && j >= 0 && i >= 0 && i <= n, "p: need 0 <= i <= n, j >= 0");
    return {Kind::Pin, i, j, n};
  }

  TangleType type() const {
    switch (kind) {
      case Kind::Unit: return {{}, 0};
      case Kind::Id: return {{n}, n};
      case Kind::Cap: return {{n + 2}, n};
      case Kind::Cup: return {{n}, n + 2};
      case Kind::Pin: return {{n, j}, n + j};
    }
    throw Error("unreachable");
  }

  bool operator==(const Generator& o) const {
    return kind == o.kind && i == o.i && j == o.j && n == o.n;
  }
  bool operator!=(const Generator& o) const { return !(*this == o); }

  std::string render() const {
    std::ostringstream os;
    switch (kind) {
      case Kind::Unit: os << "u"; break;
      case Kind::Id: os << "(id " << n << ")"; break;
      case Kind::Cap: os << "(cap " << i << ' ' << n << ")"; break;
      case Kind::Cup: os << "(cup " << i << ' ' << n << ")"; break;
      case Kind::Pin: os << "(p " << i << ' ' << j << ' ' << n << ")"; break;
    }
    return os.str();
  }

 private:
  static void check(bool ok, const char* msg) {
    if (!ok) throw Error(std::string("generator: ") + msg);
  }
};

}  // namespace apa
