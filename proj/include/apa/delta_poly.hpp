#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "apa/permutation.hpp"

namespace apa {

/// Polynomial in the loop parameter delta with integer coefficients.
/// coeff(k) is the coefficient of d^k; the representation never stores
/// trailing zeros, so equality is coefficient-wise.
class DeltaPoly {
 public:
  DeltaPoly() = default;
  DeltaPoly(std::int64_t c) {  // NOLINT: implicit by design
    if (c != 0) c_.push_back(c);
  }

  static DeltaPoly delta(int power = 1) {
    DeltaPoly p;
    p.c_.assign(power + 1, 0);
    p.c_[power] = 1;
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0;
  }

  DeltaPoly& operator+=(const DeltaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  DeltaPoly& operator-=(const DeltaPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend DeltaPoly operator+(DeltaPoly a, const DeltaPoly& b) { return a += b; }
  friend DeltaPoly operator-(DeltaPoly a, const DeltaPoly& b) { return a -= b; }
  friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b) {
    if (a.is_zero() || b.is_zero()) return DeltaPoly();
    DeltaPoly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  DeltaPoly& operator*=(const DeltaPoly& o) { return *this = *this * o; }

  bool operator==(const DeltaPoly& o) const { return c_ == o.c_; }
  bool operator!=(const DeltaPoly& o) const { return !(*this == o); }

  /// Sparse text form: nonzero terms joined with signs, e.g. "1+2*d-1*d^3".
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t k = 0; k < c_.size(); ++k) {
      if (c_[k] == 0) continue;
      std::int64_t v = c_[k];
      if (!s.empty()) s += (v > 0 ? "+" : "-");
      else if (v < 0) s += "-";
      std::string mag = std::to_string(v > 0 ? v : -v);
      if (k == 0) s += mag;
      else {
        s += mag + "*d";
        if (k > 1) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

  static DeltaPoly parse(const std::string& text) {
    DeltaPoly r;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    skip_ws();
    if (i == text.size()) throw Error("DeltaPoly::parse: empty input");
    while (i < text.size()) {
      skip_ws();
      std::int64_t sign = 1;
      if (text[i] == '+') { ++i; }
      else if (text[i] == '-') { sign = -1; ++i; }
      skip_ws();
      std::int64_t mag = 1;
      bool saw_digits = false;
      if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        mag = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          mag = mag * 10 + (text[i++] - '0');
        saw_digits = true;
      }
      int power = 0;
      if (i < text.size() && (text[i] == '*' || text[i] == 'd')) {
        if (text[i] == '*') ++i;
        if (i >= text.size() || text[i] != 'd')
          throw Error("DeltaPoly::parse: expected 'd' at offset " + std::to_string(i));
        ++i;
        power = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          power = 0;
          if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
            throw Error("DeltaPoly::parse: expected exponent at offset " + std::to_string(i));
          while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            power = power * 10 + (text[i++] - '0');
        }
      } else if (!saw_digits) {
        throw Error("DeltaPoly::parse: expected term at offset " + std::to_string(i));
      }
      r += DeltaPoly(sign * mag) * DeltaPoly::delta(power);
      skip_ws();
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

}  // namespace apa
