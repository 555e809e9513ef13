#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace apa {

/// Library-wide error type. Parse errors carry a byte offset into the input.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Permutation of {1,..,n}, stored as the image sequence: images[i-1] is
/// where i goes. Composition is left-to-right: (p.then(q))(i) = q(p(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 1 || v > static_cast<int>(images_.size()) || seen[v - 1])
        throw Error("Permutation: images are not a bijection");
      seen[v - 1] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = i + 1;
    return Permutation(std::move(im));
  }

  static Permutation transposition(int n, int i) {
    Permutation p = identity(n);
    std::swap(p.images_[i - 1], p.images_[i]);
    return p;
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  Permutation then(const Permutation& q) const {
    if (q.degree() != degree()) throw Error("Permutation::then: degree mismatch");
    std::vector<int> im(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) im[i] = q.images_[images_[i] - 1];
    return Permutation(std::move(im));
  }

  Permutation inverse() const {
    std::vector<int> im(images_.size());
    for (size_t i = 0; i < images_.size(); ++i) im[images_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(im));
  }

  bool is_identity() const {
    for (size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i) + 1) return false;
    return true;
  }

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return !(*this == o); }

 private:
  std::vector<int> images_;
};

}  // namespace apa
