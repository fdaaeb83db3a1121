#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace mcgkit {

/// A bijection of {0, ..., n-1}. Products compose left to right:
/// (p * q)(x) = q(p(x)), so a word g_1 g_2 ... acts by g_1 first.
class Permutation {
 public:
  using Point = std::uint32_t;

  Permutation() = default;
  /// Throws BadParameters unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Product of disjoint or overlapping cycles, applied left to right.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Order as the lcm of cycle lengths.
  std::uint64_t order() const;
  /// Cycle notation, "()" for the identity.
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// All n! permutations of degree n in lexicographic order of image arrays.
std::vector<Permutation> symmetric_group_elements(std::size_t n);

}  // namespace mcgkit
