#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace mcgkit {

/// One letter of a word: a generator id raised to +1 or -1.
struct Letter {
  int gen = 0;
  int exp = 1;

  Letter inverse() const { return {gen, -exp}; }
  bool cancels(const Letter& other) const {
    return gen == other.gen && exp == -other.exp;
  }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A word in the free group on generator ids 0..n-1. The empty word is the
/// identity. Words are not reduced implicitly; use free_reduce.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word generator(int gen, int exp = 1) { return Word{{gen, exp}}; }
  /// gen^k expanded into |k| unit letters.
  static Word power(int gen, int k);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  void push_back(Letter l) { letters_.push_back(l); }
  void append(const Word& w);

  Word inverse() const;
  /// Rotation moving the first `k` letters to the end.
  Word cyclic_shift(std::size_t k) const;
  /// Concatenation `w^k` (k may be negative).
  Word pow(int k) const;
  /// Largest generator id used, or -1 for the empty word.
  int max_generator() const;
  /// Sum of exponents of `gen`.
  int exponent_sum(int gen) const;

  friend Word operator*(const Word& a, const Word& b) {
    Word r = a;
    r.append(b);
    return r;
  }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Letter> letters_;
};

/// The unique freely reduced word equal to `w` in the free group.
Word free_reduce(const Word& w);

bool is_freely_reduced(const Word& w);

/// Commutator a b a^-1 b^-1.
Word commutator(const Word& a, const Word& b);

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

}  // namespace mcgkit
