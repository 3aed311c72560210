#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace surfact {

// Permutation of the points {0, ..., degree-1}, stored as an image table.
// Text I/O uses 1-based disjoint cycle notation: "(1,2,3)(4,5)", identity "()".
//
// Composition is function composition with the right factor applied first:
//   (p * q)(x) = p(q(x)).
class Permutation {
public:
  Permutation() : images_{0} {}
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  // Parses disjoint cycle notation. Points are 1-based and may appear at most
  // once. If degree is 0 the degree is inferred from the largest point;
  // otherwise it must be at least that large.
  static Permutation parse(std::string_view text, int degree = 0);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[point]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  Permutation power(std::int64_t exponent) const;
  // g * this * g^-1
  Permutation conjugated_by(const Permutation& g) const;

  // Least n >= 1 with p^n = identity (lcm of cycle lengths).
  std::uint64_t order() const;

  // Nontrivial cycles, 0-based, each rotated to start at its smallest point,
  // sorted by that point.
  std::vector<std::vector<int>> cycles() const;

  // Canonical cycle text (1-based). Round-trips bit-exactly through parse().
  std::string str() const;

  // Same permutation viewed on a larger point set (extra points fixed).
  Permutation extended_to(int new_degree) const;
  // Same permutation with all points shifted up by offset, on new_degree points.
  Permutation shifted(int offset, int new_degree) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

// lcm with overflow check; throws std::overflow_error.
std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b);

}  // namespace surfact
