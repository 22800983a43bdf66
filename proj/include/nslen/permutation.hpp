#ifndef NSLEN_PERMUTATION_HPP
#define NSLEN_PERMUTATION_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nslen {

/// Internal point index. Points are 0-based inside the library and 1-based
/// in every piece of text it reads or writes.
using Point = std::uint32_t;

/// A bijection of {0, ..., degree-1}, stored as its image array.
///
/// Products are read left to right: `p * q` applies `p` first and then `q`,
/// so `(p * q)(i) == q(p(i))`. This matches exponent notation i^(pq).
class Permutation {
public:
  Permutation() = default;

  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);

  /// Takes ownership of an image array; throws if it is not a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  Point image(Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  /// Smallest point not fixed, or degree() for the identity.
  Point first_moved_point() const noexcept;

  Permutation operator*(const Permutation &q) const;
  Permutation &operator*=(const Permutation &q);

  Permutation inverse() const;

  /// p^k for k >= 0.
  Permutation pow(std::uint64_t k) const;

  /// Conjugate by g: g^-1 * this * g.
  Permutation conjugate_by(const Permutation &g) const;

  /// Least m >= 1 with p^m = identity (lcm of the cycle lengths).
  std::uint64_t order() const;

  /// Disjoint cycles of length >= 2, each starting at its least point,
  /// sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  /// Cycle notation, 1-based, canonical; "()" for the identity.
  std::string to_string() const;

  /// Same permutation on a larger point set (extra points fixed).
  Permutation extended(std::size_t degree) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) {
    return a.images_ <=> b.images_;
  }

private:
  std::vector<Point> images_;
};

/// Parses cycle notation such as "(1 2 3)(4 5)" or "()" on the given degree.
/// Throws ParseError with reason Malformed, RepeatedPoint or PointOutOfRange.
Permutation parse_permutation(std::string_view text, std::size_t degree);

/// Product p * q (p first). Throws on degree mismatch.
Permutation compose(const Permutation &p, const Permutation &q);

Permutation inverse(const Permutation &p);

std::uint64_t element_order(const Permutation &p);

/// x^-1 y^-1 x y.
Permutation commutator(const Permutation &x, const Permutation &y);

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept { return p.hash(); }
};

} // namespace nslen

#endif // NSLEN_PERMUTATION_HPP
