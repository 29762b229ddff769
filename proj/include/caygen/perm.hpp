#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace caygen {

/// An element of the symmetric group S_n stored as an image table.
///
/// Points are 0-based internally: `images()[i]` is the image of point i.
/// Every textual format (parse/format helpers below) is 1-based.
/// Products follow a single convention everywhere in the library:
/// `compose(p, q)` applies q first, then p.
class Permutation {
 public:
  /// Identity of degree n (n >= 1).
  explicit Permutation(int n);

  /// Validates that `images` is a bijection on {0..n-1}.
  static Permutation from_images(std::vector<int> images);

  /// Same, but from a 1-based image list such as {3, 1, 2}.
  static Permutation from_one_based(std::span<const int> images);

  /// The transposition swapping 1-based points a and b.
  static Permutation transposition(int n, int a, int b);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  std::span<const int> images() const noexcept { return images_; }
  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> images, bool /*trusted*/) : images_(std::move(images)) {}

  std::vector<int> images_;

  friend Permutation compose(const Permutation&, const Permutation&);
  friend Permutation inverse(const Permutation&);
  friend Permutation unrank(std::uint64_t, int);
};

/// An unordered pair of distinct 1-based points, normalized so that a < b.
struct Transposition {
  int a = 1;
  int b = 2;

  /// Normalizes the order; throws InvalidArgument when the points coincide or are < 1.
  static Transposition make(int i, int j);

  Permutation to_permutation(int n) const;

  friend bool operator==(const Transposition&, const Transposition&) = default;
  friend auto operator<=>(const Transposition&, const Transposition&) = default;
};

enum class Parity { even, odd };

/// x -> p(q(x)). Throws InvalidArgument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// g o x o g^-1.
Permutation conjugate(const Permutation& g, const Permutation& x);
Parity parity(const Permutation& p);

/// n!, throwing CapacityError when it does not fit in 64 bits (n > 20).
std::uint64_t factorial(int n);

/// Lexicographic rank via the Lehmer code; identity is 0, reversal is n!-1.
std::uint64_t rank(const Permutation& p);
/// Inverse of rank(). Throws InvalidArgument when r >= n!.
Permutation unrank(std::uint64_t r, int n);

/// Parses "3 1 2" (one-line images) or "(1 3 2)(4 5)" (cycles, "()" is the identity).
/// Cycle input needs the degree; for one-line input n may be 0 (inferred) or must match.
Permutation parse_permutation(std::string_view text, int n = 0);
/// "3 1 2"
std::string format_one_line(const Permutation& p);
/// "(1 3 2)", identity as "()"
std::string format_cycles(const Permutation& p);

}  // namespace caygen
