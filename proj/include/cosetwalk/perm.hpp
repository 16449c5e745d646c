#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cosetwalk {

/// Permutation of {1..n}, stored as a dense image array (0-based internally;
/// cycle notation at parse/print boundaries is 1-based).
///
/// The whole library uses the right-action convention: points are written to
/// the left, so a point p is sent to p^g = images[p], and compose(p, q) acts
/// as "first p, then q".
class Permutation {
 public:
  /// Identity of the given degree.
  static Permutation identity(unsigned degree);
  /// From a 0-based image array; validates that it is a bijection.
  static Permutation from_images(std::vector<unsigned> images);
  /// From a 1-based image array (the external convention).
  static Permutation from_images_one_based(const std::vector<unsigned>& images);
  /// Parses cycle notation, e.g. "(1 2)(3 4 5)"; "()" is the identity.
  /// Whitespace-insensitive; commas between points also accepted.
  static Permutation parse_cycles(std::string_view text, unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned apply(unsigned point) const { return images_[point]; }  // 0-based
  const std::vector<unsigned>& images() const { return images_; }
  std::vector<unsigned> images_one_based() const;

  Permutation inverse() const;
  bool is_identity() const;
  /// Canonical cycle notation: cycles sorted by least moved point, "()" for
  /// the identity.
  std::string to_cycles() const;

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);
  friend Permutation compose(const Permutation& p, const Permutation& q);

  std::size_t hash() const;

 private:
  explicit Permutation(std::vector<unsigned> images) : images_(std::move(images)) {}
  std::vector<unsigned> images_;
};

/// Right-action composition: point p goes to q(p(point)), i.e. "first p then q".
Permutation compose(const Permutation& p, const Permutation& q);

struct PermHash {
  std::size_t operator()(const Permutation& p) const { return p.hash(); }
};

}  // namespace cosetwalk
