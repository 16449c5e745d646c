#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cosetwalk/perm.hpp"

namespace cosetwalk {

/// Generators of a permutation group; all of the same degree.
struct GroupSpec {
  unsigned degree = 0;
  std::vector<Permutation> generators;

  static GroupSpec create(unsigned degree, std::vector<Permutation> generators);
};

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// The fully enumerated element set of a finite permutation group.
///
/// Elements are stored sorted by image array, so index 0 is the identity and
/// iteration order is deterministic. Immutable after construction.
class GroupElements {
 public:
  std::size_t order() const { return elems_.size(); }
  unsigned degree() const { return degree_; }
  const Permutation& at(std::size_t i) const { return elems_[i]; }
  const std::vector<Permutation>& elements() const { return elems_; }
  std::optional<std::uint32_t> index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return index_of(p).has_value(); }

  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }

  /// T[a*order+b] = index of elems[a]^{-1} * elems[b]. Built lazily and
  /// cached; empty optional when order^2 exceeds the table guard (4M entries).
  const std::vector<std::uint32_t>* left_division_table() const;
  /// inv[a] = index of elems[a]^{-1} (always available).
  const std::vector<std::uint32_t>& inverse_table() const;

  friend GroupElements generate_group(const GroupSpec& spec, std::size_t cap);

 private:
  GroupElements() = default;
  unsigned degree_ = 0;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, std::uint32_t, PermHash> index_;

  struct Cache {
    std::once_flag div_once, inv_once;
    std::vector<std::uint32_t> division;
    bool division_built = false;
    std::vector<std::uint32_t> inverses;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Breadth-first closure of the generators under composition.
/// Throws CapExceededError (carrying the count reached) when the closure
/// grows past `cap`.
GroupElements generate_group(const GroupSpec& spec,
                             std::size_t cap = kDefaultEnumerationCap);

/// Convenience: Sym_n from the standard generators (1 2) and (1 2 ... n).
GroupElements symmetric_group(unsigned n);

}  // namespace cosetwalk
