#pragma once

#include <cstdint>
#include <vector>

#include "cosetwalk/group.hpp"
#include "cosetwalk/perm.hpp"

namespace cosetwalk {

/// A subgroup given by generators together with its enumerated elements.
struct SubgroupSpec {
  std::vector<Permutation> generators;
  GroupElements elements;
};

SubgroupSpec make_subgroup(std::vector<Permutation> generators,
                           std::size_t cap = kDefaultEnumerationCap);
SubgroupSpec trivial_subgroup(unsigned degree);

/// Partition of a group into double cosets H\G/K.
///
/// Classes are ordered by their representative (the lexicographically least
/// image array in the class), so the output is deterministic.
struct DoubleCosetDecomposition {
  std::vector<Permutation> representatives;
  std::vector<std::size_t> sizes;
  std::vector<std::uint32_t> class_of;  // indexed by element index in G
  std::size_t count() const { return representatives.size(); }
};

/// Throws SubgroupError unless H and K are contained in G.
DoubleCosetDecomposition double_cosets(const GroupElements& G, const SubgroupSpec& H,
                                       const SubgroupSpec& K);

/// |{1..r}g ∩ {1..r}|, the double-coset index for Sym_r x Sym_{n-r} in Sym_n.
unsigned type_of(const Permutation& g, unsigned r);

/// One representative (the least element) per left coset yH contained in S.
/// Throws PartitionError when S is not a union of left cosets of H.
std::vector<Permutation> left_coset_transversal(const std::vector<Permutation>& S,
                                                const SubgroupSpec& H);

/// Young subgroup Sym_{c1} x Sym_{c2} x ... on consecutive blocks of a
/// composition of n.
SubgroupSpec young_subgroup(unsigned n, const std::vector<unsigned>& composition);

}  // namespace cosetwalk
