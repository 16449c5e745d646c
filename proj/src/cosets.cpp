#include "cosetwalk/cosets.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "cosetwalk/error.hpp"

namespace cosetwalk {

SubgroupSpec make_subgroup(std::vector<Permutation> generators, std::size_t cap) {
  if (generators.empty()) throw InvalidParameterError("subgroup requires generators");
  unsigned degree = generators[0].degree();
  GroupElements elems = generate_group(GroupSpec::create(degree, generators), cap);
  return SubgroupSpec{std::move(generators), std::move(elems)};
}

SubgroupSpec trivial_subgroup(unsigned degree) {
  return make_subgroup({Permutation::identity(degree)});
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint32_t> parent_;
};

void require_subgroup(const GroupElements& G, const SubgroupSpec& S, const char* name) {
  if (S.elements.degree() != G.degree())
    throw SubgroupError(std::string(name) + " has degree " +
                        std::to_string(S.elements.degree()) + ", ambient group has " +
                        std::to_string(G.degree()));
  for (const auto& s : S.elements)
    if (!G.contains(s))
      throw SubgroupError(std::string(name) + " is not contained in the group (element " +
                          s.to_cycles() + " missing)");
}

}  // namespace

DoubleCosetDecomposition double_cosets(const GroupElements& G, const SubgroupSpec& H,
                                       const SubgroupSpec& K) {
  require_subgroup(G, H, "H");
  require_subgroup(G, K, "K");
  const std::size_t n = G.order();
  // Orbits of the two-sided action g -> h g k, generated by the generators
  // of H acting on the left and of K on the right.
  UnionFind uf(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (const auto& h : H.generators) uf.unite(i, *G.index_of(compose(h, G.at(i))));
    for (const auto& k : K.generators) uf.unite(i, *G.index_of(compose(G.at(i), k)));
  }
  // Roots are minimal indices, and elements are sorted, so the root element
  // is the lexicographically least member of its class.
  std::vector<std::uint32_t> root_to_class(n, UINT32_MAX);
  DoubleCosetDecomposition dec;
  dec.class_of.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t r = uf.find(i);
    if (root_to_class[r] == UINT32_MAX) {
      root_to_class[r] = static_cast<std::uint32_t>(dec.representatives.size());
      dec.representatives.push_back(G.at(r));
      dec.sizes.push_back(0);
    }
    dec.class_of[i] = root_to_class[r];
    ++dec.sizes[root_to_class[r]];
  }
  return dec;
}

unsigned type_of(const Permutation& g, unsigned r) {
  if (r > g.degree())
    throw InvalidParameterError("type parameter r=" + std::to_string(r) +
                                " exceeds degree " + std::to_string(g.degree()));
  unsigned count = 0;
  for (unsigned i = 0; i < r; ++i)
    if (g.apply(i) < r) ++count;
  return count;
}

std::vector<Permutation> left_coset_transversal(const std::vector<Permutation>& S,
                                                const SubgroupSpec& H) {
  if (S.empty()) return {};
  const std::size_t h = H.elements.order();
  if (S.size() % h != 0)
    throw PartitionError("set of size " + std::to_string(S.size()) +
                         " cannot be a union of cosets of a subgroup of order " +
                         std::to_string(h));
  std::vector<Permutation> sorted = S;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.size() != S.size()) throw PartitionError("set contains duplicates");
  std::unordered_set<Permutation, PermHash> members(sorted.begin(), sorted.end());
  std::unordered_set<Permutation, PermHash> marked;
  std::vector<Permutation> reps;
  for (const auto& s : sorted) {
    if (marked.count(s)) continue;
    reps.push_back(s);  // least unmarked element is least in its coset
    for (const auto& hh : H.elements) {
      Permutation member = compose(s, hh);
      if (!members.count(member))
        throw PartitionError("set is not a union of left cosets of H: " + s.to_cycles() +
                             " * " + hh.to_cycles() + " lies outside it");
      marked.insert(std::move(member));
    }
  }
  return reps;
}

SubgroupSpec young_subgroup(unsigned n, const std::vector<unsigned>& composition) {
  unsigned total = 0;
  for (unsigned c : composition) total += c;
  if (total != n) throw InvalidParameterError("composition does not sum to n");
  std::vector<Permutation> gens;
  unsigned offset = 0;
  for (unsigned c : composition) {
    for (unsigned i = 0; i + 1 < c; ++i) {
      std::string cyc = "(" + std::to_string(offset + i + 1) + " " +
                        std::to_string(offset + i + 2) + ")";
      gens.push_back(Permutation::parse_cycles(cyc, n));
    }
    offset += c;
  }
  if (gens.empty()) gens.push_back(Permutation::identity(n));
  return make_subgroup(std::move(gens));
}

}  // namespace cosetwalk
