#include "cosetwalk/group.hpp"

#include <algorithm>
#include <deque>

#include "cosetwalk/error.hpp"

namespace cosetwalk {

GroupSpec GroupSpec::create(unsigned degree, std::vector<Permutation> generators) {
  if (generators.empty())
    throw InvalidParameterError("group spec requires at least one generator");
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw DegreeMismatchError("generator degree " + std::to_string(g.degree()) +
                                " does not match group degree " + std::to_string(degree));
  return GroupSpec{degree, std::move(generators)};
}

std::optional<std::uint32_t> GroupElements::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GroupElements generate_group(const GroupSpec& spec, std::size_t cap) {
  if (cap < 1) throw InvalidParameterError("enumeration cap must be >= 1");
  std::unordered_map<Permutation, std::uint32_t, PermHash> seen;
  std::deque<Permutation> frontier;
  Permutation id = Permutation::identity(spec.degree);
  seen.emplace(id, 0);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& gen : spec.generators) {
      Permutation next = compose(cur, gen);
      if (seen.emplace(next, 0).second) {
        if (seen.size() > cap)
          throw CapExceededError("group closure exceeded cap " + std::to_string(cap) +
                                     " (reached " + std::to_string(seen.size()) +
                                     " elements)",
                                 seen.size());
        frontier.push_back(std::move(next));
      }
    }
  }
  GroupElements g;
  g.degree_ = spec.degree;
  g.elems_.reserve(seen.size());
  for (const auto& [perm, _] : seen) g.elems_.push_back(perm);
  std::sort(g.elems_.begin(), g.elems_.end());
  g.index_.reserve(g.elems_.size());
  for (std::uint32_t i = 0; i < g.elems_.size(); ++i) g.index_.emplace(g.elems_[i], i);
  return g;
}

GroupElements symmetric_group(unsigned n) {
  if (n == 0) throw InvalidParameterError("symmetric group degree must be >= 1");
  std::vector<Permutation> gens;
  if (n == 1) {
    gens.push_back(Permutation::identity(1));
  } else {
    gens.push_back(Permutation::parse_cycles("(1 2)", n));
    std::string big = "(";
    for (unsigned i = 1; i <= n; ++i) {
      if (i > 1) big += ' ';
      big += std::to_string(i);
    }
    big += ')';
    gens.push_back(Permutation::parse_cycles(big, n));
  }
  return generate_group(GroupSpec::create(n, std::move(gens)));
}

const std::vector<std::uint32_t>& GroupElements::inverse_table() const {
  std::call_once(cache_->inv_once, [this] {
    auto& inv = cache_->inverses;
    inv.resize(elems_.size());
    for (std::uint32_t i = 0; i < elems_.size(); ++i)
      inv[i] = *index_of(elems_[i].inverse());
  });
  return cache_->inverses;
}

const std::vector<std::uint32_t>* GroupElements::left_division_table() const {
  constexpr std::size_t kTableGuard = 4'000'000;
  if (elems_.size() * elems_.size() > kTableGuard) return nullptr;
  std::call_once(cache_->div_once, [this] {
    const std::size_t n = elems_.size();
    auto& table = cache_->division;
    table.resize(n * n);
    for (std::uint32_t a = 0; a < n; ++a) {
      Permutation ainv = elems_[a].inverse();
      for (std::uint32_t b = 0; b < n; ++b)
        table[static_cast<std::size_t>(a) * n + b] = *index_of(compose(ainv, elems_[b]));
    }
    cache_->division_built = true;
  });
  return &cache_->division;
}

}  // namespace cosetwalk
