#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cosetwalk/chain.hpp"
#include "cosetwalk/cosets.hpp"
#include "cosetwalk/error.hpp"
#include "cosetwalk/group.hpp"
#include "cosetwalk/rational.hpp"

namespace cosetwalk {

/// Nonnegative weight w on group elements with w(G) > 0, inducing the
/// driving measure Q(g) = w(g)/w(G). Only the (positive) support is stored.
class WeightFunction {
 public:
  /// Indicator weight of a nonempty set D.
  static WeightFunction uniform_on_set(const std::vector<Permutation>& D);
  /// From explicit entries; negative values and zero total are rejected,
  /// duplicate permutations accumulate.
  static WeightFunction from_entries(
      const std::vector<std::pair<Permutation, Rational>>& entries);
  /// Weight constant on conjugacy classes, from values on class
  /// representatives. Every element of G must be covered; conflicting values
  /// for one class are an error.
  static WeightFunction class_function(
      const GroupElements& G,
      const std::vector<std::pair<Permutation, Rational>>& class_values);

  const Rational& total() const { return total_; }
  /// w(g); zero off the support.
  Rational at(const Permutation& g) const;
  /// w(S) = sum over S.
  Rational weight_of_set(const std::vector<Permutation>& S) const;
  /// Support in sorted order (deterministic iteration).
  std::vector<std::pair<Permutation, Rational>> support_sorted() const;
  std::size_t support_size() const { return support_.size(); }
  /// Same weight scaled by a positive rational.
  WeightFunction scaled(const Rational& factor) const;

 private:
  std::unordered_map<Permutation, Rational, PermHash> support_;
  Rational total_;
};

/// Counterexample to the lumping condition:
/// w(k x H y K) != w(x H y K).
struct LumpingWitness {
  Permutation k, x, y_rep;
  Rational lhs, rhs;
};

struct LumpingVerdict {
  bool lumps;
  std::optional<LumpingWitness> witness;  // present iff !lumps
};

/// Lumping failed where it was required; carries the counterexample.
class WeightLumpingError : public Error {
 public:
  WeightLumpingError(const std::string& what, LumpingWitness witness)
      : Error(what), witness_(std::move(witness)) {}
  const LumpingWitness& witness() const { return witness_; }

 private:
  LumpingWitness witness_;
};

/// Does the walk driven by w lump on H\G/K?  Checks
/// w(k x HyK) = w(x HyK) for k over the generators of K only (words in the
/// generators follow by induction, the x-quantifier absorbing partial
/// products), x over all of G, y over double-coset representatives.
LumpingVerdict check_lumping_hk(const GroupElements& G, const SubgroupSpec& H,
                                const SubgroupSpec& K, const WeightFunction& w);

/// Decomposition-reuse form: same verdict, for callers that already hold the
/// H\G/K decomposition and the generators of K.
LumpingVerdict check_lumping_hk(const GroupElements& G, const DoubleCosetDecomposition& dec,
                                const std::vector<Permutation>& k_generators,
                                const WeightFunction& w);

/// Same verdict via the K = H criterion: w(xH) = w(yH) whenever HxH = HyH.
LumpingVerdict check_lumping_hh(const GroupElements& G, const SubgroupSpec& H,
                                const WeightFunction& w);

/// Slow reference form of check_lumping_hk quantifying k over all of K
/// (test oracle for the generator reduction).
LumpingVerdict check_lumping_hk_unreduced(const GroupElements& G, const SubgroupSpec& H,
                                          const SubgroupSpec& K, const WeightFunction& w);

/// The lumped chain on H\G/K: row HxK has entries w(x^{-1} HyK)/w(G).
/// Throws WeightLumpingError when the walk does not lump.
RationalChain lumped_matrix(const GroupElements& G, const SubgroupSpec& H,
                            const SubgroupSpec& K, const WeightFunction& w);

/// A transitive action of G on points 0..num_points-1.
struct GroupAction {
  std::size_t num_points;
  std::size_t alpha;  // base point
  std::function<std::size_t(std::size_t, const Permutation&)> act;
};

/// The walk projected to a transitive action through x -> alpha x: the chain
/// on the points of Omega with p(beta, gamma) = w({g : beta g = gamma})/w(G).
/// This projection is always Markov (the K = {1} case of the lumping
/// criterion); whether it lumps further onto the H-orbits is what
/// check_orbit_condition decides.
RationalChain induced_orbit_chain(const GroupElements& G, const WeightFunction& w,
                                  const GroupAction& action);

/// Orbit-wise lumping condition: the induced chain on the H-orbits of
/// Omega exists iff the step probability into alpha is constant on each
/// H-orbit. Verifies that the action is transitive and that H is exactly the
/// stabilizer of alpha.
LumpingVerdict check_orbit_condition(const GroupElements& G, const SubgroupSpec& H,
                                     const WeightFunction& w, const GroupAction& action);

}  // namespace cosetwalk
