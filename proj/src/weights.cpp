#include "cosetwalk/weights.hpp"

#include <algorithm>

namespace cosetwalk {

WeightFunction WeightFunction::uniform_on_set(const std::vector<Permutation>& D) {
  if (D.empty()) throw InvalidParameterError("indicator weight of an empty set has w(G) = 0");
  std::vector<std::pair<Permutation, Rational>> entries;
  entries.reserve(D.size());
  for (const auto& d : D) entries.emplace_back(d, Rational(1));
  return from_entries(entries);
}

WeightFunction WeightFunction::from_entries(
    const std::vector<std::pair<Permutation, Rational>>& entries) {
  WeightFunction w;
  w.total_ = Rational(0);
  for (const auto& [perm, value] : entries) {
    if (value.signum() < 0)
      throw InvalidParameterError("weight of " + perm.to_cycles() + " is negative");
    if (value.is_zero()) continue;
    auto [it, inserted] = w.support_.emplace(perm, value);
    if (!inserted) it->second += value;
    w.total_ += value;
  }
  if (w.total_.signum() <= 0)
    throw InvalidParameterError("weight function must have w(G) > 0");
  return w;
}

WeightFunction WeightFunction::class_function(
    const GroupElements& G,
    const std::vector<std::pair<Permutation, Rational>>& class_values) {
  const std::size_t n = G.order();
  // Conjugacy classes by conjugating with every group element.
  std::vector<std::uint32_t> class_id(n, UINT32_MAX);
  std::vector<std::vector<std::uint32_t>> classes;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (class_id[i] != UINT32_MAX) continue;
    std::vector<std::uint32_t> members;
    for (const auto& x : G) {
      Permutation conj = compose(compose(x.inverse(), G.at(i)), x);
      std::uint32_t idx = *G.index_of(conj);
      if (class_id[idx] == UINT32_MAX) {
        class_id[idx] = static_cast<std::uint32_t>(classes.size());
        members.push_back(idx);
      }
    }
    classes.push_back(std::move(members));
  }
  std::vector<std::optional<Rational>> value_of_class(classes.size());
  for (const auto& [rep, value] : class_values) {
    if (value.signum() < 0)
      throw InvalidParameterError("class value for " + rep.to_cycles() + " is negative");
    auto idx = G.index_of(rep);
    if (!idx) throw InvalidParameterError("class representative " + rep.to_cycles() +
                                          " is not in the group");
    std::uint32_t c = class_id[*idx];
    if (value_of_class[c] && *value_of_class[c] != value)
      throw InvalidParameterError("conflicting values for the class of " + rep.to_cycles());
    value_of_class[c] = value;
  }
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (!value_of_class[c])
      throw InvalidParameterError("class of " + G.at(classes[c][0]).to_cycles() +
                                  " not covered by the given class values");
  std::vector<std::pair<Permutation, Rational>> entries;
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (std::uint32_t idx : classes[c]) entries.emplace_back(G.at(idx), *value_of_class[c]);
  return from_entries(entries);
}

Rational WeightFunction::at(const Permutation& g) const {
  auto it = support_.find(g);
  return it == support_.end() ? Rational(0) : it->second;
}

Rational WeightFunction::weight_of_set(const std::vector<Permutation>& S) const {
  Rational sum(0);
  for (const auto& s : S) sum += at(s);
  return sum;
}

std::vector<std::pair<Permutation, Rational>> WeightFunction::support_sorted() const {
  std::vector<std::pair<Permutation, Rational>> out(support_.begin(), support_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

WeightFunction WeightFunction::scaled(const Rational& factor) const {
  if (factor.signum() <= 0) throw InvalidParameterError("scale factor must be positive");
  WeightFunction w;
  w.support_ = support_;
  for (auto& [_, v] : w.support_) v *= factor;
  w.total_ = total_ * factor;
  return w;
}

namespace {

// Indices of the support within G, sorted; throws when w is not supported
// on G.
std::vector<std::uint32_t> support_indices(const GroupElements& G, const WeightFunction& w,
                                           std::vector<Rational>& values) {
  std::vector<std::uint32_t> idx;
  for (const auto& [perm, value] : w.support_sorted()) {
    auto i = G.index_of(perm);
    if (!i)
      throw InvalidParameterError("weight support element " + perm.to_cycles() +
                                  " lies outside the group");
    idx.push_back(*i);
    values.push_back(value);
  }
  return idx;
}

// F[a * classes + c] = w(g_a * C_c), the left-translate weights driving
// the lumping checks. Memoized per (element, double coset) in one table;
// integer-valued weights accumulate in plain int64.
struct TranslateTable {
  std::size_t classes = 0;
  bool integral = false;
  std::vector<long long> ints;
  std::vector<Rational> rats;

  Rational at(std::size_t a, std::size_t c) const {
    return integral ? Rational(ints[a * classes + c]) : rats[a * classes + c];
  }
  bool equal_rows(std::size_t a, std::size_t b, std::size_t c) const {
    return integral ? ints[a * classes + c] == ints[b * classes + c]
                    : rats[a * classes + c] == rats[b * classes + c];
  }
};

TranslateTable translate_weights(const GroupElements& G, const DoubleCosetDecomposition& dec,
                                 const WeightFunction& w) {
  const std::size_t n = G.order();
  TranslateTable f;
  f.classes = dec.count();
  std::vector<Rational> values;
  std::vector<std::uint32_t> supp = support_indices(G, w, values);
  f.integral = true;
  for (const auto& v : values)
    if (!v.is_integer() || !v.num().fits_int64()) f.integral = false;
  std::vector<long long> int_values;
  if (f.integral) {
    for (const auto& v : values) int_values.push_back(v.num().to_int64());
    f.ints.assign(n * f.classes, 0);
  } else {
    f.rats.assign(n * f.classes, Rational(0));
  }
  const std::vector<std::uint32_t>* table = G.left_division_table();
  for (std::size_t a = 0; a < n; ++a) {
    Permutation ainv = table ? Permutation::identity(1) : G.at(a).inverse();
    const std::uint32_t* trow = table ? table->data() + a * n : nullptr;
    for (std::size_t s = 0; s < supp.size(); ++s) {
      std::uint32_t idx =
          trow ? trow[supp[s]] : *G.index_of(compose(ainv, G.at(supp[s])));
      std::size_t slot = a * f.classes + dec.class_of[idx];
      if (f.integral) f.ints[slot] += int_values[s];
      else f.rats[slot] += values[s];
    }
  }
  return f;
}

}  // namespace

namespace {

// Shared loop for the generator-reduced and unreduced checks: quantify k over
// `k_range`, x over all of G, classes over the decomposition.
template <typename KRange>
LumpingVerdict check_lumping_over(const GroupElements& G, const DoubleCosetDecomposition& dec,
                                  const WeightFunction& w, const KRange& k_range) {
  const std::size_t n = G.order();
  const std::size_t classes = dec.count();
  TranslateTable f = translate_weights(G, dec, w);
  for (const auto& k : k_range) {
    for (std::size_t a = 0; a < n; ++a) {
      std::uint32_t ka = *G.index_of(compose(k, G.at(a)));
      if (ka == a) continue;
      for (std::size_t c = 0; c < classes; ++c) {
        if (f.equal_rows(ka, a, c)) continue;
        LumpingWitness witness{k, G.at(a), dec.representatives[c], f.at(ka, c), f.at(a, c)};
        return {false, std::move(witness)};
      }
    }
  }
  return {true, std::nullopt};
}

}  // namespace

LumpingVerdict check_lumping_hk(const GroupElements& G, const SubgroupSpec& H,
                                const SubgroupSpec& K, const WeightFunction& w) {
  DoubleCosetDecomposition dec = double_cosets(G, H, K);
  return check_lumping_over(G, dec, w, K.generators);
}

LumpingVerdict check_lumping_hk(const GroupElements& G, const DoubleCosetDecomposition& dec,
                                const std::vector<Permutation>& k_generators,
                                const WeightFunction& w) {
  return check_lumping_over(G, dec, w, k_generators);
}

LumpingVerdict check_lumping_hk_unreduced(const GroupElements& G, const SubgroupSpec& H,
                                          const SubgroupSpec& K, const WeightFunction& w) {
  DoubleCosetDecomposition dec = double_cosets(G, H, K);
  return check_lumping_over(G, dec, w, K.elements);
}

LumpingVerdict check_lumping_hh(const GroupElements& G, const SubgroupSpec& H,
                                const WeightFunction& w) {
  DoubleCosetDecomposition dec = double_cosets(G, H, H);
  const std::size_t n = G.order();
  std::vector<Rational> values;
  std::vector<std::uint32_t> supp = support_indices(G, w, values);
  std::vector<Rational> wv(n, Rational(0));
  for (std::size_t s = 0; s < supp.size(); ++s) wv[supp[s]] = values[s];

  // Left cosets xH and their weights.
  std::vector<std::uint32_t> coset_of(n, UINT32_MAX);
  std::vector<std::uint32_t> coset_rep;
  for (std::uint32_t i = 0; i < n; ++i) {
    if (coset_of[i] != UINT32_MAX) continue;
    std::uint32_t id = static_cast<std::uint32_t>(coset_rep.size());
    coset_rep.push_back(i);
    for (const auto& h : H.elements) coset_of[*G.index_of(compose(G.at(i), h))] = id;
  }
  std::vector<Rational> coset_weight(coset_rep.size(), Rational(0));
  for (std::uint32_t i = 0; i < n; ++i) coset_weight[coset_of[i]] += wv[i];

  // Within each double coset all left-coset weights must agree.
  std::vector<std::uint32_t> first_coset(dec.count(), UINT32_MAX);
  for (std::uint32_t coset = 0; coset < coset_rep.size(); ++coset) {
    std::uint32_t cls = dec.class_of[coset_rep[coset]];
    if (first_coset[cls] == UINT32_MAX) {
      first_coset[cls] = coset;
      continue;
    }
    std::uint32_t other = first_coset[cls];
    if (coset_weight[coset] == coset_weight[other]) continue;
    // Translate into a (k, x, y) witness instantiated at y = 1: find k in H with
    // k * x * H equal to the differing coset.
    const Permutation& x = G.at(coset_rep[other]);
    std::optional<Permutation> k;
    for (const auto& h : H.elements) {
      if (coset_of[*G.index_of(compose(h, x))] == coset) {
        k = h;
        break;
      }
    }
    if (!k) throw Error("internal: cosets in one double coset not H-connected");
    LumpingWitness witness{*k, x, Permutation::identity(G.degree()),
                           coset_weight[coset], coset_weight[other]};
    return {false, std::move(witness)};
  }
  return {true, std::nullopt};
}

RationalChain lumped_matrix(const GroupElements& G, const SubgroupSpec& H,
                            const SubgroupSpec& K, const WeightFunction& w) {
  LumpingVerdict verdict = check_lumping_hk(G, H, K, w);
  if (!verdict.lumps) {
    const LumpingWitness& ww = *verdict.witness;
    throw WeightLumpingError("walk does not lump on H\\G/K: w(k x HyK) = " +
                                 ww.lhs.to_string() + " != " + ww.rhs.to_string() +
                                 " = w(x HyK) at k = " + ww.k.to_cycles() +
                                 ", x = " + ww.x.to_cycles() + ", y = " + ww.y_rep.to_cycles(),
                             ww);
  }
  DoubleCosetDecomposition dec = double_cosets(G, H, K);
  TranslateTable f = translate_weights(G, dec, w);
  const std::size_t classes = dec.count();
  std::vector<std::string> labels(classes);
  RMat matrix = rm_zero(classes, classes);
  for (std::size_t i = 0; i < classes; ++i) {
    labels[i] = dec.representatives[i].to_cycles();
    std::uint32_t row = *G.index_of(dec.representatives[i].inverse());
    for (std::size_t j = 0; j < classes; ++j)
      matrix[i][j] = f.at(row, j) / w.total();
  }
  return RationalChain::create(std::move(labels), std::move(matrix));
}

RationalChain induced_orbit_chain(const GroupElements& G, const WeightFunction& w,
                                  const GroupAction& action) {
  const std::size_t m = action.num_points;
  if (action.alpha >= m) throw InvalidParameterError("base point out of range");
  // Transitivity check doubles as a reachability sweep.
  std::vector<char> reached(m, 0);
  for (const auto& g : G) {
    std::size_t p = action.act(action.alpha, g);
    if (p >= m) throw InvalidParameterError("action stepped out of range");
    reached[p] = 1;
  }
  for (std::size_t p = 0; p < m; ++p)
    if (!reached[p])
      throw InvalidParameterError("action is not transitive: point " + std::to_string(p) +
                                  " unreachable from the base point");
  RMat matrix = rm_zero(m, m);
  for (const auto& [g, value] : w.support_sorted()) {
    Rational q = value / w.total();
    for (std::size_t beta = 0; beta < m; ++beta) matrix[beta][action.act(beta, g)] += q;
  }
  std::vector<std::string> labels(m);
  for (std::size_t p = 0; p < m; ++p) labels[p] = std::to_string(p);
  return RationalChain::create(std::move(labels), std::move(matrix));
}

LumpingVerdict check_orbit_condition(const GroupElements& G, const SubgroupSpec& H,
                                     const WeightFunction& w, const GroupAction& action) {
  const std::size_t m = action.num_points;
  if (action.alpha >= m) throw InvalidParameterError("base point out of range");
  // Transversal g_beta with alpha * g_beta = beta; doubles as the
  // transitivity check.
  std::vector<std::optional<Permutation>> to_point(m);
  for (const auto& g : G) {
    std::size_t p = action.act(action.alpha, g);
    if (p >= m) throw InvalidParameterError("action stepped out of range");
    if (!to_point[p]) to_point[p] = g;
  }
  for (std::size_t p = 0; p < m; ++p)
    if (!to_point[p])
      throw InvalidParameterError("action is not transitive: point " + std::to_string(p) +
                                  " unreachable from the base point");
  // H must be exactly the stabilizer of alpha.
  std::size_t stab_size = 0;
  for (const auto& g : G) {
    if (action.act(action.alpha, g) != action.alpha) continue;
    ++stab_size;
    if (!H.elements.contains(g))
      throw InvalidParameterError("stabilizer of the base point is not H (extra element " +
                                  g.to_cycles() + ")");
  }
  if (stab_size != H.elements.order())
    throw InvalidParameterError("H is larger than the stabilizer of the base point");

  // Step probabilities into alpha, unnormalized: w({g : beta g = alpha}).
  std::vector<Rational> into_alpha(m, Rational(0));
  auto support = w.support_sorted();
  for (std::size_t beta = 0; beta < m; ++beta)
    for (const auto& [g, value] : support)
      if (action.act(beta, g) == action.alpha) into_alpha[beta] += value;

  // H-orbits on the points.
  std::vector<std::uint32_t> orbit_of(m, UINT32_MAX);
  std::vector<std::size_t> orbit_first;
  for (std::size_t p = 0; p < m; ++p) {
    if (orbit_of[p] != UINT32_MAX) continue;
    std::uint32_t id = static_cast<std::uint32_t>(orbit_first.size());
    orbit_first.push_back(p);
    std::vector<std::size_t> stack{p};
    orbit_of[p] = id;
    while (!stack.empty()) {
      std::size_t q = stack.back();
      stack.pop_back();
      for (const auto& h : H.generators) {
        std::size_t qq = action.act(q, h);
        if (orbit_of[qq] == UINT32_MAX) {
          orbit_of[qq] = id;
          stack.push_back(qq);
        }
      }
    }
  }
  for (std::size_t beta = 0; beta < m; ++beta) {
    std::size_t first = orbit_first[orbit_of[beta]];
    if (into_alpha[beta] == into_alpha[first]) continue;
    // Stabilizer correspondence: beta = alpha x^{-1} with x = g_beta^{-1},
    // so the failing pair is w(xH) != w(yH) inside one double coset.
    Permutation x = to_point[first]->inverse();
    Permutation y = to_point[beta]->inverse();
    std::optional<Permutation> k;
    Permutation yinv = y.inverse();
    for (const auto& h : H.elements) {
      if (H.elements.contains(compose(compose(yinv, h), x))) {
        k = h;
        break;
      }
    }
    if (!k) throw Error("internal: failing points not connected inside H\\G/H");
    LumpingWitness witness{*k, x, Permutation::identity(G.degree()), into_alpha[beta],
                           into_alpha[first]};
    return {false, std::move(witness)};
  }
  return {true, std::nullopt};
}

}  // namespace cosetwalk
