// Python bindings for the main operations. Rationals cross the boundary as
// "p/q" strings so exactness survives the trip.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cosetwalk/cosets.hpp"
#include "cosetwalk/io.hpp"
#include "cosetwalk/sim.hpp"
#include "cosetwalk/verify.hpp"
#include "cosetwalk/weights.hpp"

namespace py = pybind11;
using namespace cosetwalk;

namespace {

std::vector<std::vector<std::string>> mat_out(const RMat& m) { return matrix_strings(m); }
std::vector<std::string> vec_out(const RVec& v) { return vector_strings(v); }

RVec vec_in(const std::vector<std::string>& v) {
  RVec out;
  for (const auto& s : v) out.push_back(Rational::parse(s));
  return out;
}

RMat mat_in(const std::vector<std::vector<std::string>>& m) {
  RMat out;
  for (const auto& row : m) out.push_back(vec_in(row));
  return out;
}

RationalChain chain_in(const std::vector<std::vector<std::string>>& m) {
  RMat mat = mat_in(m);
  std::vector<std::string> labels(mat.size());
  for (std::size_t i = 0; i < mat.size(); ++i) labels[i] = std::to_string(i);
  return RationalChain::create(std::move(labels), std::move(mat));
}

GroupElements group_in(unsigned degree, const std::vector<std::string>& generator_cycles,
                       std::size_t cap) {
  std::vector<Permutation> gens;
  for (const auto& text : generator_cycles)
    gens.push_back(Permutation::parse_cycles(text, degree));
  return generate_group(GroupSpec::create(degree, std::move(gens)), cap);
}

SubgroupSpec subgroup_in(unsigned degree, const std::vector<std::string>& generator_cycles) {
  std::vector<Permutation> gens;
  for (const auto& text : generator_cycles)
    gens.push_back(Permutation::parse_cycles(text, degree));
  return make_subgroup(std::move(gens));
}

WeightFunction weight_in(unsigned degree,
                         const std::vector<std::pair<std::string, std::string>>& entries) {
  std::vector<std::pair<Permutation, Rational>> parsed;
  for (const auto& [cycles, value] : entries)
    parsed.emplace_back(Permutation::parse_cycles(cycles, degree), Rational::parse(value));
  return WeightFunction::from_entries(parsed);
}

py::dict verdict_out(const LumpingVerdict& verdict) {
  py::dict d;
  d["lumps"] = verdict.lumps;
  if (verdict.witness) {
    py::dict w;
    w["k"] = verdict.witness->k.to_cycles();
    w["x"] = verdict.witness->x.to_cycles();
    w["y_rep"] = verdict.witness->y_rep.to_cycles();
    w["lhs"] = verdict.witness->lhs.to_string();
    w["rhs"] = verdict.witness->rhs.to_string();
    d["witness"] = w;
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact double-coset lumping and skewed shuffle analysis";

  // permutations
  m.def("compose_cycles",
        [](const std::string& a, const std::string& b, unsigned degree) {
          return compose(Permutation::parse_cycles(a, degree),
                         Permutation::parse_cycles(b, degree))
              .to_cycles();
        },
        py::arg("p"), py::arg("q"), py::arg("degree"),
        "compose under the right action: first p, then q");
  m.def("inverse_cycles",
        [](const std::string& a, unsigned degree) {
          return Permutation::parse_cycles(a, degree).inverse().to_cycles();
        },
        py::arg("p"), py::arg("degree"));
  m.def("type_of",
        [](const std::string& a, unsigned degree, unsigned r) {
          return type_of(Permutation::parse_cycles(a, degree), r);
        },
        py::arg("p"), py::arg("degree"), py::arg("r"),
        "|{1..r}g intersect {1..r}|");

  // groups and cosets
  m.def("group_order",
        [](unsigned degree, const std::vector<std::string>& gens, std::size_t cap) {
          return group_in(degree, gens, cap).order();
        },
        py::arg("degree"), py::arg("generators"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("group_elements",
        [](unsigned degree, const std::vector<std::string>& gens, std::size_t cap) {
          std::vector<std::string> out;
          for (const auto& perm : group_in(degree, gens, cap)) out.push_back(perm.to_cycles());
          return out;
        },
        py::arg("degree"), py::arg("generators"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("double_cosets",
        [](unsigned degree, const std::vector<std::string>& group_gens,
           const std::vector<std::string>& h_gens, const std::vector<std::string>& k_gens) {
          GroupElements g = group_in(degree, group_gens, kDefaultEnumerationCap);
          SubgroupSpec h = subgroup_in(degree, h_gens);
          SubgroupSpec k = k_gens.empty() ? h : subgroup_in(degree, k_gens);
          DoubleCosetDecomposition dec = double_cosets(g, h, k);
          py::dict d;
          std::vector<std::string> reps;
          for (const auto& rep : dec.representatives) reps.push_back(rep.to_cycles());
          d["reps"] = reps;
          d["sizes"] = dec.sizes;
          d["count"] = dec.count();
          return d;
        },
        py::arg("degree"), py::arg("group_generators"), py::arg("h_generators"),
        py::arg("k_generators") = std::vector<std::string>{});

  // lumping
  m.def("check_lumping",
        [](unsigned degree, const std::vector<std::string>& group_gens,
           const std::vector<std::string>& h_gens,
           const std::vector<std::pair<std::string, std::string>>& weight,
           const std::vector<std::string>& k_gens) {
          GroupElements g = group_in(degree, group_gens, kDefaultEnumerationCap);
          SubgroupSpec h = subgroup_in(degree, h_gens);
          WeightFunction w = weight_in(degree, weight);
          LumpingVerdict verdict = k_gens.empty()
                                       ? check_lumping_hh(g, h, w)
                                       : check_lumping_hk(g, h, subgroup_in(degree, k_gens), w);
          return verdict_out(verdict);
        },
        py::arg("degree"), py::arg("group_generators"), py::arg("h_generators"),
        py::arg("weight"), py::arg("k_generators") = std::vector<std::string>{});
  m.def("lumped_matrix",
        [](unsigned degree, const std::vector<std::string>& group_gens,
           const std::vector<std::string>& h_gens,
           const std::vector<std::pair<std::string, std::string>>& weight,
           const std::vector<std::string>& k_gens) {
          GroupElements g = group_in(degree, group_gens, kDefaultEnumerationCap);
          SubgroupSpec h = subgroup_in(degree, h_gens);
          SubgroupSpec k = k_gens.empty() ? h : subgroup_in(degree, k_gens);
          RationalChain chain = lumped_matrix(g, h, k, weight_in(degree, weight));
          py::dict d;
          d["states"] = chain.states;
          d["matrix"] = mat_out(chain.matrix);
          return d;
        },
        py::arg("degree"), py::arg("group_generators"), py::arg("h_generators"),
        py::arg("weight"), py::arg("k_generators") = std::vector<std::string>{});

  // shuffle family
  m.def("skewed_matrix",
        [](unsigned n, unsigned r) { return mat_out(skewed_matrix(n, r).matrix); },
        py::arg("n"), py::arg("r"));
  m.def("type_s_matrix",
        [](unsigned n, unsigned r, unsigned s) {
          return mat_out(type_s_matrix(n, r, s).matrix);
        },
        py::arg("n"), py::arg("r"), py::arg("s"));
  m.def("mixture_matrix",
        [](unsigned n, unsigned r, const std::vector<std::string>& weights) {
          return mat_out(mixture_matrix(n, r, vec_in(weights)).matrix);
        },
        py::arg("n"), py::arg("r"), py::arg("weights"));
  m.def("binomial_mixture_weights",
        [](unsigned r) { return vec_out(binomial_mixture_weights(r)); }, py::arg("r"));
  m.def("predicted_spectrum",
        [](unsigned n, unsigned r) {
          SpectrumPrediction p = predicted_spectrum(n, r);
          py::dict d;
          d["eigenvalues"] = vec_out(p.eigenvalues);
          d["stationary"] = vec_out(p.stationary.probabilities);
          d["normalizer"] = p.normalizer.to_string();
          return d;
        },
        py::arg("n"), py::arg("r"));
  m.def("simultaneous_spectra",
        [](unsigned n, unsigned r) {
          auto spectra = simultaneous_spectra(n, r);
          std::vector<std::vector<std::string>> out;
          for (const auto& row : spectra) out.push_back(vec_out(row));
          return out;
        },
        py::arg("n"), py::arg("r"));
  m.def("shuffle_set",
        [](unsigned n, unsigned r, int s) {
          std::optional<unsigned> type;
          if (s >= 0) type = static_cast<unsigned>(s);
          std::vector<std::string> out;
          for (const auto& perm : shuffle_set(ShuffleParams::create(n, r, type)))
            out.push_back(perm.to_cycles());
          return out;
        },
        py::arg("n"), py::arg("r"), py::arg("s") = -1);

  // chains
  m.def("stationary",
        [](const std::vector<std::vector<std::string>>& matrix) {
          return vec_out(stationary(chain_in(matrix)).probabilities);
        },
        py::arg("matrix"));
  m.def("char_poly",
        [](const std::vector<std::vector<std::string>>& matrix) {
          return vec_out(char_poly(chain_in(matrix)));
        },
        py::arg("matrix"), "coefficients, ascending degree, monic");
  m.def("verify_eigenvalue",
        [](const std::vector<std::vector<std::string>>& matrix, const std::string& lambda) {
          return verify_eigenvalue(chain_in(matrix), Rational::parse(lambda));
        },
        py::arg("matrix"), py::arg("lambda_"));
  m.def("is_reversible",
        [](const std::vector<std::vector<std::string>>& matrix) {
          RationalChain chain = chain_in(matrix);
          return is_reversible(chain, stationary(chain)).reversible;
        },
        py::arg("matrix"));
  m.def("is_ergodic",
        [](const std::vector<std::vector<std::string>>& matrix) {
          auto result = is_ergodic(chain_in(matrix));
          py::dict d;
          d["irreducible"] = result.irreducible;
          d["aperiodic"] = result.aperiodic;
          return d;
        },
        py::arg("matrix"));
  m.def("lump",
        [](const std::vector<std::vector<std::string>>& matrix,
           const std::vector<std::vector<std::size_t>>& partition) {
          return mat_out(lump(chain_in(matrix), partition).matrix);
        },
        py::arg("matrix"), py::arg("partition"));
  m.def("step_distribution",
        [](const std::vector<std::vector<std::string>>& matrix,
           const std::vector<std::string>& theta, unsigned long t) {
          return vec_out(
              step_distribution(chain_in(matrix), Distribution::create(vec_in(theta)), t)
                  .probabilities);
        },
        py::arg("matrix"), py::arg("theta"), py::arg("t"));
  m.def("tv_distance",
        [](const std::vector<std::string>& mu, const std::vector<std::string>& nu) {
          return tv_distance(Distribution::create(vec_in(mu)),
                             Distribution::create(vec_in(nu)))
              .to_string();
        },
        py::arg("mu"), py::arg("nu"));
  m.def("convergence_report",
        [](const std::vector<std::vector<std::string>>& matrix,
           const std::vector<std::string>& theta, unsigned long t_max) {
          RationalChain chain = chain_in(matrix);
          ConvergenceReport report =
              convergence_report(chain, Distribution::create(vec_in(theta)));
          py::dict d;
          d["stationary"] = vec_out(report.stationary.probabilities);
          d["eigenvalues"] = vec_out(report.eigenvalues);
          std::vector<std::pair<std::string, std::string>> coeffs;
          for (const auto& [lambda, c2] : report.coefficients)
            coeffs.emplace_back(lambda.to_string(), c2.to_string());
          d["coefficients"] = coeffs;
          std::vector<std::string> chi, bound2;
          for (unsigned long t = 0; t <= t_max; ++t) {
            chi.push_back(report.chi_square_at(t).to_string());
            bound2.push_back(report.tv_bound_squared_at(t).to_string());
          }
          d["chi_square"] = chi;
          d["tv_bound_squared"] = bound2;
          return d;
        },
        py::arg("matrix"), py::arg("theta"), py::arg("t_max") = 10);

  // simulation
  m.def("simulate",
        [](unsigned n, unsigned r, unsigned long steps, std::uint64_t seed, int start_type,
           int s) {
          std::optional<unsigned> type;
          if (s >= 0) type = static_cast<unsigned>(s);
          unsigned start = start_type >= 0 ? static_cast<unsigned>(start_type) : r;
          SimConfig config =
              SimConfig::create(ShuffleParams::create(n, r, type), steps, 1, seed, start);
          return simulate(config).types;
        },
        py::arg("n"), py::arg("r"), py::arg("steps"), py::arg("seed"),
        py::arg("start_type") = -1, py::arg("s") = -1);

  // paper reproduction
  m.def("verify_paper", [] {
    py::list out;
    for (const auto& check : run_paper_checks()) {
      py::dict d;
      d["name"] = check.name;
      d["pass"] = check.pass;
      d["expected"] = check.expected;
      d["actual"] = check.actual;
      out.append(d);
    }
    return out;
  });
}
