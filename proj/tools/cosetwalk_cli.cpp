// cosetwalk: exact analysis of random walks on finite groups lumped to
// double cosets, and the skewed r-random-to-top shuffle family.

#include <complex>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cosetwalk/cosets.hpp"
#include "cosetwalk/io.hpp"
#include "cosetwalk/sim.hpp"
#include "cosetwalk/verify.hpp"
#include "cosetwalk/weights.hpp"

using nlohmann::json;
using namespace cosetwalk;

namespace {

struct Output {
  std::string format = "json";  // json | csv | table | latex
  bool paper = false;
};

void add_format_flags(CLI::App* cmd, Output& out,
                      const std::vector<std::string>& allowed = {"json", "csv", "table",
                                                                 "latex"}) {
  cmd->add_option("--format", out.format, "output format")
      ->check(CLI::IsMember(allowed))
      ->capture_default_str();
  cmd->add_flag("--paper-orientation", out.paper,
                "print matrices and vectors with (0,0) at the bottom-right");
}

json chain_to_json(const RationalChain& chain, bool paper) {
  json j;
  std::vector<std::string> states = chain.states;
  RMat m = chain.matrix;
  if (paper) {
    std::reverse(states.begin(), states.end());
    m = paper_orientation(m);
  }
  j["states"] = states;
  j["matrix"] = matrix_strings(m);
  return j;
}

void emit_matrix(const RationalChain& chain, const Output& out) {
  RMat m = out.paper ? paper_orientation(chain.matrix) : chain.matrix;
  std::vector<std::string> labels = chain.states;
  if (out.paper) std::reverse(labels.begin(), labels.end());
  if (out.format == "json") {
    std::cout << chain_to_json(chain, out.paper).dump(2) << "\n";
  } else if (out.format == "csv") {
    std::cout << matrix_csv(m);
  } else if (out.format == "table") {
    std::cout << matrix_table(m, labels, labels);
  } else {
    std::cout << matrix_latex(m);
  }
}

SubgroupSpec subgroup_from_file(const std::string& path, unsigned degree) {
  GroupSpec spec = load_group_file(path);
  if (spec.degree != degree)
    throw DegreeMismatchError(path + ": subgroup degree " + std::to_string(spec.degree) +
                              " does not match the group degree " + std::to_string(degree));
  return make_subgroup(spec.generators);
}

json witness_json(const LumpingWitness& w) {
  return json{{"k", w.k.to_cycles()},
              {"x", w.x.to_cycles()},
              {"y_rep", w.y_rep.to_cycles()},
              {"lhs", w.lhs.to_string()},
              {"rhs", w.rhs.to_string()}};
}

// Durand-Kerner on the characteristic polynomial; exploration only, never on
// the exact path.
std::vector<std::complex<double>> approximate_roots(const std::vector<Rational>& poly) {
  const std::size_t n = poly.size() - 1;
  std::vector<std::complex<double>> c(poly.size());
  for (std::size_t i = 0; i < poly.size(); ++i) c[i] = poly[i].to_double();
  auto eval = [&](std::complex<double> x) {
    std::complex<double> r = 0;
    for (std::size_t i = poly.size(); i-- > 0;) r = r * x + c[i];
    return r;
  };
  std::vector<std::complex<double>> z(n);
  std::complex<double> seed(0.4, 0.9), acc(1, 0);
  for (std::size_t k = 0; k < n; ++k) {
    acc *= seed;
    z[k] = acc;
  }
  for (int iter = 0; iter < 500; ++iter) {
    for (std::size_t k = 0; k < n; ++k) {
      std::complex<double> denom(1, 0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) denom *= z[k] - z[j];
      z[k] -= eval(z[k]) / denom;
    }
  }
  return z;
}

int cmd_cosets(const std::string& group_path, const std::string& h_path,
               const std::string& k_path, const Output& out) {
  GroupSpec spec = load_group_file(group_path);
  GroupElements g = generate_group(spec);
  SubgroupSpec h = subgroup_from_file(h_path, spec.degree);
  SubgroupSpec k = k_path.empty() ? h : subgroup_from_file(k_path, spec.degree);
  DoubleCosetDecomposition dec = double_cosets(g, h, k);
  json j;
  j["reps"] = json::array();
  for (const auto& rep : dec.representatives) j["reps"].push_back(rep.to_cycles());
  j["sizes"] = dec.sizes;
  j["count"] = dec.count();
  if (out.format == "table") {
    for (std::size_t i = 0; i < dec.count(); ++i)
      std::cout << dec.representatives[i].to_cycles() << "  size "
                << dec.sizes[i] << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_check_lumping(const std::string& group_path, const std::string& h_path,
                      const std::string& k_path, const std::string& weight_path,
                      const Output& out) {
  GroupSpec spec = load_group_file(group_path);
  GroupElements g = generate_group(spec);
  SubgroupSpec h = subgroup_from_file(h_path, spec.degree);
  WeightFunction w = WeightFunction::from_entries(load_weight_file(weight_path, spec.degree));
  LumpingVerdict verdict = k_path.empty()
                               ? check_lumping_hh(g, h, w)
                               : check_lumping_hk(g, h, subgroup_from_file(k_path, spec.degree), w);
  json j{{"lumps", verdict.lumps}};
  if (verdict.witness) j["witness"] = witness_json(*verdict.witness);
  std::cout << j.dump(2) << "\n";
  (void)out;
  return verdict.lumps ? 0 : 2;
}

int cmd_lumped(const std::string& group_path, const std::string& h_path,
               const std::string& k_path, const std::string& weight_path, const Output& out) {
  GroupSpec spec = load_group_file(group_path);
  GroupElements g = generate_group(spec);
  SubgroupSpec h = subgroup_from_file(h_path, spec.degree);
  SubgroupSpec k = k_path.empty() ? h : subgroup_from_file(k_path, spec.degree);
  WeightFunction w = WeightFunction::from_entries(load_weight_file(weight_path, spec.degree));
  emit_matrix(lumped_matrix(g, h, k, w), out);
  return 0;
}

int cmd_shuffle(unsigned n, unsigned r, int type_s, const std::string& mixture, bool spectrum,
                const Output& out) {
  RationalChain chain = [&] {
    if (!mixture.empty()) {
      if (mixture != "binomial")
        throw InvalidParameterError("unknown mixture '" + mixture + "' (try: binomial)");
      return mixture_matrix(n, r, binomial_mixture_weights(r));
    }
    if (type_s >= 0) return type_s_matrix(n, r, static_cast<unsigned>(type_s));
    return skewed_matrix(n, r);
  }();
  if (out.format == "json") {
    json j = chain_to_json(chain, out.paper);
    if (spectrum) {
      SpectrumPrediction p = predicted_spectrum(n, r);
      j["eigenvalues"] = vector_strings(p.eigenvalues);
      RVec pi = out.paper ? paper_orientation(p.stationary.probabilities)
                          : p.stationary.probabilities;
      j["stationary"] = vector_strings(pi);
      j["normalizer"] = p.normalizer.to_string();
      if (type_s >= 0 || !mixture.empty()) {
        auto spectra = simultaneous_spectra(n, r);
        if (!mixture.empty()) {
          auto weights = binomial_mixture_weights(r);
          Rational total(0);
          for (const auto& wv : weights) total += wv;
          RVec mixed(r + 1, Rational(0));
          for (unsigned s = 0; s <= r; ++s)
            for (unsigned i = 0; i <= r; ++i) mixed[i] += weights[s] / total * spectra[s][i];
          j["eigenvalues"] = vector_strings(mixed);
        } else {
          j["eigenvalues"] = vector_strings(spectra[static_cast<unsigned>(type_s)]);
        }
      }
    }
    std::cout << j.dump(2) << "\n";
  } else {
    emit_matrix(chain, out);
    if (spectrum) {
      SpectrumPrediction p = predicted_spectrum(n, r);
      std::cout << "# eigenvalues:";
      for (const auto& v : p.eigenvalues) std::cout << " " << v.to_string();
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_analyze(const std::string& matrix_path, const std::string& theta_path,
                unsigned long t_max, unsigned precision, bool decimal, bool approximate,
                const Output& out) {
  RMat m = load_matrix_json(matrix_path);
  std::vector<std::string> labels(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) labels[i] = std::to_string(i);
  RationalChain chain = RationalChain::create(std::move(labels), std::move(m));
  json j;
  j["states"] = chain.size();
  ErgodicityResult erg = is_ergodic(chain);
  j["irreducible"] = erg.irreducible;
  j["aperiodic"] = erg.aperiodic;
  if (approximate) {
    auto roots = approximate_roots(char_poly(chain));
    j["approximate"] = true;
    j["eigenvalues_approx"] = json::array();
    for (const auto& z : roots)
      j["eigenvalues_approx"].push_back(json{{"re", z.real()}, {"im", z.imag()}});
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  Distribution pi = stationary(chain);
  j["stationary"] =
      vector_strings(out.paper ? paper_orientation(pi.probabilities) : pi.probabilities);
  ReversibilityResult rev = is_reversible(chain, pi);
  j["reversible"] = rev.reversible;
  if (!theta_path.empty()) {
    Distribution theta = Distribution::create(load_vector_json(theta_path));
    ConvergenceReport report = convergence_report(chain, theta);
    j["eigenvalues"] = vector_strings(report.eigenvalues);
    j["coefficients"] = json::array();
    for (const auto& [lambda, c2] : report.coefficients)
      j["coefficients"].push_back(
          json{{"lambda", lambda.to_string()}, {"c_squared", c2.to_string()}});
    j["chi_square"] = json::array();
    j["tv_bound_squared"] = json::array();
    j["tv_exact"] = json::array();
    if (decimal) j["tv_bound_decimal"] = json::array();
    for (unsigned long t = 0; t <= t_max; ++t) {
      j["chi_square"].push_back(report.chi_square_at(t).to_string());
      j["tv_bound_squared"].push_back(report.tv_bound_squared_at(t).to_string());
      j["tv_exact"].push_back(
          tv_distance(step_distribution(chain, theta, t), pi).to_string());
      if (decimal)
        j["tv_bound_decimal"].push_back(report.tv_bound_decimal_at(t, precision));
    }
  }
  if (out.format == "table") {
    std::cout << matrix_table(out.paper ? paper_orientation(chain.matrix) : chain.matrix,
                              chain.states, chain.states);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

int cmd_simulate(unsigned n, unsigned r, int type_s, unsigned long steps,
                 unsigned long replicates, std::uint64_t seed, int start_type,
                 const std::string& emit_path) {
  std::optional<unsigned> s;
  if (type_s >= 0) s = static_cast<unsigned>(type_s);
  ShuffleParams params = ShuffleParams::create(n, r, s);
  unsigned start = start_type >= 0 ? static_cast<unsigned>(start_type) : r;
  SimConfig config = SimConfig::create(params, steps, replicates, seed, start);
  std::vector<Trajectory> trajectories = simulate_many(config);
  EmpiricalMatrix em = empirical_matrix(trajectories, r);
  json j;
  j["n"] = n;
  j["r"] = r;
  if (s) j["type"] = *s;
  j["steps"] = steps;
  j["replicates"] = replicates;
  j["seed"] = seed;
  j["counts"] = em.counts;
  j["row_observed"] = em.row_observed;
  j["p_hat"] = em.p_hat;
  j["std_err"] = em.std_err;
  j["occupation"] = occupation_frequencies(trajectories[0], r);
  if (!emit_path.empty()) {
    if (emit_path.size() > 4 && emit_path.substr(emit_path.size() - 4) == ".csv") {
      std::string csv = "step,type\n";
      for (std::size_t i = 0; i < trajectories[0].types.size(); ++i)
        csv += std::to_string(i) + "," + std::to_string(trajectories[0].types[i]) + "\n";
      write_file(emit_path, csv);
    } else {
      write_file(emit_path, j.dump(2) + "\n");
    }
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_verify_paper(bool as_json) {
  auto checks = run_paper_checks();
  if (as_json) {
    json j = json::array();
    for (const auto& c : checks)
      j.push_back(json{{"name", c.name},
                       {"pass", c.pass},
                       {"expected", c.expected},
                       {"actual", c.actual}});
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name << "\n";
      if (!c.pass)
        std::cout << "      expected: " << c.expected << "\n      actual:   " << c.actual
                  << "\n";
    }
  }
  return all_pass(checks) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact double-coset lumping and skewed shuffle analysis"};
  app.set_config("--config");
  app.require_subcommand(1);

  // cosets
  std::string group_path, h_path, k_path, weight_path;
  Output out;
  auto* cosets_cmd = app.add_subcommand("cosets", "double coset decomposition H\\G/K");
  cosets_cmd->add_option("--group", group_path, "group file")->required();
  cosets_cmd->add_option("--subgroup-h", h_path, "subgroup H file")->required();
  cosets_cmd->add_option("--subgroup-k", k_path, "subgroup K file (default: H)");
  add_format_flags(cosets_cmd, out, {"json", "table"});

  // check-lumping
  auto* check_cmd = app.add_subcommand("check-lumping",
                                       "does the walk lump on the double cosets?");
  check_cmd->add_option("--group", group_path, "group file")->required();
  check_cmd->add_option("--subgroup-h", h_path, "subgroup H file")->required();
  check_cmd->add_option("--subgroup-k", k_path, "subgroup K file (default: H)");
  check_cmd->add_option("--weight", weight_path, "weight file")->required();

  // lumped
  auto* lumped_cmd = app.add_subcommand("lumped", "transition matrix of the lumped chain");
  lumped_cmd->add_option("--group", group_path, "group file")->required();
  lumped_cmd->add_option("--subgroup-h", h_path, "subgroup H file")->required();
  lumped_cmd->add_option("--subgroup-k", k_path, "subgroup K file (default: H)");
  lumped_cmd->add_option("--weight", weight_path, "weight file")->required();
  add_format_flags(lumped_cmd, out);

  // shuffle
  unsigned n = 10, r = 4;
  int type_s = -1;
  std::string mixture;
  bool spectrum = false, latex_shorthand = false;
  auto* shuffle_cmd = app.add_subcommand("shuffle", "skewed r-random-to-top shuffle family");
  shuffle_cmd->add_option("--n", n, "deck size")->required();
  shuffle_cmd->add_option("--r", r, "block size")->required();
  shuffle_cmd->add_option("--type", type_s, "type s in 0..r (default: plain, s = r)");
  shuffle_cmd->add_option("--mixture", mixture, "mixture weights (binomial)");
  shuffle_cmd->add_flag("--spectrum", spectrum, "include eigenvalues and stationary law");
  shuffle_cmd->add_flag("--latex", latex_shorthand,
                        "shorthand for --format latex --paper-orientation");
  add_format_flags(shuffle_cmd, out);

  // analyze
  std::string matrix_path, theta_path;
  unsigned long t_max = 10;
  unsigned precision = 30;
  bool decimal = false, approximate = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "exact spectral analysis of a chain");
  analyze_cmd->add_option("--matrix", matrix_path, "matrix JSON file")->required();
  analyze_cmd->add_option("--theta", theta_path, "starting distribution JSON file");
  analyze_cmd->add_option("--t-max", t_max, "largest t reported")->capture_default_str();
  analyze_cmd->add_option("--precision", precision, "significant digits for --decimal")
      ->capture_default_str();
  analyze_cmd->add_flag("--decimal", decimal, "render TV bounds as decimals (rounded up)");
  analyze_cmd->add_flag("--approximate", approximate,
                        "floating-point spectrum exploration (never on the exact path)");
  add_format_flags(analyze_cmd, out, {"json", "table"});

  // simulate
  unsigned long steps = 1000, replicates = 1;
  std::uint64_t seed = 0;
  int start_type = -1;
  std::string emit_path;
  auto* sim_cmd = app.add_subcommand("simulate", "seeded Monte Carlo of the shuffle walk");
  sim_cmd->add_option("--n", n, "deck size")->required();
  sim_cmd->add_option("--r", r, "block size")->required();
  sim_cmd->add_option("--type", type_s, "type s (default: plain shuffle)");
  sim_cmd->add_option("--steps", steps, "steps per replicate")->capture_default_str();
  sim_cmd->add_option("--replicates", replicates, "independent replicates")
      ->capture_default_str();
  sim_cmd->add_option("--seed", seed, "RNG seed")->envname("COSETWALK_SEED");
  sim_cmd->add_option("--start-type", start_type, "start type (default: r)");
  sim_cmd->add_option("--emit", emit_path, "write trajectory .csv or summary .json");

  // verify-paper
  bool verify_json = false;
  auto* verify_cmd = app.add_subcommand("verify-paper",
                                        "digit-exact reproduction of the worked examples");
  verify_cmd->add_flag("--json", verify_json, "machine-readable report");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cosets_cmd->parsed()) return cmd_cosets(group_path, h_path, k_path, out);
    if (check_cmd->parsed()) return cmd_check_lumping(group_path, h_path, k_path, weight_path, out);
    if (lumped_cmd->parsed()) return cmd_lumped(group_path, h_path, k_path, weight_path, out);
    if (shuffle_cmd->parsed()) {
      if (latex_shorthand) {
        out.format = "latex";
        out.paper = true;
      }
      return cmd_shuffle(n, r, type_s, mixture, spectrum, out);
    }
    if (analyze_cmd->parsed())
      return cmd_analyze(matrix_path, theta_path, t_max, precision, decimal, approximate, out);
    if (sim_cmd->parsed())
      return cmd_simulate(n, r, type_s, steps, replicates, seed, start_type, emit_path);
    if (verify_cmd->parsed()) return cmd_verify_paper(verify_json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
