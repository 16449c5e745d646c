#include "cosetwalk/verify.hpp"

#include <sstream>

#include "cosetwalk/io.hpp"
#include "cosetwalk/shuffle.hpp"

namespace cosetwalk {

namespace reference {

namespace {

RMat matrix_of(const std::vector<std::vector<const char*>>& rows) {
  RMat m;
  for (const auto& row : rows) {
    RVec r;
    for (const char* cell : row) r.push_back(Rational::parse(cell));
    m.push_back(std::move(r));
  }
  return m;
}

RVec vector_of(const std::vector<const char*>& cells) {
  RVec v;
  for (const char* cell : cells) v.push_back(Rational::parse(cell));
  return v;
}

}  // namespace

RMat worked_matrix_display() {
  return matrix_of({{"0", "0", "0", "0", "1"},
                    {"0", "0", "0", "2/3", "1/3"},
                    {"0", "0", "2/5", "8/15", "1/15"},
                    {"0", "1/5", "3/5", "1/5", "0"},
                    {"1/15", "8/15", "2/5", "0", "0"}});
}

RVec worked_eigenvalues() { return vector_of({"1", "-2/3", "2/5", "-1/5", "1/15"}); }

RVec worked_stationary_display() {
  return vector_of({"1/210", "24/210", "90/210", "80/210", "15/210"});
}

RVec worked_theta_display() { return vector_of({"1/35", "4/35", "2/7", "4/7", "0"}); }

RMat type_matrix_display(unsigned s) {
  switch (s) {
    case 1:
      return matrix_of({{"0", "1", "0", "0", "0"},
                        {"1/24", "1/3", "5/8", "0", "0"},
                        {"0", "1/6", "1/2", "1/3", "0"},
                        {"0", "0", "3/8", "1/2", "1/8"},
                        {"0", "0", "0", "2/3", "1/3"}});
    case 2:
      return matrix_of({{"0", "0", "1", "0", "0"},
                        {"0", "1/6", "1/2", "1/3", "0"},
                        {"1/90", "2/15", "13/30", "16/45", "1/15"},
                        {"0", "1/10", "2/5", "2/5", "1/10"},
                        {"0", "0", "2/5", "8/15", "1/15"}});
    case 3:
      return matrix_of({{"0", "0", "0", "1", "0"},
                        {"0", "0", "3/8", "1/2", "1/8"},
                        {"0", "1/10", "2/5", "2/5", "1/10"},
                        {"1/80", "3/20", "9/20", "7/20", "3/80"},
                        {"0", "1/5", "3/5", "1/5", "0"}});
    default:
      throw InvalidParameterError("displayed matrices exist for s = 1, 2, 3");
  }
}

RVec type_eigenvalues(unsigned s) {
  switch (s) {
    case 1:
      return vector_of({"1", "7/12", "1/4", "0", "-1/6"});
    case 2:
      return vector_of({"1", "1/6", "-1/10", "-1/15", "1/15"});
    case 3:
      return vector_of({"1", "-1/4", "-1/20", "1/10", "-1/20"});
    default:
      throw InvalidParameterError("eigenvalue lists exist for s = 1, 2, 3");
  }
}

RVec mixture_eigenvalues() {
  return vector_of({"1", "1/6", "1/10", "1/20", "3/80"});
}

}  // namespace reference

namespace {

std::string join(const RVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

// Compares memory-order matrices; names the first differing entry in the
// ascending (x, z) indexing.
PaperCheck matrix_check(const std::string& name, const RMat& actual, const RMat& expected) {
  for (std::size_t x = 0; x < expected.size(); ++x)
    for (std::size_t z = 0; z < expected[x].size(); ++z)
      if (actual.at(x).at(z) != expected[x][z])
        return {name, false,
                "entry (x=" + std::to_string(x) + ", z=" + std::to_string(z) + ") = " +
                    expected[x][z].to_string(),
                "entry (x=" + std::to_string(x) + ", z=" + std::to_string(z) + ") = " +
                    actual[x][z].to_string()};
  return {name, true, "all entries match", "all entries match"};
}

PaperCheck vector_check(const std::string& name, const RVec& actual, const RVec& expected) {
  bool ok = actual == expected;
  return {name, ok, join(expected), join(actual)};
}

}  // namespace

bool all_pass(const std::vector<PaperCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::vector<PaperCheck> run_paper_checks(const RationalChain* skewed_override) {
  std::vector<PaperCheck> checks;
  const unsigned n = 10, r = 4;
  RationalChain q = skewed_override ? *skewed_override : skewed_matrix(n, r);

  // The displayed 5x5 matrix; display rows have (0,0) at the bottom-right.
  checks.push_back(
      matrix_check("worked example: transition matrix (n=10, r=4)", q.matrix,
                   paper_orientation(reference::worked_matrix_display())));

  SpectrumPrediction prediction = predicted_spectrum(n, r);
  checks.push_back(vector_check("worked example: eigenvalue list", prediction.eigenvalues,
                                reference::worked_eigenvalues()));

  {
    bool ok = true;
    std::string detail;
    for (const auto& lambda : prediction.eigenvalues)
      if (!verify_eigenvalue(q, lambda)) {
        ok = false;
        detail = "det(Q - (" + lambda.to_string() + ")I) != 0";
        break;
      }
    checks.push_back({"worked example: eigenvalues certified by det(Q - lambda I)", ok,
                      "all five determinants vanish", ok ? "all five determinants vanish"
                                                         : detail});
  }

  {
    // char poly must equal the product of (x - lambda) over the prediction.
    std::vector<Rational> cp = char_poly(q);
    std::vector<Rational> prod{Rational(1)};
    for (const auto& lambda : prediction.eigenvalues)
      prod = poly_mul(prod, {-lambda, Rational(1)});
    bool ok = cp == prod;
    checks.push_back({"worked example: char poly has exactly the predicted roots", ok,
                      "prod (x - lambda) = char poly", ok ? "equal" : "polynomials differ"});
  }

  try {
    Distribution pi = stationary(q);
    checks.push_back(vector_check("worked example: stationary distribution (display order)",
                                  paper_orientation(pi.probabilities),
                                  reference::worked_stationary_display()));
    checks.push_back(vector_check("worked example: stationary matches the closed form",
                                  prediction.stationary.probabilities, pi.probabilities));

    ReversibilityResult rev = is_reversible(q, pi);
    checks.push_back({"worked example: detailed balance", rev.reversible,
                      "pi_x Q_xy = pi_y Q_yx for all pairs",
                      rev.reversible ? "holds exactly" : "fails"});

    Distribution theta =
        Distribution::create(paper_orientation(reference::worked_theta_display()));
    ConvergenceReport report = convergence_report(q, theta, prediction.eigenvalues);
    {
      // Single coefficient c^2 = 1/3 at lambda = -1/5.
      bool ok = true;
      std::string got;
      for (const auto& [lambda, c2] : report.coefficients) {
        if (!c2.is_zero()) {
          if (!got.empty()) got += ", ";
          got += "c^2(" + lambda.to_string() + ") = " + c2.to_string();
          if (!(lambda == Rational(-1, 5) && c2 == Rational(1, 3))) ok = false;
        }
      }
      if (got != "c^2(-1/5) = 1/3") ok = false;
      checks.push_back({"worked example: theta decomposition", ok, "c^2(-1/5) = 1/3", got});
    }

    {
      bool ok = true;
      std::string detail = "exact equality at t = 0..6";
      for (unsigned long t = 0; t <= 6 && ok; ++t) {
        Distribution at_t = step_distribution(q, theta, t);
        Rational lhs(0);
        for (std::size_t x = 0; x < at_t.size(); ++x) {
          Rational d = at_t[x] - pi[x];
          lhs += d * d / pi[x];
        }
        Rational rhs = Rational(1, 3) * Rational::pow(Rational(1, 25), static_cast<long>(t));
        if (lhs != rhs || report.chi_square_at(t) != rhs) {
          ok = false;
          detail = "t = " + std::to_string(t) + ": chi^2 = " + lhs.to_string() +
                   ", expected " + rhs.to_string();
        }
      }
      checks.push_back({"worked example: chi^2(t) = 5^(-2t)/3 for t = 0..6", ok,
                        "exact equality at t = 0..6", detail});
    }

    {
      // TV bound (sqrt 5 / 2 sqrt 3) 5^{-t}, compared through squares.
      bool ok = true;
      std::string detail = "tv(theta Q^t, pi)^2 <= (5/12) 25^{-t} for t = 0..10";
      for (unsigned long t = 0; t <= 10 && ok; ++t) {
        Rational tv = tv_distance(step_distribution(q, theta, t), pi);
        Rational bound2 =
            Rational(5, 12) * Rational::pow(Rational(1, 25), static_cast<long>(t));
        if (report.tv_bound_squared_at(t) != bound2 || tv * tv > bound2) {
          ok = false;
          detail = "t = " + std::to_string(t) + ": tv = " + tv.to_string();
        }
      }
      checks.push_back({"worked example: tv <= (sqrt5/2sqrt3) 5^(-t) for t = 0..10", ok,
                        "bound holds at every t", detail});
    }
  } catch (const Error& e) {
    checks.push_back({"worked example: stationary/convergence analysis", false,
                      "analysis completes", std::string("error: ") + e.what()});
  }

  for (unsigned s = 1; s <= 3; ++s) {
    checks.push_back(matrix_check("worked example: type-" + std::to_string(s) + " matrix",
                                  type_s_matrix(n, r, s).matrix,
                                  paper_orientation(reference::type_matrix_display(s))));
  }

  {
    auto spectra = simultaneous_spectra(n, r);
    for (unsigned s = 1; s <= 3; ++s)
      checks.push_back(vector_check("worked example: type-" + std::to_string(s) +
                                        " eigenvalue list",
                                    spectra[s], reference::type_eigenvalues(s)));
    checks.push_back(vector_check("worked example: type-4 eigenvalue list equals the closed form",
                                  spectra[4], reference::worked_eigenvalues()));

    bool commute = true;
    std::vector<RMat> mats;
    for (unsigned s = 0; s <= r; ++s) mats.push_back(type_s_matrix(n, r, s).matrix);
    for (unsigned s = 0; s <= r && commute; ++s)
      for (unsigned t = s + 1; t <= r; ++t)
        if (!rm_equal(rm_mul(mats[s], mats[t]), rm_mul(mats[t], mats[s]))) {
          commute = false;
          break;
        }
    checks.push_back({"worked example: all five matrices commute pairwise", commute,
                      "Q_s Q_t = Q_t Q_s exactly", commute ? "holds" : "fails"});

    // Mixture spectrum two ways: weighted sums in the simultaneous basis,
    // and roots of the mixture's characteristic polynomial.
    std::vector<Rational> weights = binomial_mixture_weights(r);
    Rational total(0);
    for (const auto& w : weights) total += w;
    RVec mixture_spec(r + 1, Rational(0));
    for (unsigned s = 0; s <= r; ++s)
      for (unsigned i = 0; i <= r; ++i) mixture_spec[i] += weights[s] / total * spectra[s][i];
    checks.push_back(vector_check("worked example: mixture spectrum (weighted eigenvalue sums)",
                                  mixture_spec, reference::mixture_eigenvalues()));

    RationalChain mix = mixture_matrix(n, r, weights);
    std::vector<Rational> cp = char_poly(mix);
    std::vector<Rational> prod{Rational(1)};
    for (const auto& lambda : reference::mixture_eigenvalues())
      prod = poly_mul(prod, {-lambda, Rational(1)});
    checks.push_back({"worked example: mixture char poly matches the quoted list", cp == prod,
                      "prod (x - lambda) = char poly", cp == prod ? "equal" : "differ"});
  }

  return checks;
}

}  // namespace cosetwalk
