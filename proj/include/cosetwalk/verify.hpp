#pragma once

#include <string>
#include <vector>

#include "cosetwalk/chain.hpp"

namespace cosetwalk {

struct PaperCheck {
  std::string name;
  bool pass;
  std::string expected;
  std::string actual;
};

/// The digit-exact reproduction suite for the n=10, r=4 worked examples:
/// the 5x5 matrix, its certified spectrum and stationary law, the
/// theta-decomposition and chi-square identity, the TV bound, the three
/// type-s matrices, their eigenvalue lists, pairwise commutation, and the
/// binomial mixture spectrum.
///
/// `skewed_override` substitutes the matrix under test (used to exercise the
/// falsification path).
std::vector<PaperCheck> run_paper_checks(const RationalChain* skewed_override = nullptr);

bool all_pass(const std::vector<PaperCheck>& checks);

/// Reference values as printed (display order, (0,0) at the bottom-right).
namespace reference {
RMat worked_matrix_display();
RVec worked_eigenvalues();              // (1, -2/3, 2/5, -1/5, 1/15)
RVec worked_stationary_display();       // (1, 24, 90, 80, 15)/210
RVec worked_theta_display();            // (1/35, 4/35, 2/7, 4/7, 0)
RMat type_matrix_display(unsigned s); // s = 1, 2, 3
RVec type_eigenvalues(unsigned s);    // s = 1, 2, 3
RVec mixture_eigenvalues();      // (1, 1/6, 1/10, 1/20, 3/80)
}  // namespace reference

}  // namespace cosetwalk
