#pragma once

#include <optional>
#include <vector>

#include "cosetwalk/rational.hpp"

namespace cosetwalk {

using RVec = std::vector<Rational>;
using RMat = std::vector<std::vector<Rational>>;

RMat rm_identity(std::size_t n);
RMat rm_zero(std::size_t rows, std::size_t cols);
RMat rm_transpose(const RMat& a);
RMat rm_mul(const RMat& a, const RMat& b);
RVec rv_mat_mul(const RVec& v, const RMat& a);  // row vector times matrix
RMat rm_scale(const RMat& a, const Rational& c);
RMat rm_add(const RMat& a, const RMat& b);
bool rm_equal(const RMat& a, const RMat& b);

/// Exact determinant via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix.
Rational rm_det(const RMat& a);

/// Basis of the right null space {x : Ax = 0}; exact Gauss-Jordan.
std::vector<RVec> rm_null_space(const RMat& a);

/// Unique exact solution of Ax = b for an m x n system (m >= n allowed).
/// Returns nullopt when the solution is not unique or the system is
/// inconsistent.
std::optional<RVec> rm_solve_unique(const RMat& a, const RVec& b);

/// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recurrence.
/// Coefficients ascending: c[0] + c[1] x + ... + c[n] x^n with c[n] = 1.
std::vector<Rational> rm_char_poly(const RMat& a);

/// p evaluated at x (coefficients ascending).
Rational poly_eval(const std::vector<Rational>& p, const Rational& x);
/// Divides p by (x - root); requires the division to be exact.
std::vector<Rational> poly_divide_linear(const std::vector<Rational>& p,
                                         const Rational& root);
std::vector<Rational> poly_mul(const std::vector<Rational>& p,
                               const std::vector<Rational>& q);

/// All roots with multiplicity when the polynomial splits over Q, found by
/// the rational root theorem; nullopt when a complete rational factorization
/// could not be certified.
std::optional<std::vector<Rational>> rational_roots_complete(std::vector<Rational> monic);

}  // namespace cosetwalk
