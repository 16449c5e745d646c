#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cosetwalk/chain.hpp"
#include "cosetwalk/group.hpp"
#include "cosetwalk/matrix.hpp"
#include "cosetwalk/perm.hpp"
#include "cosetwalk/rational.hpp"

namespace cosetwalk {

/// Group file: '#' comments, a "degree N" line, then one generator per line
/// in cycle notation ("()" is the identity).
GroupSpec load_group_file(const std::string& path);
GroupSpec parse_group_text(const std::string& text, const std::string& origin);

/// Weight file: lines "<cycle-notation> <p/q>"; the rational is the last
/// whitespace-separated token.
std::vector<std::pair<Permutation, Rational>> load_weight_file(const std::string& path,
                                                               unsigned degree);
std::vector<std::pair<Permutation, Rational>> parse_weight_text(const std::string& text,
                                                                unsigned degree,
                                                                const std::string& origin);

/// Matrix file: JSON array of arrays of "p/q" strings.
RMat load_matrix_json(const std::string& path);
/// Vector file: JSON array of "p/q" strings.
RVec load_vector_json(const std::string& path);

RMat parse_matrix_json_text(const std::string& text);
RVec parse_vector_json_text(const std::string& text);

/// Display transform used by --paper-orientation, (0,0) at the bottom-right:
/// reverses both axes of a matrix / the order of a vector.
RMat paper_orientation(const RMat& m);
RVec paper_orientation(const RVec& v);

std::string matrix_json_text(const RMat& m);
std::vector<std::vector<std::string>> matrix_strings(const RMat& m);
std::vector<std::string> vector_strings(const RVec& v);

std::string matrix_csv(const RMat& m);
std::string matrix_table(const RMat& m, const std::vector<std::string>& row_labels,
                         const std::vector<std::string>& col_labels);
/// LaTeX matrix body; zeros print as \cdot, matching the worked displays.
std::string matrix_latex(const RMat& m);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cosetwalk
