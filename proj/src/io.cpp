#include "cosetwalk/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cosetwalk/error.hpp"

namespace cosetwalk {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

Rational rational_from_json(const nlohmann::json& v, const std::string& origin) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw ParseError(origin + ": rationals must be \"p/q\" strings (floats are not exact)");
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << content;
}

GroupSpec parse_group_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  unsigned degree = 0;
  bool have_degree = false;
  std::vector<Permutation> generators;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    if (!have_degree) {
      std::istringstream ls(line);
      std::string keyword;
      ls >> keyword >> degree;
      if (keyword != "degree" || degree == 0)
        throw ParseError(origin + ": first line must be \"degree N\"");
      have_degree = true;
      continue;
    }
    generators.push_back(Permutation::parse_cycles(line, degree));
  }
  if (!have_degree) throw ParseError(origin + ": missing \"degree N\" line");
  if (generators.empty()) throw ParseError(origin + ": no generators");
  return GroupSpec::create(degree, std::move(generators));
}

GroupSpec load_group_file(const std::string& path) {
  return parse_group_text(read_file(path), path);
}

std::vector<std::pair<Permutation, Rational>> parse_weight_text(const std::string& text,
                                                                unsigned degree,
                                                                const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<Permutation, Rational>> entries;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    std::size_t cut = line.find_last_of(" \t");
    if (cut == std::string::npos)
      throw ParseError(origin + ": weight line needs \"<cycles> <p/q>\": " + line);
    Rational value = Rational::parse(strip(line.substr(cut + 1)));
    Permutation perm = Permutation::parse_cycles(strip(line.substr(0, cut)), degree);
    entries.emplace_back(std::move(perm), std::move(value));
  }
  if (entries.empty()) throw ParseError(origin + ": empty weight file");
  return entries;
}

std::vector<std::pair<Permutation, Rational>> load_weight_file(const std::string& path,
                                                               unsigned degree) {
  return parse_weight_text(read_file(path), degree, path);
}

RMat parse_matrix_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array()) throw ParseError("matrix file must be a JSON array of arrays");
  RMat m;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("matrix file must be a JSON array of arrays");
    RVec r;
    for (const auto& v : row) r.push_back(rational_from_json(v, "matrix"));
    m.push_back(std::move(r));
  }
  return m;
}

RVec parse_vector_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array()) throw ParseError("vector file must be a JSON array");
  RVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x, "vector"));
  return v;
}

RMat load_matrix_json(const std::string& path) {
  return parse_matrix_json_text(read_file(path));
}

RVec load_vector_json(const std::string& path) {
  return parse_vector_json_text(read_file(path));
}

RMat paper_orientation(const RMat& m) {
  RMat out(m.rbegin(), m.rend());
  for (auto& row : out) std::reverse(row.begin(), row.end());
  return out;
}

RVec paper_orientation(const RVec& v) { return RVec(v.rbegin(), v.rend()); }

std::vector<std::vector<std::string>> matrix_strings(const RMat& m) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : m) {
    std::vector<std::string> r;
    for (const auto& x : row) r.push_back(x.to_string());
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::string> vector_strings(const RVec& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

std::string matrix_json_text(const RMat& m) {
  nlohmann::json j = matrix_strings(m);
  return j.dump();
}

std::string matrix_csv(const RMat& m) {
  std::string out;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ',';
      out += row[j].to_string();
    }
    out += '\n';
  }
  return out;
}

std::string matrix_table(const RMat& m, const std::vector<std::string>& row_labels,
                         const std::vector<std::string>& col_labels) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  header.insert(header.end(), col_labels.begin(), col_labels.end());
  cells.push_back(header);
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<std::string> row{row_labels.at(i)};
    for (const auto& x : m[i]) row.push_back(x.to_string());
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::string cell = row[j];
      cell.insert(cell.begin(), width[j] - cell.size(), ' ');
      out += cell;
      if (j + 1 < row.size()) out += "  ";
    }
    out += '\n';
  }
  return out;
}

std::string matrix_latex(const RMat& m) {
  std::string out = "\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) {
      const Rational& x = m[i][j];
      if (j > 0) out += " & ";
      if (x.is_zero()) out += "\\cdot";
      else if (x.is_integer()) out += x.num().to_string();
      else out += "\\frac{" + x.num().to_string() + "}{" + x.den().to_string() + "}";
    }
    out += i + 1 < m.size() ? " \\\\\n" : "\n";
  }
  out += "\\end{pmatrix}\n";
  return out;
}

}  // namespace cosetwalk
