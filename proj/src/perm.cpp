#include "cosetwalk/perm.hpp"

#include <algorithm>

#include "cosetwalk/error.hpp"

namespace cosetwalk {

Permutation Permutation::identity(unsigned degree) {
  std::vector<unsigned> images(degree);
  for (unsigned i = 0; i < degree; ++i) images[i] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_images(std::vector<unsigned> images) {
  std::vector<bool> seen(images.size(), false);
  for (unsigned v : images) {
    if (v >= images.size() || seen[v])
      throw ParseError("image array is not a bijection of {1.." +
                       std::to_string(images.size()) + "}");
    seen[v] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_images_one_based(const std::vector<unsigned>& images) {
  std::vector<unsigned> zero(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] == 0) throw ParseError("one-based image array contains 0");
    zero[i] = images[i] - 1;
  }
  return from_images(std::move(zero));
}

Permutation Permutation::parse_cycles(std::string_view text, unsigned degree) {
  std::vector<unsigned> images(degree);
  for (unsigned i = 0; i < degree; ++i) images[i] = i;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ','))
      ++pos;
  };
  skip_ws();
  bool any = false;
  std::vector<bool> moved(degree, false);
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
    ++pos;
    std::vector<unsigned> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (text[pos] < '0' || text[pos] > '9')
        throw ParseError("expected point in cycle notation");
      unsigned v = 0;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
        v = v * 10 + static_cast<unsigned>(text[pos] - '0');
        ++pos;
      }
      if (v == 0 || v > degree)
        throw ParseError("point " + std::to_string(v) + " out of range 1.." +
                         std::to_string(degree));
      if (moved[v - 1]) throw ParseError("point " + std::to_string(v) + " repeated");
      moved[v - 1] = true;
      cycle.push_back(v - 1);
      skip_ws();
    }
    if (pos == text.size()) throw ParseError("unterminated cycle");
    ++pos;  // ')'
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    any = true;
    skip_ws();
  }
  if (!any) throw ParseError("empty cycle notation; use \"()\" for the identity");
  return from_images(std::move(images));
}

std::vector<unsigned> Permutation::images_one_based() const {
  std::vector<unsigned> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (unsigned start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out.push_back('(');
    unsigned p = start;
    bool first = true;
    do {
      if (!first) out.push_back(' ');
      out += std::to_string(p + 1);
      seen[p] = true;
      p = images_[p];
      first = false;
    } while (p != start);
    out.push_back(')');
  }
  if (out.empty()) return "()";
  return out;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
  if (a.images_.size() != b.images_.size())
    return a.images_.size() <=> b.images_.size();
  for (std::size_t i = 0; i < a.images_.size(); ++i)
    if (a.images_[i] != b.images_[i]) return a.images_[i] <=> b.images_[i];
  return std::strong_ordering::equal;
}

std::size_t Permutation::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (unsigned v : images_) h = (h ^ v) * 1099511628211ull;
  return h;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw DegreeMismatchError("cannot compose permutations of degrees " +
                              std::to_string(p.degree()) + " and " +
                              std::to_string(q.degree()));
  std::vector<unsigned> images(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) images[i] = q.apply(p.apply(i));
  return Permutation(std::move(images));  // bijections compose to bijections
}

}  // namespace cosetwalk
