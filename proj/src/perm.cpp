#include "molscert/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace molscert {

namespace {

void require_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) +
                                " vs " + std::to_string(q.degree()));
}

}  // namespace

Permutation::Permutation(int degree) {
  if (degree <= 0) throw std::invalid_argument("degree must be positive");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 0);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("degree must be positive");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v])
      throw std::invalid_argument("image array is not a bijection of {1..n}");
    seen[v] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  std::vector<int> out(p.degree());
  for (int i = 0; i < p.degree(); ++i) out[i] = q.image(p.image(i));
  return Permutation(std::move(out));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> out(p.degree());
  for (int i = 0; i < p.degree(); ++i) out[p.image(i)] = i;
  return Permutation(std::move(out));
}

int hamming_distance(const Permutation& p, const Permutation& q) {
  require_same_degree(p, q);
  int d = 0;
  for (int i = 0; i < p.degree(); ++i)
    if (p.image(i) != q.image(i)) ++d;
  return d;
}

Permutation parse_cycles(const std::string& text, int degree) {
  if (degree <= 0) throw std::invalid_argument("degree must be positive");
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(degree, 0);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    throw std::invalid_argument("cycle notation: " + what + " at offset " +
                                std::to_string(pos));
  };
  auto parse_int = [&]() -> int {
    if (pos >= text.size() || text[pos] < '1' || text[pos] > '9')
      fail("expected point (digits 1-9 first)");
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > degree) fail("point " + std::to_string(v) + " out of range 1.." +
                           std::to_string(degree));
      ++pos;
    }
    return static_cast<int>(v);
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    skip_ws();
    if (pos < text.size() && text[pos] == ')') {  // "()" = identity contribution
      ++pos;
      skip_ws();
      continue;
    }
    std::vector<int> cycle;
    for (;;) {
      int point = parse_int();
      if (used[point - 1])
        fail("repeated point " + std::to_string(point));
      used[point - 1] = 1;
      cycle.push_back(point - 1);
      skip_ws();
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        skip_ws();
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      fail("expected ',' or ')'");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Permutation(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  std::vector<char> seen(p.degree(), 0);
  for (int start = 0; start < p.degree(); ++start) {
    if (seen[start] || p.image(start) == start) {
      seen[start] = 1;
      continue;
    }
    out += '(';
    int q = start;
    for (;;) {
      seen[q] = 1;
      out += std::to_string(q + 1);
      q = p.image(q);
      if (q == start) break;
      out += ',';
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace molscert
