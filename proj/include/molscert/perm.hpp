#ifndef MOLSCERT_PERM_HPP
#define MOLSCERT_PERM_HPP

#include <compare>
#include <string>
#include <vector>

namespace molscert {

// Permutation of {1..n}. Points are 1-based in all I/O; internally the image
// array is 0-based: images()[i] is the image of point i+1, minus 1.
class Permutation {
public:
  explicit Permutation(int degree);               // identity
  explicit Permutation(std::vector<int> images);  // 0-based, must be a bijection

  int degree() const { return static_cast<int>(images_.size()); }
  int image(int point) const { return images_[point]; }  // 0-based
  const std::vector<int>& images() const { return images_; }
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  // lexicographic on image arrays; the canonical order used everywhere
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

// Composition reads left to right: x^(p*q) = (x^p)^q.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// Number of points where p and q disagree (equals degree minus the number of
// fixed points of p^-1 * q).
int hamming_distance(const Permutation& p, const Permutation& q);

// Cycle notation. Grammar: perm := cycle* ; cycle := "(" int ("," int)* ")".
// Whitespace (including newlines) is insignificant, omitted points are fixed,
// "" and "()" denote the identity. Cycles must be disjoint; a repeated point
// is rejected.
Permutation parse_cycles(const std::string& text, int degree);

// Canonical form: disjoint cycles, each starting at its minimum point, sorted
// by first point, fixed points omitted, identity printed as "()".
std::string format_cycles(const Permutation& p);

}  // namespace molscert

#endif
