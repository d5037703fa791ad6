#ifndef MOLSCERT_ISOMETRY_HPP
#define MOLSCERT_ISOMETRY_HPP

#include <cstddef>
#include <vector>

#include "molscert/perm.hpp"

namespace molscert {

// Element of Iso(n) = <B1, B2, t_n> realized inside S_{2n}: either preserves
// the blocks {1..n} and {n+1..2n} or swaps them.
class IsometryElement {
public:
  // Validates membership in Iso(n); throws when g neither preserves nor
  // swaps the two blocks.
  static IsometryElement classify(const Permutation& g);

  const Permutation& underlying() const { return underlying_; }
  bool swaps_blocks() const { return swaps_blocks_; }
  int half_degree() const { return underlying_.degree() / 2; }

private:
  IsometryElement(Permutation g, bool swaps) : underlying_(std::move(g)), swaps_blocks_(swaps) {}
  Permutation underlying_;
  bool swaps_blocks_;
};

// t_n = (1,n+1)(2,n+2)...(n,2n)
Permutation block_swap(int n);

struct IsometrySubgroup {
  int n = 0;  // acts on permutations of degree n; generators live in S_{2n}
  std::vector<IsometryElement> generators;
};

// The right action of Iso(n) on B1: for block-preserving x with restrictions
// x1 (on 1..n) and x2 (on n+1..2n, relabeled to 1..n), b maps to
// x1^-1 * b * x2; for block-swapping x the same is computed for x*t_n and
// inverted. Specializes to x^-1*b (x in B1), b*phi(x) (x in B2), b^-1 (t_n).
Permutation act(const IsometryElement& x, const Permutation& b);

// Smallest set containing b and closed under every generator's action
// (breadth-first closure; equals the full-group orbit since the group is
// finite). Returned in canonical sorted order.
std::vector<Permutation> orbit(const IsometrySubgroup& u, const Permutation& b);

// Size of the closure of the generators under composition inside S_{2n}.
// Throws if the closure exceeds `limit` elements.
long long group_order(const IsometrySubgroup& u, std::size_t limit = 1'000'000);

}  // namespace molscert

#endif
