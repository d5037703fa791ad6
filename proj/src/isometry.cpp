#include "molscert/isometry.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace molscert {

namespace {

// restriction of a block-preserving degree-2n permutation to 1..n
Permutation restrict_low(const Permutation& x, int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = x.image(i);
  return Permutation(std::move(images));
}

// restriction to n+1..2n, relabeled to 1..n via the natural isomorphism
Permutation restrict_high(const Permutation& x, int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = x.image(n + i) - n;
  return Permutation(std::move(images));
}

}  // namespace

IsometryElement IsometryElement::classify(const Permutation& g) {
  if (g.degree() % 2 != 0)
    throw std::invalid_argument("isometry element must have even degree");
  int n = g.degree() / 2;
  bool swaps = g.image(0) >= n;
  for (int i = 0; i < n; ++i) {
    if ((g.image(i) >= n) != swaps || (g.image(n + i) >= n) == swaps)
      throw std::invalid_argument(
          "permutation mixes the blocks {1..n} and {n+1..2n}: not in Iso(n)");
  }
  return IsometryElement(g, swaps);
}

Permutation block_swap(int n) {
  std::vector<int> images(2 * n);
  for (int i = 0; i < n; ++i) {
    images[i] = n + i;
    images[n + i] = i;
  }
  return Permutation(std::move(images));
}

Permutation act(const IsometryElement& x, const Permutation& b) {
  int n = x.half_degree();
  if (b.degree() != n)
    throw std::invalid_argument("degree mismatch: isometry over 2*" + std::to_string(n) +
                                " points acting on degree " + std::to_string(b.degree()));
  if (!x.swaps_blocks()) {
    Permutation x1 = restrict_low(x.underlying(), n);
    Permutation x2 = restrict_high(x.underlying(), n);
    return compose(compose(inverse(x1), b), x2);
  }
  Permutation xp = compose(x.underlying(), block_swap(n));
  Permutation x1 = restrict_low(xp, n);
  Permutation x2 = restrict_high(xp, n);
  return inverse(compose(compose(inverse(x1), b), x2));
}

std::vector<Permutation> orbit(const IsometrySubgroup& u, const Permutation& b) {
  for (const IsometryElement& g : u.generators)
    if (g.half_degree() != b.degree())
      throw std::invalid_argument("degree mismatch between subgroup and permutation");
  std::set<Permutation> seen{b};
  std::deque<Permutation> frontier{b};
  while (!frontier.empty()) {
    Permutation w = std::move(frontier.front());
    frontier.pop_front();
    for (const IsometryElement& g : u.generators) {
      Permutation y = act(g, w);
      if (seen.insert(y).second) frontier.push_back(std::move(y));
    }
  }
  return {seen.begin(), seen.end()};
}

long long group_order(const IsometrySubgroup& u, std::size_t limit) {
  if (u.generators.empty()) return 1;
  int deg = u.generators.front().underlying().degree();
  for (const IsometryElement& g : u.generators)
    if (g.underlying().degree() != deg)
      throw std::invalid_argument("generators of mixed degree");
  Permutation id(deg);
  std::set<Permutation> seen{id};
  std::deque<Permutation> frontier{id};
  while (!frontier.empty()) {
    Permutation w = std::move(frontier.front());
    frontier.pop_front();
    for (const IsometryElement& g : u.generators) {
      Permutation y = compose(w, g.underlying());
      if (seen.insert(y).second) {
        if (seen.size() > limit)
          throw std::runtime_error("subgroup closure exceeded limit of " +
                                   std::to_string(limit) + " elements");
        frontier.push_back(std::move(y));
      }
    }
  }
  return static_cast<long long>(seen.size());
}

}  // namespace molscert
