#ifndef MOLSCERT_CODE_HPP
#define MOLSCERT_CODE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "molscert/latin.hpp"
#include "molscert/perm.hpp"

namespace molscert {

// A permutation array: pairwise distinct words of a common degree.
struct PermutationCode {
  int degree = 0;
  std::vector<Permutation> words;
};

// Sorted, deduplicated union of orbits (the canonical code order).
PermutationCode code_union(int degree, const std::vector<std::vector<Permutation>>& orbits);

// Minimum pairwise Hamming distance; by convention a single-word code has
// minimum distance equal to the degree.
int min_distance(const PermutationCode& c, int threads = 1);

// m classes of exactly n permutations each: intra-class distances all n,
// inter-class distances all n-1. Words inside each class are kept in
// canonical (lexicographic) order.
struct SeparatedCode {
  int degree = 0;
  std::vector<std::vector<Permutation>> classes;
};

struct SeparationError {
  enum class Kind { SizeNotMultiple, IncompleteClass, IntraClassDistance, InterClassDistance };
  Kind kind;
  // offending word/class indices and observed distance, where applicable
  std::size_t first = 0;
  std::size_t second = 0;
  int observed = -1;
  std::string message;
};

struct SeparationOutcome {
  std::optional<SeparatedCode> code;
  std::optional<SeparationError> error;
  bool ok() const { return code.has_value(); }
};

// Greedy separation: repeatedly open a class with the first unassigned word,
// collect every unassigned word at distance exactly n from that first word,
// then validate the class (size n, all intra pairs at distance n) and finally
// every inter-class pair (distance exactly n-1).
SeparationOutcome separate(const PermutationCode& c, int threads = 1);

// Square s gets entry k at row i, column j exactly when class s's k-th word
// maps j to i. The separated-code invariants guarantee Latin squares; a
// defensive check failure aborts.
MOLSSet mols_from_separated(const SeparatedCode& s);

}  // namespace molscert

#endif
