#ifndef MOLSCERT_DM_HPP
#define MOLSCERT_DM_HPP

#include <optional>
#include <utility>
#include <vector>

#include "molscert/algebra.hpp"
#include "molscert/latin.hpp"

namespace molscert {

// k x n matrix over a product group, stored as columns of height k.
struct DifferenceMatrix {
  GroupDescriptor descriptor;
  int rows = 0;
  std::vector<std::vector<GroupElement>> columns;

  int cols() const { return static_cast<int>(columns.size()); }
  const GroupElement& at(int row, int col) const { return columns[col][row]; }
};

// Base columns plus expansion vectors: the full matrix is obtained by adding
// every Z3-combination of the expansion vectors to every base column.
struct DMBase {
  GroupDescriptor descriptor;
  int rows = 0;
  std::vector<std::vector<GroupElement>> base_columns;
  std::vector<std::vector<GroupElement>> expansion_vectors;
  int scalar_modulus = 3;
};

// For every base column c and scalar tuple (a1..at) in (Z3)^t, emits
// c + sum_i a_i * V_i. Base columns keep their given order; scalar tuples run
// in lexicographic order starting from all-zero. The result has
// |base_columns| * 3^t columns regardless of whether that matches |G|; the
// caller reports a count mismatch.
DifferenceMatrix expand(const DMBase& base);

// Swaps the given 1-based row pairs in every column; pairs must be in range
// and pairwise disjoint.
std::vector<std::vector<GroupElement>> apply_row_interchange(
    const std::vector<std::vector<GroupElement>>& columns,
    const std::vector<std::pair<int, int>>& swaps);

struct RowPairCheck {
  int row_s = 0;  // 1-based
  int row_t = 0;
  bool ok = false;
  std::optional<GroupElement> missing;     // one element absent from the difference multiset
  std::optional<GroupElement> duplicated;  // one element occurring more than once
};

struct DMVerification {
  bool pass = true;
  std::vector<RowPairCheck> pairs;  // all k(k-1)/2 pairs, failing and passing
};

// For every unordered row pair (s,t), checks that the multiset of differences
// d[s][j] - d[t][j] over all columns covers the group exactly once.
DMVerification verify_dm(const DifferenceMatrix& d, int threads = 1);

// Subtracts row 1 from every row, making the first row all identity. The
// difference multiset of every row pair is unchanged.
DifferenceMatrix normalize(const DifferenceMatrix& d);

// Normalized rows 2..k, translated by every group element in canonical
// enumeration order, become the rows of k-1 mutually orthogonal Latin
// squares; entries map to symbols 1..n via their enumeration position.
// Requires verify_dm(d) to pass.
MOLSSet mols_from_dm(const DifferenceMatrix& d, int threads = 1);

}  // namespace molscert

#endif
