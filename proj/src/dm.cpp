#include "molscert/dm.hpp"

#include <algorithm>
#include <stdexcept>

#include "molscert/parallel.hpp"

namespace molscert {

DifferenceMatrix expand(const DMBase& base) {
  const int k = base.rows;
  for (const auto& col : base.base_columns)
    if (static_cast<int>(col.size()) != k)
      throw std::invalid_argument("base column height differs from row count");
  for (const auto& vec : base.expansion_vectors)
    if (static_cast<int>(vec.size()) != k)
      throw std::invalid_argument("expansion vector height differs from row count");

  const int t = static_cast<int>(base.expansion_vectors.size());
  const int q = base.scalar_modulus;
  long long tuples = 1;
  for (int i = 0; i < t; ++i) tuples *= q;

  DifferenceMatrix out{base.descriptor, k, {}};
  out.columns.reserve(base.base_columns.size() * static_cast<std::size_t>(tuples));
  std::vector<int> scalars(t, 0);
  for (const auto& col : base.base_columns) {
    std::fill(scalars.begin(), scalars.end(), 0);
    for (long long s = 0; s < tuples; ++s) {
      std::vector<GroupElement> expanded;
      expanded.reserve(k);
      for (int r = 0; r < k; ++r) {
        GroupElement e = col[r];
        for (int i = 0; i < t; ++i)
          e = add(e, scalar_mul(scalars[i], base.expansion_vectors[i][r]));
        expanded.push_back(std::move(e));
      }
      out.columns.push_back(std::move(expanded));
      // lexicographic odometer over (Z_q)^t, all-zero first
      for (int i = t - 1; i >= 0; --i) {
        if (++scalars[i] < q) break;
        scalars[i] = 0;
      }
    }
  }
  return out;
}

std::vector<std::vector<GroupElement>> apply_row_interchange(
    const std::vector<std::vector<GroupElement>>& columns,
    const std::vector<std::pair<int, int>>& swaps) {
  if (columns.empty()) return columns;
  const int k = static_cast<int>(columns.front().size());
  std::vector<char> touched(k, 0);
  for (auto [a, b] : swaps) {
    if (a < 1 || a > k || b < 1 || b > k)
      throw std::invalid_argument("row interchange index out of range 1.." + std::to_string(k));
    if (a == b || touched[a - 1] || touched[b - 1])
      throw std::invalid_argument("row interchange pairs overlap");
    touched[a - 1] = touched[b - 1] = 1;
  }
  std::vector<std::vector<GroupElement>> out = columns;
  for (auto& col : out) {
    if (static_cast<int>(col.size()) != k)
      throw std::invalid_argument("columns of mixed height");
    for (auto [a, b] : swaps) std::swap(col[a - 1], col[b - 1]);
  }
  return out;
}

DMVerification verify_dm(const DifferenceMatrix& d, int threads) {
  const int k = d.rows;
  const long long order = d.descriptor.order();
  std::vector<std::pair<int, int>> row_pairs;
  for (int s = 0; s < k; ++s)
    for (int t = s + 1; t < k; ++t) row_pairs.emplace_back(s, t);

  DMVerification result;
  result.pairs.resize(row_pairs.size());
  detail::for_chunks(row_pairs.size(), threads, [&](std::size_t b, std::size_t e, std::size_t) {
    std::vector<int> count(static_cast<std::size_t>(order));
    for (std::size_t p = b; p < e; ++p) {
      auto [s, t] = row_pairs[p];
      std::fill(count.begin(), count.end(), 0);
      std::vector<GroupElement> diffs;
      diffs.reserve(d.columns.size());
      for (const auto& col : d.columns) diffs.push_back(sub(col[s], col[t]));
      for (const GroupElement& e2 : diffs) ++count[element_index(e2)];

      RowPairCheck check{s + 1, t + 1, true, std::nullopt, std::nullopt};
      long long missing_idx = -1, dup_idx = -1;
      for (long long idx = 0; idx < order; ++idx) {
        if (count[idx] == 0 && missing_idx < 0) missing_idx = idx;
        if (count[idx] > 1 && dup_idx < 0) dup_idx = idx;
      }
      if (static_cast<long long>(d.columns.size()) != order || missing_idx >= 0 || dup_idx >= 0)
        check.ok = false;
      if (dup_idx >= 0) {
        for (const GroupElement& e2 : diffs)
          if (element_index(e2) == dup_idx) {
            check.duplicated = e2;
            break;
          }
      }
      if (missing_idx >= 0) {
        // reconstruct the missing element from its mixed-radix index
        std::vector<int> coords(d.descriptor.total_slots());
        long long rem = missing_idx;
        for (int slot = d.descriptor.total_slots() - 1; slot >= 0; --slot) {
          int m = d.descriptor.slot_modulus(slot);
          coords[slot] = static_cast<int>(rem % m);
          rem /= m;
        }
        check.missing = GroupElement(d.descriptor, std::move(coords));
      }
      result.pairs[p] = std::move(check);
    }
  });
  for (const RowPairCheck& c : result.pairs)
    if (!c.ok) result.pass = false;
  return result;
}

DifferenceMatrix normalize(const DifferenceMatrix& d) {
  DifferenceMatrix out{d.descriptor, d.rows, {}};
  out.columns.reserve(d.columns.size());
  for (const auto& col : d.columns) {
    std::vector<GroupElement> norm;
    norm.reserve(col.size());
    for (const GroupElement& e : col) norm.push_back(sub(e, col[0]));
    out.columns.push_back(std::move(norm));
  }
  return out;
}

MOLSSet mols_from_dm(const DifferenceMatrix& d, int threads) {
  DMVerification check = verify_dm(d, threads);
  if (!check.pass)
    throw std::invalid_argument("difference matrix fails verification; refusing to build MOLS");
  const int k = d.rows;
  const long long order = d.descriptor.order();
  const int n = static_cast<int>(order);

  DifferenceMatrix norm = normalize(d);
  std::vector<GroupElement> elements = enumerate_group(d.descriptor);

  MOLSSet mols{n, {}};
  for (int m = 1; m < k; ++m) {
    std::vector<int> cells(static_cast<std::size_t>(n) * n, 0);
    for (int j = 0; j < n; ++j) {  // row j of the square corresponds to g_{j+1}
      for (int c = 0; c < n; ++c) {
        GroupElement v = add(norm.columns[c][m], elements[j]);
        cells[static_cast<std::size_t>(j) * n + c] = static_cast<int>(element_index(v)) + 1;
      }
    }
    LatinSquare square(n, std::move(cells));
    CheckResult latin = is_latin(square);
    if (!latin.ok)
      throw std::logic_error("verified difference matrix produced a non-Latin square: " +
                             latin.detail);
    mols.squares.push_back(std::move(square));
  }
  return mols;
}

}  // namespace molscert
