#include "molscert/code.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "molscert/parallel.hpp"

namespace molscert {

PermutationCode code_union(int degree, const std::vector<std::vector<Permutation>>& orbits) {
  PermutationCode code{degree, {}};
  for (const auto& orb : orbits)
    for (const Permutation& w : orb) {
      if (w.degree() != degree) throw std::invalid_argument("degree mismatch in code union");
      code.words.push_back(w);
    }
  std::sort(code.words.begin(), code.words.end());
  code.words.erase(std::unique(code.words.begin(), code.words.end()), code.words.end());
  return code;
}

int min_distance(const PermutationCode& c, int threads) {
  if (c.words.empty()) throw std::invalid_argument("minimum distance of an empty code");
  std::size_t count = c.words.size();
  int nchunks = detail::resolve_threads(threads);
  std::vector<int> partial(static_cast<std::size_t>(nchunks), c.degree);
  detail::for_chunks(count, nchunks, [&](std::size_t b, std::size_t e, std::size_t chunk) {
    int best = c.degree;
    for (std::size_t i = b; i < e; ++i)
      for (std::size_t j = i + 1; j < count; ++j)
        best = std::min(best, hamming_distance(c.words[i], c.words[j]));
    partial[chunk] = best;
  });
  return *std::min_element(partial.begin(), partial.end());
}

namespace {

SeparationOutcome fail(SeparationError::Kind kind, std::size_t first, std::size_t second,
                       int observed, std::string message) {
  SeparationOutcome out;
  out.error = SeparationError{kind, first, second, observed, std::move(message)};
  return out;
}

// first (i,j) with distance != want between two word lists, or nullopt
std::optional<std::tuple<std::size_t, std::size_t, int>> find_distance_violation(
    const std::vector<Permutation>& a, const std::vector<Permutation>& b, bool same_list,
    int want, int threads) {
  std::size_t count = a.size();
  int nchunks = detail::resolve_threads(threads);
  std::vector<std::optional<std::tuple<std::size_t, std::size_t, int>>> partial(
      static_cast<std::size_t>(nchunks));
  detail::for_chunks(count, nchunks, [&](std::size_t lo, std::size_t hi, std::size_t chunk) {
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = same_list ? i + 1 : 0; j < b.size(); ++j) {
        int d = hamming_distance(a[i], b[j]);
        if (d != want) {
          partial[chunk] = {i, j, d};
          return;
        }
      }
    }
  });
  for (const auto& p : partial)
    if (p) return p;
  return std::nullopt;
}

}  // namespace

SeparationOutcome separate(const PermutationCode& c, int threads) {
  const std::size_t count = c.words.size();
  const int n = c.degree;
  if (n <= 0) throw std::invalid_argument("separate: degree must be positive");
  if (count == 0 || count % static_cast<std::size_t>(n) != 0)
    return fail(SeparationError::Kind::SizeNotMultiple, count, 0, -1,
                "code size " + std::to_string(count) + " is not a positive multiple of n=" +
                    std::to_string(n));
  const std::size_t m = count / static_cast<std::size_t>(n);

  // greedy collection: distance to the class's first word only
  std::vector<char> handled(count, 0);
  std::vector<std::vector<std::size_t>> classes;
  std::size_t cursor = 0;
  for (std::size_t cls = 0; cls < m; ++cls) {
    while (cursor < count && handled[cursor]) ++cursor;
    std::size_t seed = cursor;
    std::vector<std::size_t> members{seed};
    handled[seed] = 1;
    for (std::size_t j = seed + 1; j < count; ++j) {
      if (handled[j]) continue;
      if (hamming_distance(c.words[seed], c.words[j]) == n) {
        members.push_back(j);
        handled[j] = 1;
      }
    }
    if (members.size() != static_cast<std::size_t>(n))
      return fail(SeparationError::Kind::IncompleteClass, cls, seed,
                  static_cast<int>(members.size()),
                  "class " + std::to_string(cls + 1) + " (seed word " +
                      std::to_string(seed + 1) + ") collected " +
                      std::to_string(members.size()) + " words, expected " + std::to_string(n));
    classes.push_back(std::move(members));
  }

  SeparatedCode sep{n, {}};
  for (const auto& members : classes) {
    std::vector<Permutation> words;
    words.reserve(members.size());
    for (std::size_t j : members) words.push_back(c.words[j]);
    std::sort(words.begin(), words.end());
    sep.classes.push_back(std::move(words));
  }

  // validation: all intra-class pairs at distance n
  for (std::size_t cls = 0; cls < m; ++cls) {
    auto v = find_distance_violation(sep.classes[cls], sep.classes[cls], true, n, threads);
    if (v) {
      auto [i, j, d] = *v;
      return fail(SeparationError::Kind::IntraClassDistance, i, j, d,
                  "class " + std::to_string(cls + 1) + ": words " + std::to_string(i + 1) +
                      " and " + std::to_string(j + 1) + " at distance " + std::to_string(d) +
                      ", expected " + std::to_string(n));
    }
  }
  // validation: all inter-class pairs at distance n-1
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      auto v = find_distance_violation(sep.classes[a], sep.classes[b], false, n - 1, threads);
      if (v) {
        auto [i, j, d] = *v;
        return fail(SeparationError::Kind::InterClassDistance, a, b, d,
                    "classes " + std::to_string(a + 1) + " and " + std::to_string(b + 1) +
                        ": words " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " at distance " + std::to_string(d) + ", expected " +
                        std::to_string(n - 1));
      }
    }
  }

  SeparationOutcome out;
  out.code = std::move(sep);
  return out;
}

MOLSSet mols_from_separated(const SeparatedCode& s) {
  int n = s.degree;
  MOLSSet mols{n, {}};
  for (const auto& cls : s.classes) {
    if (cls.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("separated class size differs from degree");
    std::vector<int> cells(static_cast<std::size_t>(n) * n, 0);
    for (int k = 0; k < n; ++k) {
      const Permutation& word = cls[k];
      for (int j = 0; j < n; ++j) {
        int i = word.image(j);
        cells[static_cast<std::size_t>(i) * n + j] = k + 1;
      }
    }
    LatinSquare square(n, std::move(cells));
    CheckResult check = is_latin(square);
    if (!check.ok)
      throw std::logic_error("separated code produced a non-Latin square: " + check.detail);
    mols.squares.push_back(std::move(square));
  }
  return mols;
}

}  // namespace molscert
