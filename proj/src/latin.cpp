#include "molscert/latin.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "molscert/parallel.hpp"

namespace molscert {

LatinSquare::LatinSquare(int order, std::vector<int> cells)
    : order_(order), cells_(std::move(cells)) {
  if (order_ <= 0) throw std::invalid_argument("order must be positive");
  if (cells_.size() != static_cast<std::size_t>(order_) * order_)
    throw std::invalid_argument("cell count does not match order");
  for (int v : cells_)
    if (v < 1 || v > order_)
      throw std::invalid_argument("symbol " + std::to_string(v) + " out of range 1.." +
                                  std::to_string(order_));
}

CheckResult is_latin(const LatinSquare& s) {
  int n = s.order();
  std::vector<int> count(n + 1);
  for (int i = 0; i < n; ++i) {
    std::fill(count.begin(), count.end(), 0);
    for (int j = 0; j < n; ++j) {
      if (++count[s.at(i, j)] > 1)
        return {false, "row " + std::to_string(i + 1) + ": symbol " +
                           std::to_string(s.at(i, j)) + " repeats"};
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(count.begin(), count.end(), 0);
    for (int i = 0; i < n; ++i) {
      if (++count[s.at(i, j)] > 1)
        return {false, "column " + std::to_string(j + 1) + ": symbol " +
                           std::to_string(s.at(i, j)) + " repeats"};
    }
  }
  return {true, ""};
}

CheckResult are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("order mismatch: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
  int n = a.order();
  // occupancy over pair codes (a-1)*n + (b-1); remembers the first occurrence
  std::vector<int> seen_at(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int code = (a.at(i, j) - 1) * n + (b.at(i, j) - 1);
      if (seen_at[code] >= 0) {
        int pi = seen_at[code] / n, pj = seen_at[code] % n;
        return {false, "pair (" + std::to_string(a.at(i, j)) + "," +
                           std::to_string(b.at(i, j)) + ") at cells (" +
                           std::to_string(pi + 1) + "," + std::to_string(pj + 1) +
                           ") and (" + std::to_string(i + 1) + "," +
                           std::to_string(j + 1) + ")"};
      }
      seen_at[code] = i * n + j;
    }
  }
  return {true, ""};
}

MOLSReport verify_mols(const MOLSSet& m, bool fail_fast, int threads) {
  MOLSReport report;
  for (const LatinSquare& s : m.squares)
    if (s.order() != m.order)
      throw std::invalid_argument("MOLS set has squares of mixed order");

  std::size_t count = m.squares.size();
  std::vector<std::string> latin_violations(count);
  detail::for_chunks(count, fail_fast ? 1 : threads, [&](std::size_t b, std::size_t e, std::size_t) {
    for (std::size_t i = b; i < e; ++i) {
      CheckResult r = is_latin(m.squares[i]);
      if (!r.ok) latin_violations[i] = "square " + std::to_string(i + 1) + ": " + r.detail;
    }
  });
  for (std::size_t i = 0; i < count; ++i) {
    ++report.squares_checked;
    if (!latin_violations[i].empty()) {
      report.violations.push_back(latin_violations[i]);
      if (fail_fast) {
        report.pass = false;
        return report;
      }
    }
  }

  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  std::vector<std::string> pair_violations(pairs.size());
  detail::for_chunks(pairs.size(), fail_fast ? 1 : threads,
                     [&](std::size_t b, std::size_t e, std::size_t) {
                       for (std::size_t p = b; p < e; ++p) {
                         auto [i, j] = pairs[p];
                         CheckResult r = are_orthogonal(m.squares[i], m.squares[j]);
                         if (!r.ok)
                           pair_violations[p] = "squares " + std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + ": " + r.detail;
                       }
                     });
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    ++report.pairs_checked;
    if (!pair_violations[p].empty()) {
      report.violations.push_back(pair_violations[p]);
      if (fail_fast) break;
    }
  }
  report.pass = report.violations.empty();
  return report;
}

std::string write_mols_text(const MOLSSet& m) {
  std::string out = "mols n=" + std::to_string(m.order) +
                    " count=" + std::to_string(m.squares.size()) + "\n";
  for (std::size_t s = 0; s < m.squares.size(); ++s) {
    if (s > 0) out += '\n';
    const LatinSquare& sq = m.squares[s];
    for (int i = 0; i < m.order; ++i) {
      for (int j = 0; j < m.order; ++j) {
        if (j > 0) out += ' ';
        out += std::to_string(sq.at(i, j));
      }
      out += '\n';
    }
  }
  return out;
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw std::invalid_argument("mols file line " + std::to_string(line) + ": " + what);
}

}  // namespace

MOLSSet parse_mols_text(const std::string& text) {
  if (text.empty() || text.back() != '\n')
    throw std::invalid_argument("mols file: trailing newline required");
  std::vector<std::string> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\n') {
      lines.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }

  if (lines.empty()) parse_fail(1, "missing header");
  int n = -1;
  long count = -1;
  {
    const std::string& h = lines[0];
    if (h.rfind("mols n=", 0) != 0) parse_fail(1, "expected header \"mols n=<n> count=<m>\"");
    std::size_t sp = h.find(' ', 7);
    if (sp == std::string::npos || h.compare(sp, 7, " count=") != 0)
      parse_fail(1, "expected header \"mols n=<n> count=<m>\"");
    try {
      n = std::stoi(h.substr(7, sp - 7));
      count = std::stol(h.substr(sp + 7));
    } catch (const std::exception&) {
      parse_fail(1, "bad header numbers");
    }
    if (n <= 0 || count < 0) parse_fail(1, "bad header numbers");
  }

  MOLSSet result{n, {}};
  std::size_t ln = 1;  // index into lines
  for (long s = 0; s < count; ++s) {
    if (s > 0) {
      if (ln >= lines.size() || !lines[ln].empty())
        parse_fail(ln + 1, "expected blank line between squares");
      ++ln;
    }
    std::vector<int> cells;
    cells.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i, ++ln) {
      if (ln >= lines.size()) parse_fail(ln + 1, "unexpected end of file");
      const std::string& row = lines[ln];
      std::size_t pos = 0;
      for (int j = 0; j < n; ++j) {
        if (j > 0) {
          if (pos >= row.size() || row[pos] != ' ')
            parse_fail(ln + 1, "expected single space between symbols");
          ++pos;
        }
        if (pos >= row.size() || !std::isdigit(static_cast<unsigned char>(row[pos])))
          parse_fail(ln + 1, "expected symbol");
        long v = 0;
        while (pos < row.size() && std::isdigit(static_cast<unsigned char>(row[pos]))) {
          v = v * 10 + (row[pos] - '0');
          ++pos;
        }
        if (v < 1 || v > n)
          parse_fail(ln + 1, "symbol " + std::to_string(v) + " out of range");
        cells.push_back(static_cast<int>(v));
      }
      if (pos != row.size()) parse_fail(ln + 1, "trailing characters");
    }
    result.squares.emplace_back(n, std::move(cells));
  }
  if (ln != lines.size()) parse_fail(ln + 1, "trailing content after last square");
  return result;
}

}  // namespace molscert
