#ifndef MOLSCERT_LATIN_HPP
#define MOLSCERT_LATIN_HPP

#include <string>
#include <vector>

namespace molscert {

// n x n array of symbols 1..n, row-major. Symbol range is enforced at
// construction; Latin-ness is a checked property (is_latin), because this
// type also holds candidate squares under test.
class LatinSquare {
public:
  LatinSquare(int order, std::vector<int> cells);

  int order() const { return order_; }
  int at(int row, int col) const { return cells_[static_cast<std::size_t>(row) * order_ + col]; }
  const std::vector<int>& cells() const { return cells_; }

  friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
  int order_;
  std::vector<int> cells_;
};

struct MOLSSet {
  int order;
  std::vector<LatinSquare> squares;
};

struct CheckResult {
  bool ok;
  std::string detail;  // first violation; empty when ok
};

// True iff each row and each column contains each symbol exactly once.
CheckResult is_latin(const LatinSquare& s);

// True iff the n^2 ordered pairs (a[i][j], b[i][j]) are pairwise distinct.
CheckResult are_orthogonal(const LatinSquare& a, const LatinSquare& b);

struct MOLSReport {
  bool pass = true;
  int squares_checked = 0;
  int pairs_checked = 0;
  std::vector<std::string> violations;  // exhaustive unless fail_fast
};

MOLSReport verify_mols(const MOLSSet& m, bool fail_fast = false, int threads = 1);

// MOLS file format: header "mols n=<n> count=<m>", then each square as n
// lines of n space-separated integers 1..n, squares separated by one blank
// line, trailing newline required. The parser is strict: no other whitespace
// variation is accepted.
std::string write_mols_text(const MOLSSet& m);
MOLSSet parse_mols_text(const std::string& text);

}  // namespace molscert

#endif
