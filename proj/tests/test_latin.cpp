#include <random>
#include <stdexcept>

#include "doctest.h"
#include "molscert/latin.hpp"

using namespace molscert;

namespace {

LatinSquare cyclic_square(int n, int step = 1) {
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cells[static_cast<std::size_t>(i) * n + j] = (i + step * j) % n + 1;
  return LatinSquare(n, std::move(cells));
}

LatinSquare relabel(const LatinSquare& s, const std::vector<int>& map) {
  // map[k-1] is the new symbol for k
  std::vector<int> cells = s.cells();
  for (int& v : cells) v = map[v - 1];
  return LatinSquare(s.order(), std::move(cells));
}

}  // namespace

TEST_CASE("symbol range is enforced at construction") {
  CHECK_THROWS_AS(LatinSquare(2, {1, 2, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(LatinSquare(2, {0, 1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(LatinSquare(2, {1, 2, 1}), std::invalid_argument);
}

TEST_CASE("is_latin") {
  CHECK(is_latin(cyclic_square(4)).ok);
  LatinSquare bad_row(3, {1, 1, 2, 2, 3, 1, 3, 2, 3});
  CheckResult r = is_latin(bad_row);
  CHECK_FALSE(r.ok);
  CHECK(r.detail.find("row 1") != std::string::npos);
  LatinSquare bad_col(2, {1, 2, 1, 2});
  CheckResult c = is_latin(bad_col);
  CHECK_FALSE(c.ok);
  CHECK(c.detail.find("column") != std::string::npos);
}

TEST_CASE("orthogonality basics") {
  LatinSquare a = cyclic_square(3, 1);
  LatinSquare b = cyclic_square(3, 2);
  CHECK(are_orthogonal(a, b).ok);
  CheckResult self = are_orthogonal(a, a);
  CHECK_FALSE(self.ok);
  CHECK_FALSE(self.detail.empty());
  CHECK_THROWS_AS(are_orthogonal(cyclic_square(3), cyclic_square(4)),
                  std::invalid_argument);
}

TEST_CASE("orthogonality is symmetric and invariant under symbol relabeling") {
  LatinSquare a = cyclic_square(5, 1);
  LatinSquare b = cyclic_square(5, 2);
  CHECK(are_orthogonal(a, b).ok == are_orthogonal(b, a).ok);

  std::mt19937_64 rng(23);
  std::vector<int> map(5);
  for (int trial = 0; trial < 50; ++trial) {
    for (int i = 0; i < 5; ++i) map[i] = i + 1;
    std::shuffle(map.begin(), map.end(), rng);
    CHECK(are_orthogonal(relabel(a, map), b).ok);
    CHECK(are_orthogonal(a, relabel(b, map)).ok);
  }
}

TEST_CASE("pair counting matches an independent reverse-scan oracle") {
  LatinSquare a = cyclic_square(7, 1);
  LatinSquare b = cyclic_square(7, 3);
  int n = a.order();
  std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
  int distinct = 0;
  for (int i = n - 1; i >= 0; --i)
    for (int j = n - 1; j >= 0; --j) {
      int code = (a.at(i, j) - 1) * n + (b.at(i, j) - 1);
      if (!seen[code]) {
        seen[code] = 1;
        ++distinct;
      }
    }
  CHECK((distinct == n * n) == are_orthogonal(a, b).ok);
}

TEST_CASE("verify_mols aggregates") {
  MOLSSet empty{4, {}};
  MOLSReport vac = verify_mols(empty);
  CHECK(vac.pass);
  CHECK(vac.pairs_checked == 0);

  MOLSSet good{3, {cyclic_square(3, 1), cyclic_square(3, 2)}};
  MOLSReport rep = verify_mols(good);
  CHECK(rep.pass);
  CHECK(rep.squares_checked == 2);
  CHECK(rep.pairs_checked == 1);

  MOLSSet dup{3, {cyclic_square(3, 1), cyclic_square(3, 1)}};
  MOLSReport bad = verify_mols(dup);
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.violations.empty());

  // fail-fast stops at the first violation, exhaustive keeps counting
  MOLSSet multi{3, {cyclic_square(3, 1), cyclic_square(3, 1), cyclic_square(3, 1)}};
  CHECK(verify_mols(multi, false).violations.size() == 3);
  CHECK(verify_mols(multi, true).violations.size() == 1);
}

TEST_CASE("verify_mols is thread-count invariant") {
  MOLSSet set{5, {cyclic_square(5, 1), cyclic_square(5, 2), cyclic_square(5, 3)}};
  MOLSReport one = verify_mols(set, false, 1);
  MOLSReport four = verify_mols(set, false, 4);
  CHECK(one.pass == four.pass);
  CHECK(one.violations == four.violations);
}

TEST_CASE("mols file write/parse round-trip") {
  MOLSSet set{3, {cyclic_square(3, 1), cyclic_square(3, 2)}};
  std::string text = write_mols_text(set);
  CHECK(text.substr(0, text.find('\n')) == "mols n=3 count=2");
  CHECK(text.back() == '\n');
  MOLSSet back = parse_mols_text(text);
  CHECK(back.order == 3);
  REQUIRE(back.squares.size() == 2);
  CHECK(back.squares[0] == set.squares[0]);
  CHECK(back.squares[1] == set.squares[1]);
  CHECK(write_mols_text(back) == text);
}

TEST_CASE("mols file parser is strict") {
  std::string good = "mols n=2 count=1\n1 2\n2 1\n";
  CHECK(parse_mols_text(good).squares.size() == 1);
  // trailing newline required
  CHECK_THROWS_AS(parse_mols_text("mols n=2 count=1\n1 2\n2 1"), std::invalid_argument);
  // no double spaces
  CHECK_THROWS_AS(parse_mols_text("mols n=2 count=1\n1  2\n2 1\n"), std::invalid_argument);
  // no trailing blanks
  CHECK_THROWS_AS(parse_mols_text("mols n=2 count=1\n1 2 \n2 1\n"), std::invalid_argument);
  // bad header
  CHECK_THROWS_AS(parse_mols_text("mols n=2count=1\n1 2\n2 1\n"), std::invalid_argument);
  // symbol out of range
  CHECK_THROWS_AS(parse_mols_text("mols n=2 count=1\n1 3\n2 1\n"), std::invalid_argument);
  // missing blank separator between squares
  CHECK_THROWS_AS(parse_mols_text("mols n=2 count=2\n1 2\n2 1\n1 2\n2 1\n"),
                  std::invalid_argument);
  // trailing content
  CHECK_THROWS_AS(parse_mols_text("mols n=2 count=1\n1 2\n2 1\n\n"), std::invalid_argument);
}
