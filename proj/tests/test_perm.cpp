#include <algorithm>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "molscert/perm.hpp"

using namespace molscert;

namespace {

Permutation random_perm(int degree, std::mt19937_64& rng) {
  std::vector<int> images(degree);
  for (int i = 0; i < degree; ++i) images[i] = i;
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation(std::move(images));
}

}  // namespace

TEST_CASE("identity and bijection validation") {
  Permutation id(5);
  CHECK(id.is_identity());
  CHECK(id.degree() == 5);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("compose basics") {
  Permutation id(3);
  Permutation p = parse_cycles("(1,2)", 3);
  CHECK(compose(id, p) == p);
  CHECK(compose(p, id) == p);
  CHECK(compose(p, inverse(p)).is_identity());
  // (1,2) then (2,3): 1->2->3
  CHECK(format_cycles(compose(parse_cycles("(1,2)", 3), parse_cycles("(2,3)", 3))) ==
        "(1,3,2)");
  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), std::invalid_argument);
}

TEST_CASE("inverse basics") {
  CHECK(inverse(Permutation(4)).is_identity());
  CHECK(format_cycles(inverse(parse_cycles("(1,2,3)", 3))) == "(1,3,2)");
  std::mt19937_64 rng(7);
  Permutation p = random_perm(20, rng);
  CHECK(inverse(inverse(p)) == p);
}

TEST_CASE("hamming distance basics") {
  Permutation id(5);
  CHECK(hamming_distance(id, id) == 0);
  CHECK(hamming_distance(id, parse_cycles("(1,2)", 5)) == 2);
  CHECK_THROWS_AS(hamming_distance(Permutation(3), Permutation(4)), std::invalid_argument);
}

TEST_CASE("hamming distance equals degree minus fixed points of p^-1 q") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Permutation p = random_perm(17, rng);
    Permutation q = random_perm(17, rng);
    Permutation r = compose(inverse(p), q);
    int fixed = 0;
    for (int i = 0; i < 17; ++i)
      if (r.image(i) == i) ++fixed;
    CHECK(hamming_distance(p, q) == 17 - fixed);
  }
}

TEST_CASE("metric axioms and bi-invariance on random samples") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    Permutation p = random_perm(12, rng);
    Permutation q = random_perm(12, rng);
    Permutation r = random_perm(12, rng);
    int dpq = hamming_distance(p, q);
    CHECK(dpq == hamming_distance(q, p));
    CHECK((dpq == 0) == (p == q));
    CHECK(hamming_distance(p, r) <= dpq + hamming_distance(q, r));
    CHECK(hamming_distance(compose(r, p), compose(r, q)) == dpq);
    CHECK(hamming_distance(compose(p, r), compose(q, r)) == dpq);
    CHECK(hamming_distance(inverse(p), inverse(q)) == dpq);
  }
}

TEST_CASE("no two permutations are at distance 1") {
  // exhaustive for degree 4: 24*24 pairs
  std::vector<Permutation> all;
  std::vector<int> images{0, 1, 2, 3};
  do {
    all.push_back(Permutation(images));
  } while (std::next_permutation(images.begin(), images.end()));
  CHECK(all.size() == 24);
  for (const Permutation& p : all)
    for (const Permutation& q : all) CHECK(hamming_distance(p, q) != 1);
}

TEST_CASE("parse_cycles basics") {
  CHECK(parse_cycles("(1,2)(3,4)", 4).images() == std::vector<int>{1, 0, 3, 2});
  CHECK(parse_cycles("", 5).is_identity());
  CHECK(parse_cycles("()", 5).is_identity());
  CHECK(parse_cycles(" ( 1 , 2 )\n (3,\n4) ", 4).images() == std::vector<int>{1, 0, 3, 2});
  // singleton cycle fixes the point but claims it
  CHECK(parse_cycles("(3)", 3).is_identity());
}

TEST_CASE("parse_cycles rejects bad input") {
  CHECK_THROWS_AS(parse_cycles("(1,5)", 4), std::invalid_argument);   // out of range
  CHECK_THROWS_AS(parse_cycles("(1,2)(2,3)", 4), std::invalid_argument);  // repeated
  CHECK_THROWS_AS(parse_cycles("(1,1)", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(1,2", 4), std::invalid_argument);    // unterminated
  CHECK_THROWS_AS(parse_cycles("1,2", 4), std::invalid_argument);     // missing '('
  CHECK_THROWS_AS(parse_cycles("(0,1)", 4), std::invalid_argument);   // 0 not a point
  CHECK_THROWS_AS(parse_cycles("(1,,2)", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_cycles("(01)", 4), std::invalid_argument);    // leading zero
}

TEST_CASE("format_cycles canonical form") {
  CHECK(format_cycles(Permutation(6)) == "()");
  CHECK(format_cycles(Permutation(std::vector<int>{1, 0, 3, 2})) == "(1,2)(3,4)");
  // cycles start at their minimum and are sorted by first point
  CHECK(format_cycles(parse_cycles("(4,3)(2,1)", 4)) == "(1,2)(3,4)");
  CHECK(format_cycles(parse_cycles("(5,6,4)", 7)) == "(4,5,6)");
}

TEST_CASE("parse/format round-trip on random permutations") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    Permutation p = random_perm(30, rng);
    CHECK(parse_cycles(format_cycles(p), 30) == p);
  }
}
