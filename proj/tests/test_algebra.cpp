#include <set>
#include <stdexcept>

#include "doctest.h"
#include "molscert/algebra.hpp"

using namespace molscert;

namespace {

const GroupDescriptor kGF4{{Component{ComponentKind::GF4}}};
const GroupDescriptor kGF27{{Component{ComponentKind::GF27}}};

GroupElement gf4(int c0, int c1) { return GroupElement(kGF4, {c0, c1}); }
GroupElement gf27(int c0, int c1, int c2) { return GroupElement(kGF27, {c0, c1, c2}); }

}  // namespace

TEST_CASE("descriptor parsing and canonical spelling") {
  CHECK(GroupDescriptor::parse("GF4*GF27").to_string() == "GF4*GF27");
  CHECK(GroupDescriptor::parse("GF4xGF27").to_string() == "GF4*GF27");
  CHECK(GroupDescriptor::parse("Z5*Z3*Z3").to_string() == "Z5*Z3*Z3");
  CHECK(GroupDescriptor::parse("Z5xZ3xZ3").to_string() == "Z5*Z3*Z3");
  CHECK(GroupDescriptor::parse("Z45").order() == 45);
  CHECK(GroupDescriptor::parse("GF4*GF27").order() == 108);
  CHECK_THROWS_AS(GroupDescriptor::parse("GF8"), std::invalid_argument);
  CHECK_THROWS_AS(GroupDescriptor::parse("Z1"), std::invalid_argument);
  CHECK_THROWS_AS(GroupDescriptor::parse(""), std::invalid_argument);
}

TEST_CASE("additive basics") {
  GroupDescriptor d = GroupDescriptor::parse("GF4*GF27");
  GroupElement zero = GroupElement::zero(d);
  GroupElement e = parse_element("(z+1,2x^2+x+1)", d);
  CHECK(add(e, zero) == e);
  CHECK(add(e, neg(e)) == zero);
  CHECK(sub(e, e) == zero);
  // characteristic 2 in the GF4 component, 3 in the GF27 component
  GroupElement g4 = parse_element("(z,0)", d);
  CHECK(add(g4, g4) == zero);
  GroupElement g27 = parse_element("(0,x^2+2)", d);
  CHECK(add(add(g27, g27), g27) == zero);
  CHECK_THROWS_AS(add(gf4(1, 0), gf27(1, 0, 0)), std::invalid_argument);
}

TEST_CASE("GF4 field axioms, exhaustive") {
  std::vector<GroupElement> all = enumerate_group(kGF4);
  REQUIRE(all.size() == 4);
  GroupElement zero = gf4(0, 0), one = gf4(1, 0);
  for (const auto& a : all) {
    CHECK(mul_field(a, one) == a);
    for (const auto& b : all) {
      CHECK(mul_field(a, b) == mul_field(b, a));
      for (const auto& c : all) {
        CHECK(mul_field(mul_field(a, b), c) == mul_field(a, mul_field(b, c)));
        CHECK(mul_field(a, add(b, c)) == add(mul_field(a, b), mul_field(a, c)));
      }
    }
    if (!(a == zero)) {
      bool has_inverse = false;
      for (const auto& b : all) has_inverse = has_inverse || mul_field(a, b) == one;
      CHECK(has_inverse);
    }
  }
}

TEST_CASE("GF27 field axioms, exhaustive") {
  std::vector<GroupElement> all = enumerate_group(kGF27);
  REQUIRE(all.size() == 27);
  GroupElement zero = gf27(0, 0, 0), one = gf27(1, 0, 0);
  for (const auto& a : all) {
    CHECK(mul_field(a, one) == a);
    if (!(a == zero)) {
      bool has_inverse = false;
      for (const auto& b : all) has_inverse = has_inverse || mul_field(a, b) == one;
      CHECK(has_inverse);
    }
    for (const auto& b : all) {
      CHECK(mul_field(a, b) == mul_field(b, a));
      for (const auto& c : all) {
        CHECK(mul_field(mul_field(a, b), c) == mul_field(a, mul_field(b, c)));
        CHECK(mul_field(a, add(b, c)) == add(mul_field(a, b), mul_field(a, c)));
      }
    }
  }
}

TEST_CASE("defining relations and primitivity") {
  GroupElement z = field_generator(ComponentKind::GF4);
  GroupElement x = field_generator(ComponentKind::GF27);
  CHECK(mul_field(z, z) == gf4(1, 1));       // z^2 = z+1
  CHECK(pow_field(x, 3) == gf27(2, 1, 0));   // x^3 = x+2
  CHECK(pow_field(x, 9) == gf27(1, 1, 0));   // x^9 = x+1
  CHECK(pow_field(x, 20) == gf27(1, 1, 2));  // x^20 = 2x^2+x+1
  CHECK(pow_field(x, 26) == gf27(1, 0, 0));  // x^26 = 1
  CHECK(pow_field(x, 0) == gf27(1, 0, 0));
  CHECK(mul_field(x, gf27(1, 0, 0)) == x);

  // z has multiplicative order 3, x has order 26 with all powers distinct
  std::set<std::vector<int>> zpowers, xpowers;
  for (unsigned k = 0; k < 3; ++k) zpowers.insert(pow_field(z, k).coords());
  CHECK(zpowers.size() == 3);
  for (unsigned k = 0; k < 26; ++k) xpowers.insert(pow_field(x, k).coords());
  CHECK(xpowers.size() == 26);
  CHECK_THROWS_AS(mul_field(GroupElement(GroupDescriptor::parse("Z5"), {2}),
                            GroupElement(GroupDescriptor::parse("Z5"), {3})),
                  std::invalid_argument);
}

TEST_CASE("scalar multiplication") {
  GroupDescriptor d = GroupDescriptor::parse("GF4*GF27");
  GroupElement g = parse_element("(z,2x+1)", d);
  CHECK(scalar_mul(1, g) == g);
  CHECK(scalar_mul(0, g) == GroupElement::zero(d));
  CHECK(scalar_mul(2, parse_element("(0,x)", d)) == parse_element("(0,2x)", d));
  // 3g kills the GF27 component; 2g kills the GF4 component
  CHECK(scalar_mul(3, g) == parse_element("(z,0)", d));
  CHECK(scalar_mul(2, g) == parse_element("(0,x+2)", d));
}

TEST_CASE("element parsing") {
  GroupDescriptor d = GroupDescriptor::parse("GF4*GF27");
  CHECK(parse_element("(0,0)", d) == GroupElement::zero(d));
  CHECK(parse_element("(z+1, 2x^2+x+1)", d).coords() == std::vector<int>{1, 1, 1, 1, 2});
  GroupDescriptor z533 = GroupDescriptor::parse("Z5*Z3*Z3");
  CHECK(parse_element("(2,2,1)", z533).coords() == std::vector<int>{2, 2, 1});
  CHECK(parse_element(" ( 2 , 2 , 1 ) ", z533).coords() == std::vector<int>{2, 2, 1});

  CHECK_THROWS_AS(parse_element("(1,2)", z533), std::invalid_argument);      // arity
  CHECK_THROWS_AS(parse_element("(1,2,3,4)", z533), std::invalid_argument);  // arity
  CHECK_THROWS_AS(parse_element("(x,0)", d), std::invalid_argument);         // wrong symbol
  CHECK_THROWS_AS(parse_element("(z,x^3)", d), std::invalid_argument);       // power too big
  CHECK_THROWS_AS(parse_element("(z^2,0)", d), std::invalid_argument);       // power too big
  CHECK_THROWS_AS(parse_element("(z+,0)", d), std::invalid_argument);
  CHECK_THROWS_AS(parse_element("z,0", d), std::invalid_argument);
}

TEST_CASE("canonical element formatting") {
  GroupDescriptor d = GroupDescriptor::parse("GF4*GF27");
  CHECK(format_element(GroupElement::zero(d)) == "(0,0)");
  CHECK(format_element(parse_element("(z+1,2x^2+x+1)", d)) == "(z+1,2x^2+x+1)");
  CHECK(format_element(parse_element("(1,x^2+x)", d)) == "(1,x^2+x)");
  CHECK(format_element(parse_element("(z, 1+x)", d)) == "(z,x+1)");  // descending powers
  GroupDescriptor z533 = GroupDescriptor::parse("Z5*Z3*Z3");
  CHECK(format_element(parse_element("(4,0,2)", z533)) == "(4,0,2)");
}

TEST_CASE("parse/format round-trip over both dataset descriptors") {
  for (const char* spec : {"GF4*GF27", "Z5*Z3*Z3"}) {
    GroupDescriptor d = GroupDescriptor::parse(spec);
    for (const GroupElement& e : enumerate_group(d)) {
      CHECK(parse_element(format_element(e), d) == e);
      CHECK(element_index(e) == element_index(parse_element(format_element(e), d)));
    }
  }
}

TEST_CASE("enumeration order") {
  std::vector<GroupElement> z3 = enumerate_group(GroupDescriptor::parse("Z3"));
  REQUIRE(z3.size() == 3);
  CHECK(z3[0].coords() == std::vector<int>{0});
  CHECK(z3[1].coords() == std::vector<int>{1});
  CHECK(z3[2].coords() == std::vector<int>{2});

  std::vector<GroupElement> big = enumerate_group(GroupDescriptor::parse("GF4*GF27"));
  REQUIRE(big.size() == 108);
  CHECK(big[0].is_zero());  // identity first
  for (std::size_t i = 0; i < big.size(); ++i)
    CHECK(element_index(big[i]) == static_cast<long long>(i));
  for (std::size_t i = 1; i < big.size(); ++i)
    CHECK(big[i - 1].coords() < big[i].coords());  // lexicographic

  CHECK(enumerate_group(GroupDescriptor::parse("Z5*Z3*Z3")).size() == 45);
}
