#ifndef MOLSCERT_ALGEBRA_HPP
#define MOLSCERT_ALGEBRA_HPP

#include <string>
#include <vector>

namespace molscert {

// Component groups available for product-group descriptors:
//   GF4  -- additive/multiplicative GF(4), elements c0 + c1*z with z^2 = z+1
//   GF27 -- GF(27), elements c0 + c1*x + c2*x^2 with x^3 = x+2
//   Zm   -- cyclic group of integers mod m
enum class ComponentKind { GF4, GF27, Zm };

struct Component {
  ComponentKind kind;
  int modulus = 0;  // Zm only

  long long order() const;
  int slots() const;         // coordinates used by this component
  int slot_modulus() const;  // modulus of each coordinate
  char symbol() const;       // 'z' or 'x' for field kinds

  friend bool operator==(const Component&, const Component&) = default;
};

class GroupDescriptor {
public:
  explicit GroupDescriptor(std::vector<Component> components);

  // Accepts "GF4*GF27", "Z5*Z3*Z3", "Z45" and the 'x'-joined aliases
  // "GF4xGF27", "Z5xZ3xZ3".
  static GroupDescriptor parse(const std::string& spec);
  std::string to_string() const;  // canonical '*'-joined spelling

  const std::vector<Component>& components() const { return components_; }
  long long order() const;
  int total_slots() const;
  int slot_modulus(int slot) const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

private:
  std::vector<Component> components_;
};

// Element of a product group, stored as flattened reduced coordinates:
// GF4 contributes (c0, c1) mod 2, GF27 contributes (c0, c1, c2) mod 3,
// Zm contributes a single residue mod m.
class GroupElement {
public:
  GroupElement(GroupDescriptor descriptor, std::vector<int> coords);
  static GroupElement zero(const GroupDescriptor& d);

  const GroupDescriptor& descriptor() const { return descriptor_; }
  const std::vector<int>& coords() const { return coords_; }
  bool is_zero() const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
  GroupDescriptor descriptor_;
  std::vector<int> coords_;
};

GroupElement add(const GroupElement& a, const GroupElement& b);
GroupElement neg(const GroupElement& a);
GroupElement sub(const GroupElement& a, const GroupElement& b);

// Componentwise field multiplication; every component must be GF4 or GF27.
GroupElement mul_field(const GroupElement& a, const GroupElement& b);
GroupElement pow_field(const GroupElement& a, unsigned exponent);

// g added to itself c times; scalar_mul(0, g) is the identity.
GroupElement scalar_mul(int c, const GroupElement& g);

// One generator per field kind: z for GF4, x for GF27 (as single-component
// elements). Used by the power-annotation cross-checks.
GroupElement field_generator(ComponentKind kind);

// Parses "(e1,e2,...)", one expression per component. Field expressions are
// sums of terms over the component symbol ("2x^2+x+2", "z+1"); Zm expressions
// are plain integers. Whitespace is insignificant; powers beyond the
// component degree are rejected (datasets store expanded form only).
GroupElement parse_element(const std::string& text, const GroupDescriptor& d);

// Canonical spelling: descending powers, no zero terms, "0" for zero, no
// whitespace. parse_element(format_element(g)) == g.
std::string format_element(const GroupElement& g);

// Parses a bare single-component expression (no tuple parentheses).
GroupElement parse_component_expr(const std::string& text, const Component& c);
std::string format_component_expr(const GroupElement& g);

// All |G| elements: identity first, then ascending lexicographic order of the
// flattened coordinate tuples. Deterministic.
std::vector<GroupElement> enumerate_group(const GroupDescriptor& d);

// Position of g in the enumerate_group order (mixed-radix coordinate code).
long long element_index(const GroupElement& g);

}  // namespace molscert

#endif
