#include "molscert/algebra.hpp"

#include <cctype>
#include <stdexcept>

namespace molscert {

long long Component::order() const {
  switch (kind) {
    case ComponentKind::GF4: return 4;
    case ComponentKind::GF27: return 27;
    case ComponentKind::Zm: return modulus;
  }
  return 0;
}

int Component::slots() const {
  switch (kind) {
    case ComponentKind::GF4: return 2;
    case ComponentKind::GF27: return 3;
    case ComponentKind::Zm: return 1;
  }
  return 0;
}

int Component::slot_modulus() const {
  switch (kind) {
    case ComponentKind::GF4: return 2;
    case ComponentKind::GF27: return 3;
    case ComponentKind::Zm: return modulus;
  }
  return 0;
}

char Component::symbol() const {
  if (kind == ComponentKind::GF4) return 'z';
  if (kind == ComponentKind::GF27) return 'x';
  throw std::invalid_argument("Z(m) component has no field symbol");
}

GroupDescriptor::GroupDescriptor(std::vector<Component> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw std::invalid_argument("group descriptor must have at least one component");
  for (const Component& c : components_)
    if (c.kind == ComponentKind::Zm && c.modulus < 2)
      throw std::invalid_argument("Z(m) requires m >= 2");
}

GroupDescriptor GroupDescriptor::parse(const std::string& spec) {
  std::vector<Component> comps;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t next = spec.find_first_of("*x", pos);
    // 'x' only separates when it is not the first char of a token (GF4xGF27)
    std::string token;
    if (next == std::string::npos) {
      token = spec.substr(pos);
      pos = spec.size();
    } else if (spec[next] == 'x' && next == pos) {
      throw std::invalid_argument("bad group spec: " + spec);
    } else {
      token = spec.substr(pos, next - pos);
      pos = next + 1;
    }
    if (token == "GF4") {
      comps.push_back({ComponentKind::GF4});
    } else if (token == "GF27") {
      comps.push_back({ComponentKind::GF27});
    } else if (token.size() > 1 && token[0] == 'Z') {
      int m = 0;
      for (std::size_t i = 1; i < token.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(token[i])))
          throw std::invalid_argument("bad group component: " + token);
        m = m * 10 + (token[i] - '0');
      }
      comps.push_back({ComponentKind::Zm, m});
    } else {
      throw std::invalid_argument("bad group component: " + token);
    }
  }
  return GroupDescriptor(std::move(comps));
}

std::string GroupDescriptor::to_string() const {
  std::string out;
  for (const Component& c : components_) {
    if (!out.empty()) out += '*';
    switch (c.kind) {
      case ComponentKind::GF4: out += "GF4"; break;
      case ComponentKind::GF27: out += "GF27"; break;
      case ComponentKind::Zm: out += "Z" + std::to_string(c.modulus); break;
    }
  }
  return out;
}

long long GroupDescriptor::order() const {
  long long n = 1;
  for (const Component& c : components_) n *= c.order();
  return n;
}

int GroupDescriptor::total_slots() const {
  int n = 0;
  for (const Component& c : components_) n += c.slots();
  return n;
}

int GroupDescriptor::slot_modulus(int slot) const {
  for (const Component& c : components_) {
    if (slot < c.slots()) return c.slot_modulus();
    slot -= c.slots();
  }
  throw std::out_of_range("slot index");
}

GroupElement::GroupElement(GroupDescriptor descriptor, std::vector<int> coords)
    : descriptor_(std::move(descriptor)), coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != descriptor_.total_slots())
    throw std::invalid_argument("coordinate count does not match descriptor");
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    int m = descriptor_.slot_modulus(static_cast<int>(i));
    if (coords_[i] < 0 || coords_[i] >= m)
      throw std::invalid_argument("coordinate not reduced");
  }
}

GroupElement GroupElement::zero(const GroupDescriptor& d) {
  return GroupElement(d, std::vector<int>(d.total_slots(), 0));
}

bool GroupElement::is_zero() const {
  for (int v : coords_)
    if (v != 0) return false;
  return true;
}

namespace {

void require_same_descriptor(const GroupElement& a, const GroupElement& b) {
  if (!(a.descriptor() == b.descriptor()))
    throw std::invalid_argument("group descriptor mismatch");
}

}  // namespace

GroupElement add(const GroupElement& a, const GroupElement& b) {
  require_same_descriptor(a, b);
  std::vector<int> out(a.coords().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    int m = a.descriptor().slot_modulus(static_cast<int>(i));
    out[i] = (a.coords()[i] + b.coords()[i]) % m;
  }
  return GroupElement(a.descriptor(), std::move(out));
}

GroupElement neg(const GroupElement& a) {
  std::vector<int> out(a.coords().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    int m = a.descriptor().slot_modulus(static_cast<int>(i));
    out[i] = (m - a.coords()[i]) % m;
  }
  return GroupElement(a.descriptor(), std::move(out));
}

GroupElement sub(const GroupElement& a, const GroupElement& b) {
  return add(a, neg(b));
}

namespace {

// c0 + c1*z times d0 + d1*z, reduced by z^2 = z+1
void gf4_mul(const int* a, const int* b, int* out) {
  out[0] = (a[0] * b[0] + a[1] * b[1]) % 2;
  out[1] = (a[0] * b[1] + a[1] * b[0] + a[1] * b[1]) % 2;
}

// polynomial product reduced by x^3 = x+2 (hence x^4 = x^2 + 2x)
void gf27_mul(const int* a, const int* b, int* out) {
  int r0 = a[0] * b[0];
  int r1 = a[0] * b[1] + a[1] * b[0];
  int r2 = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
  int r3 = a[1] * b[2] + a[2] * b[1];
  int r4 = a[2] * b[2];
  out[0] = (r0 + 2 * r3) % 3;
  out[1] = (r1 + r3 + 2 * r4) % 3;
  out[2] = (r2 + r4) % 3;
}

}  // namespace

GroupElement mul_field(const GroupElement& a, const GroupElement& b) {
  require_same_descriptor(a, b);
  std::vector<int> out(a.coords().size());
  int slot = 0;
  for (const Component& c : a.descriptor().components()) {
    const int* pa = a.coords().data() + slot;
    const int* pb = b.coords().data() + slot;
    switch (c.kind) {
      case ComponentKind::GF4: gf4_mul(pa, pb, out.data() + slot); break;
      case ComponentKind::GF27: gf27_mul(pa, pb, out.data() + slot); break;
      case ComponentKind::Zm:
        throw std::invalid_argument("mul_field applied to Z(m) component");
    }
    slot += c.slots();
  }
  return GroupElement(a.descriptor(), std::move(out));
}

GroupElement pow_field(const GroupElement& a, unsigned exponent) {
  std::vector<int> one(a.coords().size(), 0);
  int slot = 0;
  for (const Component& c : a.descriptor().components()) {
    if (c.kind == ComponentKind::Zm)
      throw std::invalid_argument("pow_field applied to Z(m) component");
    one[slot] = 1;
    slot += c.slots();
  }
  GroupElement result(a.descriptor(), std::move(one));
  for (unsigned i = 0; i < exponent; ++i) result = mul_field(result, a);
  return result;
}

GroupElement scalar_mul(int c, const GroupElement& g) {
  if (c < 0) throw std::invalid_argument("scalar must be non-negative");
  std::vector<int> out(g.coords().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    int m = g.descriptor().slot_modulus(static_cast<int>(i));
    out[i] = static_cast<int>((static_cast<long long>(c) * g.coords()[i]) % m);
  }
  return GroupElement(g.descriptor(), std::move(out));
}

GroupElement field_generator(ComponentKind kind) {
  if (kind == ComponentKind::GF4)
    return GroupElement(GroupDescriptor({{ComponentKind::GF4}}), {0, 1});
  if (kind == ComponentKind::GF27)
    return GroupElement(GroupDescriptor({{ComponentKind::GF27}}), {0, 1, 0});
  throw std::invalid_argument("Z(m) has no field generator");
}

namespace {

struct ExprParser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool eat(char c) {
    if (!at(c)) return false;
    ++pos;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("element expression: " + what + " in \"" + text + "\"");
  }
  int parse_uint() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected integer");
    long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1'000'000) fail("integer too large");
      ++pos;
    }
    return static_cast<int>(v);
  }

  // Parses one component expression, writing reduced coordinates to out.
  void parse_component(const Component& comp, int* out) {
    int nslots = comp.slots();
    for (int i = 0; i < nslots; ++i) out[i] = 0;
    if (comp.kind == ComponentKind::Zm) {
      out[0] = parse_uint() % comp.modulus;
      return;
    }
    char sym = comp.symbol();
    int mod = comp.slot_modulus();
    for (;;) {
      skip_ws();
      int coeff = 1;
      bool have_coeff = false;
      if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        coeff = parse_uint();
        have_coeff = true;
      }
      int power = 0;
      skip_ws();
      if (pos < text.size() && text[pos] == sym) {
        ++pos;
        power = 1;
        if (eat('^')) power = parse_uint();
        if (power > nslots - 1)
          fail("power " + std::to_string(power) + " exceeds component degree");
      } else if (!have_coeff) {
        fail(std::string("expected coefficient or '") + sym + "'");
      }
      out[power] = (out[power] + coeff) % mod;
      if (!eat('+')) break;
    }
  }
};

void format_component(const Component& comp, const int* coords, std::string& out) {
  if (comp.kind == ComponentKind::Zm) {
    out += std::to_string(coords[0]);
    return;
  }
  char sym = comp.symbol();
  bool any = false;
  for (int p = comp.slots() - 1; p >= 0; --p) {
    int c = coords[p];
    if (c == 0) continue;
    if (any) out += '+';
    any = true;
    if (p == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += sym;
    if (p > 1) {
      out += '^';
      out += std::to_string(p);
    }
  }
  if (!any) out += '0';
}

}  // namespace

GroupElement parse_element(const std::string& text, const GroupDescriptor& d) {
  ExprParser p{text};
  if (!p.eat('(')) p.fail("expected '('");
  std::vector<int> coords(d.total_slots());
  int slot = 0;
  const auto& comps = d.components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    p.parse_component(comps[i], coords.data() + slot);
    slot += comps[i].slots();
    if (i + 1 < comps.size()) {
      if (!p.eat(',')) p.fail("arity mismatch: expected ','");
    }
  }
  if (!p.eat(')')) p.fail("arity mismatch: expected ')'");
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters");
  return GroupElement(d, std::move(coords));
}

std::string format_element(const GroupElement& g) {
  std::string out = "(";
  int slot = 0;
  const auto& comps = g.descriptor().components();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i > 0) out += ',';
    format_component(comps[i], g.coords().data() + slot, out);
    slot += comps[i].slots();
  }
  out += ')';
  return out;
}

GroupElement parse_component_expr(const std::string& text, const Component& c) {
  ExprParser p{text};
  std::vector<int> coords(c.slots());
  p.parse_component(c, coords.data());
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing characters");
  return GroupElement(GroupDescriptor({c}), std::move(coords));
}

std::string format_component_expr(const GroupElement& g) {
  if (g.descriptor().components().size() != 1)
    throw std::invalid_argument("expected a single-component element");
  std::string out;
  format_component(g.descriptor().components()[0], g.coords().data(), out);
  return out;
}

std::vector<GroupElement> enumerate_group(const GroupDescriptor& d) {
  long long n = d.order();
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(n));
  std::vector<int> coords(d.total_slots(), 0);
  for (;;) {
    out.emplace_back(d, coords);
    // odometer: last slot fastest, so the list is lexicographic
    int i = d.total_slots() - 1;
    for (; i >= 0; --i) {
      if (++coords[i] < d.slot_modulus(i)) break;
      coords[i] = 0;
    }
    if (i < 0) break;
  }
  return out;
}

long long element_index(const GroupElement& g) {
  long long idx = 0;
  for (std::size_t i = 0; i < g.coords().size(); ++i)
    idx = idx * g.descriptor().slot_modulus(static_cast<int>(i)) + g.coords()[i];
  return idx;
}

}  // namespace molscert
