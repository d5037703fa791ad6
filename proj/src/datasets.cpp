#include "molscert/datasets.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "molscert/embedded_data.hpp"

namespace molscert {

std::vector<std::vector<GroupElement>> DMDataset::base_columns() const {
  std::vector<std::vector<GroupElement>> cols = stored_columns;
  if (interchange) {
    std::vector<std::vector<GroupElement>> block(
        stored_columns.begin() + (interchange->first_column - 1),
        stored_columns.begin() + interchange->last_column);
    for (auto& col : apply_row_interchange(block, interchange->swaps))
      cols.push_back(std::move(col));
  }
  return cols;
}

DMBase DMDataset::base() const {
  return DMBase{descriptor, k, base_columns(), expansion_vectors, 3};
}

std::vector<DatasetSummary> list_embedded() {
  return {
      {"n54-pa", "pa", "5 generators, 16 representatives, n=54"},
      {"n96-pa", "pa", "4 generators, 6 representatives, n=96"},
      {"n108-dm", "dm", "12 base columns, 2 expansion vectors, k=10 over GF4*GF27"},
      {"n45-dm", "dm", "15 base columns (8 stored), 1 expansion vector, k=7 over Z5*Z3*Z3"},
  };
}

bool is_embedded(const std::string& name) {
  for (const DatasetSummary& d : list_embedded())
    if (d.name == name) return true;
  return false;
}

const std::string& embedded_text(const std::string& name) {
  static const std::string n54 = embedded::kN54PA;
  static const std::string n96 = embedded::kN96PA;
  static const std::string n108 = embedded::kN108DM;
  static const std::string n45 = embedded::kN45DM;
  if (name == "n54-pa") return n54;
  if (name == "n96-pa") return n96;
  if (name == "n108-dm") return n108;
  if (name == "n45-dm") return n45;
  throw std::invalid_argument("unknown embedded dataset: " + name);
}

namespace {

// Line-oriented reader: "#" comments stripped, ";" treated as a logical line
// separator, blank lines skipped. Keeps 1-based line numbers for errors.
struct LineReader {
  std::vector<std::pair<std::size_t, std::string>> lines;

  explicit LineReader(const std::string& text) {
    std::size_t lineno = 1, start = 0;
    auto add = [&](std::string chunk, std::size_t no) {
      std::size_t comment = chunk.find('#');
      if (comment != std::string::npos) chunk.resize(comment);
      std::size_t seg_start = 0;
      for (;;) {
        std::size_t semi = chunk.find(';', seg_start);
        std::string seg = chunk.substr(seg_start, semi == std::string::npos
                                                      ? std::string::npos
                                                      : semi - seg_start);
        // trim
        std::size_t b = seg.find_first_not_of(" \t\r");
        std::size_t e = seg.find_last_not_of(" \t\r");
        if (b != std::string::npos) lines.emplace_back(no, seg.substr(b, e - b + 1));
        if (semi == std::string::npos) break;
        seg_start = semi + 1;
      }
    };
    for (std::size_t i = 0; i <= text.size(); ++i) {
      if (i == text.size() || text[i] == '\n') {
        add(text.substr(start, i - start), lineno);
        start = i + 1;
        ++lineno;
      }
    }
  }
};

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw std::invalid_argument("dataset line " + std::to_string(line) + ": " + what);
}

// splits "key rest" on first whitespace run
std::pair<std::string, std::string> split_key(const std::string& line) {
  std::size_t sp = line.find_first_of(" \t");
  if (sp == std::string::npos) return {line, ""};
  std::size_t rest = line.find_first_not_of(" \t", sp);
  return {line.substr(0, sp), rest == std::string::npos ? "" : line.substr(rest)};
}

long long parse_ll(const std::string& s, std::size_t line, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) fail_at(line, what + ": bad integer \"" + s + "\"");
    return v;
  } catch (const std::invalid_argument&) {
    fail_at(line, what + ": bad integer \"" + s + "\"");
  } catch (const std::out_of_range&) {
    fail_at(line, what + ": integer out of range \"" + s + "\"");
  }
}

std::vector<long long> parse_ll_list(const std::string& s, std::size_t line,
                                     const std::string& what) {
  std::vector<long long> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    std::string tok = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                 : comma - start);
    out.push_back(parse_ll(tok, line, what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// splits a "column"/"vector" payload into its "(...)" entries
std::vector<std::string> split_tuples(const std::string& s, std::size_t line) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      continue;
    }
    if (s[pos] != '(') fail_at(line, "expected '(' in entry list");
    std::size_t close = s.find(')', pos);
    if (close == std::string::npos) fail_at(line, "unterminated entry");
    out.push_back(s.substr(pos, close - pos + 1));
    pos = close + 1;
  }
  return out;
}

std::string read_source(const std::string& source, const char* expected_type) {
  if (is_embedded(source)) return embedded_text(source);
  std::ifstream in(source, std::ios::binary);
  if (!in)
    throw std::invalid_argument("no embedded dataset or readable file named \"" + source +
                                "\" (" + expected_type + ")");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string detect_type(const LineReader& reader) {
  for (const auto& [no, line] : reader.lines) {
    auto [key, rest] = split_key(line);
    if (key == "type") return rest;
  }
  return "";
}

}  // namespace

namespace {

long paren_balance(const std::string& s) {
  long b = 0;
  for (char c : s) {
    if (c == '(') ++b;
    if (c == ')') --b;
  }
  return b;
}

}  // namespace

PADataset parse_pa_text(const std::string& text) {
  LineReader reader(text);
  PADataset ds;
  bool have_type = false, have_n = false;
  std::vector<std::pair<std::size_t, std::string>> generator_lines, representative_lines;

  for (std::size_t idx = 0; idx < reader.lines.size(); ++idx) {
    auto [no, line] = reader.lines[idx];
    auto [key, rest] = split_key(line);
    if (key == "type") {
      if (rest != "pa") fail_at(no, "expected \"type pa\", got \"" + rest + "\"");
      have_type = true;
    } else if (key == "name") {
      ds.name = rest;
    } else if (key == "n") {
      ds.n = static_cast<int>(parse_ll(rest, no, "n"));
      if (ds.n <= 0) fail_at(no, "n must be positive");
      have_n = true;
    } else if (key == "expect") {
      auto [what, value] = split_key(rest);
      if (what == "order") {
        ds.expected.group_order = parse_ll(value, no, "expect order");
      } else if (what == "orbit-sizes") {
        for (long long v : parse_ll_list(value, no, "expect orbit-sizes"))
          ds.expected.orbit_sizes.push_back(static_cast<std::size_t>(v));
      } else if (what == "min-distance") {
        ds.expected.min_distance = static_cast<int>(parse_ll(value, no, "expect min-distance"));
      } else if (what == "separable") {
        ds.expected.separability_m = static_cast<int>(parse_ll(value, no, "expect separable"));
      } else {
        fail_at(no, "unknown expect key \"" + what + "\"");
      }
    } else if (key == "generator" || key == "representative") {
      // cycle notation may span physical lines until the parenthesis balance
      // returns to zero
      std::string cyc = rest;
      while (paren_balance(cyc) > 0) {
        if (idx + 1 >= reader.lines.size()) fail_at(no, key + ": unbalanced parentheses");
        cyc += " " + reader.lines[++idx].second;
      }
      if (key == "generator")
        generator_lines.emplace_back(no, std::move(cyc));
      else
        representative_lines.emplace_back(no, std::move(cyc));
    } else {
      fail_at(no, "unknown directive \"" + key + "\"");
    }
  }
  if (!have_type) throw std::invalid_argument("dataset: missing \"type pa\" line");
  if (!have_n) throw std::invalid_argument("dataset: missing \"n\" line");

  for (const auto& [no, cyc] : generator_lines) {
    try {
      ds.generators.push_back(IsometryElement::classify(parse_cycles(cyc, 2 * ds.n)));
    } catch (const std::invalid_argument& e) {
      fail_at(no, std::string("generator: ") + e.what());
    }
  }
  for (const auto& [no, cyc] : representative_lines) {
    try {
      ds.representatives.push_back(parse_cycles(cyc, ds.n));
    } catch (const std::invalid_argument& e) {
      fail_at(no, std::string("representative: ") + e.what());
    }
  }
  return ds;
}

DMDataset parse_dm_text(const std::string& text) {
  LineReader reader(text);
  DMDataset ds;
  bool have_type = false, have_group = false, have_rows = false;

  for (const auto& [no, line] : reader.lines) {
    auto [key, rest] = split_key(line);
    if (key == "type") {
      if (rest != "dm") fail_at(no, "expected \"type dm\", got \"" + rest + "\"");
      have_type = true;
    } else if (key == "name") {
      ds.name = rest;
    } else if (key == "group") {
      try {
        ds.descriptor = GroupDescriptor::parse(rest);
      } catch (const std::invalid_argument& e) {
        fail_at(no, e.what());
      }
      have_group = true;
    } else if (key == "rows") {
      ds.k = static_cast<int>(parse_ll(rest, no, "rows"));
      if (ds.k < 2) fail_at(no, "rows must be at least 2");
      have_rows = true;
    } else if (key == "expect") {
      auto [what, value] = split_key(rest);
      if (what == "n") {
        ds.expected.n = static_cast<int>(parse_ll(value, no, "expect n"));
      } else if (what == "mols") {
        ds.expected.mols_count = static_cast<int>(parse_ll(value, no, "expect mols"));
      } else {
        fail_at(no, "unknown expect key \"" + what + "\"");
      }
    } else if (key == "column" || key == "vector") {
      if (!have_group || !have_rows) fail_at(no, key + " before group/rows");
      std::vector<GroupElement> entries;
      for (const std::string& tup : split_tuples(rest, no)) {
        try {
          entries.push_back(parse_element(tup, ds.descriptor));
        } catch (const std::invalid_argument& e) {
          fail_at(no, e.what());
        }
      }
      if (static_cast<int>(entries.size()) != ds.k)
        fail_at(no, key + " has " + std::to_string(entries.size()) + " entries, expected k=" +
                        std::to_string(ds.k));
      if (key == "column")
        ds.stored_columns.push_back(std::move(entries));
      else
        ds.expansion_vectors.push_back(std::move(entries));
    } else if (key == "interchange") {
      // interchange r1:r2[,r1:r2...] applied-to columns <lo>-<hi>
      std::istringstream in(rest);
      std::string swaps_tok, applied_tok, columns_tok, range_tok;
      if (!(in >> swaps_tok >> applied_tok >> columns_tok >> range_tok) ||
          applied_tok != "applied-to" || columns_tok != "columns")
        fail_at(no, "expected \"interchange a:b,... applied-to columns lo-hi\"");
      RowInterchangeSpec spec;
      std::size_t start = 0;
      while (start <= swaps_tok.size()) {
        std::size_t comma = swaps_tok.find(',', start);
        std::string pair_tok = swaps_tok.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        std::size_t colon = pair_tok.find(':');
        if (colon == std::string::npos) fail_at(no, "bad swap \"" + pair_tok + "\"");
        spec.swaps.emplace_back(
            static_cast<int>(parse_ll(pair_tok.substr(0, colon), no, "interchange")),
            static_cast<int>(parse_ll(pair_tok.substr(colon + 1), no, "interchange")));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      std::size_t dash = range_tok.find('-');
      if (dash == std::string::npos) fail_at(no, "bad column range \"" + range_tok + "\"");
      spec.first_column = static_cast<int>(parse_ll(range_tok.substr(0, dash), no, "interchange"));
      spec.last_column = static_cast<int>(parse_ll(range_tok.substr(dash + 1), no, "interchange"));
      if (spec.first_column < 1 ||
          spec.last_column > static_cast<int>(ds.stored_columns.size()) ||
          spec.first_column > spec.last_column)
        fail_at(no, "interchange column range out of bounds");
      ds.interchange = std::move(spec);
    } else if (key == "power-note") {
      // power-note <component-index> <exponent> = <expression>
      std::istringstream in(rest);
      std::string comp_tok, exp_tok, eq_tok;
      if (!(in >> comp_tok >> exp_tok >> eq_tok) || eq_tok != "=")
        fail_at(no, "expected \"power-note <component> <exponent> = <expression>\"");
      std::string expr;
      std::getline(in, expr);
      std::size_t b = expr.find_first_not_of(" \t");
      if (b == std::string::npos) fail_at(no, "power-note missing expression");
      expr = expr.substr(b);
      PowerNote note{static_cast<int>(parse_ll(comp_tok, no, "power-note")),
                     static_cast<int>(parse_ll(exp_tok, no, "power-note")), expr};
      if (note.component_index < 1 ||
          note.component_index > static_cast<int>(ds.descriptor.components().size()))
        fail_at(no, "power-note component index out of range");
      if (ds.descriptor.components()[note.component_index - 1].kind == ComponentKind::Zm)
        fail_at(no, "power-note refers to a Z(m) component");
      ds.power_notes.push_back(std::move(note));
    } else {
      fail_at(no, "unknown directive \"" + key + "\"");
    }
  }
  if (!have_type) throw std::invalid_argument("dataset: missing \"type dm\" line");
  if (!have_group) throw std::invalid_argument("dataset: missing \"group\" line");
  if (!have_rows) throw std::invalid_argument("dataset: missing \"rows\" line");
  if (ds.interchange) {
    for (auto [a, b2] : ds.interchange->swaps)
      if (a < 1 || a > ds.k || b2 < 1 || b2 > ds.k)
        throw std::invalid_argument("dataset: interchange row index out of range");
  }
  return ds;
}

std::string dataset_kind(const std::string& source) {
  std::string text = read_source(source, "pa or dm");
  LineReader reader(text);
  std::string type = detect_type(reader);
  if (type != "pa" && type != "dm")
    throw std::invalid_argument("dataset \"" + source + "\" has no valid type line");
  return type;
}

PADataset load_pa(const std::string& source) {
  std::string text = read_source(source, "pa");
  LineReader reader(text);
  std::string type = detect_type(reader);
  if (type == "dm")
    throw std::invalid_argument("dataset \"" + source + "\" is a difference matrix, not a pa");
  return parse_pa_text(text);
}

DMDataset load_dm(const std::string& source) {
  std::string text = read_source(source, "dm");
  LineReader reader(text);
  std::string type = detect_type(reader);
  if (type == "pa")
    throw std::invalid_argument("dataset \"" + source + "\" is a permutation array, not a dm");
  return parse_dm_text(text);
}

std::string serialize_pa(const PADataset& ds) {
  std::string out;
  out += "type pa\n";
  out += "name " + ds.name + "\n";
  out += "n " + std::to_string(ds.n) + "\n";
  out += "expect order " + std::to_string(ds.expected.group_order) + "\n";
  out += "expect orbit-sizes ";
  for (std::size_t i = 0; i < ds.expected.orbit_sizes.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(ds.expected.orbit_sizes[i]);
  }
  out += "\n";
  out += "expect min-distance " + std::to_string(ds.expected.min_distance) + "\n";
  out += "expect separable " + std::to_string(ds.expected.separability_m) + "\n";
  for (const IsometryElement& g : ds.generators)
    out += "generator " + format_cycles(g.underlying()) + "\n";
  for (const Permutation& r : ds.representatives)
    out += "representative " + format_cycles(r) + "\n";
  return out;
}

std::string serialize_dm(const DMDataset& ds) {
  std::string out;
  out += "type dm\n";
  out += "name " + ds.name + "\n";
  out += "group " + ds.descriptor.to_string() + "\n";
  out += "rows " + std::to_string(ds.k) + "\n";
  out += "expect n " + std::to_string(ds.expected.n) + "\n";
  out += "expect mols " + std::to_string(ds.expected.mols_count) + "\n";
  auto emit_entries = [&](const char* kind, const std::vector<GroupElement>& entries) {
    out += kind;
    for (const GroupElement& e : entries) {
      out += ' ';
      out += format_element(e);
    }
    out += '\n';
  };
  for (const auto& col : ds.stored_columns) emit_entries("column", col);
  if (ds.interchange) {
    out += "interchange ";
    for (std::size_t i = 0; i < ds.interchange->swaps.size(); ++i) {
      if (i > 0) out += ',';
      out += std::to_string(ds.interchange->swaps[i].first) + ":" +
             std::to_string(ds.interchange->swaps[i].second);
    }
    out += " applied-to columns " + std::to_string(ds.interchange->first_column) + "-" +
           std::to_string(ds.interchange->last_column) + "\n";
  }
  for (const auto& vec : ds.expansion_vectors) emit_entries("vector", vec);
  for (const PowerNote& note : ds.power_notes)
    out += "power-note " + std::to_string(note.component_index) + " " +
           std::to_string(note.exponent) + " = " + note.expression + "\n";
  return out;
}

std::vector<PowerNoteCheck> check_power_notes(const DMDataset& ds) {
  std::vector<PowerNoteCheck> out;
  for (const PowerNote& note : ds.power_notes) {
    const Component& comp = ds.descriptor.components()[note.component_index - 1];
    GroupElement claimed = parse_component_expr(note.expression, comp);
    GroupElement computed =
        pow_field(field_generator(comp.kind), static_cast<unsigned>(note.exponent));
    out.push_back({note, computed == claimed, format_component_expr(computed)});
  }
  return out;
}

}  // namespace molscert
