#include "molscert/report.hpp"

#include <chrono>
#include <sstream>

namespace molscert {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

PAReport run_verify_pa(const PADataset& ds, const RunOptions& opt) {
  auto start = Clock::now();
  PAReport r;
  r.dataset = ds.name;
  r.n = ds.n;
  r.expected = ds.expected;

  IsometrySubgroup u = ds.subgroup();
  r.group_order = group_order(u);
  if (r.group_order != ds.expected.group_order)
    r.violations.push_back("group order " + std::to_string(r.group_order) +
                           " differs from expected " +
                           std::to_string(ds.expected.group_order));

  std::vector<std::vector<Permutation>> orbits;
  orbits.reserve(ds.representatives.size());
  for (const Permutation& rep : ds.representatives) {
    orbits.push_back(orbit(u, rep));
    r.orbit_sizes.push_back(orbits.back().size());
  }
  if (r.orbit_sizes != ds.expected.orbit_sizes)
    r.violations.push_back("orbit sizes (" + join_sizes(r.orbit_sizes) +
                           ") differ from expected (" + join_sizes(ds.expected.orbit_sizes) +
                           ")");

  PermutationCode code = code_union(ds.n, orbits);
  r.code_size = code.words.size();
  std::size_t orbit_total = 0;
  for (std::size_t s : r.orbit_sizes) orbit_total += s;
  if (r.code_size != orbit_total)
    r.violations.push_back("orbits overlap: union has " + std::to_string(r.code_size) +
                           " words, orbit sizes sum to " + std::to_string(orbit_total));
  std::size_t expected_code =
      static_cast<std::size_t>(ds.expected.separability_m) * static_cast<std::size_t>(ds.n);
  if (r.code_size != expected_code)
    r.violations.push_back("code size " + std::to_string(r.code_size) +
                           " differs from expected m*n = " + std::to_string(expected_code));

  r.min_distance = min_distance(code, opt.threads);
  if (r.min_distance != ds.expected.min_distance)
    r.violations.push_back("minimum distance " + std::to_string(r.min_distance) +
                           " differs from expected " +
                           std::to_string(ds.expected.min_distance));

  SeparationOutcome sep = separate(code, opt.threads);
  if (!sep.ok()) {
    r.separability = 0;
    r.violations.push_back("separation failed: " + sep.error->message);
  } else {
    r.separability = static_cast<int>(sep.code->classes.size());
    if (r.separability != ds.expected.separability_m)
      r.violations.push_back("separability " + std::to_string(r.separability) +
                             " differs from expected " +
                             std::to_string(ds.expected.separability_m));
    if (opt.build_mols) {
      r.mols = mols_from_separated(*sep.code);
      r.mols_built = true;
      r.mols_report = verify_mols(*r.mols, opt.fail_fast, opt.threads);
      for (const std::string& v : r.mols_report.violations)
        r.violations.push_back("mols: " + v);
    }
  }

  r.pass = r.violations.empty();
  r.wall_seconds = seconds_since(start);
  return r;
}

DMReport run_verify_dm(const DMDataset& ds, const RunOptions& opt) {
  auto start = Clock::now();
  DMReport r;
  r.dataset = ds.name;
  r.group = ds.descriptor.to_string();
  r.rows = ds.k;
  r.expected = ds.expected;

  r.power_note_checks = check_power_notes(ds);
  for (const PowerNoteCheck& c : r.power_note_checks) {
    if (!c.ok) {
      const Component& comp = ds.descriptor.components()[c.note.component_index - 1];
      r.violations.push_back(std::string("power annotation ") + comp.symbol() + "^" +
                             std::to_string(c.note.exponent) + " = " + c.note.expression +
                             " disagrees with computed " + c.computed);
    }
  }

  DMBase base = ds.base();
  r.base_column_count = static_cast<int>(base.base_columns.size());
  r.expansion_vector_count = static_cast<int>(base.expansion_vectors.size());
  DifferenceMatrix matrix = expand(base);
  r.column_count = matrix.cols();
  long long order = ds.descriptor.order();
  if (r.column_count != order)
    r.violations.push_back("expansion produced " + std::to_string(r.column_count) +
                           " columns, group order is " + std::to_string(order));
  if (r.column_count != ds.expected.n)
    r.violations.push_back("column count " + std::to_string(r.column_count) +
                           " differs from expected n = " + std::to_string(ds.expected.n));
  if (ds.expected.mols_count != ds.k - 1)
    r.violations.push_back("expected mols " + std::to_string(ds.expected.mols_count) +
                           " differs from k-1 = " + std::to_string(ds.k - 1));

  DMVerification check = verify_dm(matrix, opt.threads);
  r.pair_checks = check.pairs;
  r.pairs_checked = static_cast<int>(check.pairs.size());
  for (const RowPairCheck& p : check.pairs) {
    if (p.ok) continue;
    ++r.pairs_failed;
    std::string detail = "rows " + std::to_string(p.row_s) + "," + std::to_string(p.row_t) +
                         ": difference multiset does not cover the group";
    if (p.duplicated) detail += "; duplicated " + format_element(*p.duplicated);
    if (p.missing) detail += "; missing " + format_element(*p.missing);
    r.violations.push_back(detail);
    if (opt.fail_fast) break;
  }

  if (opt.build_mols && check.pass && r.column_count == order) {
    r.mols = mols_from_dm(matrix, opt.threads);
    r.mols_built = true;
    r.mols_report = verify_mols(*r.mols, opt.fail_fast, opt.threads);
    for (const std::string& v : r.mols_report.violations)
      r.violations.push_back("mols: " + v);
    if (static_cast<int>(r.mols->squares.size()) != ds.expected.mols_count)
      r.violations.push_back("built " + std::to_string(r.mols->squares.size()) +
                             " squares, expected " + std::to_string(ds.expected.mols_count));
  }

  r.pass = r.violations.empty();
  r.wall_seconds = seconds_since(start);
  return r;
}

MOLSFileReport run_verify_mols(const std::string& file_label, const MOLSSet& mols,
                               const RunOptions& opt) {
  auto start = Clock::now();
  MOLSFileReport r;
  r.file = file_label;
  r.n = mols.order;
  r.count = static_cast<int>(mols.squares.size());
  r.checks = verify_mols(mols, opt.fail_fast, opt.threads);
  r.pass = r.checks.pass;
  r.wall_seconds = seconds_since(start);
  return r;
}

namespace {

nlohmann::ordered_json mols_summary_json(bool built, const MOLSReport& rep) {
  nlohmann::ordered_json j;
  j["built"] = built;
  if (built) {
    j["squares"] = rep.squares_checked;
    j["latinChecks"] = rep.squares_checked;
    j["orthogonalPairs"] = rep.pairs_checked;
    j["pass"] = rep.pass;
  }
  return j;
}

}  // namespace

nlohmann::ordered_json to_json(const PAReport& r) {
  nlohmann::ordered_json j;
  j["schemaVersion"] = kReportSchemaVersion;
  j["command"] = "verify-pa";
  j["dataset"] = r.dataset;
  j["pass"] = r.pass;
  j["facts"] = {
      {"n", r.n},
      {"groupOrder", r.group_order},
      {"orbitSizes", r.orbit_sizes},
      {"codeSize", r.code_size},
      {"minDistance", r.min_distance},
      {"separability", r.separability},
  };
  j["expected"] = {
      {"groupOrder", r.expected.group_order},
      {"orbitSizes", r.expected.orbit_sizes},
      {"minDistance", r.expected.min_distance},
      {"separability", r.expected.separability_m},
  };
  j["mols"] = mols_summary_json(r.mols_built, r.mols_report);
  j["violations"] = r.violations;
  return j;
}

nlohmann::ordered_json to_json(const DMReport& r) {
  nlohmann::ordered_json j;
  j["schemaVersion"] = kReportSchemaVersion;
  j["command"] = "verify-dm";
  j["dataset"] = r.dataset;
  j["pass"] = r.pass;
  j["facts"] = {
      {"group", r.group},
      {"rows", r.rows},
      {"baseColumns", r.base_column_count},
      {"expansionVectors", r.expansion_vector_count},
      {"columns", r.column_count},
      {"rowPairsChecked", r.pairs_checked},
      {"rowPairsFailed", r.pairs_failed},
  };
  j["expected"] = {
      {"n", r.expected.n},
      {"mols", r.expected.mols_count},
  };
  nlohmann::ordered_json notes = nlohmann::ordered_json::array();
  for (const PowerNoteCheck& c : r.power_note_checks) {
    notes.push_back({{"component", c.note.component_index},
                     {"exponent", c.note.exponent},
                     {"stated", c.note.expression},
                     {"computed", c.computed},
                     {"ok", c.ok}});
  }
  j["powerNotes"] = notes;
  j["mols"] = mols_summary_json(r.mols_built, r.mols_report);
  j["violations"] = r.violations;
  return j;
}

nlohmann::ordered_json to_json(const MOLSFileReport& r) {
  nlohmann::ordered_json j;
  j["schemaVersion"] = kReportSchemaVersion;
  j["command"] = "verify-mols";
  j["file"] = r.file;
  j["pass"] = r.pass;
  j["facts"] = {
      {"n", r.n},
      {"count", r.count},
      {"latinChecks", r.checks.squares_checked},
      {"orthogonalPairs", r.checks.pairs_checked},
  };
  j["violations"] = r.checks.violations;
  return j;
}

namespace {

std::string pass_line(bool pass, double wall) {
  std::ostringstream out;
  out << "result           " << (pass ? "PASS" : "FAIL");
  out.setf(std::ios::fixed);
  out.precision(3);
  out << " (" << wall << " s)\n";
  return out.str();
}

void append_violations(std::string& out, const std::vector<std::string>& violations) {
  for (const std::string& v : violations) out += "violation        " + v + "\n";
}

}  // namespace

std::string to_text(const PAReport& r) {
  std::string out;
  out += "dataset          " + r.dataset + " (pa, n=" + std::to_string(r.n) + ")\n";
  out += "group order      " + std::to_string(r.group_order) + " (expected " +
         std::to_string(r.expected.group_order) + ")\n";
  out += "orbit sizes      " + join_sizes(r.orbit_sizes) + "\n";
  out += "code size        " + std::to_string(r.code_size) + "\n";
  out += "min distance     " + std::to_string(r.min_distance) + " (expected " +
         std::to_string(r.expected.min_distance) + ")\n";
  out += "separability     " + std::to_string(r.separability) + " (expected " +
         std::to_string(r.expected.separability_m) + ")\n";
  if (r.mols_built)
    out += "mols             " + std::to_string(r.mols_report.squares_checked) +
           " squares, " + std::to_string(r.mols_report.pairs_checked) +
           " orthogonal pairs, " + (r.mols_report.pass ? "ok" : "FAILED") + "\n";
  append_violations(out, r.violations);
  out += pass_line(r.pass, r.wall_seconds);
  return out;
}

std::string to_text(const DMReport& r) {
  std::string out;
  out += "dataset          " + r.dataset + " (dm over " + r.group + ", k=" +
         std::to_string(r.rows) + ")\n";
  out += "base columns     " + std::to_string(r.base_column_count) + " (+" +
         std::to_string(r.expansion_vector_count) + " expansion vectors)\n";
  out += "columns          " + std::to_string(r.column_count) + " (expected " +
         std::to_string(r.expected.n) + ")\n";
  out += "row pairs        " + std::to_string(r.pairs_checked - r.pairs_failed) + "/" +
         std::to_string(r.pairs_checked) + " ok\n";
  int note_fail = 0;
  for (const PowerNoteCheck& c : r.power_note_checks)
    if (!c.ok) ++note_fail;
  if (!r.power_note_checks.empty())
    out += "power notes      " +
           std::to_string(static_cast<int>(r.power_note_checks.size()) - note_fail) + "/" +
           std::to_string(r.power_note_checks.size()) + " ok\n";
  if (r.mols_built)
    out += "mols             " + std::to_string(r.mols_report.squares_checked) +
           " squares, " + std::to_string(r.mols_report.pairs_checked) +
           " orthogonal pairs, " + (r.mols_report.pass ? "ok" : "FAILED") + "\n";
  append_violations(out, r.violations);
  out += pass_line(r.pass, r.wall_seconds);
  return out;
}

std::string to_text(const MOLSFileReport& r) {
  std::string out;
  out += "file             " + r.file + "\n";
  out += "squares          " + std::to_string(r.count) + " of order " + std::to_string(r.n) +
         "\n";
  out += "latin checks     " + std::to_string(r.checks.squares_checked) + "\n";
  out += "orthogonal pairs " + std::to_string(r.checks.pairs_checked) + "\n";
  append_violations(out, r.checks.violations);
  out += pass_line(r.pass, r.wall_seconds);
  return out;
}

nlohmann::ordered_json mols_to_json(const MOLSSet& m) {
  nlohmann::ordered_json j;
  j["schemaVersion"] = kReportSchemaVersion;
  j["n"] = m.order;
  j["count"] = m.squares.size();
  nlohmann::ordered_json squares = nlohmann::ordered_json::array();
  for (const LatinSquare& s : m.squares) squares.push_back(s.cells());
  j["squares"] = squares;
  return j;
}

}  // namespace molscert
