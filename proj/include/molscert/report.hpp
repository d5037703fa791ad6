#ifndef MOLSCERT_REPORT_HPP
#define MOLSCERT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "molscert/code.hpp"
#include "molscert/datasets.hpp"
#include "molscert/dm.hpp"
#include "molscert/latin.hpp"

#include "json.hpp"

namespace molscert {

inline constexpr int kReportSchemaVersion = 1;

struct RunOptions {
  bool build_mols = false;
  bool fail_fast = false;
  int threads = 1;  // <= 0 selects hardware concurrency
};

// Common shape of every verification report: computed facts, the list of
// violations (expected-value mismatches and failed checks), and the overall
// outcome. pass is true exactly when violations is empty.
struct PAReport {
  std::string dataset;
  int n = 0;
  long long group_order = 0;
  std::vector<std::size_t> orbit_sizes;
  std::size_t code_size = 0;
  int min_distance = 0;
  int separability = 0;  // 0 when separation failed
  PAExpected expected;
  std::vector<std::string> violations;
  bool mols_built = false;
  MOLSReport mols_report;
  std::optional<MOLSSet> mols;
  bool pass = false;
  double wall_seconds = 0.0;
};

struct DMReport {
  std::string dataset;
  std::string group;
  int rows = 0;
  int base_column_count = 0;
  int expansion_vector_count = 0;
  int column_count = 0;
  int pairs_checked = 0;
  int pairs_failed = 0;
  std::vector<RowPairCheck> pair_checks;
  std::vector<PowerNoteCheck> power_note_checks;
  DMExpected expected;
  std::vector<std::string> violations;
  bool mols_built = false;
  MOLSReport mols_report;
  std::optional<MOLSSet> mols;
  bool pass = false;
  double wall_seconds = 0.0;
};

struct MOLSFileReport {
  std::string file;
  int n = 0;
  int count = 0;
  MOLSReport checks;
  bool pass = false;
  double wall_seconds = 0.0;
};

PAReport run_verify_pa(const PADataset& ds, const RunOptions& opt);
DMReport run_verify_dm(const DMDataset& ds, const RunOptions& opt);
MOLSFileReport run_verify_mols(const std::string& file_label, const MOLSSet& mols,
                               const RunOptions& opt);

// JSON reports are byte-deterministic: no wall time, keys in fixed order.
nlohmann::ordered_json to_json(const PAReport& r);
nlohmann::ordered_json to_json(const DMReport& r);
nlohmann::ordered_json to_json(const MOLSFileReport& r);

// Text reports include the wall time.
std::string to_text(const PAReport& r);
std::string to_text(const DMReport& r);
std::string to_text(const MOLSFileReport& r);

nlohmann::ordered_json mols_to_json(const MOLSSet& m);

}  // namespace molscert

#endif
