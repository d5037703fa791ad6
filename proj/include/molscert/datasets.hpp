#ifndef MOLSCERT_DATASETS_HPP
#define MOLSCERT_DATASETS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "molscert/algebra.hpp"
#include "molscert/dm.hpp"
#include "molscert/isometry.hpp"
#include "molscert/perm.hpp"

namespace molscert {

struct PAExpected {
  long long group_order = 0;
  std::vector<std::size_t> orbit_sizes;
  int min_distance = 0;
  int separability_m = 0;
};

// A permutation-array construction: isometry-subgroup generators in S_{2n}
// plus orbit representatives in S_n, with the facts the dataset certifies.
struct PADataset {
  std::string name;
  int n = 0;
  std::vector<IsometryElement> generators;
  std::vector<Permutation> representatives;
  PAExpected expected;

  IsometrySubgroup subgroup() const { return {n, generators}; }
};

struct DMExpected {
  int n = 0;
  int mols_count = 0;
};

// Annotation "symbol^exponent = expression" for component component_index
// (1-based), cross-checked against pow_field at load.
struct PowerNote {
  int component_index = 0;
  int exponent = 0;
  std::string expression;
};

struct PowerNoteCheck {
  PowerNote note;
  bool ok = false;
  std::string computed;  // canonical spelling of the computed power
};

// "interchange a:b,... applied-to columns lo-hi": the loader appends a copy
// of stored columns lo..hi (1-based, inclusive) with the rows swapped.
struct RowInterchangeSpec {
  std::vector<std::pair<int, int>> swaps;
  int first_column = 0;
  int last_column = 0;
};

struct DMDataset {
  std::string name;
  GroupDescriptor descriptor{{Component{ComponentKind::Zm, 2}}};
  int k = 0;
  std::vector<std::vector<GroupElement>> stored_columns;
  std::optional<RowInterchangeSpec> interchange;
  std::vector<std::vector<GroupElement>> expansion_vectors;
  std::vector<PowerNote> power_notes;
  DMExpected expected;

  // stored columns plus the materialized interchange block
  std::vector<std::vector<GroupElement>> base_columns() const;
  DMBase base() const;
};

struct DatasetSummary {
  std::string name;
  std::string kind;  // "pa" or "dm"
  std::string summary;
};

// The four embedded constructions: n54-pa, n96-pa, n108-dm, n45-dm.
std::vector<DatasetSummary> list_embedded();
bool is_embedded(const std::string& name);
const std::string& embedded_text(const std::string& name);  // throws on unknown name

// Loads by embedded name or from a file path.
PADataset load_pa(const std::string& source);
DMDataset load_dm(const std::string& source);

// "pa" or "dm", from the source's type line.
std::string dataset_kind(const std::string& source);

PADataset parse_pa_text(const std::string& text);
DMDataset parse_dm_text(const std::string& text);

// Canonical serialization; embedded datasets round-trip byte-identically.
std::string serialize_pa(const PADataset& ds);
std::string serialize_dm(const DMDataset& ds);

std::vector<PowerNoteCheck> check_power_notes(const DMDataset& ds);

}  // namespace molscert

#endif
