#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "constaspec/consta.hpp"

namespace constaspec {

/// One row as printed in the source tables.
struct PrintedRow {
  std::uint64_t r;
  std::vector<std::uint64_t> order_set;
  std::uint64_t total;
  std::uint64_t symmetric;
};

struct TablePreset {
  std::string name;
  Mode mode;
  std::uint64_t q;  // field order (euclidean) or base q0 (hermitian)
  std::uint64_t n;
  std::vector<PrintedRow> rows;
};

const std::vector<TablePreset>& table_presets();
/// Throws InvalidArgument for an unknown name.
const TablePreset& table_preset(std::string_view name);

struct TableRow {
  PrintedRow printed;
  AnalysisReport report;
  std::vector<std::uint64_t> order_set;
  bool erratum = false;
  std::string erratum_note;  // e.g. "ERRATUM: printed N2 = 4"
};

ConstaParams preset_params(const TablePreset& preset, std::uint64_t r);
std::vector<TableRow> reproduce_table(const TablePreset& preset);

}  // namespace constaspec
