#include "constaspec/tables.hpp"

#include "constaspec/error.hpp"

namespace constaspec {
namespace {

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

}  // namespace

const std::vector<TablePreset>& table_presets() {
  static const std::vector<TablePreset> presets = {
      {"table1", Mode::euclidean, 7, 27,
       {{1, {1, 3, 9, 27}, 7, 1},
        {2, {1, 3, 9, 27}, 7, 1},
        {3, {81}, 1, 0},
        {6, {162}, 1, 0}}},
      {"table2", Mode::euclidean, 19, 36,
       {{1, {1, 2, 3, 4, 6, 9, 12, 18, 36}, 27, 4},
        {2, {8, 24, 72}, 18, 0},
        {3, {27, 54, 108}, 9, 0},
        {6, {216}, 6, 0},
        {9, {81, 162, 324}, 3, 0},
        {18, {648}, 2, 0}}},
      {"table3", Mode::hermitian, 16, 27,
       {{1, {1, 3, 9, 27}, 7, 1},
        {3, {81}, 1, 0},
        {5, {5, 15, 45, 135}, 7, 0},
        {15, {405}, 1, 0}}},
      {"table4", Mode::hermitian, 25, 36,
       {{1, {1, 2, 3, 4, 6, 9, 12, 18, 36}, 20, 2},
        {2, {8, 24, 72}, 20, 0},
        {3, {27, 54, 108}, 4, 0},
        {4, {16, 48, 144}, 10, 0},
        {6, {216}, 4, 0},
        {8, {32, 96, 288}, 6, 0},
        {12, {432}, 2, 0},
        {24, {864}, 1, 0}}},
  };
  return presets;
}

const TablePreset& table_preset(std::string_view name) {
  for (const auto& preset : table_presets()) {
    if (preset.name == name) return preset;
  }
  throw Error(Errc::invalid_argument,
              "unknown preset " + std::string(name) + " (expected table1..table4)");
}

ConstaParams preset_params(const TablePreset& preset, std::uint64_t r) {
  return preset.mode == Mode::euclidean ? euclidean_params(preset.q, preset.n, LambdaOrder{r})
                                        : hermitian_params(preset.q, preset.n, LambdaOrder{r});
}

std::vector<TableRow> reproduce_table(const TablePreset& preset) {
  const bool euclid = preset.mode == Mode::euclidean;
  std::vector<TableRow> out;
  for (const auto& printed : preset.rows) {
    TableRow row{printed, count_factors(preset_params(preset, printed.r)), {}, false, {}};
    for (const auto& profile : row.report.profiles) row.order_set.push_back(profile.order_e);

    std::vector<std::string> notes;
    if (row.order_set != printed.order_set) {
      notes.push_back("printed order set " + join(printed.order_set));
    }
    if (row.report.total_factors != printed.total) {
      notes.push_back(std::string("printed ") + (euclid ? "N1" : "M1") + " = " +
                      std::to_string(printed.total));
    }
    if (row.report.symmetric_factors != printed.symmetric) {
      notes.push_back(std::string("printed ") + (euclid ? "N2" : "M2") + " = " +
                      std::to_string(printed.symmetric));
    }
    row.erratum = !notes.empty();
    if (row.erratum) {
      row.erratum_note = "ERRATUM:";
      for (std::size_t i = 0; i < notes.size(); ++i) {
        row.erratum_note += (i == 0 ? " " : "; ") + notes[i];
      }
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace constaspec
