#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cube_orbits::cli {

enum class TableId { GammaV, GammaE, LucasClasses, LambdaV, LambdaE };

std::optional<TableId> parse_table_id(std::string_view name);
std::string_view table_name(TableId id);

/// Default column range for each table.
std::size_t default_table_max(TableId id);

/// A table with one column per n = 1..max. `labels[0]` is "n"; `columns[j][i]`
/// is the value of row `labels[i]` at n = j + 1, in full decimal.
struct Table {
  TableId id{};
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> columns;

  /// Values of one labelled row, left to right.
  std::vector<std::string> row(std::string_view label) const;
};

/// Builds the table for n = 1..max_n (max_n >= 1). The Gamma_1 column of
/// gamma-v comes from the oracle, all other entries from closed forms.
Table build_table(TableId id, std::size_t max_n);

std::string render_plain(const Table& t);
std::string render_csv(const Table& t);

}  // namespace cube_orbits::cli
