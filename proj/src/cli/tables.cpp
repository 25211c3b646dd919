#include "cube_orbits/cli/tables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cube_orbits/formulas.hpp"
#include "cube_orbits/oracle.hpp"

namespace cube_orbits::cli {

namespace {

using namespace cube_orbits::formulas;

std::vector<std::string> gamma_v_column(std::size_t n) {
  if (n < 2) {
    const auto g = oracle::CubeGraph::build(n, Cube::Gamma);
    const auto h = oracle::histogram(oracle::vertex_orbits(g));
    return {std::to_string(n), std::to_string(g.vertices().size()), to_decimal(h.orbit_total()),
            to_decimal(h.count(1)), to_decimal(h.count(2))};
  }
  const auto o = gamma_vertex_orbits(n);
  return {std::to_string(n), to_decimal(graph_counts(n, Cube::Gamma).vertices), to_decimal(o.total),
          to_decimal(o.histogram.count(1)), to_decimal(o.histogram.count(2))};
}

std::vector<std::string> gamma_e_column(std::size_t n) {
  const auto o = gamma_edge_orbits(n);
  return {std::to_string(n), to_decimal(graph_counts(n, Cube::Gamma).edges), to_decimal(o.total),
          to_decimal(o.histogram.count(1)), to_decimal(o.histogram.count(2))};
}

std::vector<std::string> lucas_classes_column(std::size_t n) {
  const auto c = lucas_string_classes(n);
  return {std::to_string(n), to_decimal(lucas(static_cast<long long>(n))), to_decimal(c.primitive),
          to_decimal(c.primitive_symmetric), to_decimal(c.asymmetric)};
}

std::vector<std::string> lambda_v_column(std::size_t n) {
  return {std::to_string(n), to_decimal(lambda_vertex_orbit_total(n)), to_decimal(lambda_vertex_orbit_count(n, n)),
          to_decimal(lambda_vertex_orbit_count(n, 2 * n))};
}

std::vector<std::string> lambda_e_column(std::size_t n) {
  const auto o = lambda_edge_orbits(n);
  return {std::to_string(n), to_decimal(o.total), to_decimal(o.histogram.count(n)),
          to_decimal(o.histogram.count(2 * n))};
}

}  // namespace

std::optional<TableId> parse_table_id(std::string_view name) {
  for (TableId id : {TableId::GammaV, TableId::GammaE, TableId::LucasClasses, TableId::LambdaV, TableId::LambdaE})
    if (table_name(id) == name) return id;
  return std::nullopt;
}

std::string_view table_name(TableId id) {
  switch (id) {
    case TableId::GammaV: return "gamma-v";
    case TableId::GammaE: return "gamma-e";
    case TableId::LucasClasses: return "lucas-classes";
    case TableId::LambdaV: return "lambda-v";
    case TableId::LambdaE: return "lambda-e";
  }
  return "";
}

std::size_t default_table_max(TableId id) {
  switch (id) {
    case TableId::GammaV: return 15;
    case TableId::GammaE: return 14;
    case TableId::LucasClasses: return 16;
    case TableId::LambdaV: return 18;
    case TableId::LambdaE: return 16;
  }
  return 0;
}

std::vector<std::string> Table::row(std::string_view label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::out_of_range("Table::row: no row " + std::string(label));
  const auto i = static_cast<std::size_t>(it - labels.begin());
  std::vector<std::string> out;
  for (const auto& col : columns) out.push_back(col[i]);
  return out;
}

Table build_table(TableId id, std::size_t max_n) {
  if (max_n < 1) throw std::invalid_argument("table: --max must be >= 1");
  Table t{id, {}, {}};
  std::vector<std::string> (*column)(std::size_t) = nullptr;
  switch (id) {
    case TableId::GammaV:
      t.labels = {"n", "|V(Gamma_n)|", "o_V(Gamma_n)", "o_V(Gamma_n,1)", "o_V(Gamma_n,2)"};
      column = gamma_v_column;
      break;
    case TableId::GammaE:
      t.labels = {"n", "|E(Gamma_n)|", "o_E(Gamma_n)", "o_E(Gamma_n,1)", "o_E(Gamma_n,2)"};
      column = gamma_e_column;
      break;
    case TableId::LucasClasses:
      t.labels = {"n", "L_n", "p_n", "s_n", "a_n"};
      column = lucas_classes_column;
      break;
    case TableId::LambdaV:
      t.labels = {"n", "o_V(Lambda_n)", "o_V(Lambda_n,n)", "o_V(Lambda_n,2n)"};
      column = lambda_v_column;
      break;
    case TableId::LambdaE:
      t.labels = {"n", "o_E(Lambda_n)", "o_E(Lambda_n,n)", "o_E(Lambda_n,2n)"};
      column = lambda_e_column;
      break;
  }
  for (std::size_t n = 1; n <= max_n; ++n) t.columns.push_back(column(n));
  return t;
}

std::string render_plain(const Table& t) {
  std::size_t label_width = 0;
  for (const auto& l : t.labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> widths;
  for (const auto& col : t.columns) {
    std::size_t w = 0;
    for (const auto& v : col) w = std::max(w, v.size());
    widths.push_back(w);
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < t.labels.size(); ++i) {
    os << t.labels[i] << std::string(label_width - t.labels[i].size(), ' ') << " |";
    for (std::size_t j = 0; j < t.columns.size(); ++j) {
      const auto& v = t.columns[j][i];
      os << ' ' << std::string(widths[j] - v.size(), ' ') << v;
    }
    os << '\n';
  }
  return os.str();
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.labels.size(); ++i) os << (i ? "," : "") << t.labels[i];
  os << '\n';
  for (const auto& col : t.columns) {
    for (std::size_t i = 0; i < col.size(); ++i) os << (i ? "," : "") << col[i];
    os << '\n';
  }
  return os.str();
}

}  // namespace cube_orbits::cli
