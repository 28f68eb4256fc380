#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "extremal/formulas.hpp"
#include "extremal/oracle.hpp"

namespace extremal {

enum class TableColumn { Formula, Conjecture, Oracle, Gap };

std::string_view column_name(TableColumn c);
TableColumn parse_column(std::string_view name);

struct TableRequest {
  int k = 2;
  int s = 2;
  int n_lo = 0, n_hi = 0;  // inclusive
  int q_lo = 0, q_hi = 0;  // inclusive
  std::vector<TableColumn> columns = {TableColumn::Formula, TableColumn::Conjecture, TableColumn::Oracle,
                                      TableColumn::Gap};
  SearchBudget budget;  // per oracle cell
  int threads = 1;
};

struct TableRow {
  int n = 0;
  int q = 0;
  std::optional<BigInt> formula;  // proven closed form only
  std::string regime;             // regime of m_closed, empty when it does not apply
  std::optional<BigInt> conjecture;
  bool oracle_run = false;
  bool proven_optimal = false;
  long long oracle = 0;  // best value found; exact when proven_optimal
  std::optional<BigInt> gap;  // oracle - formula when both are known
};

struct Table {
  TableRequest request;
  std::vector<TableRow> rows;  // n ascending, then q ascending
  bool complete() const;       // every oracle cell proven optimal
};

/// Throws ArgumentError on empty ranges or invalid k, s.
Table compute_table(const TableRequest& request);

/// `n,q,` followed by the requested columns; unknown or unproven cells are
/// left empty. LF line endings.
std::string table_csv(const Table& table);
std::string table_json(const Table& table);

}  // namespace extremal
