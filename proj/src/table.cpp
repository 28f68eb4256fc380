#include "extremal/table.hpp"

#include <algorithm>
#include <json.hpp>
#include <limits>

#include "extremal/errors.hpp"

namespace extremal {
namespace {

bool wants(const TableRequest& r, TableColumn c) {
  return std::find(r.columns.begin(), r.columns.end(), c) != r.columns.end();
}

nlohmann::json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return to_string(v);
}

}  // namespace

std::string_view column_name(TableColumn c) {
  switch (c) {
    case TableColumn::Formula: return "formula";
    case TableColumn::Conjecture: return "conjecture";
    case TableColumn::Oracle: return "oracle";
    case TableColumn::Gap: return "gap";
  }
  return "?";
}

TableColumn parse_column(std::string_view name) {
  for (auto c : {TableColumn::Formula, TableColumn::Conjecture, TableColumn::Oracle, TableColumn::Gap})
    if (column_name(c) == name) return c;
  throw ArgumentError("unknown column '" + std::string(name) + "' (expected formula, conjecture, oracle, gap)");
}

bool Table::complete() const {
  return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return !r.oracle_run || r.proven_optimal; });
}

Table compute_table(const TableRequest& request) {
  if (request.k < 2 || request.s < 1) throw ArgumentError("table requires k >= 2 and s >= 1");
  if (request.n_lo > request.n_hi) throw ArgumentError("table requires a nonempty n range");
  if (request.q_lo > request.q_hi) throw ArgumentError("table requires a nonempty q range");
  if (request.n_lo < 1 || request.q_lo < 1) throw ArgumentError("table ranges must be positive");
  if (request.columns.empty()) throw ArgumentError("table requires at least one column");
  check_ground_size(request.n_hi);

  const int k = request.k, s = request.s;
  const bool need_formula = wants(request, TableColumn::Formula) || wants(request, TableColumn::Gap);
  const bool need_oracle = wants(request, TableColumn::Oracle) || wants(request, TableColumn::Gap);
  Table table;
  table.request = request;
  for (int n = request.n_lo; n <= request.n_hi; ++n)
    for (int q = request.q_lo; q <= request.q_hi; ++q) {
      TableRow row;
      row.n = n;
      row.q = q;
      const bool in_domain = n >= (s + 1) * k && q >= k;
      if (need_formula && in_domain) {
        const BoundResult b = m_closed(n, q, k, s);
        row.regime = regime_name(b.regime);
        if (b.hypotheses_met) row.formula = b.value;
      }
      if (wants(request, TableColumn::Conjecture) && n >= (s + 1) * k && q >= s + k - 1 && q <= s * k + k - 1)
        row.conjecture = conjecture_rhs(n, q, k, s);
      if (need_oracle && q >= k && n >= 1) {
        SearchProblem p;
        p.n = n;
        p.q = q;
        p.k = k;
        p.s = s;
        p.budget = request.budget;
        p.threads = request.threads;
        const SearchResult r = exact_m(p);
        row.oracle_run = true;
        row.proven_optimal = r.proven_optimal;
        row.oracle = r.value;
        if (row.proven_optimal && row.formula) row.gap = BigInt(row.oracle) - *row.formula;
      }
      table.rows.push_back(std::move(row));
    }
  return table;
}

std::string table_csv(const Table& table) {
  std::string out = "n,q";
  for (TableColumn c : table.request.columns) out += "," + std::string(column_name(c));
  out += '\n';
  for (const TableRow& r : table.rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.q);
    for (TableColumn c : table.request.columns) {
      out += ',';
      switch (c) {
        case TableColumn::Formula:
          if (r.formula) out += to_string(*r.formula);
          break;
        case TableColumn::Conjecture:
          if (r.conjecture) out += to_string(*r.conjecture);
          break;
        case TableColumn::Oracle:
          if (r.oracle_run && r.proven_optimal) out += std::to_string(r.oracle);
          break;
        case TableColumn::Gap:
          if (r.gap) out += to_string(*r.gap);
          break;
      }
    }
    out += '\n';
  }
  return out;
}

std::string table_json(const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const TableRow& r : table.rows) {
    nlohmann::json row = {{"n", r.n}, {"q", r.q}};
    for (TableColumn c : table.request.columns) {
      switch (c) {
        case TableColumn::Formula:
          row["formula"] = r.formula ? big_json(*r.formula) : nlohmann::json(nullptr);
          row["regime"] = r.regime;
          break;
        case TableColumn::Conjecture:
          row["conjecture"] = r.conjecture ? big_json(*r.conjecture) : nlohmann::json(nullptr);
          break;
        case TableColumn::Oracle:
          row["oracle"] = r.oracle_run ? nlohmann::json(r.oracle) : nlohmann::json(nullptr);
          row["proven_optimal"] = r.proven_optimal;
          break;
        case TableColumn::Gap:
          row["gap"] = r.gap ? big_json(*r.gap) : nlohmann::json(nullptr);
          break;
      }
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json doc = {{"k", table.request.k}, {"s", table.request.s}, {"complete", table.complete()},
                        {"rows", std::move(rows)}};
  return doc.dump(2) + "\n";
}

}  // namespace extremal
