#include <doctest.h>

#include "extremal/errors.hpp"
#include "extremal/table.hpp"

using namespace extremal;

namespace {

TableRequest request(int k, int s, int n_lo, int n_hi, int q_lo, int q_hi) {
  TableRequest r;
  r.k = k;
  r.s = s;
  r.n_lo = n_lo;
  r.n_hi = n_hi;
  r.q_lo = q_lo;
  r.q_hi = q_hi;
  return r;
}

}  // namespace

TEST_CASE("k = 2 grid closes with zero gap") {
  const Table t = compute_table(request(2, 2, 6, 9, 3, 5));
  REQUIRE(t.rows.size() == 12);
  CHECK(t.complete());
  for (const TableRow& row : t.rows) {
    CAPTURE(row.n);
    CAPTURE(row.q);
    REQUIRE(row.gap);
    CHECK(*row.gap == 0);
    CHECK(row.regime == "specialcase-1");
  }
}

TEST_CASE("csv layout is stable") {
  const Table t = compute_table(request(2, 2, 6, 7, 3, 5));
  CHECK(table_csv(t) ==
        "n,q,formula,conjecture,oracle,gap\n"
        "6,3,10,10,10,0\n"
        "6,4,10,10,10,0\n"
        "6,5,10,10,10,0\n"
        "7,3,11,11,11,0\n"
        "7,4,10,10,10,0\n"
        "7,5,10,10,10,0\n");
}

TEST_CASE("selected columns and unproven cells") {
  TableRequest r = request(3, 2, 9, 9, 7, 7);
  r.columns = {TableColumn::Oracle, TableColumn::Gap};
  CHECK(table_csv(compute_table(r)) == "n,q,oracle,gap\n9,7,56,0\n");

  r = request(3, 2, 10, 10, 6, 6);
  r.columns = {TableColumn::Formula, TableColumn::Conjecture};
  CHECK(table_csv(compute_table(r)) == "n,q,formula,conjecture\n10,6,,56\n");

  r = request(3, 2, 12, 12, 6, 6);
  r.columns = {TableColumn::Oracle};
  r.budget.node_limit = 10;
  const Table cut = compute_table(r);
  CHECK_FALSE(cut.complete());
  CHECK(table_csv(cut) == "n,q,oracle\n12,6,\n");
  CHECK(table_json(cut).find("\"proven_optimal\": false") != std::string::npos);
}

TEST_CASE("column names and errors") {
  for (auto c : {TableColumn::Formula, TableColumn::Conjecture, TableColumn::Oracle, TableColumn::Gap})
    CHECK(parse_column(column_name(c)) == c);
  CHECK_THROWS_AS(parse_column("size"), ArgumentError);
  CHECK_THROWS_AS(compute_table(request(2, 2, 9, 6, 3, 5)), ArgumentError);
  CHECK_THROWS_AS(compute_table(request(2, 0, 6, 9, 3, 5)), ArgumentError);
}
