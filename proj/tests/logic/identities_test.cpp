#include "doctest.h"
#include "gammakit/logic/identities.hpp"
#include "gammakit/logic/parser.hpp"
#include "gammakit/logic/semantics.hpp"
#include "json.hpp"
#include "oracle.hpp"

using namespace gammakit::logic;

TEST_CASE("every printed cell matches the oracle") {
  std::size_t derived = 0;
  for (const auto& col : reference_columns()) {
    const Formula f = parse(col.formula);
    REQUIRE(col.printed.size() == 4);
    for (unsigned r = 0; r < 4; ++r) {
      INFO("table " << col.table << " column " << col.label << " row " << r);
      CHECK(col.printed[r] == oracle::eval(f, oracle::row({"A", "B"}, r)));
    }
    if (col.derived) derived += 4;
  }
  CHECK(derived == 56);
}

TEST_CASE("printed cells by name") {
  CHECK(printed_cell(1, "A -> B", "TF") == false);
  CHECK(printed_cell(1, "A <- B", "FT") == false);
  CHECK(printed_cell(2, "~A <-> ~B", "TT") == true);
  CHECK_THROWS_AS(printed_cell(3, "A", "FF"), std::out_of_range);
  CHECK_THROWS_AS(printed_cell(1, "A", "XX"), std::out_of_range);
}

TEST_CASE("suite passes and reports") {
  const SuiteReport r = identity_suite();
  CHECK(r.all_passed());
  CHECK(r.derived_cells_checked == 56);
  CHECK(r.items.size() == 28);
  const SuiteItem* item = r.find("(~A & B -> ~A & A) == (B -> A)");
  REQUIRE(item != nullptr);
  CHECK(item->passed);
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["items"].size() == r.items.size());
  CHECK(r.to_csv().rfind("item,passed,detail\r\n", 0) == 0);
}

TEST_CASE("the four equivalences, checked directly") {
  CHECK(are_equivalent(parse("A & ~B -> A & ~A"), parse("A -> B")));
  CHECK(are_equivalent(parse("~A & B -> ~A & A"), parse("B -> A")));
  CHECK(oracle::signature(parse("A & ~B -> A & ~A")) == oracle::signature(parse("A -> B")));
  CHECK(oracle::signature(parse("~A & B -> ~A & A")) == oracle::signature(parse("B -> A")));
}
