#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ltsyn/libanalysis.hpp"
#include "oracle.hpp"

using namespace ltsyn;

TEST_CASE("function names for the sixteen 2-input tables")
{
  CHECK(std::string(two_input_function_name(0x0)) == "0");
  CHECK(std::string(two_input_function_name(0x1)) == "A*B");
  CHECK(std::string(two_input_function_name(0x4)) == "A<B");
  CHECK(std::string(two_input_function_name(0x6)) == "A^B");
  CHECK(std::string(two_input_function_name(0x9)) == "A=B");
  CHECK(std::string(two_input_function_name(0xE)) == "nand(A,B)");
  CHECK(std::string(two_input_function_name(0xF)) == "1");
}

TEST_CASE("the reachability closure decides universality")
{
  CHECK(reachable_closure(make_library("less,1")) == 0xFFFF);
  CHECK(reachable_closure(make_library("nand")) == 0xFFFF);
  CHECK(reachable_closure(make_library("impl,0")) == 0xFFFF);
  // and/xor alone preserve false on the all-false row: only tables 0..7
  CHECK(reachable_closure(make_library("and,xor")) == 0x00FF);
}

TEST_CASE("expressiveness of the strict-inequality pair")
{
  const auto report = expressiveness(make_library("less,1"));
  REQUIRE(report.total.has_value());
  CHECK(*report.total == 28);
  CHECK(report.non_redundant);
  CHECK(report.unreachable.empty());
  CHECK(report.reference_total == 28);
  CHECK(report.matches_reference());

  CHECK(report.ops[0x0].gates == 1); // 1<1
  CHECK(report.ops[0x1].gates == 2); // (A<1)<B
  CHECK(report.ops[0x3].gates == 0); // bare A
  CHECK(report.ops[0x4].gates == 1); // A<B itself
  CHECK(report.ops[0x6].gates == 5); // xor
  CHECK(report.ops[0x9].gates == 4); // eq
  CHECK(report.ops[0xE].gates == 3); // nand
  CHECK(report.ops[0x8].gates == 2); // nor
  CHECK(report.ops[0xF].gates == 0); // constant 1 is a leaf

  // every reported circuit is equivalence-verified and minimal
  const gate_library lib = make_library("less,1");
  for (const auto& r : report.ops) {
    const auto parsed = parse_formula(r.expr);
    CHECK(oracle::table_by_rows(parsed.expr, 2) == truth_table(2, r.table));
    CHECK(oracle::certify_minimal(lib, truth_table(2, r.table), r.gates));
  }
}

TEST_CASE("expressiveness totals run in parallel identically")
{
  analysis_options serial{10, 1, false};
  analysis_options parallel{10, 2, false};
  const auto a = expressiveness(make_library("and,eq,0"), serial);
  const auto b = expressiveness(make_library("and,eq,0"), parallel);
  REQUIRE(a.total.has_value());
  CHECK(*a.total == 23);
  CHECK(a.total == b.total);
  for (int v = 0; v < 16; ++v) CHECK(a.ops[v].gates == b.ops[v].gates);
}

TEST_CASE("self-verification of minimality passes")
{
  analysis_options opt;
  opt.verify_minimal = true;
  const auto report = expressiveness(make_library("less,1"), opt);
  CHECK(*report.total == 28);
}

TEST_CASE("non-universal libraries report their unreachable operators")
{
  const auto report = expressiveness(make_library("and,xor"));
  CHECK(!report.total.has_value());
  CHECK(report.unreachable.size() == 8);
  for (uint8_t t : report.unreachable) CHECK((t & 0x8) != 0);
}

TEST_CASE("redundancy flags")
{
  CHECK(non_redundant(make_library("less,1")));
  CHECK(non_redundant(make_library("nand")));
  CHECK(non_redundant(make_library("and,xor,1")));
  CHECK(!non_redundant(make_library("nand,1")));   // 1 = nand(A, nand(A,A))
  CHECK(!non_redundant(make_library("less,eq,1"))); // eq is expressible from less and 1
  CHECK(!non_redundant(make_library("and,less,1")));
}

TEST_CASE("duality: mirrored libraries have equal totals")
{
  const auto less1 = expressiveness(make_library("less,1"));
  const auto impl0 = expressiveness(make_library("impl,0"));
  REQUIRE(less1.total.has_value());
  CHECK(*less1.total == *impl0.total);

  const auto nand = expressiveness(make_library("nand"));
  const auto nor = expressiveness(make_library("nor"));
  REQUIRE(nand.total.has_value());
  CHECK(*nand.total == *nor.total);
}

TEST_CASE("transistor cost table")
{
  const transistor_report report = transistor_table();
  REQUIRE(report.rows.size() == 11);

  const std::vector<int> less_expected = {16, 20, 8, 16, 16, 16, 20, 16, 12, 4, 28};
  const std::vector<int> nand_expected = {20, 20, 12, 16, 24, 28, 16, 20, 4, 20, 32};
  for (size_t i = 0; i < report.rows.size(); ++i) {
    CHECK(report.rows[i].less_transistors == less_expected[i]);
    CHECK(report.rows[i].nand_transistors == nand_expected[i]);
    CHECK(report.rows[i].less_transistors == 4 * report.rows[i].less_gates);
  }

  // the half-adder row sums xor and conjunction with no sharing
  const auto& half = report.rows.back();
  CHECK(half.name == "2x2 half-adder");
  CHECK(half.less_gates == 7);
  CHECK(half.nand_gates == 8);
}
