#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "ltsyn/library.hpp"

using namespace ltsyn;

TEST_CASE("building the strict-inequality pair")
{
  const gate_library lib = make_library("less,1");
  REQUIRE(lib.gates.size() == 1);
  CHECK(lib.gates[0].op == op_kind::op_less);
  CHECK(lib.gates[0].transistor_cost == 4);
  CHECK(lib.has_const1);
  CHECK(!lib.has_const0);
  CHECK(lib.is_less_one());
}

TEST_CASE("building gate-only and multi-gate libraries")
{
  const gate_library nand = make_library("nand");
  CHECK(nand.gates.size() == 1);
  CHECK(nand.num_constants() == 0);
  CHECK(!nand.is_less_one());

  const gate_library axo = make_library("and,xor,1");
  REQUIRE(axo.gates.size() == 2);
  CHECK(axo.gates[0].op == op_kind::op_and);
  CHECK(axo.gates[1].op == op_kind::op_xor);
  CHECK(axo.has_const1);

  // symbol spellings are accepted
  CHECK(make_library("*,^,1").gates.size() == 2);
  CHECK(make_library("<,1").is_less_one());
}

TEST_CASE("unknown gates are rejected with the known names listed")
{
  try {
    make_library("less,maj,1");
    FAIL("expected usage_error");
  } catch (const usage_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("maj") != std::string::npos);
    CHECK(msg.find("less,1") != std::string::npos);
  }
  CHECK_THROWS_AS(make_library(""), usage_error);
  CHECK_THROWS_AS(make_library("less,less,1"), usage_error);
}

TEST_CASE("every classic library row builds and its gates match the kernel semantics")
{
  for (const auto& row : classic_libraries()) {
    const gate_library lib = make_library(row.name);
    for (const auto& g : lib.gates) {
      REQUIRE(g.op.has_value());
      CHECK(g.table == op_table4(*g.op));
      // 16-case exhaustive semantic check at n=2 per gate
      for (uint64_t a = 0; a <= 0xF; ++a)
        for (uint64_t b = 0; b <= 0xF; ++b)
          CHECK(apply_table4_bits(g.table, a, b, 0xF) == apply_op_bits(*g.op, a, b, 0xF));
    }
  }
}

TEST_CASE("cost model prices gates but never constants")
{
  const gate_library lib = make_library("less,1");
  const cost_model gates{cost_mode::gate_count};
  const cost_model transistors{cost_mode::transistor_count};
  CHECK(gates.gate_cost(lib.gates[0]) == 1);
  CHECK(transistors.gate_cost(lib.gates[0]) == 4);
}

TEST_CASE("library config files")
{
  {
    std::ofstream out("test_custom_lib.txt");
    out << "# a custom pair\n";
    out << "myless = 0b0100 cost 4\n";
    out << "nandish = 0b1110 cost 6\n";
    out << "constants = 1\n";
  }
  const gate_library lib = load_library_file("test_custom_lib.txt");
  REQUIRE(lib.gates.size() == 2);
  CHECK(lib.gates[0].name == "myless");
  CHECK(lib.gates[0].table == 0x4);
  CHECK(!lib.gates[0].op.has_value());
  CHECK(lib.gates[1].transistor_cost == 6);
  CHECK(lib.has_const1);

  {
    std::ofstream out("test_builtin_lib.txt");
    out << "less = 0b0100\n";
    out << "constants = 1\n";
  }
  const gate_library builtin = load_library_file("test_builtin_lib.txt");
  CHECK(builtin.gates[0].op == op_kind::op_less);
  CHECK(builtin.is_less_one());

  {
    std::ofstream out("test_bad_lib.txt");
    out << "less = 0b0001\n"; // contradicts the builtin table
  }
  CHECK_THROWS_AS(load_library_file("test_bad_lib.txt"), usage_error);
  CHECK_THROWS_AS(load_library_file("no_such_file.txt"), usage_error);
}

TEST_CASE("resolve_library dispatches between names and paths")
{
  CHECK(resolve_library("less,1").is_less_one());
  CHECK(resolve_library("test_custom_lib.txt").gates.size() == 2);
}
