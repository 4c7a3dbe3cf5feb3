#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ltsyn/truth_table.hpp"
#include "oracle.hpp"

using namespace ltsyn;

namespace {

const op_kind all_binary_ops[] = {
  op_kind::op_and,  op_kind::op_or,   op_kind::op_xor,  op_kind::op_less, op_kind::op_greater,
  op_kind::op_eq,   op_kind::op_impl, op_kind::op_cimpl, op_kind::op_nand, op_kind::op_nor,
};

/* Row-by-row expectation for one bitwise operation. */
uint64_t expected_bits(op_kind op, uint64_t a, uint64_t b, int n)
{
  uint64_t r = 0;
  for (int row = 0; row < (1 << n); ++row) {
    const bool va = (a >> row) & 1u;
    const bool vb = (b >> row) & 1u;
    if (oracle::scalar_op(op, va, vb)) r |= uint64_t{1} << row;
  }
  return r;
}

} // namespace

TEST_CASE("all-ones mask values")
{
  CHECK(truth_table::ones(0).bits() == 1);
  CHECK(truth_table::ones(2).bits() == 15);
  CHECK(truth_table::ones(3).bits() == 255);
  CHECK(truth_table::ones(6).bits() == ~uint64_t{0});
  CHECK_THROWS_AS(truth_table::ones(7), capacity_error);
  CHECK_THROWS_AS(truth_table::ones(-1), capacity_error);
}

TEST_CASE("projection tables match the division formula values")
{
  CHECK(truth_table::var(2, 0).bits() == 3);
  CHECK(truth_table::var(2, 1).bits() == 5);
  CHECK(truth_table::var(3, 0).bits() == 15);
  CHECK(truth_table::var(3, 1).bits() == 51);
  CHECK(truth_table::var(3, 2).bits() == 85);
  CHECK_THROWS_AS(truth_table::var(2, 2), usage_error);
  CHECK_THROWS_AS(truth_table::var(7, 0), capacity_error);
}

TEST_CASE("projection division formula equals the row-enumeration oracle for all 21 cases")
{
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k < n; ++k)
      CHECK(truth_table::var(n, k) == oracle::var_by_rows(n, k));
}

TEST_CASE("binary operations equal the scalar row oracle exhaustively up to n=3")
{
  for (int n = 0; n <= 3; ++n) {
    const uint64_t mask = table_mask(n);
    for (uint64_t a = 0; a <= mask; ++a) {
      for (uint64_t b = 0; b <= mask; ++b) {
        for (op_kind op : all_binary_ops) {
          REQUIRE(apply_op_bits(op, a, b, mask) == expected_bits(op, a, b, n));
        }
      }
    }
  }
}

TEST_CASE("complement equals the row oracle exhaustively up to n=3")
{
  for (int n = 0; n <= 3; ++n) {
    const uint64_t mask = table_mask(n);
    for (uint64_t a = 0; a <= mask; ++a) {
      uint64_t expect = 0;
      for (int row = 0; row < (1 << n); ++row)
        if (!((a >> row) & 1u)) expect |= uint64_t{1} << row;
      REQUIRE(complement(truth_table(n, a)).bits() == expect);
    }
  }
}

TEST_CASE("binary operations match the row oracle on random wide tables")
{
  std::mt19937_64 rng(0x5eed);
  for (int n = 4; n <= 6; ++n) {
    const uint64_t mask = table_mask(n);
    for (int trial = 0; trial < 2000; ++trial) {
      const uint64_t a = rng() & mask;
      const uint64_t b = rng() & mask;
      for (op_kind op : all_binary_ops) {
        uint64_t expect = 0;
        for (int row = 0; row < (1 << n); ++row) {
          const bool va = (a >> row) & 1u;
          const bool vb = (b >> row) & 1u;
          if (oracle::scalar_op(op, va, vb)) expect |= uint64_t{1} << row;
        }
        REQUIRE(apply_op_bits(op, a, b, mask) == expect);
      }
    }
  }
}

TEST_CASE("documented operation examples")
{
  const truth_table a(2, 0b0011);
  const truth_table b(2, 0b0101);
  CHECK(apply_op(op_kind::op_less, a, b).bits() == 0b0100);
  CHECK(apply_op(op_kind::op_nand, a, b).bits() == 0b1110);
  CHECK(apply_op(op_kind::op_xor, a, a).bits() == 0);
  CHECK(apply_op(op_kind::op_xor, b, b).bits() == 0);
}

TEST_CASE("operation symmetries")
{
  for (int n = 0; n <= 3; ++n) {
    const uint64_t mask = table_mask(n);
    for (uint64_t a = 0; a <= mask; ++a) {
      for (uint64_t b = 0; b <= mask; ++b) {
        const truth_table ta(n, a), tb(n, b);
        CHECK(apply_op(op_kind::op_less, ta, tb) == apply_op(op_kind::op_greater, tb, ta));
        CHECK(apply_op(op_kind::op_xor, ta, tb) == complement(apply_op(op_kind::op_eq, ta, tb)));
      }
    }
  }
}

TEST_CASE("arity mismatch is a usage error")
{
  CHECK_THROWS_AS(apply_op(op_kind::op_and, truth_table::ones(2), truth_table::ones(3)),
                  usage_error);
}

TEST_CASE("gate tables agree with the bitwise kernel on every 2-input pair")
{
  for (op_kind op : all_binary_ops) {
    for (uint64_t a = 0; a <= 0xF; ++a)
      for (uint64_t b = 0; b <= 0xF; ++b)
        REQUIRE(apply_table4_bits(op_table4(op), a, b, 0xF) == apply_op_bits(op, a, b, 0xF));
  }
}

TEST_CASE("serialization round-trips")
{
  const truth_table t(3, 0x1E);
  CHECK(to_string(t) == "n=3:0x1E");
  CHECK(to_binary_string(t) == "0b00011110");
  CHECK(parse_table("n=3:0x1E") == t);
  CHECK(parse_table("n=3:0b00011110") == t);
  CHECK(parse_table("0b00011110") == t);
  CHECK(parse_table("n=0:0x1") == truth_table::ones(0));
  CHECK(parse_table(to_string(truth_table(6, 0xDEADBEEF12345678ull))) ==
        truth_table(6, 0xDEADBEEF12345678ull));

  CHECK_THROWS_AS(parse_table("0x1E"), usage_error);          // hex needs n=
  CHECK_THROWS_AS(parse_table("n=1:0x6"), usage_error);       // bits above mask
  CHECK_THROWS_AS(parse_table("n=2:0b101"), usage_error);     // wrong length
  CHECK_THROWS_AS(parse_table("0b101"), usage_error);         // not a power of two
  CHECK_THROWS_AS(parse_table("n=7:0x0"), capacity_error);
  CHECK_THROWS_AS(parse_table("garbage"), usage_error);
}
