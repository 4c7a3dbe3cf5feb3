#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ltsyn/errors.hpp"

namespace ltsyn {

/* Truth tables of up to 6 variables packed into one 64-bit word.
 *
 * Bit order (the single source of truth for every golden value in this
 * project): bit r of the word holds the function value for input row r,
 * where row r is the assignment in which variable k carries bit (n-k-1)
 * of (2^n - 1 - r).  Row 0 is therefore the all-true assignment and row
 * 2^n - 1 the all-false one.  Written MSB-first as a binary string, the
 * word lists function values for assignments in ascending binary order
 * with variable 0 as the leftmost input bit: for n=2 the string reads
 * f(0,0) f(0,1) f(1,0) f(1,1).
 *
 * Under this order the projection of variable k is exactly
 *   (2^(2^n) - 1) / (2^(2^(n-k-1)) + 1),
 * e.g. n=3 gives 0x0F, 0x33, 0x55 for variables 0, 1, 2.
 */

inline constexpr int max_table_vars = 6;

/* Binary table operators plus unary complement; `op_cimpl` is converse
 * implication (A or not B), the mirror of `op_impl`. */
enum class op_kind : uint8_t {
  op_and,
  op_or,
  op_xor,
  op_less,
  op_greater,
  op_eq,
  op_impl,
  op_cimpl,
  op_nand,
  op_nor
};

inline constexpr int num_op_kinds = 10;

constexpr uint64_t table_mask_unchecked(int num_vars)
{
  return num_vars >= 6 ? ~uint64_t{0} : (uint64_t{1} << (uint64_t{1} << num_vars)) - 1;
}

/* 2^(2^n) - 1; throws capacity_error outside [0, 6]. */
uint64_t table_mask(int num_vars);

class truth_table {
public:
  truth_table() = default;

  truth_table(int num_vars, uint64_t bits);

  static truth_table zeros(int num_vars);

  /* The all-ones mask as a table: 2^(2^n) - 1. */
  static truth_table ones(int num_vars);

  /* Projection of variable k, computed with the division formula above. */
  static truth_table var(int num_vars, int k);

  int num_vars() const { return num_vars_; }
  uint64_t bits() const { return bits_; }
  uint64_t mask() const { return table_mask_unchecked(num_vars_); }

  bool get(int row) const { return (bits_ >> row) & 1u; }

  friend bool operator==(const truth_table&, const truth_table&) = default;

private:
  int num_vars_ = 0;
  uint64_t bits_ = 0;
};

/* Raw-word kernels; callers guarantee operands are masked to `mask`. */
uint64_t apply_op_bits(op_kind op, uint64_t a, uint64_t b, uint64_t mask);

/* Applies an arbitrary 2-input gate given as its 4-bit table (the gate's own
 * n=2 truth table in the bit order above). */
uint64_t apply_table4_bits(uint8_t table, uint64_t a, uint64_t b, uint64_t mask);

/* Checked variants working on whole tables. */
truth_table apply_op(op_kind op, const truth_table& a, const truth_table& b);
truth_table apply_table4(uint8_t table, const truth_table& a, const truth_table& b);
truth_table complement(const truth_table& a);

/* Operator metadata. */
uint8_t op_table4(op_kind op);          // 4-bit semantics, e.g. op_less -> 0b0100
const char* op_name(op_kind op);        // "and", "less", ...
const char* op_symbol(op_kind op);      // "*", "<", ...; nand/nor have no infix symbol
std::optional<op_kind> op_from_name(std::string_view token); // accepts either form

/* Serialization: "n=3:0x1E"; binary form "0b00011110" lists rows MSB-first
 * (highest row leftmost, i.e. the plain binary numeral of the word). */
std::string to_string(const truth_table& t);
std::string to_binary_string(const truth_table& t);

/* Accepts "n=K:0xHH", "n=K:0bBB..." or a bare "0bBB..." whose length fixes K. */
truth_table parse_table(std::string_view text);

} // namespace ltsyn
