#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ltsyn/library.hpp"

/* Test-only oracles, kept independent of the incremental scan machinery the
 * production code uses: formulas are evaluated one input row at a time and
 * candidate circuits are enumerated by plain structural recursion. */

namespace oracle {

using namespace ltsyn;

/* Scalar evaluation of one input row; `assignment` carries variable k in
 * bit (n-k-1), i.e. variable 0 is the most significant input bit. */
inline bool eval_row(const formula& f, int num_vars, uint32_t assignment)
{
  const auto var = [&](int k) -> bool { return (assignment >> (num_vars - k - 1)) & 1u; };
  switch (f.kind()) {
  case formula::node_kind::input: return var(f.input_index());
  case formula::node_kind::constant: return f.value();
  case formula::node_kind::negation: return !eval_row(f.child(0), num_vars, assignment);
  case formula::node_kind::conditional:
    return eval_row(f.child(0), num_vars, assignment)
               ? eval_row(f.child(1), num_vars, assignment)
               : eval_row(f.child(2), num_vars, assignment);
  case formula::node_kind::custom:
  case formula::node_kind::gate: {
    const bool a = eval_row(f.left(), num_vars, assignment);
    const bool b = eval_row(f.right(), num_vars, assignment);
    const uint8_t table =
        f.kind() == formula::node_kind::gate ? op_table4(f.op()) : f.gate_table();
    return (table >> (3 - (int(a) * 2 + int(b)))) & 1u;
  }
  }
  return false;
}

/* Builds a table row by row: the value for assignment a lands in bit
 * (2^n - 1 - a). */
inline truth_table table_by_rows(const formula& f, int num_vars)
{
  const uint32_t rows = uint32_t{1} << num_vars;
  uint64_t bits = 0;
  for (uint32_t a = 0; a < rows; ++a)
    if (eval_row(f, num_vars, a)) bits |= uint64_t{1} << (rows - 1 - a);
  return truth_table(num_vars, bits);
}

/* Projection table built from the row oracle alone. */
inline truth_table var_by_rows(int num_vars, int k)
{
  return table_by_rows(formula::input(k), num_vars);
}

/* Scalar semantics of each named operator, for checking the bitwise kernel. */
inline bool scalar_op(op_kind op, bool a, bool b)
{
  switch (op) {
  case op_kind::op_and: return a && b;
  case op_kind::op_or: return a || b;
  case op_kind::op_xor: return a != b;
  case op_kind::op_less: return !a && b;
  case op_kind::op_greater: return a && !b;
  case op_kind::op_eq: return a == b;
  case op_kind::op_impl: return !a || b;
  case op_kind::op_cimpl: return a || !b;
  case op_kind::op_nand: return !(a && b);
  case op_kind::op_nor: return !(a || b);
  }
  return false;
}

/* Every formula with exactly `gates` binary gate nodes over the library,
 * by structural recursion (split the gate budget across the root's
 * children in every way). */
inline std::vector<formula> all_formulas(const gate_library& lib, int num_vars, int gates)
{
  std::vector<formula> out;
  if (gates == 0) {
    if (lib.has_const0) out.push_back(formula::constant(false));
    if (lib.has_const1) out.push_back(formula::constant(true));
    for (int k = 0; k < num_vars; ++k) out.push_back(formula::input(k));
    return out;
  }
  for (int left = 0; left < gates; ++left) {
    const auto ls = all_formulas(lib, num_vars, left);
    const auto rs = all_formulas(lib, num_vars, gates - 1 - left);
    for (const auto& g : lib.gates)
      for (const auto& l : ls)
        for (const auto& r : rs) out.push_back(g.apply(l, r));
  }
  return out;
}

/* Minimal gate count by brute force, scanning every size with no early
 * exits inside a size. */
inline std::optional<int> min_gates(const gate_library& lib, const truth_table& spec,
                                    int max_gates)
{
  for (int m = 0; m <= max_gates; ++m)
    for (const auto& f : all_formulas(lib, spec.num_vars(), m))
      if (table_by_rows(f, spec.num_vars()) == spec) return m;
  return std::nullopt;
}

/* True when no circuit with fewer gates matches. */
inline bool certify_minimal(const gate_library& lib, const truth_table& spec, int gates)
{
  for (int m = 0; m < gates; ++m)
    for (const auto& f : all_formulas(lib, spec.num_vars(), m))
      if (table_by_rows(f, spec.num_vars()) == spec) return false;
  return true;
}

} // namespace oracle
