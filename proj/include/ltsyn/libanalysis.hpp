#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ltsyn/synthesizer.hpp"

namespace ltsyn {

/* Library studies built on the exact synthesizer: minimal gate counts for
 * all sixteen 2-input operators, redundancy of library members, and the
 * transistor comparison between (<,1) and nand-only circuits. */

/* Display name of a 2-input function given as its 4-bit table. */
const char* two_input_function_name(uint8_t table);

/* Bitset over the sixteen 4-bit tables reachable by composing library gates
 * over two inputs and the library constants; decides universality exactly. */
uint16_t reachable_closure(const gate_library& lib);

struct operator_result {
  uint8_t table = 0;
  bool reachable = false;
  int gates = 0;
  std::string expr;
};

struct expressiveness_report {
  std::string library;
  std::array<operator_result, 16> ops;
  std::optional<int> total; // unset when some operator is unreachable
  std::vector<uint8_t> unreachable;
  bool non_redundant = false;
  std::optional<int> reference_total; // published value, for the classic rows
  std::optional<bool> reference_non_redundant;

  bool matches_reference() const
  {
    return !reference_total || (total && *total == *reference_total);
  }
};

struct analysis_options {
  int max_gates = 10;
  int threads = 1;
  /* Re-scan every size below each reported count and require no match. */
  bool verify_minimal = false;
};

/* Gate-count convention: only operator nodes count; constants and bare
 * inputs are free.  Operators the closure proves unreachable are reported
 * as such and leave the total undefined. */
expressiveness_report expressiveness(const gate_library& lib, const analysis_options& opt = {});

/* A library is non-redundant when no member (gate or constant) can be
 * synthesized from the remaining members within `bound` gates. */
bool non_redundant(const gate_library& lib, int bound = 7);

struct cost_row_spec {
  std::string name;
  std::vector<std::string> formulas; // multi-output rows sum their parts
  std::string note;
};

struct cost_row {
  std::string name;
  std::string note;
  int less_gates = 0;
  int less_transistors = 0;
  int nand_gates = 0;
  int nand_transistors = 0;
};

struct transistor_report {
  std::vector<cost_row> rows;
};

/* The standard comparison set: equality, xor, conjunctions, disjunctions,
 * the conditional, an implication chain, single gates, and the 2x2
 * half-adder summed over its two outputs (no cross-output sharing). */
const std::vector<cost_row_spec>& default_cost_rows();

/* Minimal Leaf-DAG gate counts under (<,1) and nand-only, priced at 4
 * transistors per gate with free constants. */
transistor_report transistor_table(const std::vector<cost_row_spec>& rows, int threads = 1);
transistor_report transistor_table(int threads = 1);

} // namespace ltsyn
