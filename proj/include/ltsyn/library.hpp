#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ltsyn/formula.hpp"
#include "ltsyn/truth_table.hpp"

namespace ltsyn {

/* One 2-input gate available to the synthesizer.  `table` is the gate's own
 * n=2 truth table and defines its semantics; `op` is set when that table is
 * one of the named operators, in which case the gate prints infix. */
struct gate_def {
  std::string name;
  uint8_t table = 0;
  std::optional<op_kind> op;
  int transistor_cost = 4;

  formula apply(formula lhs, formula rhs) const
  {
    return op ? formula::gate(*op, std::move(lhs), std::move(rhs))
              : formula::custom_gate(name, table, std::move(lhs), std::move(rhs));
  }
};

struct gate_library {
  std::string name;
  std::vector<gate_def> gates;
  bool has_const0 = false;
  bool has_const1 = false;

  int num_constants() const { return int(has_const0) + int(has_const1); }

  /* The (<,1) pair drives the rewriting fallback path. */
  bool is_less_one() const
  {
    return gates.size() == 1 && gates[0].op == op_kind::op_less && has_const1 && !has_const0;
  }

  int min_transistor_cost() const;
  int max_transistor_cost() const;
};

enum class cost_mode : uint8_t { gate_count, transistor_count };

/* Constants and bare inputs are free under both modes. */
struct cost_model {
  cost_mode mode = cost_mode::gate_count;

  int gate_cost(const gate_def& g) const
  {
    return mode == cost_mode::gate_count ? 1 : g.transistor_cost;
  }
};

/* Builds a library from a comma-separated list of gate names and constants,
 * e.g. "less,1", "nand", "and,xor,1", "impl,eq,0".  Gate names accept both
 * word and symbol spellings.  Every 2-input gate defaults to 4 transistors;
 * constants are free. */
gate_library make_library(const std::string& spec);

/* Loads a custom library from a config file: one `name = 0bxxxx cost N` line
 * per gate (the 4-bit value is the gate's n=2 truth table) plus an optional
 * `constants = 0,1` line.  '#' starts a comment. */
gate_library load_library_file(const std::string& path);

/* `make_library` if the argument looks like a gate list, otherwise treats it
 * as a config file path. */
gate_library resolve_library(const std::string& name_or_path);

/* The fifteen classic two-input libraries compared by `compare-libs`,
 * ordered from least to most expressive. */
struct classic_library_row {
  const char* name;           // make_library spelling
  const char* display;        // symbol spelling for tables
  int reference_total;        // published total over the 16 operators
  bool reference_non_redundant;
};
const std::array<classic_library_row, 15>& classic_libraries();

} // namespace ltsyn
