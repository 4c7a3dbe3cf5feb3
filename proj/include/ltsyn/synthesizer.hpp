#pragma once

#include <chrono>
#include <optional>

#include "ltsyn/enumerator.hpp"
#include "ltsyn/library.hpp"

namespace ltsyn {

/* Exact search: scan Leaf-DAG candidates in increasing cost order and return
 * the first one matching the specification.  With uniform per-gate costs the
 * driver deepens on gate count; with mixed costs it deepens on total cost,
 * visiting gate counts in ascending order inside each budget.
 *
 * The scan over tree shapes runs either on the serial reference path or on
 * the OpenMP path; both return the identical circuit because parallel
 * results merge on the sequential key (shape index, first match in shape).
 */

struct synth_request {
  truth_table spec;
  gate_library library;
  cost_model cost;
  int max_gates = 10;
  std::optional<int> max_depth;
  std::optional<std::chrono::steady_clock::duration> timeout;
  std::optional<formula> source; // enables the rewriting fallback under (<,1)
  int threads = 1;
};

struct circuit {
  formula expr;
  truth_table truth;
  int gates = 0;
  int cost = 0;
  int depth = 0;
  bool exact = true; // false when the result came from the rewriting fallback
};

/* Throws not_found_error when max_gates is exhausted, timeout_error when the
 * deadline passes and no fallback applies, capacity_error beyond 6 inputs. */
circuit synthesize(const synth_request& req);

struct synth_options {
  cost_model cost;
  int max_gates = 10;
  std::optional<int> max_depth;
  std::optional<std::chrono::steady_clock::duration> timeout;
  int threads = 1;
};

/* Computes the specification from a formula; under (<,1) the rewriter runs
 * first, tightening the gate bound (unless a depth bound is set) and arming
 * the timeout fallback. */
circuit synthesize_parsed(const parsed_formula& input, const gate_library& lib,
                          const synth_options& opt = {});
circuit synthesize_formula(const std::string& text, const gate_library& lib,
                           const synth_options& opt = {});

} // namespace ltsyn
