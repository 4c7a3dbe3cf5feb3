#pragma once

#include <cstdint>
#include <vector>

#include "ltsyn/library.hpp"

namespace ltsyn {

/* Candidate generation: binary tree shapes of a given size, leaf labelings
 * over the available constants and inputs, and gate labelings over the
 * library, visited in one fixed order:
 *
 *   for each tree shape (root split taking 0..M-1 nodes on the left,
 *                        recursing left then right)
 *     for each gate labeling (per-node choice in library order, the first
 *                             completed node cycling fastest)
 *       for each leaf labeling (lexicographic, leftmost leaf slowest,
 *                               constants before inputs)
 *
 * Truth tables are evaluated incrementally while the leaf odometer advances:
 * only the stack suffix after the changed slot is recomputed, so completed
 * subtrees are never re-walked.
 */

inline constexpr int k_max_search_gates = 32;

uint64_t catalan(int m);

/* A tree shape flattened to its postorder: ops_after[j] operator nodes
 * complete immediately after leaf slot j. */
struct tree_shape {
  int gates = 0;
  int height = 0;
  std::vector<uint8_t> ops_after;
  int leaves() const { return gates + 1; }
};

/* All catalan(gates) shapes in the order above. */
std::vector<tree_shape> enumerate_trees(int gates);

/* Visits candidate_count^leaf_count index assignments in lexicographic
 * order, leftmost slot varying slowest.  Visit returns false to stop early;
 * the function reports whether the stream ran to completion. */
template <class Visit>
bool enumerate_leaf_assignments(int leaf_count, int candidate_count, Visit&& visit)
{
  if (leaf_count < 0) throw usage_error("negative leaf count");
  if (candidate_count <= 0 && leaf_count > 0)
    throw usage_error("no candidates available for leaf assignment");
  std::vector<int> choice(leaf_count, 0);
  for (;;) {
    if (!visit(const_cast<const std::vector<int>&>(choice))) return false;
    int j = leaf_count - 1;
    while (j >= 0 && choice[j] == candidate_count - 1) {
      choice[j] = 0;
      --j;
    }
    if (j < 0) return true;
    ++choice[j];
  }
}

/* Leaf candidates for one library at a fixed arity: constants first (0 then
 * 1 when present), then the inputs in index order. */
struct leaf_pool {
  std::vector<uint64_t> tables;
  std::vector<formula> leaves;

  int size() const { return static_cast<int>(tables.size()); }

  static leaf_pool make(const gate_library& lib, int num_vars)
  {
    leaf_pool pool;
    const uint64_t mask = table_mask(num_vars);
    if (lib.has_const0) {
      pool.tables.push_back(0);
      pool.leaves.push_back(formula::constant(false));
    }
    if (lib.has_const1) {
      pool.tables.push_back(mask);
      pool.leaves.push_back(formula::constant(true));
    }
    for (int k = 0; k < num_vars; ++k) {
      pool.tables.push_back(truth_table::var(num_vars, k).bits());
      pool.leaves.push_back(formula::input(k));
    }
    return pool;
  }
};

/* Gate semantics flattened for the scan loop. */
struct gate_sem {
  bool custom = false;
  op_kind op = op_kind::op_and;
  uint8_t table = 0;

  static std::vector<gate_sem> make(const gate_library& lib)
  {
    std::vector<gate_sem> sems;
    sems.reserve(lib.gates.size());
    for (const auto& g : lib.gates)
      sems.push_back(g.op ? gate_sem{false, *g.op, g.table} : gate_sem{true, {}, g.table});
    return sems;
  }
};

inline uint64_t apply_gate_sem(const gate_sem& g, uint64_t a, uint64_t b, uint64_t mask)
{
  return g.custom ? apply_table4_bits(g.table, a, b, mask) : apply_op_bits(g.op, a, b, mask);
}

/* Scans one shape.  visit(op_choice, leaf_choice, value_bits) -> bool; a
 * false return aborts the scan and propagates false.  When op_cost_filter is
 * non-negative only gate labelings whose summed cost equals it are visited
 * (leaf labels never contribute: constants are free). */
template <class Visit>
bool scan_shape(const tree_shape& sh, const std::vector<gate_sem>& gates,
                const std::vector<uint64_t>& leaf_tables, uint64_t mask,
                int op_cost_filter, const int* gate_costs, Visit&& visit)
{
  const int M = sh.gates;
  const int L = M + 1;
  const int G = static_cast<int>(gates.size());
  const int K = static_cast<int>(leaf_tables.size());
  if (K == 0) throw usage_error("library provides no leaf candidates");
  if (M > 0 && G == 0) throw usage_error("library provides no gates");

  // Operand sources per operator node: a non-negative index names a leaf
  // slot, a negative one the operator node ~index.  op_base[j] is the first
  // operator completing after leaf slot j; a change to leaf j invalidates
  // exactly the operators from op_base[j] on.
  int operand_a[k_max_search_gates + 1];
  int operand_b[k_max_search_gates + 1];
  int op_base[k_max_search_gates + 2];
  {
    int sources[k_max_search_gates + 2];
    int depth = 0, op_count = 0;
    for (int j = 0; j < L; ++j) {
      op_base[j] = op_count;
      sources[depth++] = j;
      for (int t = 0; t < sh.ops_after[j]; ++t) {
        operand_a[op_count] = sources[depth - 2];
        operand_b[op_count] = sources[depth - 1];
        sources[depth - 2] = ~op_count;
        --depth;
        ++op_count;
      }
    }
  }

  uint8_t op_choice[k_max_search_gates + 1] = {};
  uint8_t leaf_choice[k_max_search_gates + 2];
  uint64_t op_value[k_max_search_gates + 1];
  gate_sem node_sem[k_max_search_gates + 1];

  const auto fetch = [&](int source) {
    return source >= 0 ? leaf_tables[leaf_choice[source]] : op_value[~source];
  };
  const auto eval_from = [&](int slot) {
    for (int t = op_base[slot]; t < M; ++t)
      op_value[t] = apply_gate_sem(node_sem[t], fetch(operand_a[t]), fetch(operand_b[t]), mask);
  };
  const auto root_value = [&]() {
    return M > 0 ? op_value[M - 1] : leaf_tables[leaf_choice[0]];
  };

  for (;;) {
    bool use_tuple = true;
    if (op_cost_filter >= 0) {
      int cost = 0;
      for (int i = 0; i < M; ++i) cost += gate_costs[op_choice[i]];
      use_tuple = (cost == op_cost_filter);
    }
    if (use_tuple) {
      for (int i = 0; i < M; ++i) node_sem[i] = gates[op_choice[i]];
      for (int j = 0; j < L; ++j) leaf_choice[j] = 0;
      eval_from(0);
      for (;;) {
        if (!visit(static_cast<const uint8_t*>(op_choice),
                   static_cast<const uint8_t*>(leaf_choice), root_value()))
          return false;
        int j = L - 1;
        while (j >= 0 && leaf_choice[j] == K - 1) {
          leaf_choice[j] = 0;
          --j;
        }
        if (j < 0) break;
        ++leaf_choice[j];
        eval_from(j);
      }
    }
    int i = 0;
    while (i < M && op_choice[i] == G - 1) {
      op_choice[i] = 0;
      ++i;
    }
    if (i == M) break;
    ++op_choice[i];
  }
  return true;
}

/* Rebuilds the formula for one (shape, gate labeling, leaf labeling). */
formula build_candidate(const gate_library& lib, const leaf_pool& pool, const tree_shape& sh,
                        const uint8_t* op_choice, const uint8_t* leaf_choice);

/* Closed-form stream size: catalan(M) * |gates|^M * (inputs+constants)^(M+1). */
uint64_t leaf_dag_count(const gate_library& lib, int num_vars, int gates);

struct leaf_dag_candidate {
  const gate_library* lib;
  const leaf_pool* pool;
  const tree_shape* shape;
  int shape_index;
  const uint8_t* op_choice;
  const uint8_t* leaf_choice;
  uint64_t bits;
  int num_vars;

  truth_table truth() const { return truth_table(num_vars, bits); }
  formula build_formula() const
  {
    return build_candidate(*lib, *pool, *shape, op_choice, leaf_choice);
  }
};

/* The full candidate stream at one size.  visit returns false to stop. */
template <class Visit>
bool enumerate_leaf_dags(const gate_library& lib, int num_vars, int gates, Visit&& visit)
{
  if (gates < 1 || gates > k_max_search_gates)
    throw usage_error("gate count must be between 1 and " + std::to_string(k_max_search_gates));
  const uint64_t mask = table_mask(num_vars); // capacity check
  const leaf_pool pool = leaf_pool::make(lib, num_vars);
  const std::vector<gate_sem> sems = gate_sem::make(lib);
  const std::vector<tree_shape> shapes = enumerate_trees(gates);
  for (size_t s = 0; s < shapes.size(); ++s) {
    const bool keep = scan_shape(
        shapes[s], sems, pool.tables, mask, -1, nullptr,
        [&](const uint8_t* ops, const uint8_t* leaves, uint64_t bits) {
          leaf_dag_candidate cand{&lib,  &pool, &shapes[s], static_cast<int>(s),
                                  ops,   leaves, bits,      num_vars};
          return visit(cand);
        });
    if (!keep) return false;
  }
  return true;
}

} // namespace ltsyn
