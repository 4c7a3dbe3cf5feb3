#include "ltsyn/synthesizer.hpp"

#include <atomic>
#include <cassert>
#include <climits>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ltsyn/rewriter.hpp"

namespace ltsyn {

namespace {

constexpr int k_poll_interval = 8192; // candidates between deadline polls

struct shape_match {
  int shape = INT_MAX;
  std::vector<uint8_t> ops;
  std::vector<uint8_t> leaves;
};

struct searcher {
  const gate_library& lib;
  int num_vars;
  uint64_t spec_bits;
  uint64_t mask;
  leaf_pool pool;
  std::vector<gate_sem> sems;
  std::vector<int> gate_costs;
  std::optional<int> max_depth;
  bool has_deadline = false;
  std::chrono::steady_clock::time_point deadline;
  std::atomic<bool> timed_out{false};

  searcher(const truth_table& spec, const gate_library& library, const cost_model& cost)
    : lib(library),
      num_vars(spec.num_vars()),
      spec_bits(spec.bits()),
      mask(spec.mask()),
      pool(leaf_pool::make(library, spec.num_vars())),
      sems(gate_sem::make(library))
  {
    for (const auto& g : lib.gates) gate_costs.push_back(cost.gate_cost(g));
  }

  bool skip_shape(const tree_shape& sh) const
  {
    return max_depth && sh.height > *max_depth;
  }

  bool deadline_passed()
  {
    if (timed_out.load(std::memory_order_relaxed)) return true;
    if (has_deadline && std::chrono::steady_clock::now() >= deadline) {
      timed_out.store(true, std::memory_order_relaxed);
      return true;
    }
    return false;
  }

  /* First match in one shape, in canonical order.  `cutoff` aborts the scan
   * once another worker owns a smaller shape index. */
  bool scan_one(const tree_shape& sh, int shape_index, int cost_filter,
                const std::atomic<int>* cutoff, shape_match& out)
  {
    int poll = 0;
    bool found = false;
    scan_shape(sh, sems, pool.tables, mask, cost_filter, gate_costs.data(),
               [&](const uint8_t* ops, const uint8_t* leaves, uint64_t bits) {
                 if (bits == spec_bits) {
                   out.shape = shape_index;
                   out.ops.assign(ops, ops + sh.gates);
                   out.leaves.assign(leaves, leaves + sh.leaves());
                   found = true;
                   return false;
                 }
                 if (++poll >= k_poll_interval) {
                   poll = 0;
                   if (deadline_passed()) return false;
                   if (cutoff && cutoff->load(std::memory_order_relaxed) < shape_index)
                     return false;
                 }
                 return true;
               });
    return found;
  }

  /* Serial reference scan: shapes in ascending index order, stop at the
   * first match. */
  bool search_level_serial(const std::vector<tree_shape>& shapes, int cost_filter,
                           shape_match& out)
  {
    for (size_t s = 0; s < shapes.size(); ++s) {
      if (skip_shape(shapes[s])) continue;
      if (scan_one(shapes[s], static_cast<int>(s), cost_filter, nullptr, out)) return true;
      if (timed_out.load(std::memory_order_relaxed)) return false;
    }
    return false;
  }

#ifdef _OPENMP
  /* OpenMP scan partitioned by shape index.  Every worker records only
   * matches that improve the shared best shape index, so the merged winner
   * equals the serial one. */
  bool search_level_parallel(const std::vector<tree_shape>& shapes, int cost_filter,
                             int threads, shape_match& out)
  {
    std::atomic<int> best_shape{INT_MAX};
    std::mutex best_mutex;
    const int count = static_cast<int>(shapes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int s = 0; s < count; ++s) {
      if (timed_out.load(std::memory_order_relaxed)) continue;
      if (s > best_shape.load(std::memory_order_relaxed)) continue;
      if (skip_shape(shapes[s])) continue;
      shape_match local;
      if (scan_one(shapes[s], s, cost_filter, &best_shape, local)) {
        std::lock_guard<std::mutex> guard(best_mutex);
        if (local.shape < best_shape.load(std::memory_order_relaxed)) {
          best_shape.store(local.shape, std::memory_order_relaxed);
          out = std::move(local);
        }
      }
    }
    return !timed_out.load(std::memory_order_relaxed) && best_shape.load() != INT_MAX;
  }
#endif

  bool search_level(const std::vector<tree_shape>& shapes, int cost_filter, int threads,
                    shape_match& out)
  {
#ifdef _OPENMP
    if (threads > 1) return search_level_parallel(shapes, cost_filter, threads, out);
#else
    (void)threads;
#endif
    return search_level_serial(shapes, cost_filter, out);
  }
};

circuit make_leaf_circuit(formula expr, const truth_table& spec)
{
  return circuit{std::move(expr), spec, 0, 0, 0, true};
}

circuit fallback_or_throw(const synth_request& req)
{
  if (req.source && req.library.is_less_one()) {
    const formula expr = as_less_circuit(to_less_form(*req.source).output);
    const truth_table truth = table_of_formula(expr, req.spec.num_vars());
    assert(truth == req.spec);
    const formula_stats_t stats = formula_stats(expr);
    const int unit = req.cost.gate_cost(req.library.gates[0]);
    return circuit{expr, truth, stats.gates, stats.gates * unit, stats.depth, false};
  }
  throw timeout_error("search timed out with no rewriting fallback available");
}

} // namespace

circuit synthesize(const synth_request& req)
{
  if (req.max_gates < 1) throw usage_error("max_gates must be at least 1");
  if (req.max_gates > k_max_search_gates)
    throw usage_error("max_gates larger than " + std::to_string(k_max_search_gates));
  if (req.threads < 1) throw usage_error("threads must be at least 1");
  const int n = req.spec.num_vars();
  (void)table_mask(n);

  // 0-gate circuits: constants available in the library, then bare inputs.
  if (req.library.has_const0 && req.spec == truth_table::zeros(n))
    return make_leaf_circuit(formula::constant(false), req.spec);
  if (req.library.has_const1 && req.spec == truth_table::ones(n))
    return make_leaf_circuit(formula::constant(true), req.spec);
  for (int k = 0; k < n; ++k)
    if (req.spec == truth_table::var(n, k))
      return make_leaf_circuit(formula::input(k), req.spec);

  if (req.library.gates.empty())
    throw not_found_error("specification is not a library constant or input, and the library has no gates");

  searcher s(req.spec, req.library, req.cost);
  s.max_depth = req.max_depth;
  if (req.timeout) {
    s.has_deadline = true;
    s.deadline = std::chrono::steady_clock::now() + *req.timeout;
  }

  const auto finish = [&](const shape_match& m, const std::vector<tree_shape>& shapes,
                          int total_cost) {
    const tree_shape& sh = shapes[m.shape];
    formula expr = build_candidate(req.library, s.pool, sh, m.ops.data(), m.leaves.data());
    const truth_table truth = table_of_formula(expr, n);
    assert(truth == req.spec);
    return circuit{std::move(expr), truth, sh.gates, total_cost, sh.height, true};
  };

  bool uniform = true;
  for (int c : s.gate_costs) uniform = uniform && c == s.gate_costs[0];

  if (uniform) {
    const int unit = s.gate_costs[0];
    for (int m = 1; m <= req.max_gates; ++m) {
      const std::vector<tree_shape> shapes = enumerate_trees(m);
      shape_match match;
      if (s.search_level(shapes, -1, req.threads, match)) return finish(match, shapes, m * unit);
      if (s.timed_out.load()) return fallback_or_throw(req);
    }
  } else {
    // Budget-deepening for mixed per-gate costs: dp[m][c] marks the gate
    // counts m that can realize total cost c exactly.
    const int max_cost = req.library.max_transistor_cost() * req.max_gates;
    std::vector<std::vector<bool>> feasible(req.max_gates + 1,
                                            std::vector<bool>(max_cost + 1, false));
    feasible[0][0] = true;
    for (int m = 1; m <= req.max_gates; ++m)
      for (int c = 0; c <= max_cost; ++c)
        for (int gc : s.gate_costs)
          if (c >= gc && feasible[m - 1][c - gc]) {
            feasible[m][c] = true;
            break;
          }

    std::vector<std::vector<tree_shape>> shape_cache(req.max_gates + 1);
    for (int budget = 0; budget <= max_cost; ++budget) {
      for (int m = 1; m <= req.max_gates; ++m) {
        if (!feasible[m][budget]) continue;
        if (shape_cache[m].empty()) shape_cache[m] = enumerate_trees(m);
        shape_match match;
        if (s.search_level(shape_cache[m], budget, req.threads, match))
          return finish(match, shape_cache[m], budget);
        if (s.timed_out.load()) return fallback_or_throw(req);
      }
    }
  }

  throw not_found_error("no matching circuit within " + std::to_string(req.max_gates) +
                        " gates under library '" + req.library.name + "'");
}

circuit synthesize_parsed(const parsed_formula& input, const gate_library& lib,
                          const synth_options& opt)
{
  const int n = input.num_inputs();
  if (n > max_table_vars)
    throw capacity_error("formula uses " + std::to_string(n) +
                         " inputs; exhaustive search supports at most 6");

  synth_request req;
  req.spec = table_of_formula(input.expr, n);
  req.library = lib;
  req.cost = opt.cost;
  req.max_gates = opt.max_gates;
  req.max_depth = opt.max_depth;
  req.timeout = opt.timeout;
  req.threads = opt.threads;

  if (lib.is_less_one()) {
    req.source = input.expr;
    if (!opt.max_depth) {
      // The rewritten size bounds the exact minimum, so the search never
      // needs to look past it.
      const int bound = std::max(1, gate_upper_bound(input.expr));
      req.max_gates = std::min(req.max_gates, bound);
    }
  }
  return synthesize(req);
}

circuit synthesize_formula(const std::string& text, const gate_library& lib,
                           const synth_options& opt)
{
  return synthesize_parsed(parse_formula(text), lib, opt);
}

} // namespace ltsyn
