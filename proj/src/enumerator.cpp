#include "ltsyn/enumerator.hpp"

namespace ltsyn {

uint64_t catalan(int m)
{
  if (m < 0 || m > 33) throw usage_error("catalan argument out of range");
  // Convolution recurrence; exact in 64 bits through m = 33.
  std::vector<uint64_t> c(m + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= m; ++i)
    for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  return c[m];
}

std::vector<tree_shape> enumerate_trees(int gates)
{
  if (gates < 0 || gates > k_max_search_gates)
    throw usage_error("gate count must be between 0 and " + std::to_string(k_max_search_gates));

  // memo[m] holds postorder token strings (0 = leaf, 1 = operator) for all
  // trees with m operator nodes, in root-split order.
  std::vector<std::vector<std::vector<uint8_t>>> memo(gates + 1);
  memo[0] = {{0}};
  for (int m = 1; m <= gates; ++m) {
    for (int left = 0; left < m; ++left) {
      for (const auto& l : memo[left]) {
        for (const auto& r : memo[m - 1 - left]) {
          std::vector<uint8_t> tokens = l;
          tokens.insert(tokens.end(), r.begin(), r.end());
          tokens.push_back(1);
          memo[m].push_back(std::move(tokens));
        }
      }
    }
  }

  std::vector<tree_shape> shapes;
  shapes.reserve(memo[gates].size());
  for (const auto& tokens : memo[gates]) {
    tree_shape sh;
    sh.gates = gates;
    int heights[k_max_search_gates + 2];
    int depth = 0;
    for (uint8_t tok : tokens) {
      if (tok == 0) {
        sh.ops_after.push_back(0);
        heights[depth++] = 0;
      } else {
        sh.ops_after.back()++;
        heights[depth - 2] = std::max(heights[depth - 2], heights[depth - 1]) + 1;
        --depth;
      }
    }
    sh.height = heights[0];
    shapes.push_back(std::move(sh));
  }
  return shapes;
}

formula build_candidate(const gate_library& lib, const leaf_pool& pool, const tree_shape& sh,
                        const uint8_t* op_choice, const uint8_t* leaf_choice)
{
  std::vector<formula> stack;
  stack.reserve(sh.leaves() + 1);
  int op_index = 0;
  for (int s = 0; s < sh.leaves(); ++s) {
    stack.push_back(pool.leaves[leaf_choice[s]]);
    for (int t = 0; t < sh.ops_after[s]; ++t) {
      formula rhs = std::move(stack.back());
      stack.pop_back();
      formula lhs = std::move(stack.back());
      stack.pop_back();
      stack.push_back(lib.gates[op_choice[op_index++]].apply(std::move(lhs), std::move(rhs)));
    }
  }
  return stack.back();
}

uint64_t leaf_dag_count(const gate_library& lib, int num_vars, int gates)
{
  uint64_t count = catalan(gates);
  for (int i = 0; i < gates; ++i) count *= lib.gates.size();
  const uint64_t k = lib.num_constants() + num_vars;
  for (int i = 0; i < gates + 1; ++i) count *= k;
  return count;
}

} // namespace ltsyn
