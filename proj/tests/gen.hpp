#pragma once

#include <random>

#include "ltsyn/formula.hpp"

/* Deterministic random formulas over the grammar the rewriter accepts. */

namespace gen {

using namespace ltsyn;

inline formula random_formula(std::mt19937& rng, int num_inputs, int max_depth)
{
  std::uniform_int_distribution<int> pick(0, 99);
  const int roll = pick(rng);
  if (max_depth == 0 || roll < 25) {
    if (roll % 5 == 0) return formula::constant(roll % 2 == 0);
    std::uniform_int_distribution<int> var(0, num_inputs - 1);
    return formula::input(var(rng));
  }
  if (roll < 35) return formula::negation(random_formula(rng, num_inputs, max_depth - 1));
  if (roll < 40)
    return formula::conditional(random_formula(rng, num_inputs, max_depth - 1),
                                random_formula(rng, num_inputs, max_depth - 1),
                                random_formula(rng, num_inputs, max_depth - 1));
  std::uniform_int_distribution<int> op(0, num_op_kinds - 1);
  return formula::gate(static_cast<op_kind>(op(rng)),
                       random_formula(rng, num_inputs, max_depth - 1),
                       random_formula(rng, num_inputs, max_depth - 1));
}

} // namespace gen
