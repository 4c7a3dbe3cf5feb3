#pragma once

#include <string>
#include <vector>

#include "ltsyn/formula.hpp"

namespace ltsyn {

/* Heuristic translation into circuits over `<` and the constant 1, with a
 * tautology-based simplifier interleaved after every step.  Used both as a
 * standalone minimizer and to bound / back up the exact search. */

struct rewrite_step {
  std::string rule;
  formula before;
  formula after;
};

struct rewrite_trace {
  formula input;
  formula output; // only `<`, inputs and constant 1; constant 0 only as the whole result
  std::vector<rewrite_step> steps;
};

/* Recursively rewrites a formula over {0, 1, <, >, ~, <=, *, nor, nand, +,
 * =>, ^, =, ite} into `<`-only form, simplifying after each step. */
rewrite_trace to_less_form(const formula& f);

/* Fixpoint of the local rule set
 *   X<X -> 0,  X<0 -> 0,  0<X -> X,  1<X -> 0,  (X<1)<1 -> X
 * over `<`-only formulas.  Never grows the gate count; idempotent. */
formula simplify(const formula& f);
formula simplify(const formula& f, std::vector<rewrite_step>* steps);

struct literal {
  int input = 0;
  bool negated = false;
};

/* Raw chain encodings: a disjunction of N items costs N+1 gates and two
 * constant-1 leaves, (I1 < (I2 < ... (IN < 1)...)) < 1; a conjunction costs
 * 2N-2 gates and N-1 constant-1 leaves, (I1<1) < ((I2<1) < ... < IN).
 * Single-item chains degenerate to (I<1)<1 and I respectively. */
formula disjunction_chain(const std::vector<formula>& items);
formula conjunction_chain(const std::vector<formula>& items);

/* Sum-of-products / product-of-sums encodings built by nesting the two
 * chains, then simplifying.  Negated literals enter as (x<1). */
formula encode_dnf(const std::vector<std::vector<literal>>& terms);
formula encode_cnf(const std::vector<std::vector<literal>>& clauses);

/* Gate count of the rewritten form once made library-expressible (constant
 * false becomes the one-gate circuit 1<1); an upper bound on the exact
 * minimum under (<,1). */
int gate_upper_bound(const formula& f);

/* Maps a rewritten formula onto a (<,1) circuit: constant 0, which the
 * library lacks, becomes 1<1; everything else is already expressible. */
formula as_less_circuit(const formula& less_form);

} // namespace ltsyn
