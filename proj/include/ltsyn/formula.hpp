#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ltsyn/truth_table.hpp"

namespace ltsyn {

/* Immutable expression tree over named inputs, the constants 0/1 and binary
 * operators.  Negation and the 3-input conditional are accepted by the
 * grammar and kept as explicit nodes; rewriting expands them before any
 * costing, so synthesized circuits only ever contain binary gate nodes.
 *
 * Values share subtrees; copying a formula is cheap.
 */
class formula {
public:
  enum class node_kind : uint8_t { input, constant, gate, custom, negation, conditional };

  formula() : formula(constant(false)) {}

  static formula input(int index);
  static formula constant(bool value);
  static formula gate(op_kind op, formula lhs, formula rhs);
  static formula custom_gate(std::string name, uint8_t table, formula lhs, formula rhs);
  static formula negation(formula operand);
  static formula conditional(formula cond, formula then_branch, formula else_branch);

  node_kind kind() const { return node_->kind; }
  op_kind op() const { return node_->op; }
  int input_index() const { return node_->index; }
  bool value() const { return node_->value; }
  uint8_t gate_table() const { return node_->table; }
  const std::string& gate_name() const { return node_->name; }

  const formula& child(int i) const { return node_->children[i]; }
  const formula& left() const { return node_->children[0]; }
  const formula& right() const { return node_->children[1]; }

  int num_children() const;

  bool is_constant(bool v) const { return kind() == node_kind::constant && value() == v; }

  /* Structural equality; input display names do not participate. */
  friend bool operator==(const formula& a, const formula& b) { return equal(a, b); }
  friend bool operator!=(const formula& a, const formula& b) { return !equal(a, b); }

private:
  struct node {
    node_kind kind;
    op_kind op = op_kind::op_and;
    uint8_t table = 0;
    int index = 0;
    bool value = false;
    std::string name;
    std::vector<formula> children;
  };

  explicit formula(std::shared_ptr<const node> n) : node_(std::move(n)) {}
  static bool equal(const formula& a, const formula& b);

  std::shared_ptr<const node> node_;
};

struct parsed_formula {
  formula expr;
  std::vector<std::string> inputs; // display name per input index
  int num_inputs() const { return static_cast<int>(inputs.size()); }
};

/* Grammar (loosest to tightest): `=>` `<=` right-associative, then the
 * non-associative comparisons `<` `>` `=` (chains need parentheses), then
 * `+`, `^`, `*` left-associative, then prefix `~`; `nand(x,y)`, `nor(x,y)`,
 * `ite(c,t,f)` and parentheses are atoms.  Inputs are positional: the
 * letter names A..Z always denote inputs 0..25 and xK denotes input K, so
 * the same text always means the same function and printing then reparsing
 * is the identity.  A formula that mentions B but not A is still a function
 * of both (constant in A); letter and xK styles cannot be mixed.
 */
parsed_formula parse_formula(std::string_view text);

/* Minimal parentheses, except that every `<` operand that is itself an
 * operator application is parenthesized.  `names`, when given, supplies the
 * display name per input index; defaults are A..Z then x26, x27, ...
 */
std::string to_string(const formula& f, const std::vector<std::string>* names = nullptr);

struct formula_stats_t {
  int gates = 0;  // binary operator applications; ~ and ite do not count
  int depth = 0;  // longest leaf-to-root chain of counted gate nodes
  int const_zeros = 0;
  int const_ones = 0;
  std::vector<int> input_occurrences; // indexed by input
};

formula_stats_t formula_stats(const formula& f);

/* Bottom-up evaluation over num_vars inputs; equivalent to evaluating every
 * input row separately.  Negation and conditionals evaluate natively. */
truth_table table_of_formula(const formula& f, int num_vars);

} // namespace ltsyn
