#include "ltsyn/rewriter.hpp"

#include <cassert>

namespace ltsyn {

namespace {

using kind = formula::node_kind;

formula less(formula a, formula b)
{
  return formula::gate(op_kind::op_less, std::move(a), std::move(b));
}

formula one() { return formula::constant(true); }

bool is_less(const formula& f)
{
  return f.kind() == kind::gate && f.op() == op_kind::op_less;
}

/* One local pass; children are already simplified. */
formula simplify_top(const formula& f, std::vector<rewrite_step>* steps)
{
  if (!is_less(f)) return f;
  const formula& a = f.left();
  const formula& b = f.right();

  const char* rule = nullptr;
  formula result = f;
  if (a == b) {
    rule = "identical-operands";
    result = formula::constant(false);
  } else if (b.is_constant(false)) {
    rule = "right-zero";
    result = formula::constant(false);
  } else if (a.is_constant(true)) {
    rule = "left-one";
    result = formula::constant(false);
  } else if (a.is_constant(false)) {
    rule = "left-zero";
    result = b;
  } else if (b.is_constant(true) && is_less(a) && a.right().is_constant(true)) {
    rule = "double-negation";
    result = a.left();
  }
  if (rule && steps) steps->push_back({rule, f, result});
  return result;
}

formula simplify_rec(const formula& f, std::vector<rewrite_step>* steps)
{
  if (!is_less(f)) return f;
  formula rebuilt = less(simplify_rec(f.left(), steps), simplify_rec(f.right(), steps));
  // Rule results are leaves or already-simplified subtrees, so one
  // application per node reaches the fixpoint.
  return simplify_top(rebuilt, steps);
}

} // namespace

formula simplify(const formula& f, std::vector<rewrite_step>* steps)
{
  return simplify_rec(f, steps);
}

formula simplify(const formula& f)
{
  return simplify_rec(f, nullptr);
}

namespace {

struct rewriter {
  std::vector<rewrite_step>* steps;

  formula record(const char* rule, const formula& before, formula after)
  {
    if (steps) steps->push_back({rule, before, after});
    return simplify(after, steps);
  }

  formula negate(formula a) { return less(std::move(a), one()); }

  formula rw(const formula& f)
  {
    switch (f.kind()) {
    case kind::input:
    case kind::constant:
      return f;
    case kind::negation:
      return record("not", f, negate(rw(f.child(0))));
    case kind::conditional: {
      // ite(C,T,F) -> (C => T) * (~C => F), rewritten and simplified.
      formula c = rw(f.child(0));
      formula t = rw(f.child(1));
      formula e = rw(f.child(2));
      formula then_part = negate(less(t, c));                 // C => T
      formula else_part = negate(less(e, negate(c)));         // ~C => F
      return record("ite", f, less(negate(then_part), else_part));
    }
    case kind::custom:
      throw usage_error("cannot rewrite custom gate '" + f.gate_name() + "'");
    case kind::gate:
      break;
    }

    formula a = rw(f.left());
    formula b = rw(f.right());
    switch (f.op()) {
    case op_kind::op_less:
      return record("less", f, less(a, b));
    case op_kind::op_greater:
      return record("greater", f, less(b, a));
    case op_kind::op_cimpl:
      return record("converse-implication", f, negate(less(a, b)));
    case op_kind::op_and:
      return record("and", f, less(negate(a), b));
    case op_kind::op_nor:
      return record("nor", f, less(a, negate(b)));
    case op_kind::op_or:
      return record("or", f, negate(less(a, negate(b))));
    case op_kind::op_impl:
      return record("implication", f, negate(less(b, a)));
    case op_kind::op_xor:
      // (A<B) + (B<A), with the disjunction folded through the `+` rule.
      return record("xor", f, negate(less(less(a, b), negate(less(b, a)))));
    case op_kind::op_eq:
      // nor(A<B, B<A)
      return record("equivalence", f, less(less(a, b), negate(less(b, a))));
    case op_kind::op_nand:
      return record("nand", f, negate(less(negate(a), b)));
    }
    throw usage_error("unsupported operator in rewriter");
  }
};

} // namespace

rewrite_trace to_less_form(const formula& f)
{
  rewrite_trace trace;
  trace.input = f;
  rewriter r{&trace.steps};
  trace.output = r.rw(f);
  return trace;
}

formula disjunction_chain(const std::vector<formula>& items)
{
  if (items.empty()) throw usage_error("empty disjunction");
  formula chain = less(items.back(), one());
  for (auto it = std::next(items.rbegin()); it != items.rend(); ++it)
    chain = less(*it, chain);
  return less(chain, one());
}

formula conjunction_chain(const std::vector<formula>& items)
{
  if (items.empty()) throw usage_error("empty conjunction");
  formula chain = items.back();
  for (auto it = std::next(items.rbegin()); it != items.rend(); ++it)
    chain = less(less(*it, one()), chain);
  return chain;
}

namespace {

formula literal_formula(const literal& l)
{
  formula v = formula::input(l.input);
  return l.negated ? less(std::move(v), one()) : v;
}

std::vector<formula> literal_formulas(const std::vector<literal>& ls)
{
  std::vector<formula> fs;
  fs.reserve(ls.size());
  for (const auto& l : ls) fs.push_back(literal_formula(l));
  return fs;
}

} // namespace

formula encode_dnf(const std::vector<std::vector<literal>>& terms)
{
  if (terms.empty()) throw usage_error("empty clause list");
  std::vector<formula> products;
  products.reserve(terms.size());
  for (const auto& term : terms)
    products.push_back(simplify(conjunction_chain(literal_formulas(term))));
  return simplify(disjunction_chain(products));
}

formula encode_cnf(const std::vector<std::vector<literal>>& clauses)
{
  if (clauses.empty()) throw usage_error("empty clause list");
  std::vector<formula> sums;
  sums.reserve(clauses.size());
  for (const auto& clause : clauses)
    sums.push_back(simplify(disjunction_chain(literal_formulas(clause))));
  return simplify(conjunction_chain(sums));
}

formula as_less_circuit(const formula& less_form)
{
  if (less_form.is_constant(false)) return less(one(), one());
  return less_form;
}

int gate_upper_bound(const formula& f)
{
  return formula_stats(as_less_circuit(to_less_form(f).output)).gates;
}

} // namespace ltsyn
