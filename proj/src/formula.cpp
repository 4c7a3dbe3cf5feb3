#include "ltsyn/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace ltsyn {

formula formula::input(int index)
{
  if (index < 0) throw usage_error("negative input index");
  auto n = std::make_shared<node>();
  n->kind = node_kind::input;
  n->index = index;
  return formula(std::move(n));
}

formula formula::constant(bool value)
{
  auto n = std::make_shared<node>();
  n->kind = node_kind::constant;
  n->value = value;
  return formula(std::move(n));
}

formula formula::gate(op_kind op, formula lhs, formula rhs)
{
  auto n = std::make_shared<node>();
  n->kind = node_kind::gate;
  n->op = op;
  n->table = op_table4(op);
  n->children = {std::move(lhs), std::move(rhs)};
  return formula(std::move(n));
}

formula formula::custom_gate(std::string name, uint8_t table, formula lhs, formula rhs)
{
  auto n = std::make_shared<node>();
  n->kind = node_kind::custom;
  n->table = table & 0xF;
  n->name = std::move(name);
  n->children = {std::move(lhs), std::move(rhs)};
  return formula(std::move(n));
}

formula formula::negation(formula operand)
{
  auto n = std::make_shared<node>();
  n->kind = node_kind::negation;
  n->children = {std::move(operand)};
  return formula(std::move(n));
}

formula formula::conditional(formula cond, formula then_branch, formula else_branch)
{
  auto n = std::make_shared<node>();
  n->kind = node_kind::conditional;
  n->children = {std::move(cond), std::move(then_branch), std::move(else_branch)};
  return formula(std::move(n));
}

int formula::num_children() const
{
  return static_cast<int>(node_->children.size());
}

bool formula::equal(const formula& a, const formula& b)
{
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
  case node_kind::input: return a.input_index() == b.input_index();
  case node_kind::constant: return a.value() == b.value();
  case node_kind::gate:
    if (a.op() != b.op()) return false;
    break;
  case node_kind::custom:
    if (a.gate_table() != b.gate_table() || a.gate_name() != b.gate_name()) return false;
    break;
  case node_kind::negation:
  case node_kind::conditional:
    break;
  }
  if (a.num_children() != b.num_children()) return false;
  for (int i = 0; i < a.num_children(); ++i)
    if (!equal(a.child(i), b.child(i))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// parsing

namespace {

struct parser {
  std::string_view text;
  size_t pos = 0;
  int max_input = -1;
  bool uses_letters = false;
  bool uses_indexed = false;

  [[noreturn]] void fail(const std::string& msg) const
  {
    throw usage_error(msg + " at position " + std::to_string(pos) + " in formula");
  }

  void skip_ws()
  {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c)
  {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool eat(std::string_view tok)
  {
    skip_ws();
    if (text.substr(pos, tok.size()) == tok) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  char peek()
  {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  formula parse_expr() { return parse_impl(); }

  formula parse_impl()
  {
    formula lhs = parse_cmp();
    skip_ws();
    if (eat("=>")) return formula::gate(op_kind::op_impl, std::move(lhs), parse_impl());
    if (eat("<=")) return formula::gate(op_kind::op_cimpl, std::move(lhs), parse_impl());
    return lhs;
  }

  formula parse_cmp()
  {
    formula lhs = parse_or();
    skip_ws();
    op_kind op;
    if (pos < text.size() && text[pos] == '<' && text.substr(pos, 2) != "<=") {
      ++pos;
      op = op_kind::op_less;
    } else if (pos < text.size() && text[pos] == '>') {
      ++pos;
      op = op_kind::op_greater;
    } else if (pos < text.size() && text[pos] == '=' && text.substr(pos, 2) != "=>") {
      ++pos;
      op = op_kind::op_eq;
    } else {
      return lhs;
    }
    formula rhs = parse_or();
    skip_ws();
    if (pos < text.size() &&
        ((text[pos] == '<' && text.substr(pos, 2) != "<=") || text[pos] == '>' ||
         (text[pos] == '=' && text.substr(pos, 2) != "=>")))
      fail("chained comparison needs parentheses");
    return formula::gate(op, std::move(lhs), std::move(rhs));
  }

  formula parse_or()
  {
    formula lhs = parse_xor();
    while (eat('+')) lhs = formula::gate(op_kind::op_or, std::move(lhs), parse_xor());
    return lhs;
  }

  formula parse_xor()
  {
    formula lhs = parse_and();
    while (eat('^')) lhs = formula::gate(op_kind::op_xor, std::move(lhs), parse_and());
    return lhs;
  }

  formula parse_and()
  {
    formula lhs = parse_unary();
    while (eat('*')) lhs = formula::gate(op_kind::op_and, std::move(lhs), parse_unary());
    return lhs;
  }

  formula parse_unary()
  {
    if (eat('~')) return formula::negation(parse_unary());
    return parse_atom();
  }

  formula parse_atom()
  {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of formula");
    const char c = text[pos];

    if (c == '(') {
      ++pos;
      formula inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (c == '0' || c == '1') {
      ++pos;
      return formula::constant(c == '1');
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_identifier();
    fail(std::string("unexpected character '") + c + "'");
  }

  formula parse_identifier()
  {
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    std::string_view name = text.substr(start, pos - start);

    if (name == "nand" || name == "nor") {
      if (!eat('(')) fail("expected '(' after '" + std::string(name) + "'");
      formula a = parse_expr();
      if (!eat(',')) fail("expected ','");
      formula b = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return formula::gate(name == "nand" ? op_kind::op_nand : op_kind::op_nor,
                           std::move(a), std::move(b));
    }
    if (name == "ite") {
      if (!eat('(')) fail("expected '(' after 'ite'");
      formula c = parse_expr();
      if (!eat(',')) fail("expected ','");
      formula t = parse_expr();
      if (!eat(',')) fail("expected ','");
      formula f = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return formula::conditional(std::move(c), std::move(t), std::move(f));
    }

    if (name.size() == 1 && name[0] >= 'A' && name[0] <= 'Z') {
      uses_letters = true;
      const int index = name[0] - 'A';
      max_input = std::max(max_input, index);
      return formula::input(index);
    }
    if (name.size() >= 2 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(),
                    [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
      uses_indexed = true;
      const int index = std::stoi(std::string(name.substr(1)));
      max_input = std::max(max_input, index);
      return formula::input(index);
    }
    fail("unknown identifier '" + std::string(name) + "'");
  }
};

} // namespace

parsed_formula parse_formula(std::string_view text)
{
  parser p{text, 0, -1, false, false};
  formula expr = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  if (p.uses_letters && p.uses_indexed)
    throw usage_error("cannot mix letter inputs (A..Z) with indexed inputs (x0..xN)");

  parsed_formula result;
  result.expr = std::move(expr);
  for (int i = 0; i <= p.max_input; ++i) {
    result.inputs.push_back(p.uses_indexed ? "x" + std::to_string(i)
                                           : std::string(1, static_cast<char>('A' + i)));
  }
  return result;
}

// ---------------------------------------------------------------------------
// printing

namespace {

/* Precedence levels: 1 implication family, 2 comparisons, 3 or, 4 xor,
 * 5 and, 6 negation, 7 atoms. */
int print_level(const formula& f)
{
  switch (f.kind()) {
  case formula::node_kind::input:
  case formula::node_kind::constant:
  case formula::node_kind::conditional:
  case formula::node_kind::custom:
    return 7;
  case formula::node_kind::negation:
    return 6;
  case formula::node_kind::gate:
    switch (f.op()) {
    case op_kind::op_impl:
    case op_kind::op_cimpl: return 1;
    case op_kind::op_less:
    case op_kind::op_greater:
    case op_kind::op_eq: return 2;
    case op_kind::op_or: return 3;
    case op_kind::op_xor: return 4;
    case op_kind::op_and: return 5;
    case op_kind::op_nand:
    case op_kind::op_nor: return 7;
    }
  }
  return 7;
}

std::string input_name(int index, const std::vector<std::string>* names)
{
  if (names && index < static_cast<int>(names->size())) return (*names)[index];
  if (index < 26) return std::string(1, static_cast<char>('A' + index));
  return "x" + std::to_string(index);
}

bool is_operator_node(const formula& f)
{
  return f.kind() == formula::node_kind::gate || f.kind() == formula::node_kind::custom;
}

std::string print(const formula& f, int min_level, const std::vector<std::string>* names)
{
  std::string body;
  int level = print_level(f);

  switch (f.kind()) {
  case formula::node_kind::input:
    body = input_name(f.input_index(), names);
    break;
  case formula::node_kind::constant:
    body = f.value() ? "1" : "0";
    break;
  case formula::node_kind::negation:
    body = "~" + print(f.child(0), 6, names);
    break;
  case formula::node_kind::conditional:
    body = "ite(" + print(f.child(0), 0, names) + "," + print(f.child(1), 0, names) + "," +
           print(f.child(2), 0, names) + ")";
    break;
  case formula::node_kind::custom:
    body = f.gate_name() + "(" + print(f.left(), 0, names) + "," + print(f.right(), 0, names) + ")";
    break;
  case formula::node_kind::gate:
    switch (f.op()) {
    case op_kind::op_nand:
    case op_kind::op_nor:
      body = std::string(op_symbol(f.op())) + "(" + print(f.left(), 0, names) + "," +
             print(f.right(), 0, names) + ")";
      break;
    case op_kind::op_less: {
      // Every `<` operand that is itself an operator gets parentheses.
      std::string l = print(f.left(), 0, names);
      std::string r = print(f.right(), 0, names);
      if (is_operator_node(f.left())) l = "(" + l + ")";
      if (is_operator_node(f.right())) r = "(" + r + ")";
      body = l + "<" + r;
      break;
    }
    case op_kind::op_greater:
    case op_kind::op_eq:
      body = print(f.left(), 3, names) + op_symbol(f.op()) + print(f.right(), 3, names);
      break;
    case op_kind::op_impl:
    case op_kind::op_cimpl:
      // right-associative
      body = print(f.left(), 2, names) + op_symbol(f.op()) + print(f.right(), 1, names);
      break;
    case op_kind::op_or:
    case op_kind::op_xor:
    case op_kind::op_and:
      body = print(f.left(), level, names) + op_symbol(f.op()) +
             print(f.right(), level + 1, names);
      break;
    }
    break;
  }

  if (level < min_level) return "(" + body + ")";
  return body;
}

} // namespace

std::string to_string(const formula& f, const std::vector<std::string>* names)
{
  return print(f, 0, names);
}

// ---------------------------------------------------------------------------
// stats and evaluation

namespace {

void collect_stats(const formula& f, formula_stats_t& s, int depth_in, int& max_depth)
{
  switch (f.kind()) {
  case formula::node_kind::input: {
    const int idx = f.input_index();
    if (idx >= static_cast<int>(s.input_occurrences.size()))
      s.input_occurrences.resize(idx + 1, 0);
    s.input_occurrences[idx]++;
    max_depth = std::max(max_depth, depth_in);
    return;
  }
  case formula::node_kind::constant:
    (f.value() ? s.const_ones : s.const_zeros)++;
    max_depth = std::max(max_depth, depth_in);
    return;
  case formula::node_kind::gate:
  case formula::node_kind::custom:
    s.gates++;
    collect_stats(f.left(), s, depth_in + 1, max_depth);
    collect_stats(f.right(), s, depth_in + 1, max_depth);
    return;
  case formula::node_kind::negation:
    collect_stats(f.child(0), s, depth_in, max_depth);
    return;
  case formula::node_kind::conditional:
    for (int i = 0; i < 3; ++i) collect_stats(f.child(i), s, depth_in, max_depth);
    return;
  }
}

} // namespace

formula_stats_t formula_stats(const formula& f)
{
  formula_stats_t s;
  int max_depth = 0;
  collect_stats(f, s, 0, max_depth);
  s.depth = max_depth;
  return s;
}

truth_table table_of_formula(const formula& f, int num_vars)
{
  const uint64_t mask = table_mask(num_vars);
  switch (f.kind()) {
  case formula::node_kind::input:
    return truth_table::var(num_vars, f.input_index());
  case formula::node_kind::constant:
    return f.value() ? truth_table::ones(num_vars) : truth_table::zeros(num_vars);
  case formula::node_kind::gate:
    return apply_op(f.op(), table_of_formula(f.left(), num_vars),
                    table_of_formula(f.right(), num_vars));
  case formula::node_kind::custom:
    return apply_table4(f.gate_table(), table_of_formula(f.left(), num_vars),
                        table_of_formula(f.right(), num_vars));
  case formula::node_kind::negation:
    return complement(table_of_formula(f.child(0), num_vars));
  case formula::node_kind::conditional: {
    const uint64_t c = table_of_formula(f.child(0), num_vars).bits();
    const uint64_t t = table_of_formula(f.child(1), num_vars).bits();
    const uint64_t e = table_of_formula(f.child(2), num_vars).bits();
    return truth_table(num_vars, (c & t) | ((c ^ mask) & e));
  }
  }
  throw usage_error("unknown operator in formula");
}

} // namespace ltsyn
