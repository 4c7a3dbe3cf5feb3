#include "ltsyn/truth_table.hpp"

#include <array>
#include <charconv>

namespace ltsyn {

uint64_t table_mask(int num_vars)
{
  if (num_vars < 0 || num_vars > max_table_vars)
    throw capacity_error("variable count " + std::to_string(num_vars) +
                         " outside the supported range [0, 6]");
  return table_mask_unchecked(num_vars);
}

truth_table::truth_table(int num_vars, uint64_t bits)
  : num_vars_(num_vars), bits_(bits)
{
  const uint64_t m = table_mask(num_vars);
  if (bits & ~m)
    throw usage_error("truth table value has bits above row 2^" + std::to_string(num_vars));
}

truth_table truth_table::zeros(int num_vars)
{
  return truth_table(num_vars, 0);
}

truth_table truth_table::ones(int num_vars)
{
  return truth_table(num_vars, table_mask(num_vars));
}

truth_table truth_table::var(int num_vars, int k)
{
  const uint64_t m = table_mask(num_vars);
  if (k < 0 || k >= num_vars)
    throw usage_error("variable index " + std::to_string(k) + " out of range for " +
                      std::to_string(num_vars) + " inputs");
  const uint64_t d = (uint64_t{1} << (uint64_t{1} << (num_vars - k - 1))) + 1;
  return truth_table(num_vars, m / d);
}

uint64_t apply_op_bits(op_kind op, uint64_t a, uint64_t b, uint64_t mask)
{
  switch (op) {
  case op_kind::op_and: return a & b;
  case op_kind::op_or: return a | b;
  case op_kind::op_xor: return a ^ b;
  case op_kind::op_less: return a ^ (a | b);      // ~a & b, stays masked
  case op_kind::op_greater: return a ^ (a & b);   // a & ~b
  case op_kind::op_eq: return mask ^ (a ^ b);
  case op_kind::op_impl: return (a ^ mask) | b;
  case op_kind::op_cimpl: return (b ^ mask) | a;
  case op_kind::op_nand: return mask ^ (a & b);
  case op_kind::op_nor: return mask ^ (a | b);
  }
  throw usage_error("unknown operator");
}

uint64_t apply_table4_bits(uint8_t table, uint64_t a, uint64_t b, uint64_t mask)
{
  // Gate table bit 3-(2*va+vb) selects the output for argument values (va, vb).
  uint64_t r = 0;
  if (table & 0x1) r |= a & b;
  if (table & 0x2) r |= a & (b ^ mask);
  if (table & 0x4) r |= (a ^ mask) & b;
  if (table & 0x8) r |= (a ^ mask) & (b ^ mask);
  return r;
}

namespace {

void require_same_arity(const truth_table& a, const truth_table& b)
{
  if (a.num_vars() != b.num_vars())
    throw usage_error("truth tables have different variable counts (" +
                      std::to_string(a.num_vars()) + " vs " + std::to_string(b.num_vars()) + ")");
}

} // namespace

truth_table apply_op(op_kind op, const truth_table& a, const truth_table& b)
{
  require_same_arity(a, b);
  return truth_table(a.num_vars(), apply_op_bits(op, a.bits(), b.bits(), a.mask()));
}

truth_table apply_table4(uint8_t table, const truth_table& a, const truth_table& b)
{
  require_same_arity(a, b);
  return truth_table(a.num_vars(), apply_table4_bits(table, a.bits(), b.bits(), a.mask()));
}

truth_table complement(const truth_table& a)
{
  return truth_table(a.num_vars(), a.bits() ^ a.mask());
}

namespace {

struct op_info {
  op_kind op;
  uint8_t table;
  const char* name;
  const char* symbol;
};

constexpr std::array<op_info, num_op_kinds> k_ops = {{
  {op_kind::op_and, 0x1, "and", "*"},
  {op_kind::op_or, 0x7, "or", "+"},
  {op_kind::op_xor, 0x6, "xor", "^"},
  {op_kind::op_less, 0x4, "less", "<"},
  {op_kind::op_greater, 0x2, "greater", ">"},
  {op_kind::op_eq, 0x9, "eq", "="},
  {op_kind::op_impl, 0xD, "impl", "=>"},
  {op_kind::op_cimpl, 0xB, "cimpl", "<="},
  {op_kind::op_nand, 0xE, "nand", "nand"},
  {op_kind::op_nor, 0x8, "nor", "nor"},
}};

} // namespace

uint8_t op_table4(op_kind op) { return k_ops[static_cast<size_t>(op)].table; }
const char* op_name(op_kind op) { return k_ops[static_cast<size_t>(op)].name; }
const char* op_symbol(op_kind op) { return k_ops[static_cast<size_t>(op)].symbol; }

std::optional<op_kind> op_from_name(std::string_view token)
{
  for (const auto& info : k_ops)
    if (token == info.name || token == info.symbol)
      return info.op;
  return std::nullopt;
}

std::string to_string(const truth_table& t)
{
  static const char* digits = "0123456789ABCDEF";
  const int hex_digits = std::max(1, (1 << t.num_vars()) / 4);
  std::string hex;
  for (int i = hex_digits - 1; i >= 0; --i)
    hex += digits[(t.bits() >> (4 * i)) & 0xF];
  return "n=" + std::to_string(t.num_vars()) + ":0x" + hex;
}

std::string to_binary_string(const truth_table& t)
{
  const int rows = 1 << t.num_vars();
  std::string s = "0b";
  for (int r = rows - 1; r >= 0; --r)
    s += t.get(r) ? '1' : '0';
  return s;
}

namespace {

int vars_for_row_count(size_t rows)
{
  for (int n = 0; n <= max_table_vars; ++n)
    if ((size_t{1} << n) == rows) return n;
  throw usage_error("binary table length must be a power of two up to 64 rows");
}

uint64_t parse_binary_rows(std::string_view digits)
{
  uint64_t bits = 0;
  for (char c : digits) {
    if (c != '0' && c != '1')
      throw usage_error(std::string("invalid binary digit '") + c + "' in truth table");
    bits = (bits << 1) | uint64_t(c == '1');
  }
  return bits;
}

} // namespace

truth_table parse_table(std::string_view text)
{
  std::string_view rest = text;
  std::optional<int> num_vars;
  if (rest.starts_with("n=")) {
    rest.remove_prefix(2);
    size_t colon = rest.find(':');
    if (colon == std::string_view::npos)
      throw usage_error("expected ':' after variable count in '" + std::string(text) + "'");
    int n = 0;
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + colon, n);
    if (ec != std::errc{} || p != rest.data() + colon)
      throw usage_error("invalid variable count in '" + std::string(text) + "'");
    num_vars = n;
    rest.remove_prefix(colon + 1);
  }

  uint64_t bits = 0;
  if (rest.starts_with("0x") || rest.starts_with("0X")) {
    if (!num_vars)
      throw usage_error("hex truth tables need an explicit 'n=K:' prefix");
    rest.remove_prefix(2);
    if (rest.empty() || rest.size() > 16)
      throw usage_error("invalid hex truth table in '" + std::string(text) + "'");
    auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), bits, 16);
    if (ec != std::errc{} || p != rest.data() + rest.size())
      throw usage_error("invalid hex truth table in '" + std::string(text) + "'");
  } else if (rest.starts_with("0b") || rest.starts_with("0B")) {
    rest.remove_prefix(2);
    bits = parse_binary_rows(rest);
    const int inferred = vars_for_row_count(rest.size());
    if (!num_vars)
      num_vars = inferred;
    else if (*num_vars != inferred)
      throw usage_error("binary table length does not match declared variable count");
  } else {
    throw usage_error("truth table must use 0x... or 0b... notation: '" + std::string(text) + "'");
  }

  return truth_table(*num_vars, bits); // masking and range checks happen here
}

} // namespace ltsyn
