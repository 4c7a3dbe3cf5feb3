#include "ltsyn/library.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace ltsyn {

int gate_library::min_transistor_cost() const
{
  int m = gates.empty() ? 0 : gates[0].transistor_cost;
  for (const auto& g : gates) m = std::min(m, g.transistor_cost);
  return m;
}

int gate_library::max_transistor_cost() const
{
  int m = 0;
  for (const auto& g : gates) m = std::max(m, g.transistor_cost);
  return m;
}

namespace {

std::string list_of_valid_names()
{
  std::string s;
  for (const auto& row : classic_libraries()) {
    if (!s.empty()) s += ", ";
    s += row.name;
  }
  return s;
}

std::vector<std::string> split(const std::string& text, char sep)
{
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  parts.push_back(cur);
  return parts;
}

} // namespace

gate_library make_library(const std::string& spec)
{
  gate_library lib;
  lib.name = spec;
  for (const std::string& tok : split(spec, ',')) {
    if (tok.empty())
      throw usage_error("empty gate name in library '" + spec + "'");
    if (tok == "0") {
      lib.has_const0 = true;
      continue;
    }
    if (tok == "1") {
      lib.has_const1 = true;
      continue;
    }
    auto op = op_from_name(tok);
    if (!op)
      throw usage_error("unknown gate '" + tok + "' in library '" + spec +
                        "' (known libraries: " + list_of_valid_names() + ")");
    gate_def g;
    g.name = op_name(*op);
    g.op = *op;
    g.table = op_table4(*op);
    if (std::any_of(lib.gates.begin(), lib.gates.end(),
                    [&](const gate_def& have) { return have.op == g.op; }))
      throw usage_error("duplicate gate '" + tok + "' in library '" + spec + "'");
    lib.gates.push_back(std::move(g));
  }
  if (lib.gates.empty() && lib.num_constants() == 0)
    throw usage_error("library '" + spec + "' is empty");
  return lib;
}

namespace {

uint8_t parse_table4(const std::string& tok, const std::string& line)
{
  if (tok.size() != 6 || tok.substr(0, 2) != "0b")
    throw usage_error("expected a 4-bit table like 0b0100 in line '" + line + "'");
  uint8_t v = 0;
  for (char c : tok.substr(2)) {
    if (c != '0' && c != '1')
      throw usage_error("expected a 4-bit table like 0b0100 in line '" + line + "'");
    v = static_cast<uint8_t>((v << 1) | (c == '1'));
  }
  return v;
}

} // namespace

gate_library load_library_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw usage_error("cannot open library file '" + path + "'");

  gate_library lib;
  lib.name = path;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string name, eq;
    if (!(ls >> name)) continue; // blank line
    if (!(ls >> eq) || eq != "=")
      throw usage_error("expected '=' in library line '" + line + "'");

    if (name == "constants") {
      std::string rest;
      std::getline(ls, rest);
      for (const std::string& c : split(rest, ',')) {
        if (c == "0")
          lib.has_const0 = true;
        else if (c == "1")
          lib.has_const1 = true;
        else if (!c.empty())
          throw usage_error("constants must be 0 or 1 in line '" + line + "'");
      }
      continue;
    }

    std::string table_tok, cost_kw;
    int cost = 4;
    if (!(ls >> table_tok))
      throw usage_error("missing gate table in line '" + line + "'");
    if (ls >> cost_kw) {
      if (cost_kw != "cost" || !(ls >> cost) || cost < 0)
        throw usage_error("expected 'cost <non-negative int>' in line '" + line + "'");
    }

    gate_def g;
    g.table = parse_table4(table_tok, line);
    g.transistor_cost = cost;
    if (auto op = op_from_name(name)) {
      if (op_table4(*op) != g.table)
        throw usage_error("gate '" + name + "' redefines the builtin operator with a different table");
      g.op = *op;
      g.name = op_name(*op);
    } else {
      if (name == "ite" || name == "constants" || (name.size() == 1 && std::isupper(static_cast<unsigned char>(name[0]))))
        throw usage_error("gate name '" + name + "' is reserved");
      g.name = name;
    }
    if (std::any_of(lib.gates.begin(), lib.gates.end(),
                    [&](const gate_def& have) { return have.name == g.name; }))
      throw usage_error("duplicate gate '" + g.name + "' in library file");
    lib.gates.push_back(std::move(g));
  }
  if (lib.gates.empty() && lib.num_constants() == 0)
    throw usage_error("library file '" + path + "' defines no gates or constants");
  return lib;
}

gate_library resolve_library(const std::string& name_or_path)
{
  // Gate lists never contain '/' or '.'; anything else is a file path.
  const bool pathlike = name_or_path.find('/') != std::string::npos ||
                        name_or_path.find('.') != std::string::npos;
  if (pathlike) return load_library_file(name_or_path);
  return make_library(name_or_path);
}

const std::array<classic_library_row, 15>& classic_libraries()
{
  static const std::array<classic_library_row, 15> rows = {{
    {"nand", "nand", 46, true},
    {"nor", "nor", 46, true},
    {"nand,1", "nand,1", 33, false},
    {"nor,0", "nor,0", 33, false},
    {"and,nand", "*,nand", 32, false},
    {"less,nor", "<,nor", 31, false},
    {"impl,0", "=>,0", 28, true},
    {"less,1", "<,1", 28, true},
    {"and,less,1", "*,<,1", 26, false},
    {"and,xor,1", "*,^,1", 25, true},
    {"less,nand,1", "<,nand,1", 25, false},
    {"less,nor,1", "<,nor,1", 24, false},
    {"and,eq,0", "*,=,0", 23, true},
    {"impl,eq,0", "=>,=,0", 21, false},
    {"less,eq,1", "<,=,1", 21, false},
  }};
  return rows;
}

} // namespace ltsyn
