#include "ltsyn/pla.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace ltsyn {

truth_table pla_file::to_table() const
{
  const uint64_t mask = table_mask(num_inputs);
  const uint32_t row_count = uint32_t{1} << num_inputs;
  std::vector<bool> seen(row_count, false);
  uint64_t bits = 0;
  for (const auto& [assignment, output] : rows) {
    if (seen[assignment])
      throw usage_error("duplicate PLA row for assignment " + std::to_string(assignment));
    seen[assignment] = true;
    if (output) bits |= uint64_t{1} << (row_count - 1 - assignment);
  }
  for (uint32_t a = 0; a < row_count; ++a)
    if (!seen[a])
      throw usage_error("PLA leaves input row " + std::to_string(a) +
                        " unspecified (don't-cares are not supported)");
  (void)mask;
  return truth_table(num_inputs, bits);
}

std::vector<uint32_t> pla_file::on_assignments() const
{
  std::vector<uint32_t> on;
  for (const auto& [a, out] : rows)
    if (out) on.push_back(a);
  return on;
}

std::vector<uint32_t> pla_file::off_assignments() const
{
  std::vector<uint32_t> off;
  for (const auto& [a, out] : rows)
    if (!out) off.push_back(a);
  return off;
}

pla_file read_pla(std::istream& in)
{
  pla_file pla;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string in_bits, out_bit;
    if (!(ls >> in_bits)) continue;
    if (!(ls >> out_bit) || out_bit.size() != 1 || (out_bit != "0" && out_bit != "1"))
      throw usage_error("line " + std::to_string(lineno) + ": expected '<input bits> <output bit>'");
    std::string extra;
    if (ls >> extra)
      throw usage_error("line " + std::to_string(lineno) + ": trailing text '" + extra + "'");

    if (pla.num_inputs == 0) {
      pla.num_inputs = static_cast<int>(in_bits.size());
      if (pla.num_inputs > max_table_vars)
        throw capacity_error("PLA has " + std::to_string(pla.num_inputs) +
                             " inputs; at most 6 are supported");
    } else if (static_cast<int>(in_bits.size()) != pla.num_inputs) {
      throw usage_error("line " + std::to_string(lineno) + ": inconsistent input width");
    }

    uint32_t assignment = 0;
    for (char c : in_bits) {
      if (c != '0' && c != '1')
        throw usage_error("line " + std::to_string(lineno) + ": input bits must be 0 or 1");
      assignment = (assignment << 1) | uint32_t(c == '1');
    }
    pla.rows.emplace_back(assignment, out_bit == "1");
  }
  if (pla.rows.empty()) throw usage_error("PLA contains no rows");
  return pla;
}

pla_file read_pla_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open PLA file '" + path + "'");
  return read_pla(in);
}

} // namespace ltsyn
