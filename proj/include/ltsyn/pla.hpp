#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "ltsyn/truth_table.hpp"

namespace ltsyn {

/* Exhaustive single-output PLA: one `<input bits> <output bit>` line per
 * input row, leftmost input bit = variable 0.  Every row must be listed
 * exactly once; don't-cares are not supported.  '#' starts a comment. */
struct pla_file {
  int num_inputs = 0;
  std::vector<std::pair<uint32_t, bool>> rows; // (assignment, output)

  truth_table to_table() const;
  std::vector<uint32_t> on_assignments() const;
  std::vector<uint32_t> off_assignments() const;
};

pla_file read_pla(std::istream& in);
pla_file read_pla_file(const std::string& path);

} // namespace ltsyn
