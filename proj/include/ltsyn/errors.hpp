#pragma once

#include <stdexcept>
#include <string>

namespace ltsyn {

/* Error taxonomy shared by the library and the CLI exit codes. */

/* Bad input: syntax errors, mismatched arities, invalid flags. */
class usage_error : public std::runtime_error {
public:
  explicit usage_error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Search exhausted its gate bound without a match. */
class not_found_error : public std::runtime_error {
public:
  explicit not_found_error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Deadline hit and no heuristic fallback was available. */
class timeout_error : public std::runtime_error {
public:
  explicit timeout_error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Problem size beyond the single-word truth-table range (more than 6 inputs). */
class capacity_error : public std::runtime_error {
public:
  explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ltsyn
