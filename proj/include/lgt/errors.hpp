#pragma once

#include <stdexcept>
#include <string>

namespace lgt {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct unknown_variable : error { using error::error; };
struct unknown_operation : error { using error::error; };
struct arity_mismatch : error { using error::error; };
struct sort_mismatch : error { using error::error; };
struct length_mismatch : error { using error::error; };
struct dimension_mismatch : error { using error::error; };
struct zero_parameter : error { using error::error; };
struct variable_clash : error { using error::error; };
struct sort_overlap : error { using error::error; };
struct missing_assignment : error { using error::error; };
struct ill_formed_formula : error { using error::error; };
struct validation_error : error { using error::error; };

// A failed internal consistency check; indicates a bug, not bad input.
struct internal_check_failed : std::logic_error {
  using std::logic_error::logic_error;
};

struct parse_error : error {
  parse_error(const std::string& msg, int line, int col)
      : error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(col) + ")"),
        line(line),
        col(col) {}
  int line;
  int col;
};

} // namespace lgt
