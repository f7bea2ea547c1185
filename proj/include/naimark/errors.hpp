#pragma once

// Exception types shared across the library.  Every throwing path carries a
// machine-readable category so front ends can map failures to exit codes and
// diagnostics without string matching.

#include <cstddef>
#include <stdexcept>
#include <string>

namespace naimark {

enum class errc {
  domain,              // argument outside the modeled range
  zero_beam,           // operation undefined on a zero-intensity beam
  zero_momentum,       // operation undefined on the zero momentum matrix
  unsupported_branch,  // negative-energy timelike/lightlike momentum
  singular_element,    // non-invertible optical element used where a group element is required
  parse,               // pipeline / generator-word text error
};

inline const char* errc_name(errc c) noexcept {
  switch (c) {
    case errc::domain: return "domain";
    case errc::zero_beam: return "zero_beam";
    case errc::zero_momentum: return "zero_momentum";
    case errc::unsupported_branch: return "unsupported_branch";
    case errc::singular_element: return "singular_element";
    case errc::parse: return "parse";
  }
  return "unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

struct domain_error : error {
  explicit domain_error(const std::string& w) : error(errc::domain, w) {}
};
struct zero_beam_error : error {
  explicit zero_beam_error(const std::string& w) : error(errc::zero_beam, w) {}
};
struct zero_momentum_error : error {
  explicit zero_momentum_error(const std::string& w) : error(errc::zero_momentum, w) {}
};
struct unsupported_branch_error : error {
  explicit unsupported_branch_error(const std::string& w) : error(errc::unsupported_branch, w) {}
};
struct singular_element_error : error {
  explicit singular_element_error(const std::string& w) : error(errc::singular_element, w) {}
};

enum class parse_errc {
  syntax,
  unknown_element,
  arity_mismatch,
};

inline const char* parse_errc_name(parse_errc c) noexcept {
  switch (c) {
    case parse_errc::syntax: return "syntax";
    case parse_errc::unknown_element: return "unknown_element";
    case parse_errc::arity_mismatch: return "arity_mismatch";
  }
  return "unknown";
}

// Text errors report 1-based line/column of the offending token.
class parse_error : public error {
 public:
  parse_error(parse_errc code, std::size_t line, std::size_t column, const std::string& what)
      : error(errc::parse,
              std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        parse_code_(code),
        line_(line),
        column_(column) {}

  parse_errc parse_code() const noexcept { return parse_code_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  parse_errc parse_code_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace naimark
