#ifndef KGD_ERRORS_HPP
#define KGD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kgd {

// Invalid argument for a mathematical operation (bad radicand, shape
// mismatch, nonpositive scale, ...).  CLI maps this to exit code 1.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Input file could not be parsed; carries a line/column hint in the message.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, long line, long column)
      : std::runtime_error(what + " (line " + std::to_string(line) +
                           ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  long line() const { return line_; }
  long column() const { return column_; }

 private:
  long line_;
  long column_;
};

// A configured budget (group closure cap, branch cap, node budget) was
// exceeded.  CLI maps this to exit code 2.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Unknown catalog identifier.
class catalog_error : public domain_error {
 public:
  explicit catalog_error(const std::string& what) : domain_error(what) {}
};

}  // namespace kgd

#endif  // KGD_ERRORS_HPP
