#ifndef IDMINOR_IO_HPP
#define IDMINOR_IO_HPP

// Text formats.
//
//   function table:  fnv1 k=<k> n=<n> m=<m>
//                    <k^n values in 1..m, lexicographic index order>
//   cs spec:         csspec k=<k> n=<n> m=<m>
//                    <count_1> ... <count_k> | <singles word> -> <value>
//   group:           degree=<n>
//                    <one permutation image word per line>
//
// Values and symbols are 1-based in text.

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "idminor/constructions.hpp"
#include "idminor/functions.hpp"
#include "idminor/patterns.hpp"

namespace idminor {

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string &message);
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

std::string write_function(const FiniteFunction &f);
FiniteFunction parse_function(std::string_view text);

/// Keys in enumeration order; the result is validated on parse.
std::string write_spec(const CSSpec &spec);
CSSpec parse_spec(std::string_view text);

std::string write_group(const PermGroup &g);
PermGroup parse_group(std::string_view text);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

} // namespace idminor

#endif // IDMINOR_IO_HPP
