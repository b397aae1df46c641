#pragma once

// The `fracfac v1` text format:
//
//   fracfac v1
//   k <int>
//   n <int>
//   cols <s1> ... <sn>
//
// Each s is a k-character {0,1} string, character 1 = coordinate 1. Lines
// starting with '#' are comments and may appear anywhere after the header;
// blank lines and extra spaces are ignored on input.

#include <iosfwd>
#include <string>
#include <string_view>

#include "fracfac/design.hpp"

namespace fracfac {

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

RegularDesign parse_design(std::string_view text);
RegularDesign read_design_file(const std::string& path);

std::string serialize_design(const RegularDesign& d);
void write_design_file(const RegularDesign& d, const std::string& path);

}  // namespace fracfac
