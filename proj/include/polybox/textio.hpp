#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polybox/code.hpp"

namespace polybox {

// Word text format: one word per line, whitespace-separated tokens from
// {+1,-1,+2,-2,...,*}; lines beginning with '#' are comments. Codes in one
// file are separated by blank lines.

struct ParseError : Error {
  ParseError(int line, int column, const std::string& token, const std::string& what)
      : Error(ErrorKind::parse_error, what), line(line), column(column), token(token) {}
  int line;
  int column;
  std::string token;
};

Word parse_word(const std::string& line, int lineno = 0);

// Single code: blank lines allowed only before/after the block.
Code parse_code(std::istream& in, int pairs = 2);
Code parse_code_string(const std::string& text, int pairs = 2);
Code load_code(const std::string& path, int pairs = 2);

// Multiple blank-line-separated codes.
std::vector<Code> parse_codes(std::istream& in, int pairs = 2);
std::vector<Code> load_codes(const std::string& path, int pairs = 2);

std::string format_word(const Word& w);
std::string format_code(const Code& v);
std::string format_codes(const std::vector<Code>& vs);
void save_code(const std::string& path, const Code& v);

}  // namespace polybox
