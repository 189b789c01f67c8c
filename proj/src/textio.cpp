#include "polybox/textio.hpp"

#include <fstream>
#include <sstream>

namespace polybox {

namespace {

bool blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Letter parse_letter(const std::string& tok, int lineno, int column) {
  if (tok == "*") return star;
  std::size_t i = 0;
  int sign = 1;
  if (tok[i] == '+') {
    ++i;
  } else if (tok[i] == '-') {
    sign = -1;
    ++i;
  }
  if (i + 1 != tok.size() || tok[i] < '1' || tok[i] > '0' + max_pairs)
    throw ParseError(lineno, column, tok, "bad letter token '" + tok + "'");
  return static_cast<Letter>(sign * (tok[i] - '0'));
}

}  // namespace

Word parse_word(const std::string& line, int lineno) {
  Word w;
  std::istringstream ss(line);
  std::string tok;
  int column = 0;
  while (ss >> tok) {
    ++column;
    if (w.size() == max_dim) throw ParseError(lineno, column, tok, "word longer than 8 letters");
    w[w.n++] = parse_letter(tok, lineno, column);
  }
  if (w.size() == 0) throw ParseError(lineno, 0, "", "empty word");
  return w;
}

std::vector<Code> parse_codes(std::istream& in, int pairs) {
  std::vector<Code> out;
  std::vector<Word> block;
  std::string line;
  int lineno = 0;
  int block_start = 0;
  auto flush = [&] {
    if (block.empty()) return;
    try {
      out.push_back(Code(block, block.front().size(), pairs));
    } catch (const Error& e) {
      throw ParseError(block_start, 0, "", std::string("bad code block: ") + e.what());
    }
    block.clear();
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (blank_or_comment(line)) {
      bool really_blank = true;
      for (char c : line)
        if (c == '#') break; else if (!isspace(static_cast<unsigned char>(c))) really_blank = false;
      if (really_blank && !block.empty()) flush();
      continue;
    }
    if (block.empty()) block_start = lineno;
    Word w = parse_word(line, lineno);
    if (!block.empty() && w.size() != block.front().size())
      throw ParseError(lineno, 0, "", "word length differs within a code block");
    block.push_back(w);
  }
  flush();
  return out;
}

Code parse_code(std::istream& in, int pairs) {
  std::vector<Code> all = parse_codes(in, pairs);
  if (all.empty()) throw Error(ErrorKind::empty_code, "empty code");
  if (all.size() > 1) throw Error(ErrorKind::parse_error, "expected a single code block");
  return all.front();
}

Code parse_code_string(const std::string& text, int pairs) {
  std::istringstream ss(text);
  return parse_code(ss, pairs);
}

Code load_code(const std::string& path, int pairs) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path);
  return parse_code(in, pairs);
}

std::vector<Code> load_codes(const std::string& path, int pairs) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open " + path);
  return parse_codes(in, pairs);
}

std::string format_word(const Word& w) { return to_string(w); }

std::string format_code(const Code& v) {
  std::string s;
  for (const Word& w : v) {
    s += to_string(w);
    s += '\n';
  }
  return s;
}

std::string format_codes(const std::vector<Code>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += '\n';
    s += format_code(vs[i]);
  }
  return s;
}

void save_code(const std::string& path, const Code& v) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::parse_error, "cannot open " + path + " for writing");
  out << format_code(v);
}

}  // namespace polybox
