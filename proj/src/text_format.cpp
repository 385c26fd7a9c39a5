#include "text_format.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace emergy::detail {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

}  // namespace

std::vector<Token> tokenize_line(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (is_blank(line[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !is_blank(line[i]) && line[i] != '#') ++i;
    out.push_back(Token{line.substr(start, i - start), start + 1});
  }
  return out;
}

void for_each_line(std::string_view text,
                   const std::function<void(std::size_t, const std::vector<Token>&)>& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = std::min(text.find('\n', pos), text.size());
    ++line_no;
    const auto toks = tokenize_line(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (!toks.empty()) fn(line_no, toks);
  }
}

NodeId parse_node_id(const Token& tok, std::size_t line) {
  NodeId value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (tok.text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(line, tok.column, "expected a non-negative id, got '" + std::string(tok.text) + "'");
  }
  return value;
}

}  // namespace emergy::detail
