#ifndef EMERGY_TEXT_FORMAT_HPP
#define EMERGY_TEXT_FORMAT_HPP

// Line tokenizer shared by the emergy-graph and digraph readers.

#include <cstddef>
#include <functional>
#include <string_view>
#include <vector>

#include "emergy/graph.hpp"

namespace emergy::detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

/// Whitespace-separated tokens up to an optional '#' comment.
std::vector<Token> tokenize_line(std::string_view line);

/// Calls `fn(line_number, tokens)` for every non-blank line.
void for_each_line(std::string_view text,
                   const std::function<void(std::size_t, const std::vector<Token>&)>& fn);

/// Throws ParseError unless the token is a non-negative integer.
NodeId parse_node_id(const Token& tok, std::size_t line);

}  // namespace emergy::detail

#endif  // EMERGY_TEXT_FORMAT_HPP
