#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ses/model.hpp"

// Edit tokens indexed from the end of the wordform.
//
//   label := "O" | "1" token* | token+
//   token := "R" decimal char char | "D" decimal char | "I" decimal char
//
// "O" leaves the word untouched, a leading "1" lowercases its first character.
// Indices address the reversed wordform. Tokens are listed by decreasing
// index; for a shared index the delete/replace comes first, then the inserts
// for the gap before that position.
namespace ses::ixapipes {

enum class TokenKind { Replace, Delete, Insert };

struct Token {
  TokenKind kind = TokenKind::Delete;
  std::size_t index = 0;
  char32_t old_char = 0;  // Replace, Delete
  char32_t new_char = 0;  // Replace, Insert

  bool operator==(const Token&) const = default;
};

struct Program {
  bool identity = false;     // "O"
  bool lower_first = false;  // "1"
  std::vector<Token> tokens;

  bool operator==(const Program&) const = default;
};

Program parse(std::string_view label);
std::string serialize(const Program& program);

SesLabel encode(std::string_view form, std::string_view lemma);
std::string decode(std::string_view form, const SesLabel& label);

}  // namespace ses::ixapipes
