#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ses/model.hpp"

// One token per wordform character; insertions are merged into a neighbour.
//
//   label := token ("|" token)*
//   token := "s" | "d" | "l" | "r_" char+
namespace ses::morpheus {

enum class TokenKind { Same, Delete, Lower, Replace };

struct Token {
  TokenKind kind = TokenKind::Same;
  std::u32string payload;  // Replace only, never empty

  bool operator==(const Token&) const = default;
};

using Program = std::vector<Token>;

Program parse(std::string_view label);
std::string serialize(const Program& program);

SesLabel encode(std::string_view form, std::string_view lemma);
std::string decode(std::string_view form, const SesLabel& label);

}  // namespace ses::morpheus
