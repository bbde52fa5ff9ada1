#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ses {

struct Token {
  std::string form;
  std::optional<std::string> lemma;  // absent for "_" rows
  std::string upos;
  std::size_t index = 0;  // 1-based within the sentence

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::vector<Token> tokens;
  std::vector<std::string> comments;

  bool operator==(const Sentence&) const = default;
};

struct Corpus {
  std::vector<Sentence> sentences;
  std::string source_name;

  bool operator==(const Corpus&) const = default;
};

std::size_t token_count(const Corpus& corpus) noexcept;

enum class Scheme { Udpipe, Ixapipes, Morpheus };

inline constexpr Scheme kAllSchemes[] = {Scheme::Udpipe, Scheme::Ixapipes,
                                         Scheme::Morpheus};

std::string_view scheme_name(Scheme scheme) noexcept;
std::optional<Scheme> parse_scheme(std::string_view name) noexcept;

/// A scheme-tagged edit script label. Construction does not validate the
/// text; the scheme's parser does.
struct SesLabel {
  Scheme scheme = Scheme::Udpipe;
  std::string text;

  bool operator==(const SesLabel&) const = default;
};

}  // namespace ses
