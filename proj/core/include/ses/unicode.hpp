#pragma once

#include <string>
#include <string_view>

namespace ses::unicode {

// Strict UTF-8 conversion. Throws Error(InvalidUtf8) on malformed input.
std::u32string decode(std::string_view utf8);
std::string encode(std::u32string_view text);
void append(std::string& out, char32_t c);
std::string encode(char32_t c);

// Simple one-to-one case mapping. Characters without a bijective
// upper/lower partner map to themselves and count as caseless.
char32_t to_lower(char32_t c) noexcept;
char32_t to_upper(char32_t c) noexcept;
inline bool is_upper(char32_t c) noexcept { return to_lower(c) != c; }
inline bool is_lower(char32_t c) noexcept { return to_upper(c) != c; }
inline bool is_cased(char32_t c) noexcept { return is_upper(c) || is_lower(c); }

std::u32string to_lower(std::u32string_view text);
std::string to_lower_utf8(std::string_view utf8);

// Length in scalar values.
std::size_t length(std::string_view utf8);

}  // namespace ses::unicode
