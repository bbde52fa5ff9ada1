#include "ses/unicode.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "ses/error.hpp"

namespace ses::unicode {

namespace {

struct CasePair {
  char32_t upper;
  char32_t lower;
};

constexpr CasePair kByUpper[] = {
#include "case_pairs.inc"
};

constexpr std::size_t kPairCount = std::size(kByUpper);

constexpr auto make_by_lower() {
  std::array<CasePair, kPairCount> out{};
  std::copy(std::begin(kByUpper), std::end(kByUpper), out.begin());
  std::sort(out.begin(), out.end(),
            [](const CasePair& x, const CasePair& y) { return x.lower < y.lower; });
  return out;
}

constexpr auto kByLower = make_by_lower();

[[noreturn]] void bad_utf8(std::size_t offset) {
  throw Error(ErrorCode::InvalidUtf8,
              "invalid UTF-8 at byte " + std::to_string(offset));
}

}  // namespace

std::u32string decode(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  while (i < utf8.size()) {
    const auto lead = static_cast<unsigned char>(utf8[i]);
    if (lead < 0x80) {
      out.push_back(lead);
      ++i;
      continue;
    }
    std::size_t extra = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if ((lead & 0xE0) == 0xC0) {
      extra = 1;
      cp = lead & 0x1F;
      min = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
      extra = 2;
      cp = lead & 0x0F;
      min = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
      extra = 3;
      cp = lead & 0x07;
      min = 0x10000;
    } else {
      bad_utf8(i);
    }
    if (i + extra >= utf8.size()) bad_utf8(i);
    for (std::size_t k = 1; k <= extra; ++k) {
      const auto cont = static_cast<unsigned char>(utf8[i + k]);
      if ((cont & 0xC0) != 0x80) bad_utf8(i + k);
      cp = (cp << 6) | (cont & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) bad_utf8(i);
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

void append(std::string& out, char32_t c) {
  if (c < 0x80) {
    out.push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (c >> 6)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (c >> 12)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (c >> 18)));
    out.push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t c : text) append(out, c);
  return out;
}

std::string encode(char32_t c) {
  std::string out;
  append(out, c);
  return out;
}

char32_t to_lower(char32_t c) noexcept {
  if (c < 0x80) return (c >= U'A' && c <= U'Z') ? c + 32 : c;
  const auto* it = std::lower_bound(
      std::begin(kByUpper), std::end(kByUpper), c,
      [](const CasePair& p, char32_t v) { return p.upper < v; });
  return (it != std::end(kByUpper) && it->upper == c) ? it->lower : c;
}

char32_t to_upper(char32_t c) noexcept {
  if (c < 0x80) return (c >= U'a' && c <= U'z') ? c - 32 : c;
  const auto* it = std::lower_bound(
      kByLower.begin(), kByLower.end(), c,
      [](const CasePair& p, char32_t v) { return p.lower < v; });
  return (it != kByLower.end() && it->lower == c) ? it->upper : c;
}

std::u32string to_lower(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t& c : out) c = to_lower(c);
  return out;
}

std::string to_lower_utf8(std::string_view utf8) {
  return encode(to_lower(decode(utf8)));
}

std::size_t length(std::string_view utf8) {
  std::size_t n = 0;
  for (char ch : utf8) {
    if ((static_cast<unsigned char>(ch) & 0xC0) != 0x80) ++n;
  }
  return n;
}

}  // namespace ses::unicode
