#include "ses/morpheus.hpp"

#include <string>

#include "ses/alignment.hpp"
#include "ses/error.hpp"
#include "ses/unicode.hpp"

namespace ses::morpheus {

namespace {

[[noreturn]] void parse_error(std::string_view label, const std::string& why) {
  throw Error(ErrorCode::ParseError,
              "bad morpheus label '" + std::string(label) + "': " + why);
}

// Folds inserted characters into a per-character token. `form_char` is the
// wordform character the token is attached to; `append` selects whether the
// characters go after (trailing run) or before (leading run) its output.
void absorb(Token& token, char32_t form_char, std::u32string_view inserted, bool append) {
  std::u32string base;
  switch (token.kind) {
    case TokenKind::Same:
      base.assign(1, form_char);
      break;
    case TokenKind::Lower:
      base.assign(1, unicode::to_lower(form_char));
      break;
    case TokenKind::Replace:
      base = token.payload;
      break;
    case TokenKind::Delete:
      break;
  }
  token.kind = TokenKind::Replace;
  token.payload = append ? base + std::u32string(inserted) : std::u32string(inserted) + base;
}

}  // namespace

Program parse(std::string_view label) {
  if (label.empty()) parse_error(label, "empty label");
  Program program;
  std::size_t begin = 0;
  while (true) {
    const auto end = label.find('|', begin);
    const std::string_view piece =
        label.substr(begin, end == std::string_view::npos ? std::string_view::npos : end - begin);
    if (piece == "s") {
      program.push_back({TokenKind::Same, {}});
    } else if (piece == "d") {
      program.push_back({TokenKind::Delete, {}});
    } else if (piece == "l") {
      program.push_back({TokenKind::Lower, {}});
    } else if (piece.size() > 2 && piece.substr(0, 2) == "r_") {
      program.push_back({TokenKind::Replace, unicode::decode(piece.substr(2))});
    } else {
      parse_error(label, "unknown token '" + std::string(piece) + "'");
    }
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return program;
}

std::string serialize(const Program& program) {
  std::string out;
  for (std::size_t k = 0; k < program.size(); ++k) {
    if (k > 0) out.push_back('|');
    switch (program[k].kind) {
      case TokenKind::Same:
        out.push_back('s');
        break;
      case TokenKind::Delete:
        out.push_back('d');
        break;
      case TokenKind::Lower:
        out.push_back('l');
        break;
      case TokenKind::Replace:
        out += "r_";
        out += unicode::encode(program[k].payload);
        break;
    }
  }
  return out;
}

SesLabel encode(std::string_view form, std::string_view lemma) {
  if (form.empty() || lemma.empty()) {
    throw Error(ErrorCode::EmptyInput, "morpheus encoding needs a non-empty form and lemma");
  }
  const std::u32string f = unicode::decode(form);
  const std::u32string l = unicode::decode(lemma);

  Program program;
  program.reserve(f.size());
  std::u32string leading;
  std::size_t form_pos = 0;  // index of the next wordform character
  for (const AlignOp& op : levenshtein_align(f, l)) {
    if (op.kind == AlignKind::Insert) {
      if (program.empty()) {
        leading.push_back(*op.b_char);
      } else {
        absorb(program.back(), f[form_pos - 1], std::u32string(1, *op.b_char), true);
      }
      continue;
    }
    Token token;
    switch (op.kind) {
      case AlignKind::Match:
        token.kind = TokenKind::Same;
        break;
      case AlignKind::Delete:
        token.kind = TokenKind::Delete;
        break;
      default:
        token = {TokenKind::Replace, std::u32string(1, *op.b_char)};
        break;
    }
    if (!leading.empty()) {
      absorb(token, f[form_pos], leading, false);
      leading.clear();
    }
    program.push_back(std::move(token));
    ++form_pos;
  }

  for (std::size_t i = 0; i < program.size(); ++i) {
    Token& token = program[i];
    if (token.kind != TokenKind::Replace) continue;
    if (token.payload.size() == 1 && unicode::is_upper(f[i]) &&
        token.payload[0] == unicode::to_lower(f[i])) {
      token = {TokenKind::Lower, {}};
    } else if (token.payload.find(U'|') != std::u32string::npos) {
      throw Error(ErrorCode::Unrepresentable,
                  "morpheus labels cannot carry '|' in a replacement");
    }
  }
  return {Scheme::Morpheus, serialize(program)};
}

std::string decode(std::string_view form, const SesLabel& label) {
  if (label.scheme != Scheme::Morpheus) {
    throw Error(ErrorCode::SchemeMismatch, "label is not a morpheus label");
  }
  const Program program = parse(label.text);
  const std::u32string f = unicode::decode(form);
  if (program.size() != f.size()) {
    throw Error(ErrorCode::ArityMismatch,
                "label has " + std::to_string(program.size()) + " tokens for a " +
                    std::to_string(f.size()) + "-character form");
  }
  std::u32string lemma;
  lemma.reserve(f.size() + 2);
  for (std::size_t i = 0; i < f.size(); ++i) {
    switch (program[i].kind) {
      case TokenKind::Same:
        lemma.push_back(f[i]);
        break;
      case TokenKind::Lower:
        lemma.push_back(unicode::to_lower(f[i]));
        break;
      case TokenKind::Replace:
        lemma += program[i].payload;
        break;
      case TokenKind::Delete:
        break;
    }
  }
  return unicode::encode(lemma);
}

}  // namespace ses::morpheus
