#include "ses/ixapipes.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "ses/alignment.hpp"
#include "ses/error.hpp"
#include "ses/unicode.hpp"

namespace ses::ixapipes {

namespace {

[[noreturn]] void parse_error(std::string_view label, const std::string& why) {
  throw Error(ErrorCode::ParseError,
              "bad ixapipes label '" + std::string(label) + "': " + why);
}

bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }

bool is_element_op(const Token& t) { return t.kind != TokenKind::Insert; }

// Token streams are ambiguous when an edited character is itself a digit
// ("D05" deletes '5' at index 0). Canonical indices have no leading zeros and
// never increase, which leaves at most one reading in practice; the search
// below takes the first reading that consumes the whole label, trying longer
// indices first. Labels listed in another order are read without the
// monotonicity constraint.
class TokenParser {
 public:
  TokenParser(std::u32string_view text, bool monotone) : text_(text), monotone_(monotone) {}

  std::optional<std::vector<Token>> run() {
    std::vector<Token> out;
    if (parse_from(0, std::nullopt, out)) return out;
    return std::nullopt;
  }

 private:
  bool parse_from(std::size_t pos, std::optional<std::size_t> max_index, std::vector<Token>& out) {
    if (pos == text_.size()) return true;
    TokenKind kind;
    std::size_t char_count = 1;
    switch (text_[pos]) {
      case U'R':
        kind = TokenKind::Replace;
        char_count = 2;
        break;
      case U'D':
        kind = TokenKind::Delete;
        break;
      case U'I':
        kind = TokenKind::Insert;
        break;
      default:
        return false;
    }
    std::size_t digits_end = pos + 1;
    while (digits_end < text_.size() && is_digit(text_[digits_end])) ++digits_end;
    for (std::size_t end = digits_end; end > pos + 1; --end) {
      const std::size_t ndigits = end - pos - 1;
      if (ndigits > 1 && text_[pos + 1] == U'0') continue;
      if (ndigits > 18) continue;
      if (end + char_count > text_.size()) continue;
      std::size_t index = 0;
      for (std::size_t k = pos + 1; k < end; ++k) index = index * 10 + (text_[k] - U'0');
      if (monotone_ && max_index && index > *max_index) continue;
      Token token{kind, index, 0, 0};
      if (kind == TokenKind::Replace) {
        token.old_char = text_[end];
        token.new_char = text_[end + 1];
      } else if (kind == TokenKind::Delete) {
        token.old_char = text_[end];
      } else {
        token.new_char = text_[end];
      }
      out.push_back(token);
      if (parse_from(end + char_count, index, out)) return true;
      out.pop_back();
    }
    return false;
  }

  std::u32string_view text_;
  bool monotone_;
};

}  // namespace

Program parse(std::string_view label) {
  if (label.empty()) parse_error(label, "empty label");
  if (label == "O") return Program{true, false, {}};
  Program program;
  const std::u32string text = unicode::decode(label);
  std::u32string_view body = text;
  if (body.front() == U'1') {
    program.lower_first = true;
    body.remove_prefix(1);
  }
  auto tokens = TokenParser(body, true).run();
  if (!tokens) tokens = TokenParser(body, false).run();
  if (!tokens) parse_error(label, "malformed edit tokens");
  if (tokens->empty() && !program.lower_first) parse_error(label, "no edit tokens");
  program.tokens = std::move(*tokens);
  return program;
}

std::string serialize(const Program& program) {
  if (program.identity || (program.tokens.empty() && !program.lower_first)) return "O";
  std::string out;
  if (program.lower_first) out.push_back('1');
  for (const Token& t : program.tokens) {
    switch (t.kind) {
      case TokenKind::Replace:
        out.push_back('R');
        out += std::to_string(t.index);
        unicode::append(out, t.old_char);
        unicode::append(out, t.new_char);
        break;
      case TokenKind::Delete:
        out.push_back('D');
        out += std::to_string(t.index);
        unicode::append(out, t.old_char);
        break;
      case TokenKind::Insert:
        out.push_back('I');
        out += std::to_string(t.index);
        unicode::append(out, t.new_char);
        break;
    }
  }
  return out;
}

SesLabel encode(std::string_view form, std::string_view lemma) {
  if (form.empty() || lemma.empty()) {
    throw Error(ErrorCode::EmptyInput, "ixapipes encoding needs a non-empty form and lemma");
  }
  std::u32string f = unicode::decode(form);
  const std::u32string l = unicode::decode(lemma);

  Program program;
  if (unicode::is_upper(f[0]) && l[0] == unicode::to_lower(f[0])) {
    program.lower_first = true;
    f[0] = unicode::to_lower(f[0]);
  }

  // The alignment is computed in reading order and walked backwards, which
  // gives an alignment of the reversed strings.
  Alignment ops = levenshtein_align(f, l);
  std::reverse(ops.begin(), ops.end());

  const std::size_t n = f.size();
  std::vector<std::optional<Token>> element(n + 1);
  std::vector<std::u32string> inserts(n + 1);
  std::size_t index = 0;
  for (const AlignOp& op : ops) {
    switch (op.kind) {
      case AlignKind::Match:
        ++index;
        break;
      case AlignKind::Replace:
        element[index] = Token{TokenKind::Replace, index, *op.a_char, *op.b_char};
        ++index;
        break;
      case AlignKind::Delete:
        element[index] = Token{TokenKind::Delete, index, *op.a_char, 0};
        ++index;
        break;
      case AlignKind::Insert:
        inserts[index].push_back(*op.b_char);
        break;
    }
  }

  for (std::size_t i = n + 1; i-- > 0;) {
    if (element[i]) program.tokens.push_back(*element[i]);
    // Each insert lands at the same position and pushes the earlier ones
    // back, so they are emitted last-to-first.
    for (auto it = inserts[i].rbegin(); it != inserts[i].rend(); ++it) {
      program.tokens.push_back({TokenKind::Insert, i, 0, *it});
    }
  }
  return {Scheme::Ixapipes, serialize(program)};
}

std::string decode(std::string_view form, const SesLabel& label) {
  if (label.scheme != Scheme::Ixapipes) {
    throw Error(ErrorCode::SchemeMismatch, "label is not an ixapipes label");
  }
  Program program = parse(label.text);
  if (program.identity) return std::string(form);

  std::u32string buffer = unicode::decode(form);
  if (program.lower_first && !buffer.empty()) buffer[0] = unicode::to_lower(buffer[0]);
  std::reverse(buffer.begin(), buffer.end());
  const std::size_t n = buffer.size();

  std::stable_sort(program.tokens.begin(), program.tokens.end(),
                   [](const Token& x, const Token& y) {
                     if (x.index != y.index) return x.index > y.index;
                     return is_element_op(x) && !is_element_op(y);
                   });

  for (const Token& t : program.tokens) {
    if (t.kind == TokenKind::Insert) {
      if (t.index > n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "insert at " + std::to_string(t.index) + " in a " + std::to_string(n) +
                        "-character form");
      }
      buffer.insert(buffer.begin() + static_cast<std::ptrdiff_t>(t.index), t.new_char);
      continue;
    }
    if (t.index >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edit at " + std::to_string(t.index) + " in a " + std::to_string(n) +
                      "-character form");
    }
    if (buffer[t.index] != t.old_char) {
      throw Error(ErrorCode::CharMismatch,
                  "expected '" + unicode::encode(t.old_char) + "' at reversed index " +
                      std::to_string(t.index) + ", found '" + unicode::encode(buffer[t.index]) +
                      "'");
    }
    if (t.kind == TokenKind::Delete) {
      buffer.erase(buffer.begin() + static_cast<std::ptrdiff_t>(t.index));
    } else {
      buffer[t.index] = t.new_char;
    }
  }
  std::reverse(buffer.begin(), buffer.end());
  return unicode::encode(buffer);
}

}  // namespace ses::ixapipes
