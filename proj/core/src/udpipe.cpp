#include "ses/udpipe.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "ses/alignment.hpp"
#include "ses/error.hpp"
#include "ses/unicode.hpp"

namespace ses::udpipe {

namespace {

constexpr char32_t kUp = U'↑';
constexpr char32_t kDown = U'↓';
constexpr char32_t kBar = U'¦';
constexpr char32_t kCopy = U'→';
constexpr char32_t kDelete = U'-';
constexpr char32_t kInsert = U'+';

// Edit costs chosen so the cheapest script is also the shortest once
// serialized: "→" and "-" take one symbol, "+c" takes two.
constexpr unsigned kInsertCost = 2;
constexpr unsigned kDeleteCost = 1;
constexpr unsigned kMatchCost = 1;

[[noreturn]] void parse_error(std::string_view label, const std::string& why) {
  throw Error(ErrorCode::ParseError,
              "bad udpipe label '" + std::string(label) + "': " + why);
}

EditScript to_edits(const Alignment& alignment) {
  EditScript out;
  out.reserve(alignment.size());
  for (const AlignOp& op : alignment) {
    switch (op.kind) {
      case AlignKind::Match:
        out.push_back({EditKind::Copy, 0});
        break;
      case AlignKind::Delete:
        out.push_back({EditKind::Delete, 0});
        break;
      case AlignKind::Insert:
        out.push_back({EditKind::Insert, *op.b_char});
        break;
      case AlignKind::Replace:
        break;  // never produced by min_script_align
    }
  }
  return out;
}

std::size_t consumed(const EditScript& script) {
  return static_cast<std::size_t>(std::count_if(
      script.begin(), script.end(),
      [](const EditOp& op) { return op.kind != EditKind::Insert; }));
}

void replay_into(const EditScript& script, std::u32string_view source, std::u32string& out) {
  std::size_t pos = 0;
  for (const EditOp& op : script) {
    switch (op.kind) {
      case EditKind::Copy:
        out.push_back(source[pos++]);
        break;
      case EditKind::Delete:
        ++pos;
        break;
      case EditKind::Insert:
        out.push_back(op.ch);
        break;
    }
  }
}

void append_edits(const EditScript& script, std::u32string& out) {
  for (const EditOp& op : script) {
    switch (op.kind) {
      case EditKind::Copy:
        out.push_back(kCopy);
        break;
      case EditKind::Delete:
        out.push_back(kDelete);
        break;
      case EditKind::Insert:
        out.push_back(kInsert);
        out.push_back(op.ch);
        break;
    }
  }
}

CasingSegment parse_segment(std::string_view label, std::u32string_view seg) {
  if (seg.size() < 2 || (seg[0] != kUp && seg[0] != kDown)) {
    parse_error(label, "casing segment must be an arrow followed by a position");
  }
  std::string digits;
  for (char32_t c : seg.substr(1)) {
    if (c < U'0' || c > U'9') parse_error(label, "casing position is not a decimal");
    digits.push_back(static_cast<char>(c));
  }
  if (digits.size() > 1 && digits[0] == '0') parse_error(label, "leading zero in casing position");
  std::size_t start = 0;
  const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), start);
  if (res.ec != std::errc{}) parse_error(label, "casing position out of range");
  return {seg[0] == kUp ? Case::Up : Case::Down, start};
}

// Parses edit ops starting at `pos`; stops at an unescaped bar when
// `stop_at_bar` is set. Returns the position after the last op.
std::size_t parse_edits(std::string_view label, std::u32string_view text, std::size_t pos,
                        bool stop_at_bar, EditScript& out) {
  while (pos < text.size()) {
    const char32_t c = text[pos];
    if (c == kBar) {
      if (stop_at_bar) return pos;
      parse_error(label, "unexpected '¦' in suffix edits");
    }
    if (c == kCopy) {
      out.push_back({EditKind::Copy, 0});
      ++pos;
    } else if (c == kDelete) {
      out.push_back({EditKind::Delete, 0});
      ++pos;
    } else if (c == kInsert) {
      if (pos + 1 >= text.size()) parse_error(label, "'+' without a character");
      out.push_back({EditKind::Insert, text[pos + 1]});
      pos += 2;
    } else {
      parse_error(label, "unknown edit operation");
    }
  }
  if (stop_at_bar) parse_error(label, "missing '¦' between prefix and suffix edits");
  return pos;
}

}  // namespace

Program parse(std::string_view label) {
  if (label.empty()) parse_error(label, "empty label");
  if (label.front() == 'a') {
    if (label.size() == 1) parse_error(label, "absolute rule without a lemma");
    return Absolute{std::string(label.substr(1))};
  }
  const auto sep = label.find(";d");
  if (sep == std::string_view::npos) parse_error(label, "missing ';d'");

  Rule rule;
  const std::u32string casing = unicode::decode(label.substr(0, sep));
  std::size_t begin = 0;
  while (true) {
    const auto end = casing.find(kBar, begin);
    const auto seg = std::u32string_view(casing).substr(
        begin, end == std::u32string::npos ? std::u32string::npos : end - begin);
    const CasingSegment parsed = parse_segment(label, seg);
    if (rule.casing.empty() ? parsed.start != 0 : parsed.start <= rule.casing.back().start) {
      parse_error(label, "casing positions must start at 0 and increase");
    }
    rule.casing.push_back(parsed);
    if (end == std::u32string::npos) break;
    begin = end + 1;
  }

  const std::u32string edits = unicode::decode(label.substr(sep + 2));
  const std::size_t bar = parse_edits(label, edits, 0, true, rule.prefix);
  parse_edits(label, edits, bar + 1, false, rule.suffix);
  return rule;
}

std::string serialize(const Program& program) {
  if (const auto* absolute = std::get_if<Absolute>(&program)) {
    return "a" + absolute->lemma;
  }
  const Rule& rule = std::get<Rule>(program);
  std::u32string out;
  for (std::size_t k = 0; k < rule.casing.size(); ++k) {
    if (k > 0) out.push_back(kBar);
    out.push_back(rule.casing[k].direction == Case::Up ? kUp : kDown);
    for (char ch : std::to_string(rule.casing[k].start)) out.push_back(static_cast<char32_t>(ch));
  }
  out += U";d";
  append_edits(rule.prefix, out);
  out.push_back(kBar);
  append_edits(rule.suffix, out);
  return unicode::encode(out);
}

CasingScript casing_script(std::u32string_view lemma) {
  const auto first_cased = std::find_if(lemma.begin(), lemma.end(), unicode::is_cased);
  Case current = (first_cased != lemma.end() && unicode::is_upper(*first_cased)) ? Case::Up
                                                                                 : Case::Down;
  CasingScript script{{current, 0}};
  for (std::size_t i = 0; i < lemma.size(); ++i) {
    if (!unicode::is_cased(lemma[i])) continue;
    const Case c = unicode::is_upper(lemma[i]) ? Case::Up : Case::Down;
    if (c != current) {
      script.push_back({c, i});
      current = c;
    }
  }
  return script;
}

void apply_casing(const CasingScript& casing, std::u32string& lowered) {
  for (std::size_t k = 0; k < casing.size(); ++k) {
    const std::size_t begin = std::min(casing[k].start, lowered.size());
    const std::size_t end =
        k + 1 < casing.size() ? std::min(casing[k + 1].start, lowered.size()) : lowered.size();
    for (std::size_t i = begin; i < end; ++i) {
      lowered[i] = casing[k].direction == Case::Up ? unicode::to_upper(lowered[i])
                                                   : unicode::to_lower(lowered[i]);
    }
  }
}

SesLabel encode(std::string_view form, std::string_view lemma) {
  if (form.empty() || lemma.empty()) {
    throw Error(ErrorCode::EmptyInput, "udpipe encoding needs a non-empty form and lemma");
  }
  const std::u32string lemma_chars = unicode::decode(lemma);
  const std::u32string form_low = unicode::to_lower(unicode::decode(form));
  const std::u32string lemma_low = unicode::to_lower(lemma_chars);

  const LcsResult root = longest_common_substring(form_low, lemma_low);
  if (root.length == 0) {
    return {Scheme::Udpipe, serialize(Absolute{std::string(lemma)})};
  }

  const std::u32string_view f = form_low;
  const std::u32string_view l = lemma_low;
  Rule rule;
  rule.casing = casing_script(lemma_chars);
  rule.prefix = to_edits(min_script_align(f.substr(0, root.start_in_a),
                                          l.substr(0, root.start_in_b), kInsertCost,
                                          kDeleteCost, kMatchCost));
  rule.suffix = to_edits(min_script_align(f.substr(root.start_in_a + root.length),
                                          l.substr(root.start_in_b + root.length),
                                          kInsertCost, kDeleteCost, kMatchCost));
  return {Scheme::Udpipe, serialize(rule)};
}

std::string decode(std::string_view form, const SesLabel& label) {
  if (label.scheme != Scheme::Udpipe) {
    throw Error(ErrorCode::SchemeMismatch, "label is not a udpipe label");
  }
  const Program program = parse(label.text);
  if (const auto* absolute = std::get_if<Absolute>(&program)) return absolute->lemma;

  const Rule& rule = std::get<Rule>(program);
  const std::u32string lowered = unicode::to_lower(unicode::decode(form));
  const std::size_t p = consumed(rule.prefix);
  const std::size_t s = consumed(rule.suffix);
  if (p + s > lowered.size()) {
    throw Error(ErrorCode::LengthMismatch,
                "label consumes " + std::to_string(p + s) + " characters of a " +
                    std::to_string(lowered.size()) + "-character form");
  }
  const std::u32string_view low = lowered;
  std::u32string lemma;
  lemma.reserve(lowered.size() + 4);
  replay_into(rule.prefix, low.substr(0, p), lemma);
  lemma += low.substr(p, lowered.size() - p - s);
  replay_into(rule.suffix, low.substr(lowered.size() - s), lemma);
  apply_casing(rule.casing, lemma);
  return unicode::encode(lemma);
}

}  // namespace ses::udpipe
