#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ses/model.hpp"

// Casing script plus prefix/suffix edits around an unchanged root.
//
//   label   := "a" lemma | casing ";d" prefix "¦" suffix
//   casing  := seg ("¦" seg)*      seg := ("↑" | "↓") decimal
//   prefix, suffix := ("→" | "-" | "+" char)*
namespace ses::udpipe {

enum class Case { Up, Down };

struct CasingSegment {
  Case direction = Case::Down;
  std::size_t start = 0;  // position in the lemma

  bool operator==(const CasingSegment&) const = default;
};

using CasingScript = std::vector<CasingSegment>;

enum class EditKind { Copy, Delete, Insert };

struct EditOp {
  EditKind kind = EditKind::Copy;
  char32_t ch = 0;  // Insert only

  bool operator==(const EditOp&) const = default;
};

using EditScript = std::vector<EditOp>;

struct Rule {
  CasingScript casing;
  EditScript prefix;
  EditScript suffix;

  bool operator==(const Rule&) const = default;
};

struct Absolute {
  std::string lemma;

  bool operator==(const Absolute&) const = default;
};

using Program = std::variant<Rule, Absolute>;

Program parse(std::string_view label);
std::string serialize(const Program& program);

/// Case segments of `lemma`: one at 0, then one wherever a cased character
/// switches class. Caseless characters keep the running class.
CasingScript casing_script(std::u32string_view lemma);

/// Re-cases `lowered` in place according to `casing`. Segment starts past the
/// end are ignored.
void apply_casing(const CasingScript& casing, std::u32string& lowered);

SesLabel encode(std::string_view form, std::string_view lemma);
std::string decode(std::string_view form, const SesLabel& label);

}  // namespace ses::udpipe
