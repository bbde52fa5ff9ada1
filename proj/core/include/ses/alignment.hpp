#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ses {

struct LcsResult {
  std::size_t start_in_a = 0;
  std::size_t start_in_b = 0;
  std::size_t length = 0;

  bool operator==(const LcsResult&) const = default;
};

/// Longest common substring. Among equally long spans the one with the
/// smallest start in `a` wins, then the smallest start in `b`. Returns
/// {0, 0, 0} when no character is shared.
LcsResult longest_common_substring(std::u32string_view a, std::u32string_view b);

enum class AlignKind { Match, Replace, Delete, Insert };

struct AlignOp {
  AlignKind kind = AlignKind::Match;
  std::optional<char32_t> a_char;  // Match, Replace, Delete
  std::optional<char32_t> b_char;  // Match, Replace, Insert

  static AlignOp match(char32_t c) { return {AlignKind::Match, c, c}; }
  static AlignOp replace(char32_t from, char32_t to) { return {AlignKind::Replace, from, to}; }
  static AlignOp del(char32_t c) { return {AlignKind::Delete, c, std::nullopt}; }
  static AlignOp insert(char32_t c) { return {AlignKind::Insert, std::nullopt, c}; }

  bool operator==(const AlignOp&) const = default;
};

using Alignment = std::vector<AlignOp>;

/// Unit-cost Levenshtein alignment of `a` into `b`.
///
/// The optimal path is read from the start of both strings. At each point the
/// first optimal move in the order diagonal (match or replace), delete, insert
/// is taken, so edits are pushed as far right as the optimum allows:
/// ("did", "do") gives match d, replace i->o, delete d.
Alignment levenshtein_align(std::u32string_view a, std::u32string_view b);

/// Match/delete/insert-only alignment minimising
/// match_cost * #match + delete_cost * #delete + insert_cost * #insert.
/// Ties are read from the start, preferring match, then delete, then insert,
/// so deletions precede insertions at every alignment point.
Alignment min_script_align(std::u32string_view a, std::u32string_view b,
                           unsigned insert_cost, unsigned delete_cost,
                           unsigned match_cost);

/// Number of non-match operations.
std::size_t edit_count(const Alignment& alignment) noexcept;

/// Applies the alignment to its source and returns the target side. Throws
/// Error(LengthMismatch) when the ops do not consume `a` exactly or
/// Error(CharMismatch) when a consumed character disagrees.
std::u32string replay(const Alignment& alignment, std::u32string_view a);

}  // namespace ses
