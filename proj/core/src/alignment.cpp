#include "ses/alignment.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "ses/error.hpp"

namespace ses {

namespace {

// Row-major (n+1) x (m+1) table of suffix costs: cell (i, j) holds the
// cheapest cost of turning a[i..] into b[j..].
class SuffixTable {
 public:
  SuffixTable(std::size_t n, std::size_t m) : cols_(m + 1), cells_((n + 1) * (m + 1), 0) {}

  unsigned& at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  unsigned at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

 private:
  std::size_t cols_;
  std::vector<unsigned> cells_;
};

}  // namespace

LcsResult longest_common_substring(std::u32string_view a, std::u32string_view b) {
  LcsResult best;
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = (a[i - 1] == b[j - 1]) ? prev[j - 1] + 1 : 0;
      const std::size_t len = cur[j];
      if (len == 0) continue;
      const std::size_t sa = i - len;
      const std::size_t sb = j - len;
      if (len > best.length ||
          (len == best.length &&
           (sa < best.start_in_a || (sa == best.start_in_a && sb < best.start_in_b)))) {
        best = {sa, sb, len};
      }
    }
    std::swap(prev, cur);
  }
  return best;
}

Alignment levenshtein_align(std::u32string_view a, std::u32string_view b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  SuffixTable cost(n, m);
  for (std::size_t i = n + 1; i-- > 0;) {
    for (std::size_t j = m + 1; j-- > 0;) {
      if (i == n) {
        cost.at(i, j) = static_cast<unsigned>(m - j);
      } else if (j == m) {
        cost.at(i, j) = static_cast<unsigned>(n - i);
      } else {
        const unsigned diag = cost.at(i + 1, j + 1) + (a[i] == b[j] ? 0u : 1u);
        cost.at(i, j) = std::min({diag, cost.at(i + 1, j) + 1, cost.at(i, j + 1) + 1});
      }
    }
  }

  Alignment ops;
  ops.reserve(std::max(n, m));
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    const unsigned here = cost.at(i, j);
    if (i < n && j < m && here == cost.at(i + 1, j + 1) + (a[i] == b[j] ? 0u : 1u)) {
      ops.push_back(a[i] == b[j] ? AlignOp::match(a[i]) : AlignOp::replace(a[i], b[j]));
      ++i;
      ++j;
    } else if (i < n && here == cost.at(i + 1, j) + 1) {
      ops.push_back(AlignOp::del(a[i]));
      ++i;
    } else {
      ops.push_back(AlignOp::insert(b[j]));
      ++j;
    }
  }
  return ops;
}

Alignment min_script_align(std::u32string_view a, std::u32string_view b,
                           unsigned insert_cost, unsigned delete_cost,
                           unsigned match_cost) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  SuffixTable cost(n, m);
  for (std::size_t i = n + 1; i-- > 0;) {
    for (std::size_t j = m + 1; j-- > 0;) {
      if (i == n && j == m) continue;
      unsigned best = ~0u;
      if (i < n && j < m && a[i] == b[j]) best = cost.at(i + 1, j + 1) + match_cost;
      if (i < n) best = std::min(best, cost.at(i + 1, j) + delete_cost);
      if (j < m) best = std::min(best, cost.at(i, j + 1) + insert_cost);
      cost.at(i, j) = best;
    }
  }

  Alignment ops;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    const unsigned here = cost.at(i, j);
    if (i < n && j < m && a[i] == b[j] && here == cost.at(i + 1, j + 1) + match_cost) {
      ops.push_back(AlignOp::match(a[i]));
      ++i;
      ++j;
    } else if (i < n && here == cost.at(i + 1, j) + delete_cost) {
      ops.push_back(AlignOp::del(a[i]));
      ++i;
    } else {
      ops.push_back(AlignOp::insert(b[j]));
      ++j;
    }
  }
  return ops;
}

std::size_t edit_count(const Alignment& alignment) noexcept {
  return static_cast<std::size_t>(std::count_if(
      alignment.begin(), alignment.end(),
      [](const AlignOp& op) { return op.kind != AlignKind::Match; }));
}

std::u32string replay(const Alignment& alignment, std::u32string_view a) {
  std::u32string out;
  std::size_t pos = 0;
  for (const AlignOp& op : alignment) {
    if (op.kind != AlignKind::Insert) {
      if (pos >= a.size()) throw Error(ErrorCode::LengthMismatch, "alignment consumes past the source");
      if (op.a_char != a[pos]) throw Error(ErrorCode::CharMismatch, "alignment disagrees with the source");
      ++pos;
    }
    if (op.kind != AlignKind::Delete) out.push_back(*op.b_char);
  }
  if (pos != a.size()) throw Error(ErrorCode::LengthMismatch, "alignment leaves source characters unconsumed");
  return out;
}

}  // namespace ses
