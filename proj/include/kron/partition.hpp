#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kron/error.hpp"

namespace kron {

/// An integer partition, stored without trailing zeros.
///
/// Rows are addressed 1-based through row(); row(i) is 0 past the last
/// part, which is how every box operation treats the diagram.
class Partition {
 public:
  Partition() = default;

  /// Accepts trailing zeros and strips them; throws InvalidPartition on a
  /// negative or increasing sequence.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1]))
        throw Error(Errc::InvalidPartition, "not a weakly decreasing sequence of positive parts");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& vec() const noexcept { return parts_; }

  int size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  int row(int i) const noexcept {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  int first_row() const noexcept { return row(1); }

  /// Comma-separated parts; the empty partition renders as "".
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(parts_[i]);
    }
    return out;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << '(' << p.str() << ')';
}

/// Strict parser for "a,b,c". The empty string and "0" denote the empty
/// partition; zero parts elsewhere, whitespace and increasing sequences are
/// rejected.
inline Partition parse_partition(std::string_view text) {
  if (text.empty() || text == "0") return {};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (tok.empty() || ec != std::errc{} || ptr != last)
      throw Error(Errc::ParseError, "bad partition text '" + std::string(text) + "'");
    if (value <= 0)
      throw Error(Errc::ParseError, "parts must be positive in '" + std::string(text) + "'");
    if (!parts.empty() && value > parts.back())
      throw Error(Errc::ParseError, "parts must be weakly decreasing in '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

inline bool contains(const Partition& inner, const Partition& outer) {
  if (inner.length() > outer.length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.row(i) > outer.row(i)) return false;
  return true;
}

inline Partition intersect(const Partition& a, const Partition& b) {
  std::vector<int> rows(static_cast<std::size_t>(std::min(a.length(), b.length())));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int r = static_cast<int>(i) + 1;
    rows[i] = std::min(a.row(r), b.row(r));
  }
  return Partition(std::move(rows));
}

enum class Dominance { Less, Equal, Greater, Incomparable };

constexpr std::string_view to_string(Dominance d) noexcept {
  switch (d) {
    case Dominance::Less: return "Less";
    case Dominance::Equal: return "Equal";
    case Dominance::Greater: return "Greater";
    case Dominance::Incomparable: return "Incomparable";
  }
  return "?";
}

/// Dominance of the padded partitions a_[n], b_[n] for n large.
///
/// For equal sizes this is the usual partial-sum order. Across sizes the
/// first row absorbs the difference, so a smaller partition sits higher;
/// this is the order on the vertices (lambda, k - |lambda|) of one level of
/// the branching graph. Concretely a ⊵ b iff every tail sum of a is at most
/// the corresponding tail sum of b.
inline Dominance dominance(const Partition& a, const Partition& b) {
  if (a == b) return Dominance::Equal;
  const int rows = std::max(a.length(), b.length());
  int tail_a = a.size();
  int tail_b = b.size();
  bool a_ge = true;
  bool b_ge = true;
  for (int j = 0; j <= rows; ++j) {
    if (j > 0) {
      tail_a -= a.row(j);
      tail_b -= b.row(j);
    }
    if (tail_a > tail_b) a_ge = false;
    if (tail_b > tail_a) b_ge = false;
  }
  if (a_ge) return Dominance::Greater;
  if (b_ge) return Dominance::Less;
  return Dominance::Incomparable;
}

/// λ_[n] = (n − |λ|, λ₁, λ₂, …).
inline Partition pad(const Partition& lambda, int n) {
  const int first = n - lambda.size();
  if (first < lambda.first_row())
    throw Error(Errc::FirstRowTooShort,
                "n = " + std::to_string(n) + " too small to pad (" + lambda.str() + ")");
  std::vector<int> rows;
  rows.reserve(static_cast<std::size_t>(lambda.length()) + 1);
  rows.push_back(first);
  rows.insert(rows.end(), lambda.parts().begin(), lambda.parts().end());
  return Partition(std::move(rows));
}

/// Smallest n for which pad(lambda, n) is a partition.
inline int min_pad(const Partition& lambda) { return lambda.size() + lambda.first_row(); }

/// The partition below the first row; inverse of pad.
inline Partition strip_first_row(const Partition& p) {
  if (p.empty()) return {};
  return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
}

/// Number of boxes below the first row.
inline int depth(const Partition& p) { return p.size() - p.first_row(); }

inline std::optional<Partition> add_box(const Partition& lambda, int i) {
  if (i < 1) throw Error(Errc::IndexOutOfRange, "row index must be >= 1");
  if (i > lambda.length() + 1) return std::nullopt;
  if (i > 1 && lambda.row(i - 1) <= lambda.row(i)) return std::nullopt;
  std::vector<int> rows = lambda.vec();
  if (i == lambda.length() + 1)
    rows.push_back(1);
  else
    ++rows[static_cast<std::size_t>(i - 1)];
  return Partition(std::move(rows));
}

inline std::optional<Partition> remove_box(const Partition& lambda, int i) {
  if (i < 1) throw Error(Errc::IndexOutOfRange, "row index must be >= 1");
  if (i > lambda.length()) return std::nullopt;
  if (lambda.row(i) - 1 < lambda.row(i + 1)) return std::nullopt;
  std::vector<int> rows = lambda.vec();
  --rows[static_cast<std::size_t>(i - 1)];
  return Partition(std::move(rows));
}

/// Skew shape outer∖inner; containment is a query, not an invariant.
struct SkewPair {
  Partition outer;
  Partition inner;

  bool contained() const { return contains(inner, outer); }
  int size() const { return outer.size() - inner.size(); }
};

/// True iff no column of outer∖inner holds two boxes.
inline bool horizontal_strip(const SkewPair& skew) {
  if (!skew.contained())
    throw Error(Errc::NotContained, "(" + skew.inner.str() + ") not inside (" + skew.outer.str() + ")");
  for (int i = 2; i <= skew.outer.length(); ++i)
    if (skew.outer.row(i) > skew.inner.row(i - 1)) return false;
  return true;
}

/// All partitions of n, in reverse lexicographic order starting with (n).
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(left, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// All partitions of size at most n, grouped by increasing size.
inline std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int m = 0; m <= n; ++m) {
    auto block = partitions_of(m);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

}  // namespace kron

template <>
struct std::hash<kron::Partition> {
  std::size_t operator()(const kron::Partition& p) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};
