#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "kron/error.hpp"
#include "kron/partition.hpp"

namespace kron {

using BigInt = boost::multiprecision::cpp_int;
using Int128 = __int128;

// --- checked 128-bit arithmetic -------------------------------------------

inline Int128 checked_add(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "128-bit addition");
  return r;
}

inline Int128 checked_mul(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "128-bit multiplication");
  return r;
}

inline BigInt to_big(Int128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  BigInt out = static_cast<std::uint64_t>(u >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(u);
  return neg ? BigInt(-out) : out;
}

inline Int128 to_int128(const BigInt& v) {
  static const BigInt kMax = (BigInt(1) << 126);
  if (v >= kMax || v <= -kMax) throw Error(Errc::Overflow, "value does not fit in 128 bits");
  const bool neg = v < 0;
  const BigInt a = neg ? BigInt(-v) : v;
  const auto hi = static_cast<std::uint64_t>(a >> 64);
  const auto lo = static_cast<std::uint64_t>(a & BigInt(0xFFFFFFFFFFFFFFFFULL));
  const Int128 u = (static_cast<Int128>(hi) << 64) | static_cast<Int128>(lo);
  return neg ? -u : u;
}

inline std::string to_string(Int128 v) { return to_big(v).str(); }

inline BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// --- cycle types ----------------------------------------------------------

/// A conjugacy class of the symmetric group, by its cycle lengths.
struct CycleType {
  Partition rho;

  int n() const { return rho.size(); }

  /// Centralizer order z_ρ = Π i^{m_i} · m_i!.
  BigInt z() const {
    BigInt out = 1;
    const auto& parts = rho.vec();
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      const int mult = static_cast<int>(j - i);
      for (int m = 0; m < mult; ++m) out *= parts[i];
      out *= factorial(mult);
      i = j;
    }
    return out;
  }

  BigInt class_size() const { return factorial(n()) / z(); }
};

/// f^λ by the hook length formula.
inline BigInt standard_count(const Partition& lambda) {
  BigInt hooks = 1;
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.row(i); ++j) {
      int below = 0;
      for (int k = i + 1; k <= lambda.length() && lambda.row(k) >= j; ++k) ++below;
      hooks *= (lambda.row(i) - j) + below + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

// --- Murnaghan–Nakayama with a shared memo table ---------------------------

/// Memoized χ^λ_ρ via the Murnaghan–Nakayama rule, stripping the largest
/// cycle first. Keys are (partition, remaining cycle type); every entry is
/// itself a character value, so racing inserts always agree.
///
/// Lookups take a shared lock, inserts an exclusive one.
class CharacterTable {
 public:
  /// χ^λ_ρ; throws SizeMismatch if |λ| ≠ |ρ|.
  Int128 character(const Partition& lambda, const Partition& rho) {
    if (lambda.size() != rho.size())
      throw Error(Errc::SizeMismatch, "|(" + lambda.str() + ")| != |(" + rho.str() + ")|");
    return eval(lambda.vec(), rho.parts());
  }

  Int128 character(const Partition& lambda, const CycleType& rho) { return character(lambda, rho.rho); }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return memo_.size();
  }

  void clear() {
    std::unique_lock lock(mutex_);
    memo_.clear();
  }

  /// Merges entries from a "partition|cycletype|value" file. Missing files
  /// are ignored; malformed lines throw ParseError.
  void load(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) return;
    std::string line;
    std::unique_lock lock(mutex_);
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto a = line.find('|');
      const auto b = a == std::string::npos ? a : line.find('|', a + 1);
      if (b == std::string::npos) throw Error(Errc::ParseError, "cache line '" + line + "'");
      const Partition lambda = parse_partition(std::string_view(line).substr(0, a));
      const Partition rho = parse_partition(std::string_view(line).substr(a + 1, b - a - 1));
      BigInt value;
      try {
        value = BigInt(line.substr(b + 1));
      } catch (const std::exception&) {
        throw Error(Errc::ParseError, "cache line '" + line + "'");
      }
      memo_[key(lambda.vec(), rho.parts())] = to_int128(value);
    }
  }

  /// Writes every entry as "partition|cycletype|value", one per line, with
  /// lines sorted.
  void save(const std::filesystem::path& file) const {
    std::vector<std::string> lines;
    {
      std::shared_lock lock(mutex_);
      lines.reserve(memo_.size());
      for (const auto& [k, v] : memo_) lines.push_back(decode(k) + "|" + to_string(v));
    }
    std::sort(lines.begin(), lines.end());
    std::ofstream out(file, std::ios::trunc);
    if (!out) throw Error(Errc::ParseError, "cannot write " + file.string());
    for (const auto& l : lines) out << l << '\n';
  }

 private:
  static void append_parts(std::string& k, std::span<const int> parts) {
    for (int x : parts) {
      if (x <= 0 || x > 0xFFFF) throw Error(Errc::Overflow, "part too large for the character cache");
      k.push_back(static_cast<char>(x >> 8));
      k.push_back(static_cast<char>(x & 0xFF));
    }
  }

  static std::string key(std::span<const int> lambda, std::span<const int> rho) {
    std::string k;
    k.reserve(2 * (lambda.size() + rho.size() + 1));
    append_parts(k, lambda);
    k.push_back('\0');
    k.push_back('\0');
    append_parts(k, rho);
    return k;
  }

  static std::string decode(const std::string& k) {
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i + 1 < k.size(); i += 2) {
      const int x = (static_cast<unsigned char>(k[i]) << 8) | static_cast<unsigned char>(k[i + 1]);
      if (x == 0) {
        out += '|';
        first = true;
        continue;
      }
      if (!first) out += ',';
      out += std::to_string(x);
      first = false;
    }
    return out;
  }

  Int128 eval(const std::vector<int>& lambda, std::span<const int> rho) {
    if (rho.empty()) return lambda.empty() ? 1 : 0;
    const std::string k = key(lambda, rho);
    {
      std::shared_lock lock(mutex_);
      if (auto it = memo_.find(k); it != memo_.end()) return it->second;
    }
    Int128 value = 0;
    if (rho.front() == 1) {
      value = to_int128(standard_count(Partition(lambda)));
    } else {
      const int cycle = rho.front();
      const auto rest = rho.subspan(1);
      const int len = static_cast<int>(lambda.size());
      std::vector<int> beta(lambda.size());
      for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + (len - 1 - i);
      for (int i = 0; i < len; ++i) {
        const int from = beta[static_cast<std::size_t>(i)];
        const int to = from - cycle;
        if (to < 0 || std::find(beta.begin(), beta.end(), to) != beta.end()) continue;
        // beads passed over give the leg length of the removed rim hook
        int passed = 0;
        for (int b : beta)
          if (b > to && b < from) ++passed;
        std::vector<int> moved = beta;
        moved[static_cast<std::size_t>(i)] = to;
        std::sort(moved.begin(), moved.end(), std::greater<>());
        std::vector<int> smaller;
        smaller.reserve(moved.size());
        for (int j = 0; j < len; ++j) {
          const int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
          if (part > 0) smaller.push_back(part);
        }
        const Int128 sub = eval(smaller, rest);
        value = checked_add(value, (passed % 2 == 0) ? sub : -sub);
      }
    }
    std::unique_lock lock(mutex_);
    memo_.emplace(k, value);
    return value;
  }

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Int128> memo_;
};

inline CharacterTable& default_character_table() {
  static CharacterTable table;
  return table;
}

inline Int128 character(const Partition& lambda, const Partition& rho,
                        CharacterTable& table = default_character_table()) {
  return table.character(lambda, rho);
}

// --- Kronecker coefficients ----------------------------------------------

/// g(a, b, c) = Σ_ρ χ^a_ρ χ^b_ρ χ^c_ρ / z_ρ, summed exactly.
inline std::int64_t kronecker(const Partition& a, const Partition& b, const Partition& c,
                              CharacterTable& table = default_character_table()) {
  if (a.size() != b.size() || a.size() != c.size())
    throw Error(Errc::SizeMismatch, "Kronecker arguments must have equal sizes");
  const int n = a.size();
  const BigInt order = factorial(n);
  BigInt total = 0;
  for (const Partition& rho : partitions_of(n)) {
    const Int128 xa = table.character(a, rho);
    if (xa == 0) continue;
    const Int128 xb = table.character(b, rho);
    if (xb == 0) continue;
    const Int128 xc = table.character(c, rho);
    if (xc == 0) continue;
    total += to_big(xa) * to_big(xb) * to_big(xc) * CycleType{rho}.class_size();
  }
  BigInt quotient;
  BigInt remainder;
  boost::multiprecision::divide_qr(total, order, quotient, remainder);
  if (remainder != 0 || quotient < 0) throw Error(Errc::Overflow, "character sum is not a nonnegative integer");
  return static_cast<std::int64_t>(quotient);
}

/// g(λ_[n], ν_[n], μ_[n]); throws FirstRowTooShort if some padding fails.
inline std::int64_t padded_kronecker(const Partition& lambda, const Partition& nu, const Partition& mu, int n,
                                     CharacterTable& table = default_character_table()) {
  return kronecker(pad(lambda, n), pad(nu, n), pad(mu, n), table);
}

/// |λ| + |ν| + |μ| + max(λ₁, ν₁, μ₁): the oracle never reports a limit
/// before this size.
inline int stability_bound(const Partition& lambda, const Partition& nu, const Partition& mu) {
  return lambda.size() + nu.size() + mu.size() + std::max({lambda.first_row(), nu.first_row(), mu.first_row()});
}

/// Smallest n for which all three paddings are partitions.
inline int first_valid_padding(const Partition& lambda, const Partition& nu, const Partition& mu) {
  return std::max({min_pad(lambda), min_pad(nu), min_pad(mu)});
}

struct StableReport {
  std::int64_t value = 0;
  /// (n, g(λ_[n], ν_[n], μ_[n])) for every n evaluated, increasing.
  std::vector<std::pair<int, std::int64_t>> sequence;
};

/// ḡ(λ, ν, μ) as the limit of padded Kronecker coefficients: evaluates
/// increasing n until two consecutive values agree at some n at or past
/// stability_bound. Only the last two values decide the stopping point, so
/// evaluation starts at stability_bound − 1 (or the first valid n).
inline StableReport stable_kronecker_report(const Partition& lambda, const Partition& nu, const Partition& mu,
                                            CharacterTable& table = default_character_table()) {
  const int bound = stability_bound(lambda, nu, mu);
  int n = std::max(first_valid_padding(lambda, nu, mu), bound - 1);
  StableReport report;
  report.sequence.emplace_back(n, padded_kronecker(lambda, nu, mu, n, table));
  for (int guard = 0; guard < 256; ++guard) {
    ++n;
    const std::int64_t v = padded_kronecker(lambda, nu, mu, n, table);
    const std::int64_t prev = report.sequence.back().second;
    report.sequence.emplace_back(n, v);
    if (v == prev && n >= bound) {
      report.value = v;
      return report;
    }
  }
  throw Error(Errc::Overflow, "padded Kronecker sequence did not settle");
}

inline std::int64_t stable_kronecker_oracle(const Partition& lambda, const Partition& nu, const Partition& mu,
                                            CharacterTable& table = default_character_table()) {
  return stable_kronecker_report(lambda, nu, mu, table).value;
}

/// g(λ_[n], ν_[n], μ_[n]) for n in [from, to]; n below the first valid
/// padding are skipped.
inline std::vector<std::pair<int, std::int64_t>> padded_kronecker_sequence(
    const Partition& lambda, const Partition& nu, const Partition& mu, int from, int to,
    CharacterTable& table = default_character_table()) {
  std::vector<std::pair<int, std::int64_t>> out;
  for (int n = std::max(from, first_valid_padding(lambda, nu, mu)); n <= to; ++n)
    out.emplace_back(n, padded_kronecker(lambda, nu, mu, n, table));
  return out;
}

// --- classical tableau counts --------------------------------------------

/// c^ν_{λμ}: column-strict fillings of ν/λ with content μ whose reverse
/// reading word (rows top to bottom, each right to left) is a lattice word.
inline std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() + mu.size() != nu.size() || !contains(lambda, nu)) return 0;
  if (mu.empty()) return 1;
  struct Cell {
    int row;
    int col;
  };
  std::vector<Cell> order;
  for (int i = 1; i <= nu.length(); ++i)
    for (int j = nu.row(i); j > lambda.row(i); --j) order.push_back({i, j});
  // filling[i][j], 1-based, 0 = inner cell or not yet filled
  std::vector<std::vector<int>> fill(static_cast<std::size_t>(nu.length()) + 2,
                                     std::vector<int>(static_cast<std::size_t>(nu.first_row()) + 2, 0));
  std::vector<int> used(static_cast<std::size_t>(mu.length()) + 2, 0);
  std::int64_t count = 0;
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      ++count;
      return;
    }
    const auto [i, j] = order[idx];
    const int right = fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) + 1];
    const int above = fill[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j)];
    for (int v = 1; v <= mu.length(); ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (used[vi] >= mu.row(v)) continue;
      if (v > 1 && used[vi] + 1 > used[vi - 1]) continue;
      if (right != 0 && right < v) continue;
      if (above != 0 && above >= v) continue;
      fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
      ++used[vi];
      self(self, idx + 1);
      --used[vi];
      fill[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
    }
  };
  rec(rec, 0);
  return count;
}

/// K_{β,content}: semistandard tableaux of shape β whose content is the
/// given composition (zeros allowed), built one horizontal strip per value.
inline std::int64_t kostka(const Partition& beta, std::span<const int> content) {
  int total = 0;
  for (int c : content) {
    if (c < 0) throw Error(Errc::SizeMismatch, "negative content entry");
    total += c;
  }
  if (total != beta.size())
    throw Error(Errc::SizeMismatch, "|(" + beta.str() + ")| != content size " + std::to_string(total));
  const int rows = beta.length();
  std::int64_t count = 0;
  std::vector<int> shape(static_cast<std::size_t>(rows), 0);
  // place content[v] boxes as a horizontal strip, row by row
  auto strip = [&](auto&& self, std::size_t value, int row, int left, const std::vector<int>& before) -> void {
    if (row > rows) {
      if (left != 0) return;
      if (value + 1 == content.size()) {
        ++count;
        return;
      }
      const std::vector<int> snapshot = shape;
      self(self, value + 1, 1, content[value + 1], snapshot);
      return;
    }
    const auto r = static_cast<std::size_t>(row - 1);
    const int cap = std::min(beta.row(row), row == 1 ? beta.row(1) : before[r - 1]);
    for (int add = 0; add <= std::min(left, cap - before[r]); ++add) {
      shape[r] = before[r] + add;
      self(self, value, row + 1, left - add, before);
    }
    shape[r] = before[r];
  };
  if (content.empty()) return beta.empty() ? 1 : 0;
  const std::vector<int> empty = shape;
  strip(strip, 0, 1, content[0], empty);
  return count;
}

inline std::int64_t kostka(const Partition& beta, const Partition& mu) { return kostka(beta, mu.parts()); }

/// Standard fillings of outer/inner, by peeling removable corners.
inline std::int64_t skew_standard_count(const Partition& outer, const Partition& inner) {
  if (!contains(inner, outer)) return 0;
  std::map<Partition, std::int64_t> memo;
  auto rec = [&](auto&& self, const Partition& cur) -> std::int64_t {
    if (cur == inner) return 1;
    if (auto it = memo.find(cur); it != memo.end()) return it->second;
    std::int64_t total = 0;
    for (int i = 1; i <= cur.length(); ++i) {
      auto smaller = remove_box(cur, i);
      if (smaller && contains(inner, *smaller)) total += self(self, *smaller);
    }
    memo.emplace(cur, total);
    return total;
  };
  return rec(rec, outer);
}

}  // namespace kron
