#pragma once

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "kron/error.hpp"
#include "kron/partition.hpp"
#include "kron/tableau.hpp"

namespace kron {

/// Frame boundaries [μ]_c = μ₁ + ⋯ + μ_c for c = 1, …, ℓ(μ) − 1. Swaps at
/// these positions would move a step between frames.
inline std::vector<int> boundaries(const Partition& mu) {
  std::vector<int> out;
  int acc = 0;
  for (int c = 1; c < mu.length(); ++c) out.push_back(acc += mu.row(c));
  return out;
}

inline bool is_boundary(const Partition& mu, int k) {
  const auto b = boundaries(mu);
  return std::binary_search(b.begin(), b.end(), k);
}

/// The frame c with [μ]_{c−1} < k ≤ [μ]_c.
inline int frame_of(int k, const Partition& mu) {
  if (k < 1 || k > mu.size())
    throw Error(Errc::IndexOutOfRange, "step " + std::to_string(k) + " outside 1.." + std::to_string(mu.size()));
  int acc = 0;
  for (int c = 1; c <= mu.length(); ++c) {
    acc += mu.row(c);
    if (k <= acc) return c;
  }
  return mu.length();  // unreachable
}

/// Frame numbers of positions 1..|μ|.
inline std::vector<int> frames(const Partition& mu) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(mu.size()));
  for (int c = 1; c <= mu.length(); ++c) out.insert(out.end(), static_cast<std::size_t>(mu.row(c)), c);
  return out;
}

/// A ~μ class: tableaux related by swaps inside frames. Members are kept
/// sorted, so members.front() is the representative.
class WeightedOrbit {
 public:
  WeightedOrbit(Partition weight, std::vector<KroneckerTableau> members)
      : weight_(std::move(weight)), members_(std::move(members)) {
    if (members_.empty()) throw Error(Errc::ShapeMismatch, "an orbit has at least one member");
    std::sort(members_.begin(), members_.end());
  }

  const Partition& weight() const noexcept { return weight_; }
  const std::vector<KroneckerTableau>& members() const noexcept { return members_; }
  const KroneckerTableau& representative() const noexcept { return members_.front(); }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  int length() const noexcept { return representative().length(); }

  bool contains(const KroneckerTableau& t) const { return std::binary_search(members_.begin(), members_.end(), t); }

  friend bool operator==(const WeightedOrbit& a, const WeightedOrbit& b) {
    return a.weight_ == b.weight_ && a.representative() == b.representative();
  }
  friend auto operator<=>(const WeightedOrbit& a, const WeightedOrbit& b) {
    if (auto c = a.weight_ <=> b.weight_; c != 0) return c;
    return a.representative() <=> b.representative();
  }

 private:
  Partition weight_;
  std::vector<KroneckerTableau> members_;
};

/// Closure of t under the defined swaps at non-boundary positions.
inline WeightedOrbit orbit_of(const KroneckerTableau& t, const Partition& mu) {
  if (t.length() != mu.size())
    throw Error(Errc::ShapeMismatch, "tableau of length " + std::to_string(t.length()) + " with weight of size " +
                                         std::to_string(mu.size()));
  const auto cut = boundaries(mu);
  std::set<KroneckerTableau> seen{t};
  std::deque<KroneckerTableau> queue{t};
  while (!queue.empty()) {
    const KroneckerTableau cur = std::move(queue.front());
    queue.pop_front();
    for (int k = 1; k < cur.length(); ++k) {
      if (std::binary_search(cut.begin(), cut.end(), k)) continue;
      auto next = swap(cur, k);
      if (next && seen.insert(*next).second) queue.push_back(std::move(*next));
    }
  }
  return WeightedOrbit(mu, std::vector<KroneckerTableau>(seen.begin(), seen.end()));
}

/// Every member admits every swap inside a frame.
inline bool is_semistandard(const WeightedOrbit& o) {
  const auto cut = boundaries(o.weight());
  for (const auto& m : o.members())
    for (int k = 1; k < m.length(); ++k)
      if (!std::binary_search(cut.begin(), cut.end(), k) && !swap(m, k)) return false;
  return true;
}

/// Splits a set of tableaux of length |μ| into ~μ classes, ordered by
/// representative. Tableaux outside the input set are never added, so the
/// input must be closed under swaps (Std and Std⁰ both are).
inline std::vector<WeightedOrbit> partition_into_orbits(const std::vector<KroneckerTableau>& tableaux,
                                                        const Partition& mu) {
  std::vector<WeightedOrbit> out;
  std::set<KroneckerTableau> assigned;
  std::vector<KroneckerTableau> sorted = tableaux;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& t : sorted) {
    if (assigned.contains(t)) continue;
    WeightedOrbit o = orbit_of(t, mu);
    assigned.insert(o.members().begin(), o.members().end());
    out.push_back(std::move(o));
  }
  return out;
}

/// All ~μ classes of Std⁰_s(ν∖λ), semistandard or not.
inline std::vector<WeightedOrbit> enumerate_orbits(const Partition& lambda, const Partition& nu, int s,
                                                   const Partition& mu) {
  if (mu.size() != s)
    throw Error(Errc::SizeMismatch, "|mu| = " + std::to_string(mu.size()) + " but s = " + std::to_string(s));
  return partition_into_orbits(enumerate_std0(lambda, nu, s), mu);
}

/// SStd⁰_s(ν∖λ, μ), one entry per orbit, ordered by representative.
inline std::vector<WeightedOrbit> enumerate_sstd(const Partition& lambda, const Partition& nu, int s,
                                                 const Partition& mu) {
  auto orbits = enumerate_orbits(lambda, nu, s, mu);
  std::erase_if(orbits, [](const WeightedOrbit& o) { return !is_semistandard(o); });
  return orbits;
}

/// A filling of the skew diagram ν/λ; cells of λ hold 0.
struct ClassicalFilling {
  std::vector<std::vector<int>> rows;

  /// Weakly increasing along rows, strictly increasing down columns
  /// (cells of the inner shape are ignored).
  bool semistandard() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        const int v = rows[i][j];
        if (v == 0) continue;
        if (j > 0 && rows[i][j - 1] != 0 && rows[i][j - 1] > v) return false;
        if (i > 0 && j < rows[i - 1].size() && rows[i - 1][j] != 0 && rows[i - 1][j] >= v) return false;
      }
    }
    return true;
  }

  /// Rows joined by " / ", inner cells shown as '.'.
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i) out += " / ";
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (j) out += ',';
        out += rows[i][j] == 0 ? std::string(".") : std::to_string(rows[i][j]);
      }
    }
    return out;
  }

  friend bool operator==(const ClassicalFilling&, const ClassicalFilling&) = default;
};

/// The box added at step k gets entry frame_of(k, μ). Only meaningful when
/// every step adds a box; otherwise throws NotMaximalDepth.
inline ClassicalFilling to_classical(const KroneckerTableau& t, const Partition& mu) {
  if (t.length() != mu.size()) throw Error(Errc::ShapeMismatch, "tableau length differs from |mu|");
  ClassicalFilling f;
  for (int i = 1; i <= t.start().length(); ++i) f.rows.emplace_back(static_cast<std::size_t>(t.start().row(i)), 0);
  for (int k = 1; k <= t.length(); ++k) {
    const Step& st = t.step(k);
    if (st.remove_row != 0 || st.add_row == 0)
      throw Error(Errc::NotMaximalDepth, "step " + st.str() + " does not add a box");
    const auto row = static_cast<std::size_t>(st.add_row - 1);
    if (f.rows.size() <= row) f.rows.resize(row + 1);
    f.rows[row].push_back(frame_of(k, mu));
  }
  return f;
}

inline ClassicalFilling to_classical(const WeightedOrbit& o) { return to_classical(o.representative(), o.weight()); }

}  // namespace kron
