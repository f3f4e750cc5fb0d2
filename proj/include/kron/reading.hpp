#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kron/error.hpp"
#include "kron/orbit.hpp"
#include "kron/partition.hpp"
#include "kron/step.hpp"
#include "kron/tableau.hpp"

namespace kron {

/// The μ-reverse reading word: (step, frame) columns sorted by the step
/// order, equal steps with frames weakly decreasing.
struct ReadingWord {
  std::vector<std::pair<Step, int>> columns;

  std::vector<Step> steps() const {
    std::vector<Step> out;
    out.reserve(columns.size());
    for (const auto& [st, fr] : columns) out.push_back(st);
    return out;
  }

  std::vector<int> frames() const {
    std::vector<int> out;
    out.reserve(columns.size());
    for (const auto& [st, fr] : columns) out.push_back(fr);
    return out;
  }

  friend bool operator==(const ReadingWord&, const ReadingWord&) = default;
};

inline ReadingWord reading_word(const KroneckerTableau& t, const Partition& mu) {
  if (t.length() != mu.size()) throw Error(Errc::ShapeMismatch, "tableau length differs from |mu|");
  ReadingWord w;
  w.columns.reserve(static_cast<std::size_t>(t.length()));
  for (int k = 1; k <= t.length(); ++k) w.columns.emplace_back(t.step(k), frame_of(k, mu));
  std::sort(w.columns.begin(), w.columns.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  return w;
}

/// Independent of the member chosen when the orbit is semistandard.
inline ReadingWord reading_word(const WeightedOrbit& o) { return reading_word(o.representative(), o.weight()); }

/// Every prefix holds at least as many i as i+1, for all i ≥ 1.
inline bool is_lattice(std::span<const int> word) {
  std::vector<int> seen;
  for (int x : word) {
    if (x < 1) return false;
    if (seen.size() <= static_cast<std::size_t>(x)) seen.resize(static_cast<std::size_t>(x) + 1, 0);
    ++seen[static_cast<std::size_t>(x)];
    if (x > 1 && seen[static_cast<std::size_t>(x)] > seen[static_cast<std::size_t>(x - 1)]) return false;
  }
  return true;
}

inline bool is_lattice(const ReadingWord& w) {
  const auto f = w.frames();
  return is_lattice(std::span<const int>(f));
}

namespace detail {
inline void require_copieri_family(const Partition& lambda, const Partition& nu, const Partition& mu) {
  if (!classify(lambda, nu, mu).supported_by_copieri())
    throw Error(Errc::UnsupportedFamily, "(" + lambda.str() + "), (" + nu.str() + "), (" + mu.str() +
                                             ") is neither maximal-depth nor a one-row pair");
}
}  // namespace detail

/// Latt⁰_s(ν∖λ, μ): semistandard orbits whose reading word is a lattice
/// permutation.
inline std::vector<WeightedOrbit> enumerate_latt(const Partition& lambda, const Partition& nu, const Partition& mu) {
  detail::require_copieri_family(lambda, nu, mu);
  auto orbits = enumerate_sstd(lambda, nu, mu.size(), mu);
  std::erase_if(orbits, [](const WeightedOrbit& o) { return !is_lattice(reading_word(o)); });
  return orbits;
}

/// |Latt⁰| over a precomputed Std⁰ set (closed under swaps), for sweeps
/// that reuse one Std⁰ across many weights.
inline std::int64_t count_latt(const std::vector<KroneckerTableau>& std0, const Partition& mu) {
  std::int64_t n = 0;
  for (const auto& o : partition_into_orbits(std0, mu))
    if (is_semistandard(o) && is_lattice(reading_word(o))) ++n;
  return n;
}

/// ḡ(λ, ν, μ) as the number of latticed semistandard Kronecker tableaux.
/// Throws UnsupportedFamily outside the maximal-depth and one-row families.
inline std::int64_t stable_kronecker_copieri(const Partition& lambda, const Partition& nu, const Partition& mu) {
  return static_cast<std::int64_t>(enumerate_latt(lambda, nu, mu).size());
}

}  // namespace kron
