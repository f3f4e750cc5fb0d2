#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "kron/characters.hpp"
#include "kron/orbit.hpp"
#include "kron/reading.hpp"
#include "kron/tableau.hpp"

namespace kron {

/// One disagreement between the lattice count and an oracle.
struct Mismatch {
  Partition lambda;
  Partition nu;
  Partition mu;
  std::int64_t copieri = 0;
  std::int64_t oracle = 0;
  std::string check;
};

struct SweepResult {
  std::string name;
  int checked = 0;
  std::vector<Mismatch> mismatches;

  bool ok() const noexcept { return mismatches.empty(); }
};

/// Lattice count against c^ν_{λμ} for every λ ⊆ ν with |ν| ≤ max_nu and
/// every μ ⊢ |ν| − |λ|.
inline SweepResult verify_maximal_depth(int max_nu) {
  SweepResult out;
  out.name = "maximal-depth";
  for (const Partition& nu : partitions_up_to(max_nu)) {
    for (const Partition& lambda : partitions_up_to(nu.size())) {
      if (!contains(lambda, nu)) continue;
      const int s = nu.size() - lambda.size();
      const auto std0 = enumerate_std0(lambda, nu, s);
      for (const Partition& mu : partitions_of(s)) {
        const std::int64_t lattice = count_latt(std0, mu);
        const std::int64_t lr = lr_coefficient(lambda, mu, nu);
        ++out.checked;
        if (lattice != lr) out.mismatches.push_back({lambda, nu, mu, lattice, lr, "lr"});
      }
    }
  }
  return out;
}

/// Lattice count against the character-oracle stable limit for λ = (a),
/// ν = (b), 0 ≤ a, b ≤ max_part, and every μ with |μ| ≤ max_mu.
inline SweepResult verify_one_row(int max_part, int max_mu, CharacterTable& table = default_character_table()) {
  SweepResult out;
  out.name = "one-row";
  for (int a = 0; a <= max_part; ++a) {
    for (int b = 0; b <= max_part; ++b) {
      const Partition lambda = a ? Partition{a} : Partition{};
      const Partition nu = b ? Partition{b} : Partition{};
      for (int s = 0; s <= max_mu; ++s) {
        const auto std0 = enumerate_std0(lambda, nu, s);
        for (const Partition& mu : partitions_of(s)) {
          const std::int64_t lattice = count_latt(std0, mu);
          const std::int64_t oracle = stable_kronecker_oracle(lambda, nu, mu, table);
          ++out.checked;
          if (lattice != oracle) out.mismatches.push_back({lambda, nu, mu, lattice, oracle, "stable"});
        }
      }
    }
  }
  return out;
}

/// Every (λ, ν, s) the lattice count supports with |λ|, |ν| ≤ max_size and
/// s ≤ max_s, in a fixed order.
inline std::vector<std::tuple<Partition, Partition, int>> supported_triples(int max_size, int max_s) {
  std::vector<std::tuple<Partition, Partition, int>> out;
  const auto all = partitions_up_to(max_size);
  for (const Partition& lambda : all)
    for (const Partition& nu : all)
      for (int s = 0; s <= max_s; ++s)
        if (std0_family(lambda, nu, s)) out.emplace_back(lambda, nu, s);
  return out;
}

/// Two dimension identities per supported triple:
///   |SStd⁰_s(ν∖λ, μ)| = Σ_{β⊢s} ḡ(λ,ν,β) K_{βμ}   for every μ ⊢ s, and
///   Σ_{μ⊢s} |Latt⁰_s(ν∖λ, μ)| f^μ = |Std⁰_s(ν∖λ)|.
/// ḡ on the right of the first comes from the character oracle.
inline SweepResult verify_dims(int max_s, int max_size = 5, CharacterTable& table = default_character_table()) {
  SweepResult out;
  out.name = "dims";
  for (const auto& [lambda, nu, s] : supported_triples(max_size, max_s)) {
    const auto std0 = enumerate_std0(lambda, nu, s);
    const auto weights = partitions_of(s);
    std::map<Partition, std::int64_t> gbar;
    for (const Partition& beta : weights) gbar[beta] = stable_kronecker_oracle(lambda, nu, beta, table);

    std::int64_t weighted = 0;
    for (const Partition& mu : weights) {
      std::int64_t semistandard = 0;
      std::int64_t lattice = 0;
      for (const auto& o : partition_into_orbits(std0, mu)) {
        if (!is_semistandard(o)) continue;
        ++semistandard;
        if (is_lattice(reading_word(o))) ++lattice;
      }
      std::int64_t expected = 0;
      for (const Partition& beta : weights) expected += gbar[beta] * kostka(beta, mu);
      ++out.checked;
      if (semistandard != expected) out.mismatches.push_back({lambda, nu, mu, semistandard, expected, "sstd-dim"});
      weighted += lattice * static_cast<std::int64_t>(standard_count(mu));
    }
    ++out.checked;
    const auto total = static_cast<std::int64_t>(std0.size());
    if (weighted != total) out.mismatches.push_back({lambda, nu, Partition{}, weighted, total, "std0-dim"});
  }
  return out;
}

}  // namespace kron
