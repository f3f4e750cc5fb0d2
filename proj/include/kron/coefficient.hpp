#pragma once

#include <cstdint>
#include <string_view>

#include "kron/characters.hpp"
#include "kron/reading.hpp"
#include "kron/tableau.hpp"

namespace kron {

enum class Method { CoPieri, Oracle, Auto };

constexpr std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::CoPieri: return "copieri";
    case Method::Oracle: return "oracle";
    case Method::Auto: return "auto";
  }
  return "?";
}

struct Coefficient {
  std::int64_t value = 0;
  Method provenance = Method::CoPieri;  // never Auto
  Classification triple;
};

/// ḡ(λ, ν, μ) by the requested engine. Auto uses the lattice count when the
/// triple is supported and the character oracle otherwise; CoPieri throws
/// UnsupportedFamily instead of falling back. The result always names the
/// engine that produced it.
inline Coefficient stable_kronecker(const Partition& lambda, const Partition& nu, const Partition& mu,
                                    Method method = Method::Auto,
                                    CharacterTable& table = default_character_table()) {
  Coefficient out;
  out.triple = classify(lambda, nu, mu);
  const bool copieri = method == Method::CoPieri || (method == Method::Auto && out.triple.supported_by_copieri());
  if (copieri) {
    out.value = stable_kronecker_copieri(lambda, nu, mu);
    out.provenance = Method::CoPieri;
  } else {
    out.value = stable_kronecker_oracle(lambda, nu, mu, table);
    out.provenance = Method::Oracle;
  }
  return out;
}

}  // namespace kron
