#pragma once

#include <charconv>
#include <compare>
#include <string>
#include <string_view>
#include <tuple>

#include "kron/error.hpp"

namespace kron {

enum class StepKind { MoveUp, Dummy, MoveDown };

/// One integral step (−ε_p, +ε_q) of the branching graph: remove a box from
/// row p, then add a box to row q. Row 0 means "nothing at this half".
///
/// The ordering operators realize the total order used for reading words:
/// every move-up precedes every dummy, which precedes every move-down.
/// Within move-ups (p > q): smaller q first, then larger p first.
/// Within dummies: larger row first, so d(5) < d(1) < d(0).
/// Within move-downs (p < q): larger p first, then smaller q first,
/// so a(1) < a(2) and m(2,3) < a(1).
struct Step {
  int remove_row = 0;
  int add_row = 0;

  static constexpr Step a(int i) { return {0, i}; }
  static constexpr Step r(int i) { return {i, 0}; }
  static constexpr Step d(int i) { return {i, i}; }

  constexpr StepKind kind() const noexcept {
    if (remove_row > add_row) return StepKind::MoveUp;
    if (remove_row == add_row) return StepKind::Dummy;
    return StepKind::MoveDown;
  }

  /// Net change in the number of boxes: -1, 0 or +1.
  constexpr int delta() const noexcept { return (add_row > 0 ? 1 : 0) - (remove_row > 0 ? 1 : 0); }

  /// "a2", "r1", "d0", or "m(p,q)" for the remaining moves.
  std::string str() const {
    if (remove_row == 0 && add_row > 0) return "a" + std::to_string(add_row);
    if (add_row == 0 && remove_row > 0) return "r" + std::to_string(remove_row);
    if (remove_row == add_row) return "d" + std::to_string(remove_row);
    return "m(" + std::to_string(remove_row) + "," + std::to_string(add_row) + ")";
  }

  friend constexpr bool operator==(const Step&, const Step&) = default;

  friend constexpr std::strong_ordering operator<=>(const Step& x, const Step& y) noexcept {
    return x.order_key() <=> y.order_key();
  }

 private:
  constexpr std::tuple<int, int, int> order_key() const noexcept {
    switch (kind()) {
      case StepKind::MoveUp: return {0, add_row, -remove_row};
      case StepKind::Dummy: return {1, -remove_row, 0};
      case StepKind::MoveDown: return {2, -remove_row, add_row};
    }
    return {3, 0, 0};
  }
};

constexpr std::strong_ordering step_compare(const Step& a, const Step& b) noexcept { return a <=> b; }

constexpr std::string_view to_string(StepKind k) noexcept {
  switch (k) {
    case StepKind::MoveUp: return "move-up";
    case StepKind::Dummy: return "dummy";
    case StepKind::MoveDown: return "move-down";
  }
  return "?";
}

namespace detail {
inline int parse_row(std::string_view tok, std::string_view whole) {
  int v = -1;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0)
    throw Error(Errc::ParseError, "bad step '" + std::string(whole) + "'");
  return v;
}
}  // namespace detail

/// Inverse of Step::str().
inline Step parse_step(std::string_view text) {
  if (text.size() >= 2 && (text[0] == 'a' || text[0] == 'r' || text[0] == 'd')) {
    const int i = detail::parse_row(text.substr(1), text);
    if (text[0] == 'a') {
      if (i == 0) throw Error(Errc::ParseError, "a0 is written d0");
      return Step::a(i);
    }
    if (text[0] == 'r') {
      if (i == 0) throw Error(Errc::ParseError, "r0 is written d0");
      return Step::r(i);
    }
    return Step::d(i);
  }
  if (text.size() >= 6 && text.substr(0, 2) == "m(" && text.back() == ')') {
    const std::string_view body = text.substr(2, text.size() - 3);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw Error(Errc::ParseError, "bad step '" + std::string(text) + "'");
    return {detail::parse_row(body.substr(0, comma), text), detail::parse_row(body.substr(comma + 1), text)};
  }
  throw Error(Errc::ParseError, "bad step '" + std::string(text) + "'");
}

}  // namespace kron
