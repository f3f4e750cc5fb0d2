#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kron/error.hpp"
#include "kron/partition.hpp"
#include "kron/step.hpp"

namespace kron {

/// Separator between steps in tableau text ("r1·d1·a1").
inline constexpr std::string_view kStepSeparator = "\xC2\xB7";
/// Text for the path with no steps.
inline constexpr std::string_view kEmptyPath = "\xCE\xB5";

/// Removes a box from row p (if p > 0), then adds one to row q (if q > 0).
/// nullopt when either half leaves the set of partitions, i.e. the edge is
/// not in the branching graph.
inline std::optional<Partition> apply_step(const Partition& lambda, Step st) {
  if (st.remove_row < 0 || st.add_row < 0) return std::nullopt;
  Partition mid = lambda;
  if (st.remove_row > 0) {
    auto r = remove_box(lambda, st.remove_row);
    if (!r) return std::nullopt;
    mid = std::move(*r);
  }
  if (st.add_row == 0) return mid;
  return add_box(mid, st.add_row);
}

/// A path in the branching graph, stored as its start and integral steps.
/// Intermediate partitions are recomputed on demand.
class KroneckerTableau {
 public:
  KroneckerTableau() = default;

  /// Throws InvalidPath if some step leaves the branching graph.
  KroneckerTableau(Partition start, std::vector<Step> steps)
      : start_(std::move(start)), steps_(std::move(steps)) {
    if (!walk()) throw Error(Errc::InvalidPath, str() + " from (" + start_.str() + ")");
  }

  static std::optional<KroneckerTableau> make(Partition start, std::vector<Step> steps) {
    KroneckerTableau t;
    t.start_ = std::move(start);
    t.steps_ = std::move(steps);
    if (!t.walk()) return std::nullopt;
    return t;
  }

  const Partition& start() const noexcept { return start_; }
  std::span<const Step> steps() const noexcept { return steps_; }
  const Step& step(int k) const { return steps_.at(static_cast<std::size_t>(k - 1)); }
  int length() const noexcept { return static_cast<int>(steps_.size()); }

  /// Partitions 𝔱(0), 𝔱(1), …, 𝔱(s) at the integer levels.
  std::vector<Partition> levels() const {
    std::vector<Partition> out;
    out.reserve(steps_.size() + 1);
    out.push_back(start_);
    for (const Step& st : steps_) out.push_back(*apply_step(out.back(), st));
    return out;
  }

  /// 𝔱(k), 0 ≤ k ≤ s.
  Partition level(int k) const {
    if (k < 0 || k > length()) throw Error(Errc::IndexOutOfRange, "level " + std::to_string(k));
    Partition p = start_;
    for (int i = 0; i < k; ++i) p = *apply_step(p, steps_[static_cast<std::size_t>(i)]);
    return p;
  }

  /// 𝔱(k − ½), 1 ≤ k ≤ s: the partition after the removal half of step k.
  Partition half_level(int k) const {
    if (k < 1 || k > length()) throw Error(Errc::IndexOutOfRange, "half level " + std::to_string(k));
    Partition p = level(k - 1);
    const int row = steps_[static_cast<std::size_t>(k - 1)].remove_row;
    return row > 0 ? *remove_box(p, row) : p;
  }

  Partition end() const { return level(length()); }

  /// Number of steps whose removal half takes a box away.
  int removal_count() const {
    return static_cast<int>(std::count_if(steps_.begin(), steps_.end(),
                                          [](const Step& s) { return s.remove_row > 0; }));
  }

  std::string str() const {
    if (steps_.empty()) return std::string(kEmptyPath);
    std::string out;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      if (i) out += kStepSeparator;
      out += steps_[i].str();
    }
    return out;
  }

  friend bool operator==(const KroneckerTableau&, const KroneckerTableau&) = default;

  /// Start first, then the steps lexicographically under the step order.
  /// This is the deterministic enumeration order.
  friend std::strong_ordering operator<=>(const KroneckerTableau& a, const KroneckerTableau& b) {
    if (auto c = a.start_ <=> b.start_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.steps_.begin(), a.steps_.end(), b.steps_.begin(),
                                                  b.steps_.end());
  }

 private:
  bool walk() const {
    Partition p = start_;
    for (const Step& st : steps_) {
      auto next = apply_step(p, st);
      if (!next) return false;
      p = std::move(*next);
    }
    return true;
  }

  Partition start_;
  std::vector<Step> steps_;
};

/// Parses "r1·d1·a1" (also accepts '.' as separator; "" or "ε" is the
/// empty path). Throws InvalidPath if the steps are not a path from start.
inline std::ostream& operator<<(std::ostream& os, const KroneckerTableau& t) {
  return os << "(" << t.start().str() << ") " << t.str();
}

inline KroneckerTableau parse_tableau(const Partition& start, std::string_view text) {
  std::vector<Step> steps;
  if (!text.empty() && text != kEmptyPath) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(kStepSeparator, pos);
      std::size_t sep_len = kStepSeparator.size();
      const std::size_t dot = text.find('.', pos);
      if (dot != std::string_view::npos && (next == std::string_view::npos || dot < next)) {
        next = dot;
        sep_len = 1;
      }
      steps.push_back(parse_step(text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos)));
      if (next == std::string_view::npos) break;
      pos = next + sep_len;
    }
  }
  return KroneckerTableau(start, std::move(steps));
}

namespace detail {

/// Every edge of the branching graph leaving lambda, in step order.
inline std::vector<Step> steps_from(const Partition& lambda) {
  std::vector<Step> out;
  for (int p = 0; p <= lambda.length(); ++p) {
    Partition mid = lambda;
    if (p > 0) {
      auto r = remove_box(lambda, p);
      if (!r) continue;
      mid = std::move(*r);
    }
    out.push_back({p, 0});
    for (int q = 1; q <= mid.length() + 1; ++q)
      if (add_box(mid, q)) out.push_back({p, q});
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline int l1_distance(const Partition& a, const Partition& b) {
  int d = 0;
  const int rows = std::max(a.length(), b.length());
  for (int i = 1; i <= rows; ++i) d += std::abs(a.row(i) - b.row(i));
  return d;
}

}  // namespace detail

/// Std_s(ν∖λ): every path of s integral steps from λ to ν, depth-first in
/// step order (hence sorted).
inline std::vector<KroneckerTableau> enumerate_std(const Partition& lambda, const Partition& nu, int s) {
  std::vector<KroneckerTableau> out;
  if (s < 0) return out;
  std::vector<Step> path;
  auto rec = [&](auto&& self, const Partition& cur) -> void {
    const int left = s - static_cast<int>(path.size());
    // one step moves one box at most, and changes the size by at most one
    if (std::abs(cur.size() - nu.size()) > left || detail::l1_distance(cur, nu) > 2 * left) return;
    if (left == 0) {
      out.push_back(KroneckerTableau(lambda, path));
      return;
    }
    for (const Step& st : detail::steps_from(cur)) {
      path.push_back(st);
      self(self, *apply_step(cur, st));
      path.pop_back();
    }
  };
  rec(rec, lambda);
  return out;
}

/// Which definition of Std⁰ applies to (λ, ν, s), if any.
enum class Std0Family { MaximalDepth, OneRowPair };

inline std::optional<Std0Family> std0_family(const Partition& lambda, const Partition& nu, int s) {
  if (s == nu.size() - lambda.size()) return Std0Family::MaximalDepth;
  if (lambda.length() <= 1 && nu.length() <= 1) return Std0Family::OneRowPair;
  return std::nullopt;
}

/// Std⁰_s(ν∖λ) for the two families where it is defined.
///
/// Maximal depth (s = |ν| − |λ|): all of Std_s, which consists of pure
/// a(i) paths. One-row λ, ν: paths over {r(1), d(1), a(1)} removing at most
/// |λ| boxes in total, where both r(1) and d(1) count as a removal.
/// Throws UnsupportedFamily otherwise.
inline std::vector<KroneckerTableau> enumerate_std0(const Partition& lambda, const Partition& nu, int s) {
  const auto family = std0_family(lambda, nu, s);
  if (!family)
    throw Error(Errc::UnsupportedFamily, "Std0 is defined only for maximal-depth triples and one-row pairs");
  if (*family == Std0Family::MaximalDepth) return enumerate_std(lambda, nu, s);

  std::vector<KroneckerTableau> out;
  if (s < 0) return out;
  const int max_removals = lambda.size();
  static constexpr Step kAlphabet[] = {Step::r(1), Step::d(1), Step::a(1)};
  std::vector<Step> path;
  auto rec = [&](auto&& self, const Partition& cur, int removals) -> void {
    const int left = s - static_cast<int>(path.size());
    if (std::abs(cur.size() - nu.size()) > left) return;
    if (left == 0) {
      if (cur == nu) out.push_back(KroneckerTableau(lambda, path));
      return;
    }
    for (const Step& st : kAlphabet) {
      const int r = removals + (st.remove_row > 0 ? 1 : 0);
      if (r > max_removals) continue;
      auto next = apply_step(cur, st);
      if (!next) continue;
      path.push_back(st);
      self(self, *next, r);
      path.pop_back();
    }
  };
  rec(rec, lambda, 0);
  return out;
}

/// 𝔱 with steps k and k+1 exchanged, if that is still a path.
inline std::optional<KroneckerTableau> swap(const KroneckerTableau& t, int k) {
  if (k < 1 || k >= t.length())
    throw Error(Errc::IndexOutOfRange, "swap position " + std::to_string(k) + " for length " +
                                           std::to_string(t.length()));
  std::vector<Step> steps(t.steps().begin(), t.steps().end());
  std::swap(steps[static_cast<std::size_t>(k - 1)], steps[static_cast<std::size_t>(k)]);
  return KroneckerTableau::make(t.start(), std::move(steps));
}

/// 𝔱^λ: r − |λ| copies of d(0), then λ₁ copies of a(1), λ₂ of a(2), ….
inline KroneckerTableau most_dominant(const Partition& lambda, int r) {
  if (r < lambda.size())
    throw Error(Errc::InsufficientLength,
                "r = " + std::to_string(r) + " < |(" + lambda.str() + ")| = " + std::to_string(lambda.size()));
  std::vector<Step> steps(static_cast<std::size_t>(r - lambda.size()), Step::d(0));
  for (int i = 1; i <= lambda.length(); ++i) steps.insert(steps.end(), static_cast<std::size_t>(lambda.row(i)), Step::a(i));
  return KroneckerTableau(Partition{}, std::move(steps));
}

/// Levelwise dominance: a ⊵ b iff a(k) ⊵ b(k) for every k.
inline Dominance tableau_dominance(const KroneckerTableau& a, const KroneckerTableau& b) {
  if (a.length() != b.length() || a.start() != b.start())
    throw Error(Errc::ShapeMismatch, "tableaux differ in length or start");
  const auto la = a.levels();
  const auto lb = b.levels();
  bool a_ge = true;
  bool b_ge = true;
  for (std::size_t k = 0; k < la.size(); ++k) {
    switch (dominance(la[k], lb[k])) {
      case Dominance::Equal: break;
      case Dominance::Greater: b_ge = false; break;
      case Dominance::Less: a_ge = false; break;
      case Dominance::Incomparable: a_ge = b_ge = false; break;
    }
  }
  if (a_ge && b_ge) return Dominance::Equal;
  if (a_ge) return Dominance::Greater;
  if (b_ge) return Dominance::Less;
  return Dominance::Incomparable;
}

enum class TripleClass { MaximalDepth, OneRowPair, CoPieriHorizontal, CoPieriStaircase, Unknown };

constexpr std::string_view to_string(TripleClass c) noexcept {
  switch (c) {
    case TripleClass::MaximalDepth: return "MaximalDepth";
    case TripleClass::OneRowPair: return "OneRowPair";
    case TripleClass::CoPieriHorizontal: return "CoPieriHorizontal";
    case TripleClass::CoPieriStaircase: return "CoPieriStaircase";
    case TripleClass::Unknown: return "Unknown";
  }
  return "?";
}

/// Human-readable description of each family.
constexpr std::string_view case_label(TripleClass c) noexcept {
  switch (c) {
    case TripleClass::MaximalDepth: return "maximal depth: |lambda| + |mu| = |nu| (Littlewood-Richardson)";
    case TripleClass::OneRowPair: return "co-Pieri case (i): lambda and nu one-row";
    case TripleClass::CoPieriHorizontal:
      return "co-Pieri case (ii): horizontal strips over lambda ∩ nu, |mu| = larger strip";
    case TripleClass::CoPieriStaircase: return "co-Pieri case (iii): lambda = nu = (dl, ..., 2d, d), |mu| <= d";
    case TripleClass::Unknown: return "not a recognised co-Pieri family";
  }
  return "?";
}

struct Classification {
  TripleClass tag = TripleClass::Unknown;
  int staircase_d = 0;  // set for CoPieriStaircase
  int staircase_l = 0;

  bool supported_by_copieri() const noexcept {
    return tag == TripleClass::MaximalDepth || tag == TripleClass::OneRowPair;
  }
};

/// The staircase (dl, d(l−1), …, d) parameters of lambda, if it is one.
inline std::optional<std::pair<int, int>> staircase_parameters(const Partition& lambda) {
  if (lambda.empty()) return std::nullopt;
  const int l = lambda.length();
  const int d = lambda.row(l);
  for (int i = 1; i <= l; ++i)
    if (lambda.row(i) != d * (l - i + 1)) return std::nullopt;
  return std::pair{d, l};
}

/// Precedence: MaximalDepth > OneRowPair > CoPieriHorizontal > CoPieriStaircase.
inline Classification classify(const Partition& lambda, const Partition& nu, const Partition& mu) {
  if (lambda.size() + mu.size() == nu.size()) return {TripleClass::MaximalDepth};
  if (lambda.length() <= 1 && nu.length() <= 1) return {TripleClass::OneRowPair};
  const Partition common = intersect(lambda, nu);
  const SkewPair from_lambda{lambda, common};
  const SkewPair from_nu{nu, common};
  if (horizontal_strip(from_lambda) && horizontal_strip(from_nu) &&
      mu.size() == std::max(from_lambda.size(), from_nu.size()))
    return {TripleClass::CoPieriHorizontal};
  if (lambda == nu) {
    if (auto st = staircase_parameters(lambda); st && mu.size() <= st->first)
      return {TripleClass::CoPieriStaircase, st->first, st->second};
  }
  return {TripleClass::Unknown};
}

}  // namespace kron
