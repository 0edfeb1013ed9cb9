#include "knotgame/rewrite.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "knotgame/error.hpp"
#include "knotgame/notation.hpp"

namespace knotgame {

RuleKind rule_kind(RuleTag tag) noexcept {
  switch (tag) {
    case RuleTag::UnwindL:
    case RuleTag::UnwindR: return RuleKind::PseudoR1;
    case RuleTag::TwoLoss: return RuleKind::PseudoR2;
    default: return RuleKind::Equivalence;
  }
}

std::string_view rule_name(RuleTag tag) noexcept {
  switch (tag) {
    case RuleTag::OneCombL: return "OneCombL";
    case RuleTag::OneCombR: return "OneCombR";
    case RuleTag::ZLossL: return "ZLossL";
    case RuleTag::ZLossMid: return "ZLossMid";
    case RuleTag::ZLossR: return "ZLossR";
    case RuleTag::Invert: return "Invert";
    case RuleTag::UnwindL: return "UnwindL";
    case RuleTag::UnwindR: return "UnwindR";
    case RuleTag::TwoLoss: return "TwoLoss";
  }
  return "?";
}

std::string_view shadow_kind_name(ShadowKind kind) noexcept {
  return kind == ShadowKind::OddEvenReducible ? "odd-even-reducible" : "irreducible-(2,1)";
}

std::string format_trace(const Trace& trace) {
  std::string out;
  for (const auto& step : trace) {
    out += rule_name(step.rule.tag);
    out += '@';
    out += std::to_string(step.rule.site);
    out += ": ";
    out += to_string(step.result);
    out += '\n';
  }
  return out;
}

namespace {

[[noreturn]] void mismatch(const RationalPseudodiagram& d, RewriteRule rule) {
  throw Error(ErrorCode::PatternMismatch, std::string(rule_name(rule.tag)) + "@" +
                                              std::to_string(rule.site) + " does not match " +
                                              to_string(d));
}

bool blank(const TwistRegion& r) { return r.resolved == 0 && r.unresolved == 0; }

void require_shadow(const RationalPseudodiagram& d) {
  if (!d.is_shadow()) throw Error(ErrorCode::NotAShadow, to_string(d) + " has resolved crossings");
}

void require_knot_shadow(const RationalPseudodiagram& d) {
  require_shadow(d);
  if (!is_knot(d)) throw Error(ErrorCode::NotAKnot, to_string(d) + " closes to a two-component link");
}

std::vector<std::int64_t> counts(const RationalPseudodiagram& d) {
  std::vector<std::int64_t> v;
  v.reserve(d.size());
  for (const auto& r : d.regions()) v.push_back(r.unresolved);
  return v;
}

}  // namespace

RationalPseudodiagram apply_rule(const RationalPseudodiagram& diagram, RewriteRule rule) {
  auto regions = diagram.regions();
  const std::size_t n = regions.size();

  if (rule.tag == RuleTag::UnwindL || rule.tag == RuleTag::UnwindR) {
    if (rule.tag == RuleTag::UnwindL && n == 1 && regions[0] == TwistRegion{0, 1}) {
      return RationalPseudodiagram{};
    }
    if (n < 2) mismatch(diagram, rule);
    const std::size_t zero = rule.tag == RuleTag::UnwindL ? 0 : n - 1;
    const std::size_t kink = rule.tag == RuleTag::UnwindL ? 1 : n - 2;
    if (!blank(regions[zero]) || regions[kink].unresolved < 1) mismatch(diagram, rule);
    regions[kink].unresolved -= 1;
    return RationalPseudodiagram(std::move(regions));
  }

  require_shadow(diagram);
  auto v = counts(diagram);
  switch (rule.tag) {
    case RuleTag::OneCombL:
      if (n < 2 || v[0] != 1) mismatch(diagram, rule);
      v[1] += 1;
      v.erase(v.begin());
      break;
    case RuleTag::OneCombR:
      if (n < 2 || v[n - 1] != 1) mismatch(diagram, rule);
      v[n - 2] += 1;
      v.pop_back();
      break;
    case RuleTag::ZLossL:
      if (n < 2 || v[0] != 0 || v[1] != 0) mismatch(diagram, rule);
      v.erase(v.begin(), v.begin() + 2);
      break;
    case RuleTag::ZLossR:
      if (n < 2 || v[n - 1] != 0 || v[n - 2] != 0) mismatch(diagram, rule);
      v.resize(n - 2);
      break;
    case RuleTag::ZLossMid: {
      const std::size_t i = rule.site - 1;
      if (rule.site < 2 || rule.site >= n || v[i] != 0) mismatch(diagram, rule);
      v[i - 1] += v[i + 1];
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i), v.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      break;
    }
    case RuleTag::Invert:
      std::reverse(v.begin(), v.end());
      break;
    case RuleTag::TwoLoss:
      if (rule.site < 1 || rule.site > n || v[rule.site - 1] < 2) mismatch(diagram, rule);
      v[rule.site - 1] -= 2;
      break;
    case RuleTag::UnwindL:
    case RuleTag::UnwindR:
      break;
  }
  return RationalPseudodiagram::shadow(v);
}

bool is_odd_even(const RationalPseudodiagram& shadow) {
  require_shadow(shadow);
  const auto v = counts(shadow);
  const std::size_t n = v.size();
  if (n == 0) return false;
  bool result = false;
  if (n == 1) {
    result = v[0] % 2 == 1;
  } else {
    const bool interior_even =
        std::all_of(v.begin() + 1, v.end() - 1, [](std::int64_t a) { return a % 2 == 0; });
    result = interior_even && ((v[0] % 2) != (v[n - 1] % 2));
  }
  if (result && shadow.parity() != 1) {
    throw Error(ErrorCode::InternalNonConvergence, "odd-even shadow with even parity: " + to_string(shadow));
  }
  return result;
}

namespace {

// Applies rules while recording the trace.
class Rewriter {
 public:
  explicit Rewriter(RationalPseudodiagram start) : current_(std::move(start)) {}

  void apply(RewriteRule rule) {
    current_ = apply_rule(current_, rule);
    trace_.push_back({rule, current_});
  }

  // Zeros, end ones and unwinds until none applies.
  void normalize() {
    while (auto rule = next_normalizing_rule()) apply(*rule);
  }

  // Picks the lexicographically smaller orientation.
  void canonicalize() {
    if (current_.reversed() < current_) apply({RuleTag::Invert, 1});
  }

  const RationalPseudodiagram& current() const { return current_; }
  std::vector<std::int64_t> entries() const { return counts(current_); }
  Trace take_trace() { return std::move(trace_); }

 private:
  std::optional<RewriteRule> next_normalizing_rule() const {
    const auto v = entries();
    const std::size_t n = v.size();
    if (n < 2) return std::nullopt;
    // (a) zeros.
    if (v[0] == 0 && v[1] == 0) return RewriteRule{RuleTag::ZLossL, 1};
    if (v[n - 1] == 0 && v[n - 2] == 0) return RewriteRule{RuleTag::ZLossR, n - 1};
    for (std::size_t i = 1; i + 1 < n; ++i) {
      if (v[i] == 0) return RewriteRule{RuleTag::ZLossMid, i + 1};
    }
    // (b) end ones.
    if (v[0] == 1) return RewriteRule{RuleTag::OneCombL, 1};
    if (v[n - 1] == 1) return RewriteRule{RuleTag::OneCombR, n};
    // (c) unwinds next to a (0) end.
    if (v[0] == 0 && v[1] > 0) return RewriteRule{RuleTag::UnwindL, 2};
    if (v[n - 1] == 0 && v[n - 2] > 0) return RewriteRule{RuleTag::UnwindR, n - 1};
    return std::nullopt;
  }

  RationalPseudodiagram current_;
  Trace trace_;
};

using Entries = std::vector<std::int64_t>;

// The input is a normalized shadow: no zeros, ends >= 2, n >= 2, not odd-even.
// Returns the next TwoLoss step of the reduction towards one of the six
// irreducible shadows, or nullopt when no listed case applies.
std::optional<RewriteRule> next_two_loss(const Entries& v) {
  const std::size_t n = v.size();
  if (n < 2) return std::nullopt;
  auto at = [](std::size_t one_based) { return RewriteRule{RuleTag::TwoLoss, one_based}; };

  // (d) interior entries down to 1 or 2, end entries down to 2 or 3.
  for (std::size_t j = 1; j + 1 < n; ++j) {
    if (v[j] > 2) return at(j + 1);
  }
  if (v[0] > 3) return at(1);
  if (v[n - 1] > 3) return at(n);

  std::optional<std::size_t> first_one;
  std::optional<std::size_t> last_one;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    if (v[j] == 1) {
      if (!first_one) first_one = j;
      last_one = j;
    }
  }

  if (!last_one) {
    // All even: [(2),...,(2)] collapses two regions at a time to [(2),(2)].
    const bool all_two = std::all_of(v.begin(), v.end(), [](std::int64_t a) { return a == 2; });
    if (all_two && n > 2) return at(2);
    return std::nullopt;
  }

  // Positions of the outermost interior 1, counted from each end (1-based).
  const std::size_t from_left = *last_one + 1;
  const std::size_t from_right = n - *first_one;

  // A 3 at an end must be followed directly by the only 1.
  if (v[0] == 3 && from_left > 2) return at(1);
  if (v[n - 1] == 3 && from_right > 2) return at(n);

  // A 2 at an end admits no 1 beyond position 4 (position 3 if a_3 is 2).
  if (v[0] == 2 && (from_left > 4 || (v[2] == 2 && from_left > 3))) return at(1);
  if (v[n - 1] == 2 && (from_right > 4 || (v[n - 3] == 2 && from_right > 3))) return at(n);

  // Finishing cases.
  if (v == Entries{3, 1, 2}) return at(1);
  if (v == Entries{2, 1, 3}) return at(3);
  if (v == Entries{2, 1, 1, 2, 2}) return at(4);
  if (v == Entries{2, 2, 1, 1, 2}) return at(2);
  if (v == Entries{2, 1, 1, 1, 2}) return at(1);
  return std::nullopt;
}

}  // namespace

std::span<const RationalPseudodiagram> irreducible_shadows() {
  static const std::array<RationalPseudodiagram, 6> six = {
      RationalPseudodiagram::shadow({3, 1, 3}),       RationalPseudodiagram::shadow({2, 1, 2, 2}),
      RationalPseudodiagram::shadow({2, 2, 1, 2}),    RationalPseudodiagram::shadow({2, 1, 1, 2}),
      RationalPseudodiagram::shadow({2, 2, 1, 2, 2}), RationalPseudodiagram::shadow({2, 2}),
  };
  return six;
}

bool is_irreducible_shadow(const RationalPseudodiagram& shadow) {
  const auto six = irreducible_shadows();
  const auto rev = shadow.reversed();
  return std::any_of(six.begin(), six.end(),
                     [&](const RationalPseudodiagram& s) { return s == shadow || s == rev; });
}

Trace reduce_to_unknot(const RationalPseudodiagram& shadow) {
  require_knot_shadow(shadow);
  Rewriter rw(shadow);
  const auto lone_kink = RationalPseudodiagram::shadow({1});
  for (;;) {
    rw.normalize();
    if (rw.current().empty()) return rw.take_trace();
    if (rw.current() == lone_kink) {
      rw.apply({RuleTag::UnwindL, 1});
      continue;
    }
    const auto v = rw.entries();
    const auto big = std::find_if(v.begin(), v.end(), [](std::int64_t a) { return a >= 2; });
    if (big == v.end()) {
      throw Error(ErrorCode::InternalNonConvergence,
                  "reduction to the unknot stuck at " + to_string(rw.current()));
    }
    rw.apply({RuleTag::TwoLoss, static_cast<std::size_t>(big - v.begin()) + 1});
  }
}

ShadowClass classify_shadow(const RationalPseudodiagram& shadow) {
  require_knot_shadow(shadow);
  Rewriter rw(shadow);
  rw.normalize();
  if (rw.current().empty() || is_odd_even(rw.current())) {
    rw.canonicalize();
    auto terminal = rw.current();
    return {ShadowKind::OddEvenReducible, rw.take_trace(), std::move(terminal)};
  }

  for (;;) {
    if (is_irreducible_shadow(rw.current())) {
      rw.canonicalize();
      auto terminal = rw.current();
      return {ShadowKind::Irreducible21, rw.take_trace(), std::move(terminal)};
    }
    const auto rule = next_two_loss(rw.entries());
    if (!rule) {
      throw Error(ErrorCode::InternalNonConvergence,
                  "classification of " + to_string(shadow) + " stuck at " + to_string(rw.current()));
    }
    rw.apply(*rule);
    rw.normalize();
    if (rw.current().empty() || is_odd_even(rw.current())) {
      throw Error(ErrorCode::InternalNonConvergence,
                  "reduction of " + to_string(shadow) + " left the (2,1) class at " + to_string(rw.current()));
    }
  }
}

}  // namespace knotgame
