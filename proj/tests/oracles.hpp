#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: continuants come from 2x2 matrix products, rationals from
// boost::rational, and the game search is a memo-free minimax over raw
// (resolved, unresolved) pairs.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

/// a_n + 1/(a_{n-1} + ... + 1/a_1); nullopt if some partial value is 0.
inline std::optional<Rational> continued_fraction(const std::vector<std::int64_t>& a) {
  if (a.empty()) return std::nullopt;
  Rational v{Int(a.front())};
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (v.numerator() == 0) return std::nullopt;
    v = Rational(Int(a[i])) + Rational(Int(1)) / v;
  }
  return v;
}

/// Top-left entry of prod [[a_i,1],[1,0]] taken from a_n down to a_1.
inline Int continuant(const std::vector<std::int64_t>& a) {
  Int m00 = 1, m01 = 0, m10 = 0, m11 = 1;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    const Int k = *it;
    const Int n00 = m00 * k + m01, n01 = m00;
    const Int n10 = m10 * k + m11, n11 = m10;
    m00 = n00; m01 = n01; m10 = n10; m11 = n11;
  }
  return m00;
}

inline bool knot(const std::vector<std::int64_t>& closure) { return continuant(closure) % 2 != 0; }
inline bool unknot(const std::vector<std::int64_t>& resolved) {
  const Int p = continuant(resolved);
  return p == 1 || p == -1;
}

using Region = std::pair<std::int64_t, std::int64_t>;  // resolved, unresolved
using Diagram = std::vector<Region>;
using Sum = std::vector<Diagram>;

inline std::vector<std::int64_t> closure(const Diagram& d) {
  std::vector<std::int64_t> out;
  for (auto [a, b] : d) out.push_back(a + b);
  return out;
}

/// True when the Unknotter wins with `unknotter_to_move` deciding who plays next.
inline bool unknotter_wins(Sum& s, bool unknotter_to_move) {
  bool any = false;
  for (auto& d : s) {
    for (auto& r : d) {
      if (r.second == 0) continue;
      any = true;
      for (int sign : {1, -1}) {
        r.first += sign;
        r.second -= 1;
        const bool w = unknotter_wins(s, !unknotter_to_move);
        r.first -= sign;
        r.second += 1;
        if (w == unknotter_to_move) return w;
      }
    }
  }
  if (any) return !unknotter_to_move;
  for (const auto& d : s) {
    if (!unknot(closure(d))) return false;
  }
  return true;
}

}  // namespace oracle
