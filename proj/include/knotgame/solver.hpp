#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "knotgame/tangle.hpp"

namespace knotgame {

enum class Player { Unknotter, Knotter };

constexpr Player opponent(Player p) noexcept {
  return p == Player::Unknotter ? Player::Knotter : Player::Unknotter;
}

std::string_view player_name(Player p) noexcept;

/// U: Unknotter wins either way; K: Knotter wins either way; First/Second:
/// the player moving first/second wins.
enum class OutcomeClass { U, K, First, Second };

/// "U", "K", "1", "2".
std::string_view outcome_symbol(OutcomeClass o) noexcept;

/// Combines the winner with the Unknotter moving first and the winner with
/// the Knotter moving first.
OutcomeClass outcome_from_winners(Player unknotter_first, Player knotter_first) noexcept;

/// Unknotter wins moving first (U1) / moving second (U2).
bool is_u1(OutcomeClass o) noexcept;
bool is_u2(OutcomeClass o) noexcept;

/// (outcome(P^0), outcome(P^1)).
struct NormalizedOutcome {
  OutcomeClass even_outcome = OutcomeClass::U;
  OutcomeClass odd_outcome = OutcomeClass::U;

  bool operator==(const NormalizedOutcome&) const = default;
};

/// Only nine of the sixteen pairs can occur: P^0 in U2 with P^1 in K2, and
/// P^0 in K2 with P^1 in U2, are excluded.
bool is_legal(NormalizedOutcome n) noexcept;
std::string to_string(NormalizedOutcome n);

struct XYValue {
  int x = 1;
  int y = 1;

  bool operator==(const XYValue&) const = default;
};

/// Throws Error{IllegalOutcomePair} for the seven excluded pairs.
XYValue to_xy(NormalizedOutcome n);
/// Throws Error{InvalidInput} unless x, y are in {1,2,3}.
NormalizedOutcome from_xy(XYValue xy);

/// The game *: a single unresolved kink [(1)].
RationalPseudodiagram star();

/// (P^0, P^1): the even and odd members of {P, P # *}.
std::pair<SumPosition, SumPosition> projections(const SumPosition& position);

/// [(0),(1),a_1(b_1),...]: the one-component encoding of P # * used by the
/// original brute-force runs.
RationalPseudodiagram star_prefixed(const RationalPseudodiagram& diagram);

/// Canonical key of a position: fully resolved unknot components dropped,
/// each remaining component in its lexicographically smaller orientation,
/// components sorted, serialized to bytes. Empty when nothing is left open.
std::string canonical_key(const SumPosition& position);

/// Winners for each first mover, keyed by canonical position. Safe for
/// concurrent use: lookups take a shared lock on one shard, inserts an
/// exclusive one. Inserts only add knowledge, so racing writers agree.
class TranspositionTable {
 public:
  TranspositionTable() = default;
  TranspositionTable(const TranspositionTable&) = delete;
  TranspositionTable& operator=(const TranspositionTable&) = delete;

  std::optional<Player> lookup(const std::string& key, Player mover) const;
  void record(const std::string& key, Player mover, Player winner);

  std::size_t size() const;
  void clear();

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::shared_mutex mutex;
    std::unordered_map<std::string, std::uint8_t> entries;
  };
  Shard& shard_for(const std::string& key) const;

  mutable std::array<Shard, kShards> shards_;
};

/// Perfect-play evaluator: exhaustive AND/OR search over the game tree, one
/// move per (region, sign). With memoization on, positions are looked up by
/// canonical key; with it off this is the plain recursive brute force.
class Solver {
 public:
  struct Options {
    bool memoize = true;
  };

  Solver();
  explicit Solver(Options options);
  Solver(Options options, std::shared_ptr<TranspositionTable> table);

  /// Throws Error{NotAKnot} if any component closes to a link.
  Player wins_moving_first(const SumPosition& position, Player mover) const;
  OutcomeClass outcome(const SumPosition& position) const;
  NormalizedOutcome normalized_outcome(const SumPosition& position) const;
  XYValue xy(const SumPosition& position) const;

  /// P is U1 and every option Q has an option R that is itself a zero game.
  bool is_zero_game(const SumPosition& position) const;

  const Options& options() const noexcept { return options_; }
  const TranspositionTable& table() const noexcept { return *table_; }

 private:
  class ZeroGameCache;

  Options options_;
  std::shared_ptr<TranspositionTable> table_;
  std::shared_ptr<ZeroGameCache> zero_cache_;
};

}  // namespace knotgame
