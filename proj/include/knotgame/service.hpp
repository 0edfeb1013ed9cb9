#pragma once

#include <cstdint>
#include <fstream>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "knotgame/solver.hpp"
#include "knotgame/tangle.hpp"

namespace knotgame {

enum class Seat { Human, Engine };
enum class GameStatus { InProgress, UnknotterWon, KnotterWon };

std::string_view seat_name(Seat s) noexcept;
std::string_view status_name(GameStatus s) noexcept;

/// InProgress until every crossing is resolved; then the Unknotter wins iff
/// every component is the unknot.
GameStatus status_of(const SumPosition& position);

struct HistoryEntry {
  MoveDescriptor move;
  Player mover = Player::Unknotter;
  Seat seat = Seat::Human;
};

struct GameSession {
  std::string id;
  SumPosition initial;
  SumPosition position;
  std::vector<HistoryEntry> history;
  Seat first = Seat::Human;
  Seat to_move = Seat::Human;
  Player engine_plays = Player::Knotter;
  GameStatus status = GameStatus::InProgress;
  /// Incremented on every move; clients may pass it back as an optimistic lock.
  std::uint64_t version = 0;

  Player player_of(Seat seat) const noexcept {
    return seat == Seat::Engine ? engine_plays : opponent(engine_plays);
  }
  Player side_to_move() const noexcept { return player_of(to_move); }
};

/// Starts a session on `initial` and applies `moves` in order, checking turn
/// order and legality as live play would.
GameSession replay(std::string id, const SumPosition& initial, Player engine_plays, Seat first,
                   const std::vector<MoveDescriptor>& moves);

struct MoveAnnotation {
  MoveDescriptor move;
  SumPosition successor;
  OutcomeClass successor_outcome = OutcomeClass::U;
  /// The side to move wins under perfect play after making this move.
  bool winning = false;
};

std::vector<MoveAnnotation> annotate_moves(const Solver& solver, const SumPosition& position, Player side);

/// First winning move for `side` in move order, else the first legal move.
/// Throws Error{GameOver} on a fully resolved position.
MoveDescriptor choose_engine_move(const Solver& solver, const SumPosition& position, Player side);

/// Append-only JSON-lines log, one event per create or move.
class EventLog {
 public:
  explicit EventLog(const std::string& path);
  void append(const std::string& json_line);

 private:
  std::mutex mutex_;
  std::ofstream out_;
};

struct ServiceConfig {
  /// Positions with more unresolved crossings are rejected with PositionTooLarge.
  std::int64_t max_crossings = 16;
  /// Empty disables logging. An existing log is replayed on startup.
  std::string event_log_path;
};

/// Live games. Requests on different sessions run in parallel; requests on
/// one session are serialized by that session's mutex. The solver (and its
/// transposition table) is shared by every session.
class GameService {
 public:
  GameService(ServiceConfig config, std::shared_ptr<const Solver> solver);

  GameSession create_game(std::string_view position_text, Player engine_plays, Seat first);
  GameSession get(std::string_view id) const;
  GameSession submit_move(std::string_view id, const MoveDescriptor& move,
                          std::optional<std::uint64_t> expected_version = std::nullopt);
  std::pair<MoveDescriptor, GameSession> engine_move(std::string_view id,
                                                     std::optional<std::uint64_t> expected_version = std::nullopt);
  std::vector<MoveAnnotation> analyze(std::string_view id) const;

  std::size_t session_count() const;
  const Solver& solver() const noexcept { return *solver_; }
  const ServiceConfig& config() const noexcept { return config_; }

  /// Parses a position and enforces the knot and crossing-cap preconditions.
  SumPosition admit_position(std::string_view text) const;

 private:
  struct Slot {
    std::mutex mutex;
    GameSession session;
  };

  std::shared_ptr<Slot> slot(std::string_view id) const;
  void recover(const std::string& path);
  std::string new_id();
  void log(const std::string& line);

  ServiceConfig config_;
  std::shared_ptr<const Solver> solver_;
  std::unique_ptr<EventLog> log_;

  mutable std::shared_mutex sessions_mutex_;
  std::unordered_map<std::string, std::shared_ptr<Slot>> sessions_;

  std::mutex rng_mutex_;
  std::mt19937_64 rng_;
};

}  // namespace knotgame
