#include "knotgame/service.hpp"

#include <filesystem>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "knotgame/error.hpp"
#include "knotgame/notation.hpp"

namespace knotgame {

using nlohmann::json;

std::string_view seat_name(Seat s) noexcept { return s == Seat::Human ? "human" : "engine"; }

std::string_view status_name(GameStatus s) noexcept {
  switch (s) {
    case GameStatus::InProgress: return "InProgress";
    case GameStatus::UnknotterWon: return "UnknotterWon";
    case GameStatus::KnotterWon: return "KnotterWon";
  }
  return "?";
}

GameStatus status_of(const SumPosition& position) {
  if (!position.is_fully_resolved()) return GameStatus::InProgress;
  for (const auto& c : position.components()) {
    if (!is_unknot(c)) return GameStatus::KnotterWon;
  }
  return GameStatus::UnknotterWon;
}

namespace {

GameSession start_session(std::string id, const SumPosition& initial, Player engine_plays, Seat first) {
  GameSession s;
  s.id = std::move(id);
  s.initial = initial;
  s.position = initial;
  s.first = first;
  s.to_move = first;
  s.engine_plays = engine_plays;
  s.status = status_of(initial);
  return s;
}

void require_in_progress(const GameSession& s) {
  if (s.status != GameStatus::InProgress) {
    throw Error(ErrorCode::GameOver, "game " + s.id + " is over: " + std::string(status_name(s.status)));
  }
}

void require_turn(const GameSession& s, Seat seat) {
  if (s.to_move != seat) {
    throw Error(ErrorCode::NotYourTurn, "it is the " + std::string(seat_name(s.to_move)) + "'s turn");
  }
}

void require_version(const GameSession& s, std::optional<std::uint64_t> expected) {
  if (expected && *expected != s.version) {
    throw Error(ErrorCode::VersionConflict, "session is at version " + std::to_string(s.version) + ", not " +
                                                std::to_string(*expected));
  }
}

void play(GameSession& s, const MoveDescriptor& move) {
  s.position = apply_move(s.position, move);
  s.history.push_back({move, s.side_to_move(), s.to_move});
  s.to_move = s.to_move == Seat::Human ? Seat::Engine : Seat::Human;
  s.status = status_of(s.position);
  ++s.version;
}

std::string player_token(Player p) { return p == Player::Unknotter ? "unknotter" : "knotter"; }

Player parse_player_token(const std::string& t) {
  if (t == "unknotter") return Player::Unknotter;
  if (t == "knotter") return Player::Knotter;
  throw Error(ErrorCode::InvalidInput, "unknown player \"" + t + "\"");
}

Seat parse_seat_token(const std::string& t) {
  if (t == "human") return Seat::Human;
  if (t == "engine") return Seat::Engine;
  throw Error(ErrorCode::InvalidInput, "unknown seat \"" + t + "\"");
}

}  // namespace

GameSession replay(std::string id, const SumPosition& initial, Player engine_plays, Seat first,
                   const std::vector<MoveDescriptor>& moves) {
  auto s = start_session(std::move(id), initial, engine_plays, first);
  for (const auto& m : moves) {
    require_in_progress(s);
    play(s, m);
  }
  return s;
}

std::vector<MoveAnnotation> annotate_moves(const Solver& solver, const SumPosition& position, Player side) {
  std::vector<MoveAnnotation> out;
  for (auto& opt : options(position)) {
    MoveAnnotation a;
    a.move = opt.move;
    a.successor_outcome = solver.outcome(opt.successor);
    a.winning = solver.wins_moving_first(opt.successor, opponent(side)) == side;
    a.successor = std::move(opt.successor);
    out.push_back(std::move(a));
  }
  return out;
}

MoveDescriptor choose_engine_move(const Solver& solver, const SumPosition& position, Player side) {
  const auto moves = legal_moves(position);
  if (moves.empty()) throw Error(ErrorCode::GameOver, "position is fully resolved");
  for (const auto& m : moves) {
    if (solver.wins_moving_first(apply_move(position, m), opponent(side)) == side) return m;
  }
  return moves.front();
}

EventLog::EventLog(const std::string& path) : out_(path, std::ios::app) {
  if (!out_) throw Error(ErrorCode::InvalidInput, "cannot open event log " + path);
}

void EventLog::append(const std::string& json_line) {
  std::lock_guard lock(mutex_);
  out_ << json_line << '\n';
  out_.flush();
}

GameService::GameService(ServiceConfig config, std::shared_ptr<const Solver> solver)
    : config_(std::move(config)), solver_(std::move(solver)), rng_(std::random_device{}()) {
  if (!config_.event_log_path.empty()) {
    if (std::filesystem::exists(config_.event_log_path)) recover(config_.event_log_path);
    log_ = std::make_unique<EventLog>(config_.event_log_path);
  }
}

void GameService::recover(const std::string& path) {
  std::ifstream in(path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      const auto ev = json::parse(line);
      const auto id = ev.at("id").get<std::string>();
      const auto kind = ev.at("event").get<std::string>();
      if (kind == "create") {
        auto slot = std::make_shared<Slot>();
        slot->session = start_session(id, parse_position(ev.at("position").get<std::string>()),
                                      parse_player_token(ev.at("engine_plays").get<std::string>()),
                                      parse_seat_token(ev.at("first").get<std::string>()));
        sessions_[id] = std::move(slot);
      } else if (kind == "move") {
        auto& s = sessions_.at(id)->session;
        require_in_progress(s);
        require_turn(s, parse_seat_token(ev.at("seat").get<std::string>()));
        play(s, MoveDescriptor{ev.at("component").get<std::size_t>(), ev.at("region").get<std::size_t>(),
                               ev.at("sign").get<int>() > 0 ? Sign::Positive : Sign::Negative});
      }
    } catch (const std::exception& e) {
      throw Error(ErrorCode::InvalidInput,
                  "event log " + path + " line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void GameService::log(const std::string& line) {
  if (log_) log_->append(line);
}

std::string GameService::new_id() {
  std::lock_guard lock(rng_mutex_);
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << rng_();
  return os.str();
}

SumPosition GameService::admit_position(std::string_view text) const {
  auto position = parse_position(text);
  position.require_knots();
  if (position.unresolved_count() > config_.max_crossings) {
    throw Error(ErrorCode::PositionTooLarge, std::to_string(position.unresolved_count()) +
                                                 " unresolved crossings exceed the cap of " +
                                                 std::to_string(config_.max_crossings));
  }
  return position;
}

GameSession GameService::create_game(std::string_view position_text, Player engine_plays, Seat first) {
  const auto position = admit_position(position_text);
  auto slot = std::make_shared<Slot>();
  std::string id;
  {
    std::unique_lock lock(sessions_mutex_);
    do {
      id = new_id();
    } while (sessions_.count(id) != 0);
    slot->session = start_session(id, position, engine_plays, first);
    sessions_[id] = slot;
  }
  log(json{{"event", "create"},
           {"id", id},
           {"position", to_string(position)},
           {"engine_plays", player_token(engine_plays)},
           {"first", std::string(seat_name(first))}}
          .dump());
  return slot->session;
}

std::shared_ptr<GameService::Slot> GameService::slot(std::string_view id) const {
  std::shared_lock lock(sessions_mutex_);
  const auto it = sessions_.find(std::string(id));
  if (it == sessions_.end()) throw Error(ErrorCode::UnknownGame, "no game with id " + std::string(id));
  return it->second;
}

GameSession GameService::get(std::string_view id) const {
  auto s = slot(id);
  std::lock_guard lock(s->mutex);
  return s->session;
}

namespace {

std::string move_event(const GameSession& s, const MoveDescriptor& m, Seat seat) {
  return json{{"event", "move"},
              {"id", s.id},
              {"component", m.component},
              {"region", m.region},
              {"sign", static_cast<int>(m.sign)},
              {"seat", std::string(seat_name(seat))}}
      .dump();
}

}  // namespace

GameSession GameService::submit_move(std::string_view id, const MoveDescriptor& move,
                                     std::optional<std::uint64_t> expected_version) {
  auto s = slot(id);
  std::lock_guard lock(s->mutex);
  auto& session = s->session;
  require_in_progress(session);
  require_turn(session, Seat::Human);
  require_version(session, expected_version);
  play(session, move);
  log(move_event(session, move, Seat::Human));
  return session;
}

std::pair<MoveDescriptor, GameSession> GameService::engine_move(std::string_view id,
                                                                std::optional<std::uint64_t> expected_version) {
  auto s = slot(id);
  std::lock_guard lock(s->mutex);
  auto& session = s->session;
  require_in_progress(session);
  require_turn(session, Seat::Engine);
  require_version(session, expected_version);
  const auto move = choose_engine_move(*solver_, session.position, session.engine_plays);
  play(session, move);
  log(move_event(session, move, Seat::Engine));
  return {move, session};
}

std::vector<MoveAnnotation> GameService::analyze(std::string_view id) const {
  const auto session = get(id);
  return annotate_moves(*solver_, session.position, session.side_to_move());
}

std::size_t GameService::session_count() const {
  std::shared_lock lock(sessions_mutex_);
  return sessions_.size();
}

}  // namespace knotgame
