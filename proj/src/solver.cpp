#include "knotgame/solver.hpp"

#include <algorithm>
#include <cstring>
#include <functional>

#include "knotgame/error.hpp"
#include "knotgame/notation.hpp"

namespace knotgame {

std::string_view player_name(Player p) noexcept {
  return p == Player::Unknotter ? "Unknotter" : "Knotter";
}

std::string_view outcome_symbol(OutcomeClass o) noexcept {
  switch (o) {
    case OutcomeClass::U: return "U";
    case OutcomeClass::K: return "K";
    case OutcomeClass::First: return "1";
    case OutcomeClass::Second: return "2";
  }
  return "?";
}

OutcomeClass outcome_from_winners(Player unknotter_first, Player knotter_first) noexcept {
  const bool u1 = unknotter_first == Player::Unknotter;
  const bool u2 = knotter_first == Player::Unknotter;
  if (u1 && u2) return OutcomeClass::U;
  if (!u1 && !u2) return OutcomeClass::K;
  return u1 ? OutcomeClass::First : OutcomeClass::Second;
}

bool is_u1(OutcomeClass o) noexcept { return o == OutcomeClass::U || o == OutcomeClass::First; }
bool is_u2(OutcomeClass o) noexcept { return o == OutcomeClass::U || o == OutcomeClass::Second; }

bool is_legal(NormalizedOutcome n) noexcept {
  const bool even_u2 = is_u2(n.even_outcome);
  const bool even_k2 = !is_u1(n.even_outcome);
  const bool odd_u2 = is_u2(n.odd_outcome);
  const bool odd_k2 = !is_u1(n.odd_outcome);
  return !(even_u2 && odd_k2) && !(even_k2 && odd_u2);
}

std::string to_string(NormalizedOutcome n) {
  return "(" + std::string(outcome_symbol(n.even_outcome)) + "," +
         std::string(outcome_symbol(n.odd_outcome)) + ")";
}

XYValue to_xy(NormalizedOutcome n) {
  if (!is_legal(n)) {
    throw Error(ErrorCode::IllegalOutcomePair, "normalized outcome " + to_string(n) + " cannot occur");
  }
  const bool even_u2 = is_u2(n.even_outcome);
  const bool even_u1 = is_u1(n.even_outcome);
  const bool odd_u1 = is_u1(n.odd_outcome);
  const bool odd_u2 = is_u2(n.odd_outcome);
  XYValue v;
  v.x = even_u2 ? 1 : (odd_u1 ? 2 : 3);
  v.y = odd_u2 ? 1 : (even_u1 ? 2 : 3);
  return v;
}

NormalizedOutcome from_xy(XYValue xy) {
  if (xy.x < 1 || xy.x > 3 || xy.y < 1 || xy.y > 3) {
    throw Error(ErrorCode::InvalidInput, "X and Y must lie in {1,2,3}");
  }
  // X fixes (P^0 in U2, P^1 in U1); Y fixes (P^0 in U1, P^1 in U2).
  const bool even_u2 = xy.x == 1;
  const bool odd_u1 = xy.x < 3;
  const bool even_u1 = xy.y < 3;
  const bool odd_u2 = xy.y == 1;
  auto cls = [](bool u1, bool u2) {
    return outcome_from_winners(u1 ? Player::Unknotter : Player::Knotter,
                                u2 ? Player::Unknotter : Player::Knotter);
  };
  return {cls(even_u1, even_u2), cls(odd_u1, odd_u2)};
}

RationalPseudodiagram star() { return RationalPseudodiagram::shadow({1}); }

std::pair<SumPosition, SumPosition> projections(const SumPosition& position) {
  auto with_star = position.with(star());
  if (position.parity() == 0) return {position, std::move(with_star)};
  return {std::move(with_star), position};
}

RationalPseudodiagram star_prefixed(const RationalPseudodiagram& diagram) {
  std::vector<TwistRegion> regions{{0, 0}, {0, 1}};
  regions.insert(regions.end(), diagram.regions().begin(), diagram.regions().end());
  return RationalPseudodiagram(std::move(regions));
}

namespace {

using Regions = std::vector<TwistRegion>;

struct SearchState {
  std::vector<Regions> components;
};

bool regions_resolved(const Regions& r) {
  return std::all_of(r.begin(), r.end(), [](const TwistRegion& t) { return t.unresolved == 0; });
}

bool regions_unknot(const Regions& r) {
  std::int64_t buf[32];
  if (r.size() <= 32) {
    for (std::size_t i = 0; i < r.size(); ++i) buf[i] = r[i].resolved;
    return resolved_twists_are_unknot(std::span<const std::int64_t>(buf, r.size()));
  }
  std::vector<std::int64_t> twists;
  twists.reserve(r.size());
  for (const auto& t : r) twists.push_back(t.resolved);
  return resolved_twists_are_unknot(twists);
}

// Negative: the reversed orientation of `r` is smaller.
int compare_orientations(const Regions& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& fwd = r[i];
    const auto& bwd = r[n - 1 - i];
    if (fwd < bwd) return 1;
    if (bwd < fwd) return -1;
  }
  return 0;
}

struct OrientedView {
  const Regions* regions;
  bool reversed;

  const TwistRegion& at(std::size_t i) const {
    return reversed ? (*regions)[regions->size() - 1 - i] : (*regions)[i];
  }
  std::size_t size() const { return regions->size(); }

  bool operator<(const OrientedView& other) const {
    const std::size_t n = std::min(size(), other.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (at(i) < other.at(i)) return true;
      if (other.at(i) < at(i)) return false;
    }
    return size() < other.size();
  }
};

enum class KeyStatus { Open, UnknotterDecided, KnotterDecided };

void append_raw(std::string& out, std::int64_t v) {
  char bytes[sizeof v];
  std::memcpy(bytes, &v, sizeof v);
  out.append(bytes, sizeof v);
}

KeyStatus build_key(const std::vector<Regions>& components, std::string& key) {
  std::vector<OrientedView> open;
  open.reserve(components.size());
  for (const auto& c : components) {
    if (regions_resolved(c)) {
      if (!regions_unknot(c)) return KeyStatus::KnotterDecided;
      continue;
    }
    open.push_back({&c, compare_orientations(c) < 0});
  }
  key.clear();
  if (open.empty()) return KeyStatus::UnknotterDecided;
  std::sort(open.begin(), open.end());
  for (const auto& v : open) {
    append_raw(key, static_cast<std::int64_t>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
      append_raw(key, v.at(i).resolved);
      append_raw(key, v.at(i).unresolved);
    }
  }
  return KeyStatus::Open;
}

SearchState make_state(const SumPosition& position) {
  SearchState s;
  s.components.reserve(position.size());
  for (const auto& c : position.components()) s.components.push_back(c.regions());
  return s;
}

bool terminal_unknot(const SearchState& s) {
  return std::all_of(s.components.begin(), s.components.end(), regions_unknot);
}

// Calls visit(component, region, sign) for every move; stops when visit
// returns true. Applies and undoes each move in place.
template <typename Visit>
bool for_each_move(SearchState& s, Visit&& visit) {
  for (auto& comp : s.components) {
    for (auto& region : comp) {
      if (region.unresolved == 0) continue;
      for (int sign : {1, -1}) {
        region.unresolved -= 1;
        region.resolved += sign;
        const bool stop = visit();
        region.resolved -= sign;
        region.unresolved += 1;
        if (stop) return true;
      }
    }
  }
  return false;
}

bool has_moves(const SearchState& s) {
  for (const auto& comp : s.components) {
    if (!regions_resolved(comp)) return true;
  }
  return false;
}

constexpr std::uint8_t known_bit(Player mover) { return mover == Player::Unknotter ? 0x1 : 0x4; }
constexpr std::uint8_t value_bit(Player mover) { return mover == Player::Unknotter ? 0x2 : 0x8; }

}  // namespace

std::string canonical_key(const SumPosition& position) {
  std::vector<Regions> comps;
  comps.reserve(position.size());
  for (const auto& c : position.components()) comps.push_back(c.regions());
  std::string key;
  switch (build_key(comps, key)) {
    case KeyStatus::Open: return key;
    case KeyStatus::UnknotterDecided: return {};
    case KeyStatus::KnotterDecided: return std::string("K");
  }
  return key;
}

TranspositionTable::Shard& TranspositionTable::shard_for(const std::string& key) const {
  return shards_[std::hash<std::string>{}(key) % kShards];
}

std::optional<Player> TranspositionTable::lookup(const std::string& key, Player mover) const {
  auto& shard = shard_for(key);
  std::shared_lock lock(shard.mutex);
  const auto it = shard.entries.find(key);
  if (it == shard.entries.end() || (it->second & known_bit(mover)) == 0) return std::nullopt;
  return (it->second & value_bit(mover)) != 0 ? Player::Unknotter : Player::Knotter;
}

void TranspositionTable::record(const std::string& key, Player mover, Player winner) {
  auto& shard = shard_for(key);
  std::unique_lock lock(shard.mutex);
  auto& bits = shard.entries[key];
  bits |= known_bit(mover);
  if (winner == Player::Unknotter) bits |= value_bit(mover);
}

std::size_t TranspositionTable::size() const {
  std::size_t total = 0;
  for (auto& shard : shards_) {
    std::shared_lock lock(shard.mutex);
    total += shard.entries.size();
  }
  return total;
}

void TranspositionTable::clear() {
  for (auto& shard : shards_) {
    std::unique_lock lock(shard.mutex);
    shard.entries.clear();
  }
}

class Solver::ZeroGameCache {
 public:
  std::optional<bool> lookup(const std::string& key) const {
    std::shared_lock lock(mutex_);
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }
  void record(const std::string& key, bool value) {
    std::unique_lock lock(mutex_);
    entries_.emplace(key, value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, bool> entries_;
};

namespace {

class Search {
 public:
  Search(bool memoize, TranspositionTable& table) : memoize_(memoize), table_(table) {}

  Player winner(SearchState& s, Player mover) {
    if (!memoize_) return plain(s, mover);
    return memo(s, mover);
  }

 private:
  // Direct recursion: terminal only once every crossing is resolved.
  Player plain(SearchState& s, Player mover) {
    if (!has_moves(s)) return terminal_unknot(s) ? Player::Unknotter : Player::Knotter;
    const bool won = for_each_move(s, [&] { return plain(s, opponent(mover)) == mover; });
    return won ? mover : opponent(mover);
  }

  Player memo(SearchState& s, Player mover) {
    std::string key;
    switch (build_key(s.components, key)) {
      case KeyStatus::UnknotterDecided: return Player::Unknotter;
      case KeyStatus::KnotterDecided: return Player::Knotter;
      case KeyStatus::Open: break;
    }
    if (auto hit = table_.lookup(key, mover)) return *hit;
    const bool won = for_each_move(s, [&] { return memo(s, opponent(mover)) == mover; });
    const Player result = won ? mover : opponent(mover);
    table_.record(key, mover, result);
    return result;
  }

  bool memoize_;
  TranspositionTable& table_;
};

}  // namespace

Solver::Solver() : Solver(Options{}) {}

Solver::Solver(Options options) : Solver(options, std::make_shared<TranspositionTable>()) {}

Solver::Solver(Options options, std::shared_ptr<TranspositionTable> table)
    : options_(options), table_(std::move(table)), zero_cache_(std::make_shared<ZeroGameCache>()) {}

Player Solver::wins_moving_first(const SumPosition& position, Player mover) const {
  position.require_knots();
  auto state = make_state(position);
  return Search(options_.memoize, *table_).winner(state, mover);
}

OutcomeClass Solver::outcome(const SumPosition& position) const {
  position.require_knots();
  auto state = make_state(position);
  Search search(options_.memoize, *table_);
  const auto u_first = search.winner(state, Player::Unknotter);
  const auto k_first = search.winner(state, Player::Knotter);
  return outcome_from_winners(u_first, k_first);
}

NormalizedOutcome Solver::normalized_outcome(const SumPosition& position) const {
  const auto [even, odd] = projections(position);
  NormalizedOutcome n{outcome(even), outcome(odd)};
  if (!is_legal(n)) {
    throw Error(ErrorCode::IllegalOutcomePair,
                "normalized outcome " + to_string(n) + " of " + knotgame::to_string(position));
  }
  return n;
}

XYValue Solver::xy(const SumPosition& position) const { return to_xy(normalized_outcome(position)); }

bool Solver::is_zero_game(const SumPosition& position) const {
  position.require_knots();
  auto state = make_state(position);
  Search search(options_.memoize, *table_);
  const bool memoize = options_.memoize;
  ZeroGameCache& cache = *zero_cache_;

  std::function<bool(SearchState&)> zero = [&](SearchState& s) -> bool {
    std::string key;
    if (memoize) {
      switch (build_key(s.components, key)) {
        case KeyStatus::UnknotterDecided: return true;
        case KeyStatus::KnotterDecided: return false;
        case KeyStatus::Open: break;
      }
      if (auto hit = cache.lookup(key)) return *hit;
    } else if (!has_moves(s)) {
      return terminal_unknot(s);
    }
    bool result = search.winner(s, Player::Unknotter) == Player::Unknotter;
    if (result) {
      // Every option Q must have an option R that is a zero game.
      const bool some_q_fails = for_each_move(s, [&] {
        const bool has_zero_reply = for_each_move(s, [&] { return zero(s); });
        return !has_zero_reply;
      });
      result = !some_q_fails;
    }
    if (memoize) cache.record(key, result);
    return result;
  };
  return zero(state);
}

}  // namespace knotgame
