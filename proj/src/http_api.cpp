#include "knotgame/http_api.hpp"

#include <cctype>

#include <httplib.h>

#include "knotgame/notation.hpp"
#include "knotgame/sums.hpp"

namespace knotgame {

using nlohmann::json;

namespace {

std::string player_token(Player p) { return p == Player::Unknotter ? "unknotter" : "knotter"; }

json regions_json(const SumPosition& position) {
  json comps = json::array();
  for (const auto& c : position.components()) {
    json regions = json::array();
    for (const auto& r : c.regions()) regions.push_back({{"resolved", r.resolved}, {"unresolved", r.unresolved}});
    comps.push_back(std::move(regions));
  }
  return comps;
}

std::string lowered(std::string t) {
  for (auto& ch : t) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  return t;
}

Player player_from_json(const json& body, const char* field, Player fallback) {
  if (!body.contains(field)) return fallback;
  const auto t = lowered(body.at(field).get<std::string>());
  if (t == "unknotter" || t == "ursula") return Player::Unknotter;
  if (t == "knotter" || t == "lear") return Player::Knotter;
  throw Error(ErrorCode::InvalidInput, std::string(field) + " must be \"unknotter\" or \"knotter\"");
}

Seat seat_from_json(const json& body, const char* field, Seat fallback) {
  if (!body.contains(field)) return fallback;
  const auto t = lowered(body.at(field).get<std::string>());
  if (t == "human") return Seat::Human;
  if (t == "engine") return Seat::Engine;
  throw Error(ErrorCode::InvalidInput, std::string(field) + " must be \"human\" or \"engine\"");
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  try {
    auto body = json::parse(req.body);
    if (!body.is_object()) throw Error(ErrorCode::InvalidInput, "request body must be a JSON object");
    return body;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, std::string("malformed JSON body: ") + e.what());
  }
}

std::optional<std::uint64_t> version_from_json(const json& body) {
  if (!body.contains("version")) return std::nullopt;
  return body.at("version").get<std::uint64_t>();
}

void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

template <typename Handler>
httplib::Server::Handler guarded(Handler handler) {
  return [handler](const httplib::Request& req, httplib::Response& res) {
    try {
      handler(req, res);
    } catch (const Error& e) {
      send(res, http_status(e.code()), error_body(e));
    } catch (const json::exception& e) {
      send(res, 400, error_body(Error(ErrorCode::InvalidInput, e.what())));
    } catch (const std::exception& e) {
      send(res, 500, {{"error", {{"code", "Internal"}, {"message", e.what()}}}});
    }
  };
}

}  // namespace

json to_json(const MoveDescriptor& move) {
  return {{"component", move.component}, {"region", move.region}, {"sign", move.sign == Sign::Positive ? "+" : "-"}};
}

json to_json(const GameSession& s) {
  json history = json::array();
  for (const auto& h : s.history) {
    auto entry = to_json(h.move);
    entry["mover"] = player_token(h.mover);
    entry["seat"] = std::string(seat_name(h.seat));
    history.push_back(std::move(entry));
  }
  json moves = json::array();
  if (s.status == GameStatus::InProgress) {
    for (const auto& m : legal_moves(s.position)) moves.push_back(to_json(m));
  }
  return {{"id", s.id},
          {"initial", to_string(s.initial)},
          {"position", to_string(s.position)},
          {"components", regions_json(s.position)},
          {"history", std::move(history)},
          {"first", std::string(seat_name(s.first))},
          {"to_move", std::string(seat_name(s.to_move))},
          {"side_to_move", player_token(s.side_to_move())},
          {"engine_plays", player_token(s.engine_plays)},
          {"status", std::string(status_name(s.status))},
          {"version", s.version},
          {"legal_moves", std::move(moves)}};
}

json to_json(const MoveAnnotation& a) {
  auto out = to_json(a.move);
  out["successor"] = to_string(a.successor);
  out["successor_outcome"] = std::string(outcome_symbol(a.successor_outcome));
  out["winning"] = a.winning;
  return out;
}

MoveDescriptor move_from_json(const json& body) {
  if (!body.contains("component") || !body.contains("region") || !body.contains("sign")) {
    throw Error(ErrorCode::InvalidInput, "move needs component, region and sign");
  }
  const auto& c = body.at("component");
  const auto& r = body.at("region");
  if (!c.is_number_unsigned() && !(c.is_number_integer() && c.get<std::int64_t>() >= 0)) {
    throw Error(ErrorCode::InvalidInput, "component must be a nonnegative integer");
  }
  if (!r.is_number_unsigned() && !(r.is_number_integer() && r.get<std::int64_t>() >= 0)) {
    throw Error(ErrorCode::InvalidInput, "region must be a nonnegative integer");
  }
  MoveDescriptor m;
  m.component = c.get<std::size_t>();
  m.region = r.get<std::size_t>();
  const auto& sign = body.at("sign");
  if (sign.is_string() && (sign == "+" || sign == "-")) {
    m.sign = sign == "+" ? Sign::Positive : Sign::Negative;
  } else if (sign.is_number_integer() && (sign == 1 || sign == -1)) {
    m.sign = sign == 1 ? Sign::Positive : Sign::Negative;
  } else {
    throw Error(ErrorCode::InvalidInput, "sign must be \"+\", \"-\", 1 or -1");
  }
  return m;
}

json analyze_position(const GameService& service, std::string_view position_text) {
  const auto position = service.admit_position(position_text);
  const auto& solver = service.solver();
  const auto u_first = solver.wins_moving_first(position, Player::Unknotter);
  const auto k_first = solver.wins_moving_first(position, Player::Knotter);
  const auto normalized = solver.normalized_outcome(position);
  const auto xy = to_xy(normalized);
  json out = {{"position", to_string(position)},
              {"parity", position.parity()},
              {"outcome", std::string(outcome_symbol(outcome_from_winners(u_first, k_first)))},
              {"winner_unknotter_first", player_token(u_first)},
              {"winner_knotter_first", player_token(k_first)},
              {"normalized", to_string(normalized)},
              {"x", xy.x},
              {"y", xy.y},
              {"zero_game", solver.is_zero_game(position)}};
  if (position.is_shadow()) {
    const auto cf = outcome_closed_form(position);
    json summands = json::array();
    for (const auto& s : cf.summands) {
      summands.push_back({{"kind", std::string(shadow_kind_name(s.kind))}, {"terminal", to_string(s.terminal)}});
    }
    out["closed_form"] = {{"outcome", std::string(outcome_symbol(cf.outcome))},
                          {"rationale", std::string(rationale_name(cf.rationale))},
                          {"summands", std::move(summands)}};
  }
  return out;
}

int http_status(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidInput:
    case ErrorCode::NotAKnot:
    case ErrorCode::NotAShadow:
    case ErrorCode::PositionTooLarge:
    case ErrorCode::BudgetExceeded: return 400;
    case ErrorCode::UnknownGame: return 404;
    case ErrorCode::NotYourTurn:
    case ErrorCode::GameOver:
    case ErrorCode::VersionConflict: return 409;
    case ErrorCode::IllegalMove: return 422;
    default: return 500;
  }
}

json error_body(const Error& error) {
  return {{"error", {{"code", std::string(error_code_name(error.code()))}, {"message", error.what()}}}};
}

void install_routes(httplib::Server& server, GameService& service) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"}});

  server.Get("/health", guarded([&](const httplib::Request&, httplib::Response& res) {
               send(res, 200, {{"status", "ok"}, {"sessions", service.session_count()}});
             }));

  server.Post("/games", guarded([&](const httplib::Request& req, httplib::Response& res) {
                const auto body = parse_body(req);
                if (!body.contains("position")) throw Error(ErrorCode::InvalidInput, "missing position");
                const auto session = service.create_game(body.at("position").get<std::string>(),
                                                         player_from_json(body, body.contains("engine_role") ? "engine_role" : "engine_plays", Player::Knotter),
                                                         seat_from_json(body, "first", Seat::Human));
                send(res, 201, to_json(session));
              }));

  server.Get(R"(/games/([0-9a-f]+))", guarded([&](const httplib::Request& req, httplib::Response& res) {
               send(res, 200, to_json(service.get(req.matches[1].str())));
             }));

  server.Post(R"(/games/([0-9a-f]+)/moves)", guarded([&](const httplib::Request& req, httplib::Response& res) {
                const auto body = parse_body(req);
                const auto session =
                    service.submit_move(req.matches[1].str(), move_from_json(body), version_from_json(body));
                send(res, 200, to_json(session));
              }));

  server.Post(R"(/games/([0-9a-f]+)/engine-move)", guarded([&](const httplib::Request& req, httplib::Response& res) {
                const auto body = parse_body(req);
                const auto [move, session] = service.engine_move(req.matches[1].str(), version_from_json(body));
                send(res, 200, {{"move", to_json(move)}, {"session", to_json(session)}});
              }));

  server.Get(R"(/games/([0-9a-f]+)/analysis)", guarded([&](const httplib::Request& req, httplib::Response& res) {
               const auto id = req.matches[1].str();
               const auto session = service.get(id);
               json moves = json::array();
               if (session.status == GameStatus::InProgress) {
                 for (const auto& a : service.analyze(id)) moves.push_back(to_json(a));
               }
               send(res, 200, {{"id", id},
                               {"side_to_move", player_token(session.side_to_move())},
                               {"version", session.version},
                               {"moves", std::move(moves)}});
             }));

  server.Get("/analyze", guarded([&](const httplib::Request& req, httplib::Response& res) {
               if (!req.has_param("position")) throw Error(ErrorCode::InvalidInput, "missing position parameter");
               send(res, 200, analyze_position(service, req.get_param_value("position")));
             }));
}

}  // namespace knotgame
