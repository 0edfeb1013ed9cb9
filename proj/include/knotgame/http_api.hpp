#pragma once

#include <string_view>

#include <json.hpp>

#include "knotgame/error.hpp"
#include "knotgame/service.hpp"

namespace httplib {
class Server;
}

namespace knotgame {

nlohmann::json to_json(const MoveDescriptor& move);
nlohmann::json to_json(const GameSession& session);
nlohmann::json to_json(const MoveAnnotation& annotation);

/// Throws Error{InvalidInput} on a malformed move object. `sign` may be
/// "+", "-", 1 or -1.
MoveDescriptor move_from_json(const nlohmann::json& body);

/// Stateless analysis of a position: outcome, first-mover winners, X/Y and,
/// for sums of shadows, the closed-form rule.
nlohmann::json analyze_position(const GameService& service, std::string_view position_text);

int http_status(ErrorCode code) noexcept;
nlohmann::json error_body(const Error& error);

/// POST /games, GET /games/{id}, POST /games/{id}/moves,
/// POST /games/{id}/engine-move, GET /games/{id}/analysis,
/// GET /analyze?position=..., GET /health.
void install_routes(httplib::Server& server, GameService& service);

}  // namespace knotgame
