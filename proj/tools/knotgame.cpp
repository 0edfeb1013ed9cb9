#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <httplib.h>
#include <json.hpp>

#include "knotgame/enumerate.hpp"
#include "knotgame/error.hpp"
#include "knotgame/http_api.hpp"
#include "knotgame/notation.hpp"
#include "knotgame/rewrite.hpp"
#include "knotgame/service.hpp"
#include "knotgame/solver.hpp"
#include "knotgame/sums.hpp"
#include "knotgame/tangle.hpp"
#include "knotgame/verify.hpp"

using namespace knotgame;
using nlohmann::json;

namespace {

enum class Format { Human, Tsv, Json };

struct Globals {
  Format format = Format::Human;
  std::int64_t max_crossings = 0;
};

std::string token(Player p) { return p == Player::Unknotter ? "unknotter" : "knotter"; }

void check_budget(const SumPosition& p, const Globals& g) {
  if (g.max_crossings > 0 && p.unresolved_count() > g.max_crossings) {
    throw Error(ErrorCode::PositionTooLarge, std::to_string(p.unresolved_count()) +
                                                 " unresolved crossings exceed the cap of " +
                                                 std::to_string(g.max_crossings));
  }
}

SumPosition knot_position(const std::string& text, const Globals& g) {
  auto p = parse_position(text);
  p.require_knots();
  check_budget(p, g);
  return p;
}

RationalPseudodiagram knot_shadow(const std::string& text) {
  auto d = parse_diagram(text);
  if (!d.is_shadow()) throw Error(ErrorCode::NotAShadow, to_string(d) + " has resolved crossings");
  if (!is_knot(d)) throw Error(ErrorCode::NotAKnot, to_string(d) + " closes to a link");
  return d;
}

json trace_json(const Trace& trace) {
  json steps = json::array();
  for (const auto& s : trace) {
    steps.push_back({{"rule", std::string(rule_name(s.rule.tag))}, {"site", s.rule.site}, {"result", to_string(s.result)}});
  }
  return steps;
}

void print_trace(const Trace& trace, Format f) {
  for (const auto& s : trace) {
    if (f == Format::Tsv) {
      std::cout << rule_name(s.rule.tag) << '\t' << s.rule.site << '\t' << to_string(s.result) << '\n';
    } else {
      std::cout << rule_name(s.rule.tag) << '@' << s.rule.site << ": " << to_string(s.result) << '\n';
    }
  }
}

int cmd_outcome(const std::string& text, const Globals& g) {
  const auto p = knot_position(text, g);
  Solver solver;
  const auto u = solver.wins_moving_first(p, Player::Unknotter);
  const auto k = solver.wins_moving_first(p, Player::Knotter);
  const auto o = outcome_symbol(outcome_from_winners(u, k));
  switch (g.format) {
    case Format::Json:
      std::cout << json{{"position", to_string(p)},
                        {"outcome", std::string(o)},
                        {"winner_unknotter_first", token(u)},
                        {"winner_knotter_first", token(k)}}
                       .dump()
                << '\n';
      break;
    case Format::Tsv: std::cout << to_string(p) << '\t' << o << '\t' << token(u) << '\t' << token(k) << '\n'; break;
    case Format::Human:
      std::cout << o << "\nunknotter first: " << token(u) << " wins\nknotter first: " << token(k) << " wins\n";
      break;
  }
  return 0;
}

int cmd_xy(const std::string& text, const Globals& g) {
  const auto p = knot_position(text, g);
  Solver solver;
  const auto n = solver.normalized_outcome(p);
  const auto xy = to_xy(n);
  switch (g.format) {
    case Format::Json:
      std::cout << json{{"position", to_string(p)}, {"x", xy.x}, {"y", xy.y}, {"normalized", to_string(n)}}.dump()
                << '\n';
      break;
    case Format::Tsv: std::cout << to_string(p) << '\t' << xy.x << '\t' << xy.y << '\t' << to_string(n) << '\n'; break;
    case Format::Human:
      std::cout << "X=" << xy.x << " Y=" << xy.y << " normalized=" << to_string(n) << '\n';
      break;
  }
  return 0;
}

int cmd_classify(const std::string& text, const Globals& g) {
  const auto d = knot_shadow(text);
  const auto c = classify_shadow(d);
  if (g.format == Format::Json) {
    std::cout << json{{"shadow", to_string(d)},
                      {"kind", std::string(shadow_kind_name(c.kind))},
                      {"terminal", to_string(c.terminal)},
                      {"witness", trace_json(c.witness)}}
                     .dump()
              << '\n';
    return 0;
  }
  std::cout << shadow_kind_name(c.kind) << '\n';
  print_trace(c.witness, g.format);
  return 0;
}

int cmd_reduce(const std::string& text, const Globals& g) {
  const auto d = knot_shadow(text);
  const auto trace = reduce_to_unknot(d);
  if (g.format == Format::Json) {
    std::cout << json{{"shadow", to_string(d)}, {"trace", trace_json(trace)}}.dump() << '\n';
    return 0;
  }
  print_trace(trace, g.format);
  return 0;
}

std::vector<std::int64_t> twist_list(const std::vector<std::string>& args) {
  std::string joined;
  for (const auto& a : args) joined += a + ",";
  if (joined.find('[') != std::string::npos) {
    if (args.size() != 1) throw Error(ErrorCode::ParseError, "give one diagram or a list of integers");
    const auto d = parse_diagram(args.front());
    return d.closure_twists();
  }
  std::vector<std::int64_t> out;
  std::string item;
  std::istringstream in(joined);
  while (std::getline(in, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "not an integer: " + item);
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw Error(ErrorCode::ParseError, "not an integer: " + item);
    out.push_back(v);
  }
  return out;
}

int cmd_fraction(const std::vector<std::string>& args, const Globals& g) {
  const auto twists = twist_list(args);
  const auto f = evaluate_fraction(twists);
  const bool knot = boost::multiprecision::abs(f.p) % 2 == 1;
  const bool unknot = boost::multiprecision::abs(f.p) == 1;
  const auto p = f.p.str();
  const auto q = f.q.str();
  switch (g.format) {
    case Format::Json:
      std::cout << json{{"twists", twists}, {"p", p}, {"q", q}, {"knot", knot}, {"unknot", unknot}}.dump() << '\n';
      break;
    case Format::Tsv: std::cout << p << '\t' << q << '\t' << knot << '\t' << unknot << '\n'; break;
    case Format::Human:
      std::cout << "p=" << p << " q=" << q << '\n'
                << (knot ? (unknot ? "unknot" : "knot") : "link") << '\n';
      break;
  }
  return 0;
}

int cmd_sum_outcome(const std::string& text, const Globals& g) {
  auto p = parse_position(text);
  p.require_knots();
  if (!p.is_shadow()) throw Error(ErrorCode::NotAShadow, to_string(p) + " has resolved crossings");
  const auto cf = outcome_closed_form(p);
  if (g.format == Format::Json) {
    json summands = json::array();
    for (std::size_t i = 0; i < cf.summands.size(); ++i) {
      summands.push_back({{"shadow", to_string(p[i])},
                          {"kind", std::string(shadow_kind_name(cf.summands[i].kind))},
                          {"parity", parity(p[i])}});
    }
    std::cout << json{{"position", to_string(p)},
                      {"outcome", std::string(outcome_symbol(cf.outcome))},
                      {"rationale", std::string(rationale_name(cf.rationale))},
                      {"summands", std::move(summands)}}
                     .dump()
              << '\n';
  } else if (g.format == Format::Tsv) {
    std::cout << to_string(p) << '\t' << outcome_symbol(cf.outcome) << '\t' << rationale_name(cf.rationale) << '\n';
  } else {
    std::cout << outcome_symbol(cf.outcome) << '\n' << rationale_name(cf.rationale) << '\n';
  }
  return 0;
}

int cmd_sweep(std::int64_t max_crossings, std::size_t max_regions, std::int64_t max_entry, const Globals& g) {
  if (max_crossings < 1) throw Error(ErrorCode::InvalidInput, "--max-crossings must be positive");
  ShadowBounds bounds;
  bounds.max_regions = max_regions;
  bounds.max_entry = max_entry;
  bounds.max_crossings = max_crossings;
  bounds.min_crossings = 1;
  const auto shadows = enumerate_knot_shadows(bounds);
  Solver solver;
  std::size_t total = 0, mismatches = 0;
  for (const auto& sum : enumerate_sums(shadows, max_crossings)) {
    const auto r = outcome_oracle_check(sum, max_crossings, solver);
    ++total;
    if (!r.agree) ++mismatches;
    if (g.format == Format::Json) {
      std::cout << json{{"position", to_string(sum)},
                        {"closed_form", std::string(outcome_symbol(r.closed_form.outcome))},
                        {"solver", std::string(outcome_symbol(r.solver_outcome))},
                        {"agree", r.agree}}
                       .dump()
                << '\n';
    } else {
      std::cout << to_string(sum) << '\t' << outcome_symbol(r.closed_form.outcome) << '\t'
                << outcome_symbol(r.solver_outcome) << '\t' << (r.agree ? "yes" : "no") << '\n';
    }
  }
  std::cerr << total << " positions, " << mismatches << " mismatches\n";
  return mismatches == 0 ? 0 : 1;
}

int cmd_verify(const Globals& g) {
  Solver solver;
  bool all = true;
  json rows = json::array();
  for (const auto& r : run_golden_evaluations(solver)) {
    all = all && r.pass;
    if (g.format == Format::Json) {
      rows.push_back({{"shadow", r.expected.shadow},
                      {"unknotter_first", std::string(golden_name(r.unknotter_first))},
                      {"knotter_first", std::string(golden_name(r.knotter_first))},
                      {"pass", r.pass}});
    } else {
      std::cout << format_golden_result(r) << '\n';
    }
  }
  if (g.format == Format::Json) std::cout << json{{"pass", all}, {"evaluations", rows}}.dump() << '\n';
  return all ? 0 : 1;
}

int cmd_serve(const std::string& listen, const std::string& event_log, std::int64_t cap) {
  const auto colon = listen.rfind(':');
  if (colon == std::string::npos) throw Error(ErrorCode::InvalidInput, "listen address must be host:port");
  const auto host = listen.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(listen.substr(colon + 1));
  } catch (const std::exception&) {
    throw Error(ErrorCode::InvalidInput, "bad port in " + listen);
  }
  ServiceConfig config;
  config.max_crossings = cap;
  config.event_log_path = event_log;
  GameService service(config, std::make_shared<const Solver>());
  httplib::Server server;
  install_routes(server, service);
  if (!server.bind_to_port(host, port)) {
    std::cerr << "cannot listen on " << listen << '\n';
    return 2;
  }
  std::cerr << "listening on " << host << ':' << port << " (" << service.session_count() << " sessions recovered)\n";
  server.listen_after_bind();
  return 0;
}

void render(const GameSession& s) {
  std::cout << "position: " << to_string(s.position) << '\n';
  for (std::size_t c = 0; c < s.position.size(); ++c) {
    const auto& d = s.position[c];
    std::cout << "  component " << c << ':';
    for (std::size_t r = 0; r < d.size(); ++r) {
      std::cout << "  r" << r << '=' << d[r].resolved << '/' << d[r].unresolved;
    }
    std::cout << '\n';
  }
}

std::optional<MoveDescriptor> read_move(const std::string& line, const std::vector<MoveDescriptor>& moves) {
  std::istringstream in(line);
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  if (words.size() == 1) {
    try {
      const auto i = std::stoul(words[0]);
      if (i < moves.size()) return moves[i];
    } catch (const std::exception&) {
    }
    return std::nullopt;
  }
  if (words.size() != 3 || (words[2] != "+" && words[2] != "-")) return std::nullopt;
  try {
    return MoveDescriptor{std::stoul(words[0]), std::stoul(words[1]), words[2] == "+" ? Sign::Positive : Sign::Negative};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int cmd_play(const std::string& text, const std::string& engine_role, const std::string& first, const Globals& g) {
  ServiceConfig config;
  if (g.max_crossings > 0) config.max_crossings = g.max_crossings;
  GameService service(config, std::make_shared<const Solver>());
  const Player engine = engine_role == "unknotter" ? Player::Unknotter : Player::Knotter;
  auto s = service.create_game(text, engine, first == "engine" ? Seat::Engine : Seat::Human);
  std::cout << "you play the " << token(opponent(engine)) << "; moves are 'component region +|-' or a list index; "
            << "'hint' shows the analysis, 'quit' leaves\n";
  while (s.status == GameStatus::InProgress) {
    render(s);
    if (s.to_move == Seat::Engine) {
      const auto [move, next] = service.engine_move(s.id);
      std::cout << "engine plays " << to_string(move) << '\n';
      s = next;
      continue;
    }
    const auto moves = legal_moves(s.position);
    for (std::size_t i = 0; i < moves.size(); ++i) std::cout << "  " << i << ": " << to_string(moves[i]) << '\n';
    std::cout << "> " << std::flush;
    std::string line;
    if (!std::getline(std::cin, line) || line == "quit") return 0;
    if (line == "hint") {
      for (const auto& a : service.analyze(s.id)) {
        std::cout << "  " << to_string(a.move) << " -> " << to_string(a.successor) << " ["
                  << outcome_symbol(a.successor_outcome) << (a.winning ? ", winning" : "") << "]\n";
      }
      continue;
    }
    const auto move = read_move(line, moves);
    if (!move) {
      std::cout << "unrecognized move\n";
      continue;
    }
    try {
      s = service.submit_move(s.id, *move);
    } catch (const Error& e) {
      std::cout << e.what() << '\n';
    }
  }
  render(s);
  std::cout << status_name(s.status) << '\n';
  return 0;
}

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver and play engine for the knotting-unknotting game on rational knot pseudodiagrams"};
  app.require_subcommand(1);
  Globals g;
  std::string format = "human";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "tsv", "json"}))
      ->capture_default_str();
  app.add_option("--max-crossings-cap", g.max_crossings, "Reject positions with more unresolved crossings (0 = no cap)");

  std::string position;
  auto* outcome = app.add_subcommand("outcome", "Outcome class U|K|1|2 and both first-mover winners");
  outcome->add_option("position", position)->required();
  auto* xy = app.add_subcommand("xy", "X and Y values with the normalized outcome");
  xy->add_option("position", position)->required();
  auto* classify = app.add_subcommand("classify", "Classify a knot shadow with its witness trace");
  classify->add_option("diagram", position)->required();
  auto* reduce = app.add_subcommand("reduce", "Trace a knot shadow down to the empty diagram");
  reduce->add_option("diagram", position)->required();
  std::vector<std::string> twists;
  auto* fraction = app.add_subcommand("fraction", "Continued-fraction p/q of a twist list or diagram");
  fraction->add_option("twists", twists, "Integers (comma or space separated) or one diagram")->required();
  auto* sum_outcome = app.add_subcommand("sum-outcome", "Closed-form outcome of a sum of knot shadows");
  sum_outcome->add_option("position", position)->required();

  std::int64_t sweep_crossings = 0;
  std::size_t sweep_regions = 4;
  std::int64_t sweep_entry = 4;
  auto* sweep = app.add_subcommand("sweep", "Compare closed form and solver over enumerated sums (TSV)");
  sweep->add_option("--max-crossings", sweep_crossings)->required();
  sweep->add_option("--max-regions", sweep_regions)->capture_default_str();
  sweep->add_option("--max-entry", sweep_entry)->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Re-run the twelve golden evaluations");

  std::string listen = env_or("KNOTGAME_LISTEN", "127.0.0.1:8080");
  std::string event_log = env_or("KNOTGAME_EVENT_LOG", "");
  std::int64_t serve_cap = std::stoll(env_or("KNOTGAME_MAX_CROSSINGS", "16"));
  auto* serve = app.add_subcommand("serve", "Run the HTTP/JSON service");
  serve->add_option("--listen", listen, "host:port (env KNOTGAME_LISTEN)")->capture_default_str();
  serve->add_option("--event-log", event_log, "JSON-lines event log (env KNOTGAME_EVENT_LOG)");
  serve->add_option("--max-crossings", serve_cap, "Solver crossing cap (env KNOTGAME_MAX_CROSSINGS)")
      ->capture_default_str();

  std::string engine_role = "knotter";
  std::string first = "human";
  auto* play = app.add_subcommand("play", "Play against the engine in the terminal");
  play->add_option("position", position)->required();
  play->add_option("--engine", engine_role)->check(CLI::IsMember({"unknotter", "knotter"}))->capture_default_str();
  play->add_option("--first", first)->check(CLI::IsMember({"human", "engine"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  g.format = format == "json" ? Format::Json : format == "tsv" ? Format::Tsv : Format::Human;

  try {
    if (outcome->parsed()) return cmd_outcome(position, g);
    if (xy->parsed()) return cmd_xy(position, g);
    if (classify->parsed()) return cmd_classify(position, g);
    if (reduce->parsed()) return cmd_reduce(position, g);
    if (fraction->parsed()) return cmd_fraction(twists, g);
    if (sum_outcome->parsed()) return cmd_sum_outcome(position, g);
    if (sweep->parsed()) return cmd_sweep(sweep_crossings, sweep_regions, sweep_entry, g);
    if (verify->parsed()) return cmd_verify(g);
    if (serve->parsed()) return cmd_serve(listen, event_log, serve_cap);
    if (play->parsed()) return cmd_play(position, engine_role, first, g);
  } catch (const Error& e) {
    if (g.format == Format::Json) {
      std::cout << error_body(e).dump() << '\n';
    } else {
      std::cerr << error_code_name(e.code()) << ": " << e.what() << '\n';
    }
    return e.code() == ErrorCode::InternalNonConvergence ? 1 : 2;
  }
  return 2;
}
