#include "knotgame/notation.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "knotgame/error.hpp"

namespace knotgame {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SumPosition position() {
    std::vector<RationalPseudodiagram> parts;
    parts.push_back(diagram());
    while (peek() == '#') {
      ++pos_;
      parts.push_back(diagram());
    }
    expect_end();
    return SumPosition(std::move(parts));
  }

  RationalPseudodiagram single() {
    auto d = diagram();
    expect_end();
    return d;
  }

 private:
  RationalPseudodiagram diagram() {
    expect('[');
    std::vector<TwistRegion> regions;
    if (peek() == '~') {
      ++pos_;
      expect(']');
      return RationalPseudodiagram(std::move(regions));
    }
    if (peek() == ']') {
      ++pos_;
      return RationalPseudodiagram(std::move(regions));
    }
    regions.push_back(region());
    while (peek() == ',') {
      ++pos_;
      regions.push_back(region());
    }
    expect(']');
    return RationalPseudodiagram(std::move(regions));
  }

  TwistRegion region() {
    TwistRegion r;
    const char c = peek();
    if (c == '(') {
      r.unresolved = unresolved_group();
      return r;
    }
    if (c != '-' && !std::isdigit(static_cast<unsigned char>(c))) fail("expected a region");
    r.resolved = integer(true);
    if (peek() == '(') r.unresolved = unresolved_group();
    return r;
  }

  std::int64_t unresolved_group() {
    expect('(');
    const auto b = integer(false);
    expect(')');
    return b;
  }

  std::int64_t integer(bool allow_sign) {
    skip_ws();
    const std::size_t start = pos_;
    if (allow_sign && pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected digits");
    std::int64_t value = 0;
    const auto* first = text_.data() + start;
    const auto* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) fail("integer out of range");
    return value;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_end() {
    if (peek() != '\0') fail("trailing characters");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError,
                what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalPseudodiagram parse_diagram(std::string_view text) { return Parser(text).single(); }

SumPosition parse_position(std::string_view text) { return Parser(text).position(); }

std::string to_string(const TwistRegion& region) {
  if (region.unresolved == 0) return std::to_string(region.resolved);
  const std::string group = "(" + std::to_string(region.unresolved) + ")";
  return region.resolved == 0 ? group : std::to_string(region.resolved) + group;
}

std::string to_string(const RationalPseudodiagram& diagram) {
  std::string out = "[";
  for (std::size_t i = 0; i < diagram.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(diagram[i]);
  }
  out += ']';
  return out;
}

std::string to_string(const SumPosition& position) {
  std::string out;
  for (std::size_t i = 0; i < position.size(); ++i) {
    if (i > 0) out += '#';
    out += to_string(position[i]);
  }
  return out.empty() ? "[]" : out;
}

std::string to_string(const MoveDescriptor& move) {
  return "(" + std::to_string(move.component) + "," + std::to_string(move.region) + "," +
         (move.sign == Sign::Positive ? "+" : "-") + ")";
}

}  // namespace knotgame
