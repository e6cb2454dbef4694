#pragma once

// Canonical text format for relational systems, groupoids and element maps.
//
//   %orthokit v1
//   kind groupoid            # or: kind relsys
//   elements 0 1 a a'
//   involution 1 0 a' a
//   table                    # groupoid: n rows of n entries, row = left operand
//   ...
//   pairs                    # relsys: one "x y" per line, (x,y) in R
//
// '#' starts a comment, blank lines are ignored.

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "orthokit/core.hpp"

namespace orthokit {

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tokens.emplace_back(line.substr(i, j - i));
      i = j;
    }
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

class LineCursor {
 public:
  explicit LineCursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return next_ >= lines_.size(); }

  Line const& expect(std::string const& keyword) {
    if (done()) throw parse_error(last_line(), "unexpected end of input, expected '" + keyword + "'");
    Line const& l = lines_[next_];
    if (l.tokens.front() != keyword) {
      throw parse_error(l.number, "expected '" + keyword + "', found '" + l.tokens.front() + "'");
    }
    ++next_;
    return l;
  }

  Line const& take(std::string const& what) {
    if (done()) throw parse_error(last_line(), "unexpected end of input, expected " + what);
    return lines_[next_++];
  }

 private:
  std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().number; }
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

inline Elem lookup(Carrier const& c, std::string const& name, std::size_t line) {
  auto idx = c.find(name);
  if (!idx) throw semantic_error("line " + std::to_string(line) + ": unknown element '" + name + "'");
  return *idx;
}

struct Header {
  std::string kind;
  Carrier carrier;
  Involution involution;
};

inline Header parse_header(LineCursor& in) {
  Line const& magic = in.expect("%orthokit");
  if (magic.tokens.size() != 2 || magic.tokens[1] != "v1") {
    throw parse_error(magic.number, "unsupported format header, expected '%orthokit v1'");
  }
  Line const& kind = in.expect("kind");
  if (kind.tokens.size() != 2 || (kind.tokens[1] != "groupoid" && kind.tokens[1] != "relsys")) {
    throw parse_error(kind.number, "kind must be 'groupoid' or 'relsys'");
  }
  Line const& elems = in.expect("elements");
  std::vector<std::string> names(elems.tokens.begin() + 1, elems.tokens.end());
  if (names.empty()) throw parse_error(elems.number, "empty element list");
  if (names.size() > max_carrier_size) {
    throw semantic_error("line " + std::to_string(elems.number) + ": more than " +
                         std::to_string(max_carrier_size) + " elements");
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) {
        throw semantic_error("line " + std::to_string(elems.number) + ": duplicate element '" + names[i] + "'");
      }
    }
  }
  auto top_it = std::find(names.begin(), names.end(), "1");
  if (top_it == names.end()) {
    throw semantic_error("line " + std::to_string(elems.number) + ": no element named '1'");
  }
  Carrier carrier(names, static_cast<Elem>(top_it - names.begin()));

  Line const& invl = in.expect("involution");
  if (invl.tokens.size() != names.size() + 1) {
    throw parse_error(invl.number, "involution must list " + std::to_string(names.size()) + " images");
  }
  Involution inv;
  for (std::size_t i = 1; i < invl.tokens.size(); ++i) inv.image.push_back(lookup(carrier, invl.tokens[i], invl.number));
  for (Elem x = 0; x < inv.size(); ++x) {
    if (inv(inv(x)) != x) {
      throw semantic_error("line " + std::to_string(invl.number) + ": involution is not involutive at '" +
                           carrier.name(x) + "'");
    }
  }
  if (auto z = carrier.find("0"); z && *z != inv(carrier.top())) {
    throw semantic_error("line " + std::to_string(elems.number) + ": element named '0' is not 1'");
  }
  return {kind.tokens[1], std::move(carrier), std::move(inv)};
}

}  // namespace detail

/// Parses a structure in the canonical format; carrier order is file order.
inline Structure parse(std::string_view text) {
  detail::LineCursor in(detail::tokenize(text));
  detail::Header h = detail::parse_header(in);
  std::size_t const n = h.carrier.size();

  if (h.kind == "groupoid") {
    in.expect("table");
    std::vector<Elem> table;
    table.reserve(n * n);
    for (std::size_t row = 0; row < n; ++row) {
      auto const& l = in.take("table row " + std::to_string(row + 1));
      if (l.tokens.size() != n) {
        throw parse_error(l.number, "table row must have " + std::to_string(n) + " entries");
      }
      for (auto const& tok : l.tokens) table.push_back(detail::lookup(h.carrier, tok, l.number));
    }
    if (!in.done()) throw parse_error(in.take("").number, "trailing content after table");
    return Groupoid(std::move(h.carrier), std::move(table), std::move(h.involution));
  }

  in.expect("pairs");
  RelationalSystem s(std::move(h.carrier), std::move(h.involution));
  while (!in.done()) {
    auto const& l = in.take("pair");
    if (l.tokens.size() != 2) throw parse_error(l.number, "pair line must have exactly 2 entries");
    s.relate(detail::lookup(s.carrier, l.tokens[0], l.number), detail::lookup(s.carrier, l.tokens[1], l.number));
  }
  return s;
}

inline RelationalSystem parse_relsys(std::string_view text) {
  Structure s = parse(text);
  if (auto* r = std::get_if<RelationalSystem>(&s)) return std::move(*r);
  throw semantic_error("expected 'kind relsys'");
}

inline Groupoid parse_groupoid(std::string_view text) {
  Structure s = parse(text);
  if (auto* g = std::get_if<Groupoid>(&s)) return std::move(*g);
  throw semantic_error("expected 'kind groupoid'");
}

namespace detail {

inline void write_header(std::ostream& out, char const* kind, Carrier const& c, Involution const& inv) {
  out << "%orthokit v1\nkind " << kind << "\nelements";
  for (auto const& name : c.names()) out << ' ' << name;
  out << "\ninvolution";
  for (Elem x = 0; x < c.size(); ++x) out << ' ' << c.name(inv(x));
  out << '\n';
}

}  // namespace detail

inline std::string serialize(Groupoid const& g) {
  std::ostringstream out;
  detail::write_header(out, "groupoid", g.carrier, g.involution);
  out << "table\n";
  for (Elem x = 0; x < g.size(); ++x) {
    for (Elem y = 0; y < g.size(); ++y) out << (y ? " " : "") << g.carrier.name(g.sum(x, y));
    out << '\n';
  }
  return out.str();
}

inline std::string serialize(RelationalSystem const& s) {
  std::ostringstream out;
  detail::write_header(out, "relsys", s.carrier, s.involution);
  out << "pairs\n";
  for (Elem x = 0; x < s.size(); ++x) {
    for (Elem y = 0; y < s.size(); ++y) {
      if (s.related(x, y)) out << s.carrier.name(x) << ' ' << s.carrier.name(y) << '\n';
    }
  }
  return out.str();
}

inline std::string serialize(Structure const& s) {
  return std::visit([](auto const& v) { return serialize(v); }, s);
}

/// Element map file: one "source image" pair per line, every source element
/// exactly once.
inline std::vector<Elem> parse_map(std::string_view text, Carrier const& from, Carrier const& to) {
  std::vector<Elem> map(from.size(), 0);
  std::vector<bool> seen(from.size(), false);
  for (auto const& l : detail::tokenize(text)) {
    if (l.tokens.size() != 2) throw parse_error(l.number, "map line must have exactly 2 entries");
    Elem src = detail::lookup(from, l.tokens[0], l.number);
    if (seen[src]) {
      throw semantic_error("line " + std::to_string(l.number) + ": element '" + l.tokens[0] + "' mapped twice");
    }
    seen[src] = true;
    map[src] = detail::lookup(to, l.tokens[1], l.number);
  }
  for (Elem x = 0; x < from.size(); ++x) {
    if (!seen[x]) throw semantic_error("map does not cover element '" + from.name(x) + "'");
  }
  return map;
}

inline std::string serialize_map(std::vector<Elem> const& map, Carrier const& from, Carrier const& to) {
  std::ostringstream out;
  for (Elem x = 0; x < map.size(); ++x) out << from.name(x) << ' ' << to.name(map[x]) << '\n';
  return out.str();
}

/// One line per check: NAME PASS|FAIL [var=elem ...], first witness only.
inline std::string format_report(CheckReport const& report, Carrier const& carrier) {
  std::ostringstream out;
  for (auto const& c : report.checks) {
    out << c.name << (c.pass ? " PASS" : " FAIL");
    if (!c.pass && !c.witnesses.empty()) {
      for (auto const& b : c.witnesses.front()) out << ' ' << b.var << '=' << carrier.name(b.value);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace orthokit
