#pragma once

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "wedge/world.hpp"

namespace wedge {

struct TraceParseError : std::runtime_error {
  int line;
  TraceParseError(const std::string& what, int line_)
      : std::runtime_error("trace line " + std::to_string(line_) + ": " + what), line(line_) {}
};

namespace detail {

inline i64 parse_i64(std::string_view s, int line) {
  i64 v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw TraceParseError("bad integer '" + std::string(s) + "'", line);
  return v;
}

inline Node parse_node(std::string_view s, int line) {
  auto comma = s.find(',');
  if (comma == std::string_view::npos) throw TraceParseError("bad node '" + std::string(s) + "'", line);
  return {parse_i64(s.substr(0, comma), line), parse_i64(s.substr(comma + 1), line)};
}

inline Vec parse_vec(std::string_view s, int line) {
  Node n = parse_node(s, line);
  return {n.x, n.y};
}

inline std::string_view field(std::string_view token, std::string_view key, int line) {
  if (token.size() < key.size() + 1 || token.substr(0, key.size()) != key ||
      token[key.size()] != '=')
    throw TraceParseError("expected '" + std::string(key) + "=...', got '" + std::string(token) + "'",
                          line);
  return token.substr(key.size() + 1);
}

inline std::string_view next_token(std::string_view& rest) {
  while (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
  size_t e = rest.find(' ');
  std::string_view tok = rest.substr(0, e);
  rest.remove_prefix(e == std::string_view::npos ? rest.size() : e);
  return tok;
}

}  // namespace detail

inline std::string format_header(const Wedge& w, Node start, int p) {
  std::ostringstream os;
  os << "# wedge kind=" << kind_str(w.kind) << " origin=" << w.origin().x.str() << ','
     << w.origin().y.str() << " h1=" << w.h1.dir.x << ',' << w.h1.dir.y << " h2=" << w.h2.dir.x
     << ',' << w.h2.dir.y << " start=" << start.x << ',' << start.y << " p=" << p;
  return os.str();
}

inline void format_event(std::string& out, const TraceEvent& e) {
  out.clear();
  out += "t=";
  out += std::to_string(e.t);
  out += " pos=";
  out += std::to_string(e.pos.x);
  out += ',';
  out += std::to_string(e.pos.y);
  out += " free=";
  out += e.obs.free.str();
  out += " full=";
  out += e.obs.full ? 'f' : 'e';
  out += " carry=";
  out += std::to_string(e.obs.carried);
  out += " act=";
  out += port_char(e.out.port);
  out += ',';
  out += e.out.leave_full ? 'f' : 'e';
  out += ',';
  out += std::to_string(e.out.carried_next);
  out += " proc=";
  out += e.proc;
}

inline void write_trace(std::ostream& os, const Trace& t) {
  os << format_header(t.wedge, t.start, t.p) << '\n';
  std::string buf;
  for (const TraceEvent& e : t.events) {
    format_event(buf, e);
    os << buf << '\n';
  }
}

inline Trace parse_trace(std::istream& is) {
  Trace t;
  bool have_header = false;
  std::string line;
  int ln = 0;
  while (std::getline(is, line)) {
    ++ln;
    if (line.empty()) continue;
    std::string_view rest(line);
    if (line[0] == '#') {
      rest.remove_prefix(1);
      auto tok = detail::next_token(rest);
      if (tok != "wedge") throw TraceParseError("unknown header", ln);
      WedgeKind kind = kind_from_str(detail::field(detail::next_token(rest), "kind", ln));
      std::string_view ostr = detail::field(detail::next_token(rest), "origin", ln);
      auto comma = ostr.find(',');
      if (comma == std::string_view::npos) throw TraceParseError("bad origin", ln);
      Point origin{Rat::parse(ostr.substr(0, comma)), Rat::parse(ostr.substr(comma + 1))};
      Vec h1 = detail::parse_vec(detail::field(detail::next_token(rest), "h1", ln), ln);
      Vec h2 = detail::parse_vec(detail::field(detail::next_token(rest), "h2", ln), ln);
      t.start = detail::parse_node(detail::field(detail::next_token(rest), "start", ln), ln);
      t.p = int(detail::parse_i64(detail::field(detail::next_token(rest), "p", ln), ln));
      t.wedge = Wedge::make(origin, h1, h2, kind);
      have_header = true;
      continue;
    }
    if (!have_header) throw TraceParseError("event before header", ln);
    TraceEvent e;
    e.t = detail::parse_i64(detail::field(detail::next_token(rest), "t", ln), ln);
    e.pos = detail::parse_node(detail::field(detail::next_token(rest), "pos", ln), ln);
    e.obs.free = PortSet::parse(detail::field(detail::next_token(rest), "free", ln));
    std::string_view full = detail::field(detail::next_token(rest), "full", ln);
    if (full != "e" && full != "f") throw TraceParseError("bad fullness", ln);
    e.obs.full = full == "f";
    e.obs.carried = int(detail::parse_i64(detail::field(detail::next_token(rest), "carry", ln), ln));
    std::string_view act = detail::field(detail::next_token(rest), "act", ln);
    auto c1 = act.find(',');
    auto c2 = act.find(',', c1 == std::string_view::npos ? act.size() : c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos || c1 != 1)
      throw TraceParseError("bad action '" + std::string(act) + "'", ln);
    e.out.port = port_from_char(act[0]);
    std::string_view leave = act.substr(c1 + 1, c2 - c1 - 1);
    if (leave != "e" && leave != "f") throw TraceParseError("bad leave fullness", ln);
    e.out.leave_full = leave == "f";
    e.out.carried_next = int(detail::parse_i64(act.substr(c2 + 1), ln));
    e.proc = t.intern(detail::field(detail::next_token(rest), "proc", ln));
    t.events.push_back(e);
  }
  if (!have_header) throw TraceParseError("missing header", ln);
  return t;
}

}  // namespace wedge
