#pragma once

// Text formats.
//
//   spheremap v1 darts=<2E>
//   d <id> sigma=<id> alpha=<id>        one line per dart, ids ascending
//
// A good digraph document is a map document followed by one
// `dir <id> out|in` line per dart. Serialization is canonical (darts in
// ascending order, single spaces, '\n' line ends), so parse and serialize
// round-trip byte for byte on canonical input.

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sphereminor/error.hpp"
#include "sphereminor/sphere_map.hpp"

namespace sphereminor {

namespace io {

struct LineReader {
  std::istream& in;
  std::string source;
  int line_no = 0;
  std::optional<std::string> pending;

  // Next non-blank line, or nullopt at end of input.
  std::optional<std::string> next() {
    if (pending) {
      auto s = std::move(pending);
      pending.reset();
      return s;
    }
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      return line;
    }
    return std::nullopt;
  }

  void push_back(std::string line) { pending = std::move(line); }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::parse_error, (source.empty() ? "" : source + ":") + std::to_string(line_no) + ": " + msg);
  }
};

inline std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

inline long parse_int(LineReader& r, const std::string& tok) {
  if (tok.empty()) r.fail("expected an integer");
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    r.fail("expected an integer, got '" + tok + "'");
  }
  if (used != tok.size()) r.fail("expected an integer, got '" + tok + "'");
  return v;
}

// Parses `key=<int>`.
inline long parse_kv(LineReader& r, const std::string& tok, const std::string& key) {
  if (tok.rfind(key + "=", 0) != 0) r.fail("expected '" + key + "=', got '" + tok + "'");
  return parse_int(r, tok.substr(key.size() + 1));
}

}  // namespace io

/// Reads one map document. Returns nullopt at clean end of input.
inline std::optional<SphereMap> read_map(std::istream& in, const std::string& source = {}) {
  io::LineReader r{in, source};
  auto header = r.next();
  if (!header) return std::nullopt;
  const int header_line = r.line_no;
  auto tok = io::split_ws(*header);
  if (tok.size() != 3 || tok[0] != "spheremap" || tok[1] != "v1") r.fail("expected 'spheremap v1 darts=<n>'");
  long n = io::parse_kv(r, tok[2], "darts");
  if (n < 0 || n % 2 != 0) r.fail("dart count must be even and non-negative");
  std::vector<Dart> s(n, -1), a(n, -1);
  std::vector<char> s_hit(n, 0);
  std::vector<int> line_of(n, 0);
  for (long i = 0; i < n; ++i) {
    auto line = r.next();
    if (!line) r.fail("expected " + std::to_string(n) + " dart lines, got " + std::to_string(i));
    auto t = io::split_ws(*line);
    if (t.size() != 4 || t[0] != "d") r.fail("expected 'd <id> sigma=<id> alpha=<id>'");
    long id = io::parse_int(r, t[1]);
    if (id != i) r.fail("dart lines must list ids 0.." + std::to_string(n - 1) + " in order");
    long sv = io::parse_kv(r, t[2], "sigma");
    long av = io::parse_kv(r, t[3], "alpha");
    if (sv < 0 || sv >= n) r.fail("sigma image out of range");
    if (av < 0 || av >= n) r.fail("alpha image out of range");
    if (s_hit[sv]) r.fail("sigma is not a permutation (" + std::to_string(sv) + " hit twice)");
    if (av == id) r.fail("alpha not fixed-point-free at dart " + std::to_string(id));
    s_hit[sv] = 1;
    s[id] = static_cast<Dart>(sv);
    a[id] = static_cast<Dart>(av);
    line_of[id] = r.line_no;
  }
  for (long d = 0; d < n; ++d) {
    if (a[a[d]] != d) {
      r.line_no = line_of[d];
      r.fail("alpha not an involution at dart " + std::to_string(d));
    }
  }
  auto diags = validate(s, a);
  if (!diags.empty()) {
    r.line_no = header_line;
    r.fail(diags.front());
  }
  return SphereMap(std::move(s), std::move(a));
}

inline SphereMap parse_map(const std::string& text, const std::string& source = {}) {
  std::istringstream in(text);
  auto m = read_map(in, source);
  if (!m) throw Error(Errc::parse_error, (source.empty() ? "" : source + ":") + "1: empty document");
  std::string rest;
  while (std::getline(in, rest))
    if (rest.find_first_not_of(" \t\r") != std::string::npos)
      throw Error(Errc::parse_error, (source.empty() ? "" : source + ":") + " trailing content after map");
  return *m;
}

inline void write_map(std::ostream& out, const SphereMap& m) {
  out << "spheremap v1 darts=" << m.dart_count() << '\n';
  for (Dart d = 0; static_cast<std::size_t>(d) < m.dart_count(); ++d)
    out << "d " << d << " sigma=" << m.sigma(d) << " alpha=" << m.alpha(d) << '\n';
}

inline std::string serialize_map(const SphereMap& m) {
  std::ostringstream out;
  write_map(out, m);
  return out.str();
}

/// Reads every map document in a stream (e.g. `enumerate` output).
inline std::vector<SphereMap> read_maps(std::istream& in, const std::string& source = {}) {
  std::vector<SphereMap> out;
  while (auto m = read_map(in, source)) out.push_back(std::move(*m));
  return out;
}

}  // namespace sphereminor
