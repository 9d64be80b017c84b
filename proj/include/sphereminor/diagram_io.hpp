#pragma once

// Text formats layered on the map format.
//
//   good digraph:  map document, then `dir <id> out|in` per dart
//   diagram:       linkdiag v1 crossings=<n>
//                  x <id> darts=<a,b,c,d> over=<a|b>    a: darts a,c over
//                  s <dart> <dart>                      smaller dart first, ascending
//   witness list:  witness v1 name=<label>
//                  <diagram file>                       relative to the list file
//   sphere model:  spheremodel v1
//                  sub <edge>...
//                  c <edge>...

#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sphereminor/diagram_order.hpp"
#include "sphereminor/error.hpp"
#include "sphereminor/link_diagram.hpp"
#include "sphereminor/map_io.hpp"
#include "sphereminor/medial_digraph.hpp"
#include "sphereminor/minor_engine.hpp"

namespace sphereminor {

namespace io {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void expect_end(LineReader& r) {
  if (r.next()) r.fail("trailing content");
}

}  // namespace io

// ---- good digraphs

inline GoodDigraph read_digraph(std::istream& in, const std::string& source = {}) {
  // The map part is read through its own reader, so line numbers are
  // carried over by counting the lines it consumed.
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream ms(text);
  auto m = read_map(ms, source);
  if (!m) throw Error(Errc::parse_error, (source.empty() ? "" : source + ":") + "1: empty document");
  // Rewind and skip exactly the map lines.
  std::istringstream all(text);
  io::LineReader r{all, source};
  for (std::size_t i = 0; i <= m->dart_count(); ++i) r.next();
  const std::size_t n = m->dart_count();
  std::vector<char> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto line = r.next();
    if (!line) r.fail("expected " + std::to_string(n) + " dir lines, got " + std::to_string(i));
    auto t = io::split_ws(*line);
    if (t.size() != 3 || t[0] != "dir") r.fail("expected 'dir <id> out|in'");
    if (io::parse_int(r, t[1]) != static_cast<long>(i)) r.fail("dir lines must list ids in order");
    if (t[2] == "out")
      out[i] = 1;
    else if (t[2] != "in")
      r.fail("direction must be 'out' or 'in'");
  }
  io::expect_end(r);
  if (n == 0) return GoodDigraph{};
  return GoodDigraph(std::move(*m), std::move(out));
}

inline GoodDigraph parse_digraph(const std::string& text, const std::string& source = {}) {
  std::istringstream in(text);
  return read_digraph(in, source);
}

inline void write_digraph(std::ostream& out, const GoodDigraph& d) {
  write_map(out, d.map());
  for (Dart x = 0; static_cast<std::size_t>(x) < d.map().dart_count(); ++x)
    out << "dir " << x << (d.outgoing(x) ? " out" : " in") << '\n';
}

inline std::string serialize_digraph(const GoodDigraph& d) {
  std::ostringstream out;
  write_digraph(out, d);
  return out.str();
}

// ---- link diagrams

inline LinkDiagram read_diagram(std::istream& in, const std::string& source = {}) {
  io::LineReader r{in, source};
  auto header = r.next();
  if (!header) r.fail("empty document");
  const int header_line = r.line_no;
  auto tok = io::split_ws(*header);
  if (tok.size() != 3 || tok[0] != "linkdiag" || tok[1] != "v1") r.fail("expected 'linkdiag v1 crossings=<n>'");
  const long n = io::parse_kv(r, tok[2], "crossings");
  if (n < 0) r.fail("crossing count must be non-negative");
  const long darts = 4 * n;
  std::vector<Crossing> cs;
  for (long i = 0; i < n; ++i) {
    auto line = r.next();
    if (!line) r.fail("expected " + std::to_string(n) + " crossing lines, got " + std::to_string(i));
    auto t = io::split_ws(*line);
    if (t.size() != 4 || t[0] != "x") r.fail("expected 'x <id> darts=<a,b,c,d> over=<a|b>'");
    if (io::parse_int(r, t[1]) != i) r.fail("crossing lines must list ids in order");
    if (t[2].rfind("darts=", 0) != 0) r.fail("expected 'darts=<a,b,c,d>'");
    std::string list = t[2].substr(6);
    for (char& ch : list)
      if (ch == ',') ch = ' ';
    auto ds = io::split_ws(list);
    if (ds.size() != 4) r.fail("a crossing lists exactly 4 darts");
    Crossing c;
    for (int k = 0; k < 4; ++k) {
      long v = io::parse_int(r, ds[k]);
      if (v < 0 || v >= darts) r.fail("dart " + ds[k] + " out of range");
      c.darts[k] = static_cast<Dart>(v);
    }
    if (t[3] == "over=a")
      c.over_first = true;
    else if (t[3] == "over=b")
      c.over_first = false;
    else
      r.fail("expected 'over=a' or 'over=b'");
    cs.push_back(c);
  }
  std::vector<Dart> strand(darts, -1);
  Dart last = -1;
  for (long i = 0; i < darts / 2; ++i) {
    auto line = r.next();
    if (!line) r.fail("expected " + std::to_string(darts / 2) + " strand lines, got " + std::to_string(i));
    auto t = io::split_ws(*line);
    if (t.size() != 3 || t[0] != "s") r.fail("expected 's <dart> <dart>'");
    long a = io::parse_int(r, t[1]), b = io::parse_int(r, t[2]);
    if (a < 0 || a >= darts || b < 0 || b >= darts) r.fail("strand dart out of range");
    if (a >= b) r.fail("strand lines list the smaller dart first");
    if (a <= last) r.fail("strand lines must be in ascending order");
    if (strand[a] != -1 || strand[b] != -1) r.fail("dart used by two strands");
    last = static_cast<Dart>(a);
    strand[a] = static_cast<Dart>(b);
    strand[b] = static_cast<Dart>(a);
  }
  io::expect_end(r);
  try {
    return LinkDiagram(std::move(cs), std::move(strand));
  } catch (const Error& e) {
    r.line_no = header_line;
    r.fail(e.what());
  }
}

inline LinkDiagram parse_diagram(const std::string& text, const std::string& source = {}) {
  std::istringstream in(text);
  return read_diagram(in, source);
}

inline void write_diagram(std::ostream& out, const LinkDiagram& d) {
  out << "linkdiag v1 crossings=" << d.crossing_count() << '\n';
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto& c = d.crossing(i);
    out << "x " << i << " darts=" << c.darts[0] << ',' << c.darts[1] << ',' << c.darts[2] << ',' << c.darts[3]
        << " over=" << (c.over_first ? 'a' : 'b') << '\n';
  }
  for (Dart x = 0; static_cast<std::size_t>(x) < d.strands().size(); ++x)
    if (x < d.strand(x)) out << "s " << x << ' ' << d.strand(x) << '\n';
}

inline std::string serialize_diagram(const LinkDiagram& d) {
  std::ostringstream out;
  write_diagram(out, d);
  return out.str();
}

// ---- witness lists

/// Reads a witness list; diagram paths are resolved against base_dir.
inline WitnessSet read_witness_set(std::istream& in, const std::string& source, const std::string& base_dir) {
  io::LineReader r{in, source};
  auto header = r.next();
  if (!header) r.fail("empty document");
  auto tok = io::split_ws(*header);
  if (tok.size() != 3 || tok[0] != "witness" || tok[1] != "v1" || tok[2].rfind("name=", 0) != 0)
    r.fail("expected 'witness v1 name=<label>'");
  WitnessSet w;
  w.link_name = tok[2].substr(5);
  while (auto line = r.next()) {
    auto t = io::split_ws(*line);
    if (t.size() != 1) r.fail("expected one diagram path per line");
    std::filesystem::path p(t[0]);
    if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
    w.diagrams.push_back(parse_diagram(io::read_file(p.string()), p.string()));
  }
  return w;
}

inline WitnessSet load_witness_set(const std::string& path) {
  std::istringstream in(io::read_file(path));
  return read_witness_set(in, path, std::filesystem::path(path).parent_path().string());
}

inline void write_witness_set(std::ostream& out, const std::string& name, const std::vector<std::string>& paths) {
  out << "witness v1 name=" << name << '\n';
  for (const auto& p : paths) out << p << '\n';
}

// ---- sphere models

inline void write_model(std::ostream& out, const SphereModel& m) {
  out << "spheremodel v1\nsub";
  for (Dart e : m.sub_edges) out << ' ' << e;
  out << "\nc";
  for (Dart e : m.c_edges) out << ' ' << e;
  out << '\n';
}

inline std::string serialize_model(const SphereModel& m) {
  std::ostringstream out;
  write_model(out, m);
  return out.str();
}

/// The host is not part of the document; it is supplied by the caller.
inline SphereModel parse_model(const std::string& text, const SphereMap& host, const std::string& source = {}) {
  std::istringstream in(text);
  io::LineReader r{in, source};
  auto header = r.next();
  if (!header || io::split_ws(*header) != std::vector<std::string>{"spheremodel", "v1"})
    r.fail("expected 'spheremodel v1'");
  SphereModel m;
  m.host = host;
  for (const char* key : {"sub", "c"}) {
    auto line = r.next();
    if (!line) r.fail(std::string("expected '") + key + " ...'");
    auto t = io::split_ws(*line);
    if (t.empty() || t[0] != key) r.fail(std::string("expected '") + key + " ...'");
    auto& dst = std::string(key) == "sub" ? m.sub_edges : m.c_edges;
    for (std::size_t i = 1; i < t.size(); ++i) dst.push_back(static_cast<Dart>(io::parse_int(r, t[i])));
  }
  io::expect_end(r);
  return m;
}

}  // namespace sphereminor
