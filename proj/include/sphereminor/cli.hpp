#pragma once

// Command-line front end. run() takes the arguments after the program name
// and returns the exit status: 0 = yes / success, 1 = no, 2 = error.
//
// Decision verbs print YES or NO. Constructive verbs print documents in the
// canonical serialization. `batch <manifest>` runs one command per line and
// prints one result line per query plus a summary.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sphereminor/canonical.hpp"
#include "sphereminor/diagram_io.hpp"
#include "sphereminor/diagram_order.hpp"
#include "sphereminor/enumerate.hpp"
#include "sphereminor/error.hpp"
#include "sphereminor/link_diagram.hpp"
#include "sphereminor/map_io.hpp"
#include "sphereminor/medial_digraph.hpp"
#include "sphereminor/minor_engine.hpp"
#include "sphereminor/sphere_map.hpp"

namespace sphereminor::cli {

enum ExitCode { kYes = 0, kNo = 1, kError = 2 };

namespace detail {

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::string base_dir;  // relative input paths resolve against this (batch mode)

  std::string path(const std::string& p) const {
    if (base_dir.empty() || std::filesystem::path(p).is_absolute()) return p;
    return (std::filesystem::path(base_dir) / p).string();
  }
  std::string text(const std::string& p) const {
    std::ifstream in(path(p), std::ios::binary);
    if (!in) throw Error(Errc::parse_error, p + ": cannot open");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  SphereMap map(const std::string& p) const { return parse_map(text(p), p); }
  GoodDigraph digraph(const std::string& p) const { return parse_digraph(text(p), p); }
  LinkDiagram diagram(const std::string& p) const { return parse_diagram(text(p), p); }
};

enum class DocKind { map, digraph, diagram };

inline DocKind sniff(const std::string& text) {
  std::istringstream in(text);
  std::string first;
  in >> first;
  if (first == "linkdiag") return DocKind::diagram;
  if (text.find("\ndir ") != std::string::npos) return DocKind::digraph;
  return DocKind::map;
}

inline int decision(Context& cx, bool yes) {
  cx.out << (yes ? "YES" : "NO") << '\n';
  return yes ? kYes : kNo;
}

inline void print_code(std::ostream& out, const CanonicalCode& c) {
  out << orientation_name(c.mode);
  for (int x : c.code) out << ' ' << x;
  out << '\n';
}

const std::map<std::string, Orientation> kModes{{"reflective", Orientation::reflective},
                                                {"oriented", Orientation::oriented}};
const std::map<std::string, SplitKind> kSplitKinds{{"parallel", SplitKind::parallel}, {"cross", SplitKind::cross}};
const std::map<std::string, SmoothKind> kSmoothKinds{{"black_delete", SmoothKind::black_delete},
                                                     {"white_delete", SmoothKind::white_delete}};

// Options shared by several verbs. Each subcommand gets its own storage via
// the Verb struct below; defaults follow the library.
struct Verb {
  std::vector<std::string> files;
  std::string mode_name;
  Orientation mode = Orientation::reflective;
  Orientation tait_mode = Orientation::oriented;
  std::uint64_t node_cap = kDefaultNodeCap;
  int bf_cap = kDefaultBruteForceCap;
  int diagram_cap = kDefaultDiagramCap;
  int index = 0;
  std::string kind;
  std::string witness;
  std::vector<std::string> targets;
  bool oracle = false;
  int max_edges = 0;
};

int dispatch(Context& cx, const std::string& name, Verb& v);
int batch(Context& cx, const std::string& manifest);

}  // namespace detail

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::string& base_dir = {});

namespace detail {

inline int dispatch(Context& cx, const std::string& name, Verb& v) {
  const auto& f = v.files;
  // Maps and digraphs default to reflective equivalence, diagrams to oriented.
  auto mode_for = [&](DocKind k) {
    if (!v.mode_name.empty()) return kModes.at(v.mode_name);
    return k == DocKind::diagram ? Orientation::oriented : Orientation::reflective;
  };
  if (!v.mode_name.empty()) v.mode = kModes.at(v.mode_name);
  if (name == "validate") {
    const std::string t = cx.text(f[0]);
    try {
      switch (sniff(t)) {
        case DocKind::map: parse_map(t, f[0]); break;
        case DocKind::digraph: parse_digraph(t, f[0]); break;
        case DocKind::diagram: parse_diagram(t, f[0]); break;
      }
    } catch (const Error& e) {
      cx.err << e.what() << '\n';
      return decision(cx, false);
    }
    return decision(cx, true);
  }
  if (name == "canon") {
    const std::string t = cx.text(f[0]);
    const DocKind k = sniff(t);
    switch (k) {
      case DocKind::map: print_code(cx.out, canonical_form(parse_map(t, f[0]), mode_for(k))); break;
      case DocKind::digraph: print_code(cx.out, canonical_form(parse_digraph(t, f[0]), mode_for(k))); break;
      case DocKind::diagram: print_code(cx.out, canonical_form(parse_diagram(t, f[0]), mode_for(k))); break;
    }
    return kYes;
  }
  if (name == "iso") {
    const std::string a = cx.text(f[0]), b = cx.text(f[1]);
    const DocKind ka = sniff(a), kb = sniff(b);
    if (ka != kb) return decision(cx, false);
    const Orientation m = mode_for(ka);
    switch (ka) {
      case DocKind::map: return decision(cx, equivalent(parse_map(a, f[0]), parse_map(b, f[1]), m));
      case DocKind::digraph: return decision(cx, equivalent(parse_digraph(a, f[0]), parse_digraph(b, f[1]), m));
      case DocKind::diagram: return decision(cx, equivalent(parse_diagram(a, f[0]), parse_diagram(b, f[1]), m));
    }
  }
  if (name == "dual") {
    write_map(cx.out, dual(cx.map(f[0])));
    return kYes;
  }
  if (name == "medial") {
    write_map(cx.out, medial(cx.map(f[0])));
    return kYes;
  }
  if (name == "dm") {
    write_digraph(cx.out, directed_medial(cx.map(f[0])));
    return kYes;
  }
  if (name == "undm") {
    write_map(cx.out, underlying_plane_graph(cx.digraph(f[0])));
    return kYes;
  }
  if (name == "split") {
    write_digraph(cx.out, split(cx.digraph(f[0]), v.index, kSplitKinds.at(v.kind)));
    return kYes;
  }
  if (name == "split-reach") return decision(cx, split_reachable(cx.digraph(f[0]), cx.digraph(f[1]), v.mode));
  if (name == "minor") {
    const SphereMap pattern = cx.map(f[0]), host = cx.map(f[1]);
    if (v.oracle) {
      if (!v.witness.empty()) cx.err << "note: --oracle produces no witness\n";
      return decision(cx, brute_force_minor(pattern, host, v.mode, v.bf_cap));
    }
    MinorAnswer ans = is_sphere_minor(pattern, host, MinorOptions{v.mode, v.node_cap});
    if (ans.result && !v.witness.empty()) {
      std::ofstream w(cx.path(v.witness));
      if (!w) throw Error(Errc::parse_error, v.witness + ": cannot write");
      write_model(w, *ans.witness);
    }
    return decision(cx, ans.result);
  }
  if (name == "tait") {
    TaitPair t = tait_graphs(cx.diagram(f[0]));
    write_map(cx.out, t.black);
    write_map(cx.out, t.white);
    return kYes;
  }
  if (name == "exchange") {
    write_diagram(cx.out, exchange(cx.diagram(f[0]), v.index));
    return kYes;
  }
  if (name == "smooth") {
    write_diagram(cx.out, smooth(cx.diagram(f[0]), v.index, kSmoothKinds.at(v.kind)));
    return kYes;
  }
  if (name == "dleq") {
    const LinkDiagram a = cx.diagram(f[0]), b = cx.diagram(f[1]);
    if (v.oracle) return decision(cx, diagram_leq_bruteforce(a, b, v.tait_mode, v.diagram_cap));
    return decision(cx, diagram_leq(a, b, DiagramOrderOptions{v.tait_mode, v.node_cap}));
  }
  if (name == "leadsto") {
    const LinkDiagram d = cx.diagram(f[0]);
    WitnessSet w = load_witness_set(cx.path(v.witness));
    return decision(cx, leadsto(d, w, DiagramOrderOptions{v.tait_mode, v.node_cap}));
  }
  if (name == "reach") {
    const LinkDiagram d = cx.diagram(f[0]);
    std::vector<LinkDiagram> ts;
    for (const auto& p : v.targets) ts.push_back(cx.diagram(p));
    return decision(cx, leadsto_target_search(d, ts, v.tait_mode, v.diagram_cap));
  }
  if (name == "enumerate") {
    enumerate_connected_maps(
        v.max_edges,
        [&](const SphereMap& m) {
          write_map(cx.out, m);
          return true;
        },
        v.bf_cap);
    return kYes;
  }
  if (name == "grid") {
    write_map(cx.out, make_grid(v.index));
    return kYes;
  }
  if (name == "batch") return batch(cx, f[0]);
  throw Error(Errc::parse_error, "unknown verb '" + name + "'");
}

// Splits a manifest line into words; '#' starts a comment.
inline std::vector<std::string> manifest_words(const std::string& line) {
  return io::split_ws(line.substr(0, line.find('#')));
}

inline int batch(Context& cx, const std::string& manifest) {
  std::istringstream in(cx.text(manifest));
  const std::string base = std::filesystem::path(cx.path(manifest)).parent_path().string();
  std::size_t yes = 0, no = 0, errors = 0, line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto words = manifest_words(line);
    if (words.empty()) continue;
    std::ostringstream o, e;
    int code = kError;
    if (words[0] == "batch") {
      e << "nested batch is not allowed";
    } else {
      code = run(words, o, e, base);
    }
    std::string verdict;
    if (code == kError) {
      ++errors;
      std::string msg = e.str();
      std::replace(msg.begin(), msg.end(), '\n', ' ');
      while (!msg.empty() && msg.back() == ' ') msg.pop_back();
      verdict = "error " + msg;
    } else {
      const std::string text = o.str();
      if (text == "YES\n") {
        ++yes;
        verdict = "YES";
      } else if (text == "NO\n") {
        ++no;
        verdict = "NO";
      } else {
        ++yes;
        verdict = "ok " + std::to_string(std::count(text.begin(), text.end(), '\n')) + " lines";
      }
    }
    cx.out << line_no << ": " << verdict << '\n';
  }
  cx.out << "summary yes=" << yes << " no=" << no << " error=" << errors << '\n';
  return errors == 0 ? kYes : kError;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               const std::string& base_dir) {
  using detail::Verb;
  CLI::App app{"sphere maps, minors and link diagrams", "sphereminor"};
  app.require_subcommand(1);
  std::map<std::string, Verb> verbs;

  auto add = [&](const std::string& name, const std::string& help) {
    return std::pair<CLI::App*, Verb*>{app.add_subcommand(name, help), &verbs[name]};
  };
  auto mode_flag = [](CLI::App* s, Verb* v) {
    s->add_option("--mode", v->mode_name, "reflective or oriented (default: reflective, oriented for diagrams)")
        ->check(CLI::IsMember({"reflective", "oriented"}));
  };
  auto tait_flag = [](CLI::App* s, Verb* v) {
    s->add_option("--tait-mode", v->tait_mode, "equivalence for Tait graphs, oriented (default) or reflective")
        ->transform(CLI::CheckedTransformer(detail::kModes, CLI::ignore_case));
  };
  auto node_flag = [](CLI::App* s, Verb* v) {
    s->add_option("--node-cap", v->node_cap, "minor search node budget")->capture_default_str();
  };

  auto two = [&](const std::string& name, const std::string& help, const char* a, const char* b) {
    auto [s, v] = add(name, help);
    v->files.resize(2);
    s->add_option(a, v->files[0])->required();
    s->add_option(b, v->files[1])->required();
    return std::pair{s, v};
  };
  auto one = [&](const std::string& name, const std::string& help, const char* a) {
    auto [s, v] = add(name, help);
    v->files.resize(1);
    s->add_option(a, v->files[0])->required();
    return std::pair{s, v};
  };

  one("validate", "YES if the map, good digraph or diagram document is well formed", "file");
  { auto [s, v] = one("canon", "print the canonical code", "file"); mode_flag(s, v); }
  { auto [s, v] = two("iso", "YES if the two documents are equivalent", "a", "b"); mode_flag(s, v); }
  one("dual", "dual map", "map");
  one("medial", "medial map", "map");
  one("dm", "directed medial graph", "map");
  one("undm", "underlying plane graph of a good digraph", "digraph");
  {
    auto [s, v] = one("split", "split a vertex of a good digraph", "digraph");
    s->add_option("vertex", v->index, "vertex index")->required();
    s->add_option("kind", v->kind, "parallel or cross")->required()->check(CLI::IsMember({"parallel", "cross"}));
  }
  { auto [s, v] = two("split-reach", "YES if target is reached from source by splits", "target", "source"); mode_flag(s, v); }
  {
    auto [s, v] = two("minor", "YES if pattern is a sphere minor of host", "pattern", "host");
    mode_flag(s, v);
    node_flag(s, v);
    s->add_option("--witness", v->witness, "write the model found to this file");
    s->add_flag("--oracle", v->oracle, "use the exhaustive oracle instead of the search");
    s->add_option("--bf-cap", v->bf_cap, "host edge cap for --oracle")->capture_default_str();
  }
  one("tait", "black then white Tait graph", "diagram");
  {
    auto [s, v] = one("exchange", "flip one crossing", "diagram");
    s->add_option("crossing", v->index)->required();
  }
  {
    auto [s, v] = one("smooth", "smooth one crossing", "diagram");
    s->add_option("crossing", v->index)->required();
    s->add_option("kind", v->kind, "black_delete or white_delete")
        ->required()
        ->check(CLI::IsMember({"black_delete", "white_delete"}));
  }
  {
    auto [s, v] = two("dleq", "YES if a <| b", "a", "b");
    tait_flag(s, v);
    node_flag(s, v);
    s->add_flag("--oracle", v->oracle, "search exchange/smoothing sequences directly");
    s->add_option("--cap", v->diagram_cap, "crossing cap for --oracle")->capture_default_str();
  }
  {
    auto [s, v] = one("leadsto", "YES if the diagram leads to the witness set's link", "diagram");
    s->add_option("--witness", v->witness, "witness list file")->required();
    tait_flag(s, v);
    node_flag(s, v);
  }
  {
    auto [s, v] = one("reach", "YES if some target is reached by exchanges and smoothings", "diagram");
    s->add_option("--targets", v->targets, "target diagram files")->required();
    tait_flag(s, v);
    s->add_option("--cap", v->diagram_cap, "crossing cap")->capture_default_str();
  }
  {
    auto [s, v] = add("enumerate", "all connected maps up to the given size");
    s->add_option("--max-edges", v->max_edges)->required();
    s->add_option("--cap", v->bf_cap, "largest allowed --max-edges")->capture_default_str();
  }
  {
    auto [s, v] = add("grid", "the k x k grid");
    s->add_option("k", v->index)->required();
  }
  one("batch", "run one command per manifest line", "manifest");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kYes : kError;
  }

  detail::Context cx{out, err, base_dir};
  const std::string name = app.get_subcommands().front()->get_name();
  try {
    return detail::dispatch(cx, name, verbs.at(name));
  } catch (const Error& e) {
    err << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

}  // namespace sphereminor::cli
