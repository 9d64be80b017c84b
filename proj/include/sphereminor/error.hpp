#pragma once

#include <stdexcept>
#include <string>

namespace sphereminor {

enum class Errc {
  invalid_map,
  unknown_edge,
  unknown_vertex,
  unknown_crossing,
  would_disconnect,
  loop_contraction,
  not_face_bipartite,
  not_good_digraph,
  invalid_model,
  invalid_diagram,
  search_budget_exceeded,
  cap_exceeded,
  empty_witness_set,
  parse_error,
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_map: return "InvalidMap";
    case Errc::unknown_edge: return "UnknownEdge";
    case Errc::unknown_vertex: return "UnknownVertex";
    case Errc::unknown_crossing: return "UnknownCrossing";
    case Errc::would_disconnect: return "WouldDisconnect";
    case Errc::loop_contraction: return "LoopContraction";
    case Errc::not_face_bipartite: return "NotFaceBipartite";
    case Errc::not_good_digraph: return "NotGoodDigraph";
    case Errc::invalid_model: return "InvalidModel";
    case Errc::invalid_diagram: return "InvalidDiagram";
    case Errc::search_budget_exceeded: return "SearchBudgetExceeded";
    case Errc::cap_exceeded: return "CapExceeded";
    case Errc::empty_witness_set: return "EmptyWitnessSet";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sphereminor
