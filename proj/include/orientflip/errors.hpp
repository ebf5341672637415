#pragma once

#include <stdexcept>
#include <string>

namespace orientflip {

// Error classes surfaced by the library. The CLI maps a subset of these to
// stable exit codes; everything else is a caller bug or a violated precondition.
enum class Errc {
  self_loop,
  vertex_out_of_range,
  edge_out_of_range,
  graph_mismatch,
  not_strongly_connected,
  same_vertex,
  too_small,
  not_k_connected,
  underlying_connectivity_too_low,
  not_minimal_tight_set,
  precondition_connectivity,
  already_tight,
  internal_invariant_violated,
  not_a_path,
  not_k_plus_1_connected,
  obstructed,
  not_strong,
  too_large,
  node_not_found,
  middle_search_too_large,
  parse_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace orientflip
