#pragma once

#include <vector>

#include "virtlink/diagram/morse.hpp"
#include "virtlink/diagram/walk.hpp"
#include "virtlink/statesum/model.hpp"

namespace virtlink::statesum {

/// Options of the loop-state expansion; the defaults match ModelTensors::standard().
struct StateOptions {
  MatrixIndexing indexing = MatrixIndexing::RowIsInput;
  /// Vertex weight of a virtual crossing whose two strands are both labelled +.
  long long virtual_plus_plus = -1;
  std::size_t max_classical = 12;
};

/// One contributing state: a routing of every classical crossing, a sign for
/// every resulting loop, and its weight.
struct LoopState {
  std::vector<diagram::Routing> routing;
  std::vector<int> loop_sign;
  std::vector<int> loop_rot;
  BiLaurent weight{ring::VarPair::SigmaTau};
};

struct StateSum {
  std::vector<LoopState> states;
  BiLaurent total{ring::VarPair::SigmaTau};
};

/// Expands each classical crossing into its smoothing and crossing-through
/// channels, traces the loops in the plane, signs them, and sums the nonzero
/// states. Throws std::length_error above `max_classical` crossings.
StateSum enumerate_states(const diagram::MorseWord& w, const StateOptions& opt = {});

}  // namespace virtlink::statesum
