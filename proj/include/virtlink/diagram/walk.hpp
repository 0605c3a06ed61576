#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "virtlink/diagram/morse.hpp"

namespace virtlink::diagram {

/// A strand segment at level `level`, position `pos`.
struct StrandNode {
  std::size_t level;
  std::size_t pos;
  bool operator==(const StrandNode&) const = default;
};

/// Offsets of an event's first input strand (in its lower level) and first
/// output strand (in its upper level).
struct Placement {
  std::size_t in;
  std::size_t out;
};

std::vector<std::vector<Placement>> placements(const MorseWord& w);

/// How a strand pair is routed through a classical crossing event.
/// Through: bottom-left exits top-right and bottom-right exits top-left.
/// Smooth: each strand keeps its side.
enum class Routing { Through, Smooth };

/// Passage of a loop through a crossing-type event from the given side
/// (0 = entered bottom-left, 1 = entered bottom-right).
struct CrossingVisit {
  std::size_t slice;
  std::size_t event;
  int entry;
};

struct Loop {
  std::vector<StrandNode> nodes;
  std::vector<CrossingVisit> visits;
  int cw_extrema = 0;
  int ccw_extrema = 0;
  int rot() const { return (cw_extrema - ccw_extrema) / 2; }
};

using RoutingChoice = std::function<Routing(std::size_t slice, std::size_t event)>;

/// Traces the closed curves of `w` with classical crossings routed by
/// `choice` (virtual crossings always pass through). Loops are listed in order
/// of their lowest, then leftmost, segment; each starts at that segment.
std::vector<Loop> trace_loops(const MorseWord& w, const RoutingChoice& choice);

/// All crossings routed Through: the link components.
std::vector<Loop> trace_components(const MorseWord& w);

}  // namespace virtlink::diagram
