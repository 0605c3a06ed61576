#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace virtlink::diagram {

enum class Event { Identity, CupCW, CupCCW, CapCW, CapCCW, CrossPos, CrossNeg, CrossVirtual };
enum class Orientation { Up, Down };

using Slice = std::vector<Event>;

/// Number of strands an event consumes from below / emits above.
int strands_in(Event e);
int strands_out(Event e);
bool is_classical(Event e);
const char* token(Event e);

/// Oriented Morse diagram, slices listed bottom to top. Level k holds the
/// strands between slice k-1 and slice k; level 0 and the top level are empty.
class MorseWord {
 public:
  MorseWord() = default;

  /// Validates strand counts and orientations; throws InvalidDiagram naming
  /// the slice index (0-based) on failure.
  static MorseWord from_slices(std::vector<Slice> slices);

  const std::vector<Slice>& slices() const { return slices_; }
  std::size_t size() const { return slices_.size(); }
  /// Orientation vector of level k, 0 <= k <= size().
  const std::vector<Orientation>& level(std::size_t k) const { return levels_[k]; }

  bool operator==(const MorseWord& o) const { return slices_ == o.slices_; }

 private:
  std::vector<Slice> slices_;
  std::vector<std::vector<Orientation>> levels_;
};

struct DiagramStats {
  int rot = 0;
  int v = 0;
  int components = 0;
  bool operator==(const DiagramStats&) const = default;
};

/// One token per event, events separated by spaces, one slice per line.
std::string render(const MorseWord& w);

/// Throws ParseError naming the line (1-based) and token.
MorseWord parse_morse(std::string_view text);

DiagramStats stats(const MorseWord& w);

/// Disjoint union of two closed words, `upper` placed above `lower`.
MorseWord stacked(const MorseWord& lower, const MorseWord& upper);

/// Generator acting on upward positions (position, position+1).
struct BraidLetter {
  int position;
  Event event;
};

/// Closure of a braid on `strands` upward strands, closing arcs running
/// clockwise around the right-hand side.
MorseWord braid_closure(int strands, const std::vector<BraidLetter>& letters);

}  // namespace virtlink::diagram
