#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "virtlink/diagram/morse.hpp"

namespace virtlink::diagram {

enum class MoveKind { R1KinkAdd, R2Add, R3Slide, V2Add, VDetour, MixedC };

/// Anchor for a local move.
///
/// For the insertion moves (R1KinkAdd, R2Add, V2Add) `slice` is the level
/// where new slices are inserted (0..size()) and `pos` the strand position
/// in that level. For the triangle moves (R3Slide, VDetour, MixedC) `slice`
/// is the first of three consecutive slices and `pos` the left strand of
/// the lower crossing.
struct MoveSpec {
  MoveKind kind = MoveKind::V2Add;
  std::size_t slice = 0;
  std::size_t pos = 0;
  /// R1: sign of the kink crossing. R2: sign of the first inserted crossing.
  Event crossing = Event::CrossPos;
  /// R1 only: kink turns clockwise (rot +1) or counterclockwise (rot -1).
  bool clockwise = true;
};

const char* move_name(MoveKind k);

/// Applies the move; throws std::invalid_argument if the pattern does not
/// match at the anchor.
MorseWord apply_move(const MorseWord& w, const MoveSpec& m);

/// Every anchor at which a move of kind `k` applies (all variants).
std::vector<MoveSpec> applicable_moves(const MorseWord& w, MoveKind k);

std::string describe(const MoveSpec& m);

}  // namespace virtlink::diagram
