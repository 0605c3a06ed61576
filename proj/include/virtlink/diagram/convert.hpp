#pragma once

#include "virtlink/diagram/gauss.hpp"
#include "virtlink/diagram/morse.hpp"

namespace virtlink::diagram {

/// Planar realization of a Gauss code. Crossings are placed in first-encounter
/// order on upward strands; every auxiliary intersection is virtual.
MorseWord gauss_to_morse(const GaussCode& g);

/// Classical-crossing trace of a Morse word. Crossing ids are assigned 1, 2, ...
/// in order of first encounter; components with no classical crossing become `0`.
GaussCode morse_to_gauss(const MorseWord& w);

}  // namespace virtlink::diagram
