#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "virtlink/diagram/gauss.hpp"
#include "virtlink/diagram/morse.hpp"
#include "virtlink/ring/matrix.hpp"

namespace oracle {

using virtlink::ring::BiLaurent;
using virtlink::ring::PolyMatrix;

/// Determinant as the signed sum over all permutations.
BiLaurent leibniz_det(const PolyMatrix& m);

/// Random signed Gauss code with 1..max_crossings crossings, split into
/// 1..max_components nonempty components. Every such code is a virtual link.
virtlink::diagram::GaussCode random_gauss_code(std::mt19937_64& rng, int max_crossings, int max_components);

/// Random closed Morse word with at most max_classical classical crossings,
/// grown slice by slice from cups, caps and crossings on upward pairs.
virtlink::diagram::MorseWord random_morse_word(std::mt19937_64& rng, int max_classical, std::size_t max_strands = 6);

/// Braid closure on 3 or 4 strands containing three consecutive letters at
/// positions (q, q+1, q) or (q+1, q, q+1): all classical for `r3`, all
/// virtual for `detour`, otherwise exactly one classical. Random letters
/// before and after.
enum class Triangle { R3, Detour, Mixed };
virtlink::diagram::MorseWord random_triangle_braid(std::mt19937_64& rng, Triangle kind);

/// Evaluate p at numeric s, t modulo a prime, with integer coefficients only.
std::int64_t eval_mod(const BiLaurent& p, std::int64_t s, std::int64_t t, std::int64_t prime);

}  // namespace oracle
