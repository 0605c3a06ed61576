#pragma once

#include "virtlink/diagram/morse.hpp"
#include "virtlink/statesum/model.hpp"

namespace virtlink::statesum {

struct SkeinResult {
  BiLaurent w_plus{ring::VarPair::SigmaTau};
  BiLaurent w_minus{ring::VarPair::SigmaTau};
  BiLaurent w_zero{ring::VarPair::SigmaTau};
  /// W(K+) - W(K-) = z W(K0).
  bool w_identity = false;
  /// Same with each term replaced by its own normalized Z.
  bool z_identity = false;
  bool holds() const { return w_identity && z_identity; }
};

struct SkeinTriple {
  diagram::MorseWord plus;
  diagram::MorseWord minus;
  diagram::MorseWord zero;
};

/// K+, K- and the oriented smoothing K0 at a classical crossing of w.
SkeinTriple skein_triple(const diagram::MorseWord& w, std::size_t slice, std::size_t event);

/// The three words must agree except at one slice, where K+ has x+, K- has
/// x- and K0 has two identity strands in its place; throws
/// std::invalid_argument otherwise.
SkeinResult skein_check(const diagram::MorseWord& kplus, const diagram::MorseWord& kminus,
                        const diagram::MorseWord& kzero, const ModelTensors& model = ModelTensors::standard());

}  // namespace virtlink::statesum
