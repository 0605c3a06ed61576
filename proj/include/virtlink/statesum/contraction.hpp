#pragma once

#include "virtlink/diagram/convert.hpp"
#include "virtlink/diagram/gauss.hpp"
#include "virtlink/diagram/morse.hpp"
#include "virtlink/statesum/model.hpp"

namespace virtlink::statesum {

/// Slice-by-slice contraction of the tensors over all strand labelings.
BiLaurent evaluate_W(const diagram::MorseWord& w, const ModelTensors& model = ModelTensors::standard());

/// (sigma^-1 tau i)^(rot - v) i^v W.
BiLaurent normalize_Z(const BiLaurent& w_value, const diagram::DiagramStats& stats);

/// Z in (s,t), unit-normalized. The (sigma,tau) value is first divided by
/// its lex-smallest monomial so that knots (all exponents odd) substitute.
BiLaurent zpoly(const diagram::MorseWord& w, const ModelTensors& model = ModelTensors::standard());

struct ZGComparison {
  BiLaurent z;
  BiLaurent g;
  bool equal = false;
};

/// normalize_units(zpoly(gauss_to_morse(g))) against gpoly(g).
ZGComparison compare_zg_detail(const diagram::GaussCode& g, const ModelTensors& model = ModelTensors::standard());
bool compare_zg(const diagram::GaussCode& g);

}  // namespace virtlink::statesum
