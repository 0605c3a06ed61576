#pragma once

#include <string>
#include <vector>

#include "virtlink/diagram/gauss.hpp"
#include "virtlink/ring/matrix.hpp"

namespace virtlink::alexander {

/// Arc leaving passage `passage` of component `component`.
struct EdgeId {
  int component;
  int passage;
  bool operator==(const EdgeId&) const = default;
};

/// Linear system of the Alexander biquandle on the edges of a diagram. For
/// each crossing, in order of increasing id, an under row and then an over row.
struct RelationMatrix {
  std::vector<EdgeId> edges;
  ring::PolyMatrix matrix{0, 0, ring::VarPair::ST};
};

/// Throws std::invalid_argument on a crossingless component.
RelationMatrix build_relations(const diagram::GaussCode& g);

/// normalize_units(det(build_relations(g))); 0 when some component has no crossing.
ring::BiLaurent gpoly(const diagram::GaussCode& g);

ring::BiLaurent det(const RelationMatrix& m);

/// Distinct nonzero k x k minors, unit-normalized, in canonical order.
std::vector<ring::BiLaurent> minors(const ring::PolyMatrix& m, std::size_t k);
inline std::vector<ring::BiLaurent> minors(const RelationMatrix& m, std::size_t k) { return minors(m.matrix, k); }

}  // namespace virtlink::alexander
