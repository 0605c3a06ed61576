#pragma once

#include <array>

#include "virtlink/ring/matrix.hpp"

namespace virtlink::statesum {

using ring::BiLaurent;
using ring::CycloCoeff;
using ring::PolyMatrix;

/// Generalized Burau seed over (s,t).
struct Burau2 {
  PolyMatrix b{2, 2, ring::VarPair::ST};
  PolyMatrix b_inv{2, 2, ring::VarPair::ST};
  PolyMatrix eta{2, 2, ring::VarPair::ST};
};

/// B = [[1-st, s], [t, 0]], its inverse, and the transposition eta.
Burau2 generalized_burau();

/// Action on the exterior algebra with basis {1, e1, e2, e1^e2}: fixes 1,
/// acts by b on span(e1, e2), scales e1^e2 by det(b).
PolyMatrix induce_exterior(const PolyMatrix& b);

/// z = sigma^-1 tau - sigma tau^-1.
BiLaurent z_sigma_tau();

/// Which index of a 4x4 vertex matrix is the input pair.
enum class MatrixIndexing { RowIsInput, RowIsOutput };

/// Vertex and extremum tensors of the state model. Strand labels -1, +1 are
/// stored as 0, 1; the pair index of (left, right) is 2*left + right.
struct ModelTensors {
  PolyMatrix r{4, 4, ring::VarPair::SigmaTau};
  PolyMatrix r_bar{4, 4, ring::VarPair::SigmaTau};
  PolyMatrix virt{4, 4, ring::VarPair::SigmaTau};
  /// Weight of a clockwise / counterclockwise cup or cap, by label.
  std::array<CycloCoeff, 2> cw{};
  std::array<CycloCoeff, 2> ccw{};
  MatrixIndexing indexing = MatrixIndexing::RowIsInput;

  /// Weight of the transition from input pair x to output pair y.
  const BiLaurent& weight(const PolyMatrix& m, int x, int y) const {
    return indexing == MatrixIndexing::RowIsInput ? m(static_cast<std::size_t>(x), static_cast<std::size_t>(y))
                                                  : m(static_cast<std::size_t>(y), static_cast<std::size_t>(x));
  }

  /// R and R-bar obtained from the Burau seed: sigma^-1 tau times the induced
  /// matrix of B (resp. sigma tau^-1 times that of B^-1) under s = sigma^2,
  /// t = tau^-2; virt is the induced matrix of eta; cups use powers of sqrt(i).
  static ModelTensors standard();
};

/// The tensors as listed in closed form, used to cross-check standard().
PolyMatrix closed_form_r();
PolyMatrix closed_form_r_bar();

/// Braided Yang-Baxter relation (X (x) I)(I (x) Y)(Z (x) I) = (I (x) Z)(Y (x) I)(I (x) X).
bool braided_ybe(const PolyMatrix& x, const PolyMatrix& y, const PolyMatrix& z);

}  // namespace virtlink::statesum
