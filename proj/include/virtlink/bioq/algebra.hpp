#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "virtlink/ring/matrix.hpp"

namespace virtlink::bioq {

using ring::BiLaurent;
using ring::PolyMatrix;

/// Element of A (x) A for A the n x n matrix algebra over (sigma,tau) Laurent
/// polynomials: X = sum X[(a,b),(c,d)] E_ac (x) E_bd with row index a*n+b and
/// column index c*n+d. The product in A (x) A is the matrix product.
struct TensorElement {
  std::size_t n = 2;
  PolyMatrix data{4, 4, ring::VarPair::SigmaTau};

  static TensorElement identity(std::size_t n);
  static TensorElement from_matrix(const PolyMatrix& m);

  friend TensorElement operator*(const TensorElement& x, const TensorElement& y);
  friend bool operator==(const TensorElement& x, const TensorElement& y) { return x.n == y.n && x.data == y.data; }
};

/// The element X_21 obtained by swapping the tensor legs.
TensorElement flip(const TensorElement& x);

/// Image of X in A (x) A (x) A on legs (i, j), an identity on the third.
/// Legs are 0, 1, 2; i != j; (j, i) gives the flipped placement.
PolyMatrix leg(const TensorElement& x, int i, int j);

/// Product in A (x) A^op: (x1 (x) x2)(y1 (x) y2) = x1 y1 (x) y2 x2.
TensorElement op_product(const TensorElement& x, const TensorElement& y);

/// Linear map on A given by its action on the basis E_ab (index a*n+b):
/// phi(E_ab) = sum_cd map[(c,d),(a,b)] E_cd.
class AlgebraMap {
 public:
  explicit AlgebraMap(std::size_t n);
  AlgebraMap(std::size_t n, PolyMatrix action);

  static AlgebraMap identity(std::size_t n);
  /// E_ab -> f(a, b) E_ab with a, b the 0-based matrix indices.
  static AlgebraMap scaling(std::size_t n, const std::function<BiLaurent(std::size_t, std::size_t)>& f);

  std::size_t n() const { return n_; }
  const PolyMatrix& action() const { return action_; }

  /// Image of an n x n matrix.
  PolyMatrix apply(const PolyMatrix& m) const;

  bool is_unital() const;
  /// phi(E_ab E_cd) = phi(E_ab) phi(E_cd) for all basis pairs.
  bool is_multiplicative() const;
  /// The basis action has unit determinant.
  bool is_invertible() const;
  bool is_automorphism() const { return is_unital() && is_multiplicative() && is_invertible(); }

  friend AlgebraMap compose(const AlgebraMap& f, const AlgebraMap& g);  // f after g
  friend bool operator==(const AlgebraMap& f, const AlgebraMap& g) { return f.n_ == g.n_ && f.action_ == g.action_; }

 private:
  std::size_t n_;
  PolyMatrix action_;
};

/// (F (x) G) X.
TensorElement apply_pair(const AlgebraMap& f, const AlgebraMap& g, const TensorElement& x);

}  // namespace virtlink::bioq
