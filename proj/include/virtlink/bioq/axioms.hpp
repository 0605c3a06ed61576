#pragma once

#include <string>
#include <vector>

#include "virtlink/bioq/algebra.hpp"

namespace virtlink::bioq {

struct Condition {
  std::string name;
  bool pass = false;
};

struct Report {
  std::vector<Condition> conditions;
  /// Comparisons against the state-model tensors; informative, not axioms.
  std::vector<Condition> cross_references;
  std::string interpretation;

  bool all_pass() const;
  /// Pass flag of the named condition; throws std::out_of_range if absent.
  bool passed(const std::string& name) const;
};

/// rho_12 rho_13 rho_23 = rho_23 rho_13 rho_12 in A (x) A (x) A.
bool check_algebraic_ybe(const TensorElement& rho);

/// Oriented quantum algebra conditions for (A, rho, D, U). Throws
/// std::invalid_argument unless U and D are commuting automorphisms.
Report check_oriented(const TensorElement& rho, const TensorElement& rho_inv, const AlgebraMap& u, const AlgebraMap& d);

/// Oriented conditions for rho and for gamma, gamma_12 gamma_21 = 1 and the
/// three mixed identities. Also compares rho and gamma, composed with the
/// factor swap, against the state-model R and virtual crossing.
Report check_bioriented(const TensorElement& rho, const TensorElement& rho_inv, const TensorElement& gamma,
                        const AlgebraMap& u, const AlgebraMap& d);

struct Instance {
  TensorElement rho;
  TensorElement rho_inv;
  TensorElement gamma;
  AlgebraMap t{2};
  std::string interpretation;
};

/// rho = R P with P the factor swap, gamma = diag(1,1,1,-1), and the
/// balanced automorphism T(E_ab) = i^(b-a) E_ab on A = M_2 with a, b in {1, 2}.
Instance standard_instance();

/// check_bioriented on the instance with U = D = T, carrying its interpretation.
Report check_instance(const Instance& inst);

/// The factor swap P on C^n (x) C^n as an n^2 x n^2 matrix.
PolyMatrix swap_matrix(std::size_t n);

std::string to_text(const Report& r);

}  // namespace virtlink::bioq
