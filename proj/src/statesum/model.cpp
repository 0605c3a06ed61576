#include "virtlink/statesum/model.hpp"

namespace virtlink::statesum {

using ring::VarPair;

namespace {

BiLaurent st(int m, int n, long long c = 1) {
  return BiLaurent::monomial(VarPair::ST, m, n, c);
}

BiLaurent sg(int m, int n, long long c = 1) {
  return BiLaurent::monomial(VarPair::SigmaTau, m, n, c);
}

PolyMatrix lifted(const PolyMatrix& m, const BiLaurent& factor) {
  PolyMatrix out(m.rows(), m.cols(), VarPair::SigmaTau);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = factor * ring::lift_to_sigma_tau(m(r, c));
  return out;
}

}  // namespace

Burau2 generalized_burau() {
  Burau2 b;
  b.b(0, 0) = st(0, 0) - st(1, 1);
  b.b(0, 1) = st(1, 0);
  b.b(1, 0) = st(0, 1);
  b.b_inv(0, 1) = st(0, -1);
  b.b_inv(1, 0) = st(-1, 0);
  b.b_inv(1, 1) = st(0, 0) - st(-1, -1);
  b.eta(0, 1) = st(0, 0);
  b.eta(1, 0) = st(0, 0);
  return b;
}

PolyMatrix induce_exterior(const PolyMatrix& b) {
  PolyMatrix out(4, 4, b.vars());
  out(0, 0) = BiLaurent(b.vars(), CycloCoeff(1));
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) out(r + 1, c + 1) = b(r, c);
  out(3, 3) = b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0);
  return out;
}

BiLaurent z_sigma_tau() {
  return sg(-1, 1) - sg(1, -1);
}

ModelTensors ModelTensors::standard() {
  Burau2 seed = generalized_burau();
  ModelTensors m;
  m.r = lifted(induce_exterior(seed.b), sg(-1, 1));
  m.r_bar = lifted(induce_exterior(seed.b_inv), sg(1, -1));
  m.virt = lifted(induce_exterior(seed.eta), sg(0, 0));
  // Label -1 is index 0, +1 is index 1: clockwise weight sqrt(i)^label.
  m.cw = {CycloCoeff::zeta_power(-1), CycloCoeff::zeta_power(1)};
  m.ccw = {CycloCoeff::zeta_power(1), CycloCoeff::zeta_power(-1)};
  return m;
}

PolyMatrix closed_form_r() {
  PolyMatrix r(4, 4, VarPair::SigmaTau);
  r(0, 0) = sg(-1, 1);
  r(1, 1) = z_sigma_tau();
  r(1, 2) = sg(1, 1);
  r(2, 1) = sg(-1, -1);
  r(3, 3) = sg(1, -1, -1);
  return r;
}

PolyMatrix closed_form_r_bar() {
  PolyMatrix r(4, 4, VarPair::SigmaTau);
  r(0, 0) = sg(1, -1);
  r(1, 2) = sg(1, 1);
  r(2, 1) = sg(-1, -1);
  r(2, 2) = -z_sigma_tau();
  r(3, 3) = sg(-1, 1, -1);
  return r;
}

bool braided_ybe(const PolyMatrix& x, const PolyMatrix& y, const PolyMatrix& z) {
  const PolyMatrix id = PolyMatrix::identity(2, x.vars());
  PolyMatrix lhs = kron(x, id) * kron(id, y) * kron(z, id);
  PolyMatrix rhs = kron(id, z) * kron(y, id) * kron(id, x);
  return lhs == rhs;
}

}  // namespace virtlink::statesum
