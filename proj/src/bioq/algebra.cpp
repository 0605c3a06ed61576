#include "virtlink/bioq/algebra.hpp"

#include <stdexcept>

namespace virtlink::bioq {

using ring::VarPair;

namespace {

BiLaurent one() {
  return BiLaurent(VarPair::SigmaTau, ring::CycloCoeff(1));
}

PolyMatrix elementary(std::size_t n, std::size_t a, std::size_t b) {
  PolyMatrix e(n, n, VarPair::SigmaTau);
  e(a, b) = one();
  return e;
}

}  // namespace

TensorElement TensorElement::identity(std::size_t n) {
  return {n, PolyMatrix::identity(n * n, VarPair::SigmaTau)};
}

TensorElement TensorElement::from_matrix(const PolyMatrix& m) {
  std::size_t n = 1;
  while (n * n < m.rows()) ++n;
  if (n * n != m.rows() || m.rows() != m.cols()) throw std::invalid_argument("tensor element must be n^2 x n^2");
  if (m.vars() != VarPair::SigmaTau) throw std::invalid_argument("tensor element must be over (sigma,tau)");
  return {n, m};
}

TensorElement operator*(const TensorElement& x, const TensorElement& y) {
  if (x.n != y.n) throw std::invalid_argument("tensor elements over different algebras");
  return {x.n, x.data * y.data};
}

TensorElement flip(const TensorElement& x) {
  const std::size_t n = x.n;
  PolyMatrix out(n * n, n * n, VarPair::SigmaTau);
  for (std::size_t r = 0; r < n * n; ++r)
    for (std::size_t c = 0; c < n * n; ++c) out((r % n) * n + r / n, (c % n) * n + c / n) = x.data(r, c);
  return {n, out};
}

PolyMatrix leg(const TensorElement& x, int i, int j) {
  if (i == j || i < 0 || j < 0 || i > 2 || j > 2) throw std::invalid_argument("invalid leg pair");
  const std::size_t n = x.n;
  const int k = 3 - i - j;
  const std::size_t w[3] = {n * n, n, 1};
  PolyMatrix out(n * n * n, n * n * n, VarPair::SigmaTau);
  for (std::size_t r = 0; r < n * n; ++r)
    for (std::size_t c = 0; c < n * n; ++c) {
      const BiLaurent& v = x.data(r, c);
      if (v.is_zero()) continue;
      for (std::size_t t = 0; t < n; ++t) {
        std::size_t row = (r / n) * w[i] + (r % n) * w[j] + t * w[k];
        std::size_t col = (c / n) * w[i] + (c % n) * w[j] + t * w[k];
        out(row, col) = v;
      }
    }
  return out;
}

TensorElement op_product(const TensorElement& x, const TensorElement& y) {
  if (x.n != y.n) throw std::invalid_argument("tensor elements over different algebras");
  const std::size_t n = x.n;
  PolyMatrix out(n * n, n * n, VarPair::SigmaTau);
  // (E_ik (x) E_jl)(E_k'm (x) E_j'l') = E_im (x) E_j'l' E_jl, nonzero when k = k' and l' = j.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          const BiLaurent& a = x.data(i * n + j, k * n + l);
          if (a.is_zero()) continue;
          for (std::size_t m = 0; m < n; ++m)
            for (std::size_t jp = 0; jp < n; ++jp) {
              const BiLaurent& b = y.data(k * n + jp, m * n + j);
              if (!b.is_zero()) out(i * n + jp, m * n + l) += a * b;
            }
        }
  return {n, out};
}

AlgebraMap::AlgebraMap(std::size_t n) : n_(n), action_(n * n, n * n, VarPair::SigmaTau) {}

AlgebraMap::AlgebraMap(std::size_t n, PolyMatrix action) : n_(n), action_(std::move(action)) {
  if (action_.rows() != n * n || action_.cols() != n * n) throw std::invalid_argument("algebra map must be n^2 x n^2");
}

AlgebraMap AlgebraMap::identity(std::size_t n) {
  return AlgebraMap(n, PolyMatrix::identity(n * n, VarPair::SigmaTau));
}

AlgebraMap AlgebraMap::scaling(std::size_t n, const std::function<BiLaurent(std::size_t, std::size_t)>& f) {
  AlgebraMap m(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.action_(a * n + b, a * n + b) = f(a, b);
  return m;
}

PolyMatrix AlgebraMap::apply(const PolyMatrix& m) const {
  PolyMatrix out(n_, n_, VarPair::SigmaTau);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      const BiLaurent& v = m(a, b);
      if (v.is_zero()) continue;
      for (std::size_t c = 0; c < n_; ++c)
        for (std::size_t d = 0; d < n_; ++d) {
          const BiLaurent& f = action_(c * n_ + d, a * n_ + b);
          if (!f.is_zero()) out(c, d) += v * f;
        }
    }
  return out;
}

bool AlgebraMap::is_unital() const {
  return apply(PolyMatrix::identity(n_, VarPair::SigmaTau)) == PolyMatrix::identity(n_, VarPair::SigmaTau);
}

bool AlgebraMap::is_multiplicative() const {
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      for (std::size_t c = 0; c < n_; ++c)
        for (std::size_t d = 0; d < n_; ++d) {
          PolyMatrix lhs = apply(elementary(n_, a, b) * elementary(n_, c, d));
          PolyMatrix rhs = apply(elementary(n_, a, b)) * apply(elementary(n_, c, d));
          if (!(lhs == rhs)) return false;
        }
  return true;
}

bool AlgebraMap::is_invertible() const {
  return ring::det(action_).is_unit();
}

AlgebraMap compose(const AlgebraMap& f, const AlgebraMap& g) {
  if (f.n_ != g.n_) throw std::invalid_argument("maps on different algebras");
  return AlgebraMap(f.n_, f.action_ * g.action_);
}

TensorElement apply_pair(const AlgebraMap& f, const AlgebraMap& g, const TensorElement& x) {
  const std::size_t n = x.n;
  if (f.n() != n || g.n() != n) throw std::invalid_argument("map and element over different algebras");
  PolyMatrix out(n * n, n * n, VarPair::SigmaTau);
  const PolyMatrix& F = f.action();
  const PolyMatrix& G = g.action();
  for (std::size_t r = 0; r < n * n; ++r)
    for (std::size_t c = 0; c < n * n; ++c) {
      const BiLaurent& v = x.data(r, c);
      if (v.is_zero()) continue;
      // v E_{a,cc} (x) E_{b,d} -> v F(E_{a,cc}) (x) G(E_{b,d})
      const std::size_t a = r / n, b = r % n, cc = c / n, d = c % n;
      for (std::size_t p = 0; p < n * n; ++p) {
        const BiLaurent& fp = F(p, a * n + cc);
        if (fp.is_zero()) continue;
        for (std::size_t q = 0; q < n * n; ++q) {
          const BiLaurent& gq = G(q, b * n + d);
          if (gq.is_zero()) continue;
          // F-image E_{p/n, p%n}, G-image E_{q/n, q%n}
          out((p / n) * n + q / n, (p % n) * n + q % n) += v * fp * gq;
        }
      }
    }
  return {n, out};
}

}  // namespace virtlink::bioq
