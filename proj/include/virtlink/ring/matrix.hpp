#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "virtlink/ring/laurent.hpp"

namespace virtlink::ring {

/// Dense row-major matrix over BiLaurent, all entries in one variable pair.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, VarPair vars);

  static PolyMatrix identity(std::size_t n, VarPair vars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  VarPair vars() const { return vars_; }

  BiLaurent& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BiLaurent& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  PolyMatrix transpose() const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  VarPair vars_;
  std::vector<BiLaurent> data_;
};

/// Kronecker product; (a kron b)[(i,k),(j,l)] = a[i][j] * b[k][l].
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

/// Fraction-free Gaussian elimination with row pivoting.
BiLaurent det_bareiss(const PolyMatrix& m);
/// Laplace expansion along the first row.
BiLaurent det_cofactor(const PolyMatrix& m);
/// Cofactor expansion for n <= 4, Bareiss beyond.
BiLaurent det(const PolyMatrix& m);

/// Inverse via the adjugate; throws InexactDivision unless the inverse has
/// Laurent polynomial entries.
PolyMatrix inverse(const PolyMatrix& m);

/// Plain text grid: one row per line, entries separated by commas, each entry
/// in the polynomial syntax. Blank lines and lines starting with '#' are
/// skipped. Throws ParseError naming the line and entry.
PolyMatrix parse_grid(std::string_view text, VarPair vars);
std::string render_grid(const PolyMatrix& m);

}  // namespace virtlink::ring
