#include "virtlink/ring/matrix.hpp"

#include <stdexcept>
#include <utility>

#include "virtlink/error.hpp"

namespace virtlink::ring {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, VarPair vars)
    : rows_(rows), cols_(cols), vars_(vars), data_(rows * cols, BiLaurent(vars)) {}

PolyMatrix PolyMatrix::identity(std::size_t n, VarPair vars) {
  PolyMatrix m(n, n, vars);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = BiLaurent(vars, 1);
  return m;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, vars_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix s(rows.size(), cols.size(), vars_);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) s(r, c) = (*this)(rows[r], cols[c]);
  return s;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  if (a.vars_ != b.vars_) throw VarPairMismatch("matrices use different variable pairs");
  PolyMatrix out(a.rows_, b.cols_, a.vars_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BiLaurent& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const BiLaurent& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  }
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch in sum");
  PolyMatrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.vars_ == b.vars_ && a.data_ == b.data_;
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.vars());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

BiLaurent det_bareiss(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return BiLaurent(m.vars(), 1);
  PolyMatrix a = m;
  BiLaurent prev(m.vars(), 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return BiLaurent(m.vars());
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BiLaurent num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = exact_div(num, prev);
      }
      a(i, k) = BiLaurent(m.vars());
    }
    prev = a(k, k);
  }
  BiLaurent d = a(n - 1, n - 1);
  return negate ? -d : d;
}

namespace {

BiLaurent cofactor_rec(const PolyMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t n = m.rows();
  if (row == n) return BiLaurent(m.vars(), 1);
  BiLaurent acc(m.vars());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::size_t c = cols[k];
    if (m(row, c).is_zero()) continue;
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    BiLaurent sub = m(row, c) * cofactor_rec(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), c);
    if (k % 2 == 0) {
      acc += sub;
    } else {
      acc -= sub;
    }
  }
  return acc;
}

}  // namespace

BiLaurent det_cofactor(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t k = 0; k < cols.size(); ++k) cols[k] = k;
  return cofactor_rec(m, cols, 0);
}

BiLaurent det(const PolyMatrix& m) {
  return m.rows() <= 4 ? det_cofactor(m) : det_bareiss(m);
}

PolyMatrix inverse(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  BiLaurent d = det(m);
  if (d.is_zero()) throw InexactDivision("singular matrix");
  PolyMatrix inv(n, n, m.vars());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::size_t> rows, cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) rows.push_back(k);
        if (k != r) cols.push_back(k);
      }
      BiLaurent minor = det(m.submatrix(rows, cols));
      if ((r + c) % 2 == 1) minor = -minor;
      inv(r, c) = exact_div(minor, d);
    }
  }
  return inv;
}

}  // namespace virtlink::ring

namespace virtlink::ring {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

PolyMatrix parse_grid(std::string_view text, VarPair vars) {
  std::vector<std::vector<BiLaurent>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.empty() || line.front() == '#') continue;
    std::vector<BiLaurent> row;
    while (true) {
      std::size_t comma = line.find(',');
      std::string_view entry = trim(line.substr(0, comma));
      if (entry.empty()) throw ParseError("empty matrix entry", line_no, std::string(line));
      try {
        row.push_back(parse_polynomial(entry, vars));
      } catch (const ParseError& e) {
        throw ParseError(e.reason(), line_no, e.token());
      }
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(rows.front().size()),
                       line_no, std::string(trim(line)));
    rows.push_back(std::move(row));
  }
  PolyMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size(), vars);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

std::string render_grid(const PolyMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ", ";
      out += render(m(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace virtlink::ring
