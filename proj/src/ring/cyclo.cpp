#include "virtlink/ring/cyclo.hpp"

#include <sstream>

namespace virtlink::ring {

CycloCoeff CycloCoeff::zeta_power(int k) {
  int r = ((k % 8) + 8) % 8;
  CycloCoeff out;
  if (r < 4) {
    out.c_[r] = 1;
  } else {
    out.c_[r - 4] = -1;
  }
  return out;
}

bool CycloCoeff::is_zero() const {
  return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool CycloCoeff::is_integer() const {
  return c_[1] == 0 && c_[2] == 0 && c_[3] == 0;
}

bool CycloCoeff::is_root_of_unity() const {
  int nonzero = 0;
  for (const auto& x : c_) {
    if (x == 0) continue;
    if (x != 1 && x != -1) return false;
    ++nonzero;
  }
  return nonzero == 1;
}

bool CycloCoeff::lex_negative() const {
  for (const auto& x : c_) {
    if (x != 0) return x < 0;
  }
  return false;
}

CycloCoeff CycloCoeff::galois(int k) const {
  CycloCoeff out;
  for (int j = 0; j < 4; ++j) {
    if (c_[j] == 0) continue;
    int e = ((j * k) % 8 + 8) % 8;
    if (e < 4) {
      out.c_[e] += c_[j];
    } else {
      out.c_[e - 4] -= c_[j];
    }
  }
  return out;
}

Integer CycloCoeff::norm() const {
  CycloCoeff p = *this * galois(3) * galois(5) * galois(7);
  return p.c_[0];
}

CycloCoeff& CycloCoeff::operator+=(const CycloCoeff& o) {
  for (int k = 0; k < 4; ++k) c_[k] += o.c_[k];
  return *this;
}

CycloCoeff& CycloCoeff::operator-=(const CycloCoeff& o) {
  for (int k = 0; k < 4; ++k) c_[k] -= o.c_[k];
  return *this;
}

CycloCoeff& CycloCoeff::operator*=(const CycloCoeff& o) {
  if (o.is_integer()) {
    for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  std::array<Integer, 4> r{};
  for (int i = 0; i < 4; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < 4; ++j) {
      if (o.c_[j] == 0) continue;
      if (i + j < 4) {
        r[i + j] += c_[i] * o.c_[j];
      } else {
        r[i + j - 4] -= c_[i] * o.c_[j];
      }
    }
  }
  c_ = std::move(r);
  return *this;
}

CycloCoeff operator-(const CycloCoeff& a) {
  CycloCoeff out = a;
  for (auto& x : out.c_) x = -x;
  return out;
}

std::optional<CycloCoeff> exact_quotient(const CycloCoeff& a, const CycloCoeff& b) {
  if (b.is_zero()) return std::nullopt;
  if (b.is_integer()) {
    const Integer& d = b[0];
    std::array<Integer, 4> q;
    for (int k = 0; k < 4; ++k) {
      if (a[k] % d != 0) return std::nullopt;
      q[k] = a[k] / d;
    }
    return CycloCoeff(q[0], q[1], q[2], q[3]);
  }
  // a/b = a * (b3 b5 b7) / N(b)
  CycloCoeff cofactor = b.galois(3) * b.galois(5) * b.galois(7);
  Integer n = (b * cofactor)[0];
  CycloCoeff num = a * cofactor;
  std::array<Integer, 4> q;
  for (int k = 0; k < 4; ++k) {
    if (num[k] % n != 0) return std::nullopt;
    q[k] = num[k] / n;
  }
  return CycloCoeff(q[0], q[1], q[2], q[3]);
}

std::string to_string(const CycloCoeff& c) {
  static const char* const basis[4] = {"", "sqrti", "i", "i*sqrti"};
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    const Integer& x = c[k];
    if (x == 0) continue;
    Integer mag = x < 0 ? Integer(-x) : x;
    if (x < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    if (k == 0) {
      os << mag;
    } else if (mag == 1) {
      os << basis[k];
    } else {
      os << mag << "*" << basis[k];
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace virtlink::ring
