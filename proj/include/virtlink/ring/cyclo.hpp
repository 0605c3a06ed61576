#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace virtlink::ring {

using Integer = boost::multiprecision::cpp_int;

/// c0 + c1*w + c2*w^2 + c3*w^3 in Z[w], w = exp(i*pi/4), so w^4 = -1.
/// Here w^2 is i and w is a square root of i.
class CycloCoeff {
 public:
  CycloCoeff() = default;
  CycloCoeff(long long c0) : c_{Integer(c0), Integer(0), Integer(0), Integer(0)} {}  // NOLINT
  CycloCoeff(Integer c0, Integer c1, Integer c2, Integer c3)
      : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

  /// w^k for any integer k.
  static CycloCoeff zeta_power(int k);
  /// i^k for any integer k.
  static CycloCoeff i_power(int k) { return zeta_power(2 * k); }

  const Integer& operator[](std::size_t k) const { return c_[k]; }

  bool is_zero() const;
  bool is_integer() const;
  /// True for the sixteen units of the form +-w^k.
  bool is_root_of_unity() const;
  /// First nonzero component is negative.
  bool lex_negative() const;

  /// Galois image under w -> w^k (k odd).
  CycloCoeff galois(int k) const;
  /// Product of all Galois conjugates; a nonnegative integer.
  Integer norm() const;

  CycloCoeff& operator+=(const CycloCoeff& o);
  CycloCoeff& operator-=(const CycloCoeff& o);
  CycloCoeff& operator*=(const CycloCoeff& o);

  friend CycloCoeff operator+(CycloCoeff a, const CycloCoeff& b) { return a += b; }
  friend CycloCoeff operator-(CycloCoeff a, const CycloCoeff& b) { return a -= b; }
  friend CycloCoeff operator*(CycloCoeff a, const CycloCoeff& b) { return a *= b; }
  friend CycloCoeff operator-(const CycloCoeff& a);
  friend bool operator==(const CycloCoeff& a, const CycloCoeff& b) { return a.c_ == b.c_; }

  /// Lexicographic order on (c0,c1,c2,c3); used only for canonical sorting.
  friend bool operator<(const CycloCoeff& a, const CycloCoeff& b) { return a.c_ < b.c_; }

 private:
  std::array<Integer, 4> c_{};
};

/// a / b when b divides a in Z[w]; nullopt otherwise (including b == 0).
std::optional<CycloCoeff> exact_quotient(const CycloCoeff& a, const CycloCoeff& b);

/// Gaussian-style rendering over the basis 1, sqrti, i, i*sqrti, e.g. "1+i", "-2*sqrti".
std::string to_string(const CycloCoeff& c);

}  // namespace virtlink::ring
