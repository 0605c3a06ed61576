#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "virtlink/ring/cyclo.hpp"

namespace virtlink::ring {

/// Variable pair a polynomial is written in.
enum class VarPair { SigmaTau, ST };

struct Exponent {
  int m = 0;
  int n = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Sparse Laurent polynomial in two commuting variables over Z[w].
/// Zero coefficients are never stored, so the zero polynomial has no terms.
class BiLaurent {
 public:
  using TermMap = std::map<Exponent, CycloCoeff>;

  explicit BiLaurent(VarPair vars = VarPair::ST) : vars_(vars) {}
  BiLaurent(VarPair vars, const CycloCoeff& constant);

  static BiLaurent monomial(VarPair vars, int m, int n, const CycloCoeff& c = 1);
  static BiLaurent from_terms(VarPair vars, const TermMap& terms);

  VarPair vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  CycloCoeff coefficient(int m, int n) const;

  /// Largest and smallest exponent pairs in lex order; nullopt for zero.
  std::optional<Exponent> leading() const;
  std::optional<Exponent> trailing() const;

  /// A monomial with root-of-unity coefficient, i.e. a unit of the ring.
  bool is_unit() const;
  /// Inverse of a unit; throws InexactDivision otherwise.
  BiLaurent unit_inverse() const;

  BiLaurent& operator+=(const BiLaurent& o);
  BiLaurent& operator-=(const BiLaurent& o);
  BiLaurent& operator*=(const BiLaurent& o);
  /// Multiply by c * x^m y^n.
  BiLaurent& scale(const CycloCoeff& c, int m = 0, int n = 0);

  friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
  friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
  friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
  friend BiLaurent operator-(const BiLaurent& a);
  friend bool operator==(const BiLaurent& a, const BiLaurent& b);

 private:
  void check_vars(const BiLaurent& o) const;
  void add_term(const Exponent& e, const CycloCoeff& c);

  VarPair vars_;
  TermMap terms_;
};

/// Total order used for canonical sorting of polynomial collections.
bool canonical_less(const BiLaurent& a, const BiLaurent& b);

/// q such that p == d * q; throws InexactDivision when none exists.
BiLaurent exact_div(const BiLaurent& p, const BiLaurent& d);

/// Divide by the monomial at the lex-smallest exponent pair and negate if that
/// term's coefficient is lex-negative. Idempotent; zero stays zero.
BiLaurent normalize_units(const BiLaurent& p);

/// sigma^m tau^n -> s^(m/2) t^(-n/2). Throws std::domain_error on odd exponents
/// or non-integer coefficients.
BiLaurent subst_st(const BiLaurent& p);

/// s^m t^n -> sigma^(2m) tau^(-2n), the right inverse of subst_st.
BiLaurent lift_to_sigma_tau(const BiLaurent& p);

/// Canonical text: terms ordered by (second exponent, first exponent).
std::string render(const BiLaurent& p);

/// Parses expressions built from integers, i, sqrti, the two variables of
/// `vars`, + - * ^ and parentheses. Negative powers need a unit base.
BiLaurent parse_polynomial(std::string_view text, VarPair vars);

}  // namespace virtlink::ring
