#include "virtlink/ring/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "virtlink/error.hpp"

namespace virtlink::ring {

BiLaurent::BiLaurent(VarPair vars, const CycloCoeff& constant) : vars_(vars) {
  if (!constant.is_zero()) terms_.emplace(Exponent{0, 0}, constant);
}

BiLaurent BiLaurent::monomial(VarPair vars, int m, int n, const CycloCoeff& c) {
  BiLaurent p(vars);
  if (!c.is_zero()) p.terms_.emplace(Exponent{m, n}, c);
  return p;
}

BiLaurent BiLaurent::from_terms(VarPair vars, const TermMap& terms) {
  BiLaurent p(vars);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

CycloCoeff BiLaurent::coefficient(int m, int n) const {
  auto it = terms_.find(Exponent{m, n});
  return it == terms_.end() ? CycloCoeff() : it->second;
}

std::optional<Exponent> BiLaurent::leading() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

std::optional<Exponent> BiLaurent::trailing() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

bool BiLaurent::is_unit() const {
  return terms_.size() == 1 && terms_.begin()->second.is_root_of_unity();
}

BiLaurent BiLaurent::unit_inverse() const {
  if (!is_unit()) throw InexactDivision("not a unit: " + render(*this));
  const auto& [e, c] = *terms_.begin();
  for (int k = 0; k < 8; ++k) {
    if (c == CycloCoeff::zeta_power(k)) return monomial(vars_, -e.m, -e.n, CycloCoeff::zeta_power(-k));
  }
  throw InexactDivision("not a unit: " + render(*this));
}

void BiLaurent::check_vars(const BiLaurent& o) const {
  if (vars_ != o.vars_) throw VarPairMismatch("polynomials use different variable pairs");
}

void BiLaurent::add_term(const Exponent& e, const CycloCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& o) {
  check_vars(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BiLaurent& BiLaurent::operator*=(const BiLaurent& o) {
  *this = *this * o;
  return *this;
}

BiLaurent& BiLaurent::scale(const CycloCoeff& c, int m, int n) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  TermMap out;
  for (auto& [e, x] : terms_) out.emplace_hint(out.end(), Exponent{e.m + m, e.n + n}, x * c);
  terms_ = std::move(out);
  return *this;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
  a.check_vars(b);
  BiLaurent out(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(Exponent{ea.m + eb.m, ea.n + eb.n}, ca * cb);
  }
  return out;
}

BiLaurent operator-(const BiLaurent& a) {
  BiLaurent out(a);
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const BiLaurent& a, const BiLaurent& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

bool canonical_less(const BiLaurent& a, const BiLaurent& b) {
  if (a.vars() != b.vars()) return a.vars() < b.vars();
  return std::lexicographical_compare(
      a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
      [](const auto& x, const auto& y) { return x.first != y.first ? x.first < y.first : x.second < y.second; });
}

namespace {

struct Box {
  int m_lo, m_hi, n_lo, n_hi;
};

Box bounding_box(const BiLaurent& p) {
  Box b{0, 0, 0, 0};
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (first) {
      b = {e.m, e.m, e.n, e.n};
      first = false;
    } else {
      b.m_lo = std::min(b.m_lo, e.m);
      b.m_hi = std::max(b.m_hi, e.m);
      b.n_lo = std::min(b.n_lo, e.n);
      b.n_hi = std::max(b.n_hi, e.n);
    }
  }
  return b;
}

}  // namespace

BiLaurent exact_div(const BiLaurent& p, const BiLaurent& d) {
  if (p.vars() != d.vars()) throw VarPairMismatch("polynomials use different variable pairs");
  if (d.is_zero()) throw InexactDivision("division by zero polynomial");
  BiLaurent q(p.vars());
  if (p.is_zero()) return q;
  if (d.size() == 1) {
    const auto& [de, dc] = *d.terms().begin();
    BiLaurent::TermMap out;
    for (const auto& [e, c] : p.terms()) {
      auto x = exact_quotient(c, dc);
      if (!x) throw InexactDivision("coefficient not divisible");
      out.emplace_hint(out.end(), Exponent{e.m - de.m, e.n - de.n}, *x);
    }
    return BiLaurent::from_terms(p.vars(), out);
  }
  // Lex order on Z^2 is a group order, so leading terms multiply. The
  // quotient's support lies in the difference of bounding boxes.
  Box bp = bounding_box(p);
  Box bd = bounding_box(d);
  Box bq{bp.m_lo - bd.m_lo, bp.m_hi - bd.m_hi, bp.n_lo - bd.n_lo, bp.n_hi - bd.n_hi};
  if (bq.m_lo > bq.m_hi || bq.n_lo > bq.n_hi) throw InexactDivision("divisor does not divide");
  const Exponent dl = *d.leading();
  const CycloCoeff dc = d.terms().rbegin()->second;
  BiLaurent rem = p;
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms().rbegin();
    Exponent e{re.m - dl.m, re.n - dl.n};
    if (e.m < bq.m_lo || e.m > bq.m_hi || e.n < bq.n_lo || e.n > bq.n_hi)
      throw InexactDivision("divisor does not divide");
    auto c = exact_quotient(rc, dc);
    if (!c) throw InexactDivision("coefficient not divisible");
    BiLaurent t = d;
    t.scale(*c, e.m, e.n);
    rem -= t;
    q += BiLaurent::monomial(p.vars(), e.m, e.n, *c);
  }
  return q;
}

BiLaurent normalize_units(const BiLaurent& p) {
  if (p.is_zero()) return p;
  const auto& [e0, c0] = *p.terms().begin();
  BiLaurent out = p;
  out.scale(c0.lex_negative() ? CycloCoeff(-1) : CycloCoeff(1), -e0.m, -e0.n);
  return out;
}

BiLaurent subst_st(const BiLaurent& p) {
  if (p.vars() != VarPair::SigmaTau) throw VarPairMismatch("subst_st expects a (sigma,tau) polynomial");
  BiLaurent::TermMap out;
  for (const auto& [e, c] : p.terms()) {
    if (e.m % 2 != 0 || e.n % 2 != 0) throw std::domain_error("odd exponent in sigma/tau substitution");
    if (!c.is_integer()) throw std::domain_error("non-integer coefficient in sigma/tau substitution");
    out.emplace(Exponent{e.m / 2, -e.n / 2}, c);
  }
  return BiLaurent::from_terms(VarPair::ST, out);
}

BiLaurent lift_to_sigma_tau(const BiLaurent& p) {
  if (p.vars() != VarPair::ST) throw VarPairMismatch("lift_to_sigma_tau expects an (s,t) polynomial");
  BiLaurent::TermMap out;
  for (const auto& [e, c] : p.terms()) out.emplace(Exponent{2 * e.m, -2 * e.n}, c);
  return BiLaurent::from_terms(VarPair::SigmaTau, out);
}

namespace {

const char* var_name(VarPair vars, int which) {
  if (vars == VarPair::ST) return which == 0 ? "s" : "t";
  return which == 0 ? "sigma" : "tau";
}

std::string render_monomial(VarPair vars, const Exponent& e) {
  std::string out;
  auto factor = [&](int which, int k) {
    if (k == 0) return;
    if (!out.empty()) out += "*";
    out += var_name(vars, which);
    if (k != 1) out += "^" + std::to_string(k);
  };
  factor(0, e.m);
  factor(1, e.n);
  return out;
}

}  // namespace

std::string render(const BiLaurent& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponent, CycloCoeff>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.n, a.first.m) < std::pair(b.first.n, b.first.m);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c0] : terms) {
    bool negative = c0.lex_negative();
    CycloCoeff c = negative ? -c0 : c0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono = render_monomial(p.vars(), e);
    std::string coeff = to_string(c);
    bool compound = coeff.find_first_of("+-") != std::string::npos;
    if (compound) coeff = "(" + coeff + ")";
    if (mono.empty()) {
      os << coeff;
    } else if (c == CycloCoeff(1)) {
      os << mono;
    } else {
      os << coeff << "*" << mono;
    }
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, VarPair vars) : text_(text), vars_(vars) {}

  BiLaurent parse() {
    next();
    BiLaurent out = expr();
    if (tok_.kind != Kind::End) fail("unexpected token");
    return out;
  }

 private:
  enum class Kind { End, Number, Ident, Op };
  struct Token {
    Kind kind = Kind::End;
    std::string text;
    std::size_t line = 1;
  };

  [[noreturn]] void fail(const std::string& why) const { throw ParseError(why, tok_.line, tok_.text); }

  void next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      if (text_[pos_] == '\n') ++line_;
      ++pos_;
    }
    tok_ = Token{Kind::End, "", line_};
    if (pos_ >= text_.size()) return;
    char ch = text_[pos_];
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_.kind = Kind::Number;
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_.kind = Kind::Ident;
    } else if (std::string_view("+-*^()").find(ch) != std::string_view::npos) {
      ++pos_;
      tok_.kind = Kind::Op;
    } else {
      ++pos_;
      tok_.text = std::string(1, ch);
      fail("unexpected character");
    }
    tok_.text = std::string(text_.substr(start, pos_ - start));
  }

  bool is_op(char c) const { return tok_.kind == Kind::Op && tok_.text[0] == c; }

  BiLaurent expr() {
    BiLaurent acc = term();
    while (is_op('+') || is_op('-')) {
      bool minus = is_op('-');
      next();
      BiLaurent rhs = term();
      if (minus) {
        acc -= rhs;
      } else {
        acc += rhs;
      }
    }
    return acc;
  }

  BiLaurent term() {
    BiLaurent acc = unary();
    while (is_op('*')) {
      next();
      acc *= unary();
    }
    return acc;
  }

  BiLaurent unary() {
    if (is_op('-')) {
      next();
      return -unary();
    }
    if (is_op('+')) {
      next();
      return unary();
    }
    return power();
  }

  BiLaurent power() {
    BiLaurent base = primary();
    if (!is_op('^')) return base;
    next();
    bool negative = false;
    if (is_op('-')) {
      negative = true;
      next();
    }
    if (tok_.kind != Kind::Number) fail("expected integer exponent");
    int k = std::stoi(tok_.text);
    next();
    if (negative) {
      if (!base.is_unit()) fail("negative power of a non-unit");
      base = base.unit_inverse();
    }
    BiLaurent out(vars_, 1);
    for (int j = 0; j < k; ++j) out *= base;
    return out;
  }

  BiLaurent primary() {
    if (tok_.kind == Kind::Number) {
      BiLaurent out(vars_, CycloCoeff(Integer(tok_.text), 0, 0, 0));
      next();
      return out;
    }
    if (tok_.kind == Kind::Ident) {
      const std::string& id = tok_.text;
      BiLaurent out(vars_);
      if (id == "i") {
        out = BiLaurent(vars_, CycloCoeff::i_power(1));
      } else if (id == "sqrti") {
        out = BiLaurent(vars_, CycloCoeff::zeta_power(1));
      } else if (id == var_name(vars_, 0)) {
        out = BiLaurent::monomial(vars_, 1, 0);
      } else if (id == var_name(vars_, 1)) {
        out = BiLaurent::monomial(vars_, 0, 1);
      } else {
        fail("unknown identifier");
      }
      next();
      return out;
    }
    if (is_op('(')) {
      next();
      BiLaurent out = expr();
      if (!is_op(')')) fail("expected ')'");
      next();
      return out;
    }
    fail(tok_.kind == Kind::End ? "unexpected end of input" : "unexpected token");
  }

  std::string_view text_;
  VarPair vars_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  Token tok_;
};

}  // namespace

BiLaurent parse_polynomial(std::string_view text, VarPair vars) {
  return PolyParser(text, vars).parse();
}

}  // namespace virtlink::ring
