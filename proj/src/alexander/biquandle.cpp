#include "virtlink/alexander/biquandle.hpp"

#include <sstream>
#include <stdexcept>

namespace virtlink::alexander {

namespace {

long long mod(long long x, long long p) {
  long long r = x % p;
  return r < 0 ? r + p : r;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long inverse_mod(long long a, long long p) {
  for (long long x = 1; x < p; ++x)
    if (mod(a * x, p) == 1) return x;
  throw std::invalid_argument("element is not a unit");
}

}  // namespace

FiniteBiquandle::FiniteBiquandle(int p, const Op& up, const Op& down, const Op& up_bar, const Op& down_bar) : p_(p) {
  if (p < 1) throw std::invalid_argument("biquandle order must be positive");
  const std::size_t n = static_cast<std::size_t>(p) * static_cast<std::size_t>(p);
  up_.resize(n);
  down_.resize(n);
  up_bar_.resize(n);
  down_bar_.resize(n);
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b) {
      std::size_t k = idx(a, b);
      up_[k] = static_cast<int>(mod(up(a, b), p));
      down_[k] = static_cast<int>(mod(down(a, b), p));
      up_bar_[k] = static_cast<int>(mod(up_bar(a, b), p));
      down_bar_[k] = static_cast<int>(mod(down_bar(a, b), p));
    }
}

FiniteBiquandle alexander_biquandle(int p, long long s, long long t) {
  if (!is_prime(p)) throw std::invalid_argument("modulus must be prime");
  s = mod(s, p);
  t = mod(t, p);
  if (s == 0 || t == 0) throw std::invalid_argument("s and t must be units mod p");
  const long long si = inverse_mod(s, p), ti = inverse_mod(t, p);
  const long long st = mod(s * t, p), sti = mod(si * ti, p);
  return FiniteBiquandle(
      p, [=](long long a, long long b) { return t * a + (1 - st) * b; }, [=](long long a, long long) { return s * a; },
      [=](long long a, long long b) { return ti * a + (1 - sti) * b; }, [=](long long a, long long) { return si * a; });
}

bool AxiomReport::all_pass() const {
  for (const auto& a : axioms)
    if (!a.pass) return false;
  return true;
}

namespace {

void record(AxiomResult& r, const std::string& what) {
  if (!r.pass) return;
  r.pass = false;
  r.counterexample = what;
}

std::string show(std::initializer_list<std::pair<const char*, int>> vals, const std::string& rule) {
  std::ostringstream os;
  for (const auto& [n, v] : vals) os << n << "=" << v << " ";
  os << rule;
  return os.str();
}

}  // namespace

AxiomReport verify_biquandle_axioms(const FiniteBiquandle& q) {
  AxiomReport rep;
  const int p = q.order();
  auto U = [&](int a, int b) { return q.up(a, b); };
  auto D = [&](int a, int b) { return q.down(a, b); };
  auto UB = [&](int a, int b) { return q.up_bar(a, b); };
  auto DB = [&](int a, int b) { return q.down_bar(a, b); };

  for (int a = 0; a < p && rep.axioms[0].pass; ++a)
    for (int b = 0; b < p; ++b) {
      if (UB(U(a, b), D(b, a)) != a) record(rep.axioms[0], show({{"a", a}, {"b", b}}, "a != (a^b)^(bar b_a)"));
      if (DB(D(b, a), U(a, b)) != b) record(rep.axioms[0], show({{"a", a}, {"b", b}}, "b != (b_a)_(bar a^b)"));
      if (U(UB(a, b), DB(b, a)) != a) record(rep.axioms[0], show({{"a", a}, {"b", b}}, "a != (a^bar b)^(b_bar a)"));
      if (D(DB(b, a), UB(a, b)) != b) record(rep.axioms[0], show({{"a", a}, {"b", b}}, "b != (b_bar a)_(a^bar b)"));
    }

  for (int a = 0; a < p && rep.axioms[1].pass; ++a)
    for (int b = 0; b < p; ++b) {
      bool found = false;
      for (int x = 0; x < p && !found; ++x)
        found = x == U(a, DB(b, x)) && a == UB(x, b) && b == D(DB(b, x), a);
      if (!found) record(rep.axioms[1], show({{"a", a}, {"b", b}}, "no x with x = a^(b_bar x), a = x^bar b, b = b_(bar x a)"));
      found = false;
      for (int x = 0; x < p && !found; ++x)
        found = x == UB(a, D(b, x)) && a == U(x, b) && b == DB(D(b, x), a);
      if (!found) record(rep.axioms[1], show({{"a", a}, {"b", b}}, "no x with x = a^(bar b_x), a = x^b, b = b_(x bar a)"));
    }

  for (int a = 0; a < p && rep.axioms[2].pass; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c) {
        auto who = [&](const char* rule) { return show({{"a", a}, {"b", b}, {"c", c}}, rule); };
        if (U(U(a, b), c) != U(U(a, D(c, b)), U(b, c))) record(rep.axioms[2], who("a^(bc) != a^(c_b b^c)"));
        if (D(D(c, b), a) != D(D(c, U(a, b)), D(b, a))) record(rep.axioms[2], who("c_(ba) != c_(a^b b_a)"));
        if (U(D(b, a), D(c, U(a, b))) != D(U(b, c), U(a, D(c, b))))
          record(rep.axioms[2], who("(b_a)^(c_(a^b)) != (b^c)_(a^(c_b))"));
        if (UB(UB(a, b), c) != UB(UB(a, DB(c, b)), UB(b, c))) record(rep.axioms[2], who("left twin of a^(bc)"));
        if (DB(DB(c, b), a) != DB(DB(c, UB(a, b)), DB(b, a))) record(rep.axioms[2], who("left twin of c_(ba)"));
        if (UB(DB(b, a), DB(c, UB(a, b))) != DB(UB(b, c), UB(a, DB(c, b))))
          record(rep.axioms[2], who("left twin of (b_a)^(c_(a^b))"));
      }

  for (int a = 0; a < p && rep.axioms[3].pass; ++a) {
    bool found = false;
    for (int x = 0; x < p && !found; ++x) found = x == D(a, x) && a == U(x, a);
    if (!found) record(rep.axioms[3], show({{"a", a}}, "no x with x = a_x, a = x^a"));
    found = false;
    for (int x = 0; x < p && !found; ++x) found = x == UB(a, x) && a == DB(x, a);
    if (!found) record(rep.axioms[3], show({{"a", a}}, "no x with x = a^bar x, a = x_bar a"));
  }
  return rep;
}

}  // namespace virtlink::alexander
