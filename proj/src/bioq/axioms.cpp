#include "virtlink/bioq/axioms.hpp"

#include <stdexcept>

#include "virtlink/error.hpp"
#include "virtlink/statesum/model.hpp"

namespace virtlink::bioq {

using ring::CycloCoeff;
using ring::VarPair;

bool Report::all_pass() const {
  for (const Condition& c : conditions)
    if (!c.pass) return false;
  return true;
}

bool Report::passed(const std::string& name) const {
  for (const Condition& c : conditions)
    if (c.name == name) return c.pass;
  for (const Condition& c : cross_references)
    if (c.name == name) return c.pass;
  throw std::out_of_range("no condition named '" + name + "'");
}

bool check_algebraic_ybe(const TensorElement& rho) {
  PolyMatrix r12 = leg(rho, 0, 1), r13 = leg(rho, 0, 2), r23 = leg(rho, 1, 2);
  return r12 * r13 * r23 == r23 * r13 * r12;
}

namespace {

void require_automorphisms(const AlgebraMap& u, const AlgebraMap& d) {
  if (!u.is_automorphism()) throw std::invalid_argument("U is not an algebra automorphism");
  if (!d.is_automorphism()) throw std::invalid_argument("D is not an algebra automorphism");
  if (!(compose(u, d) == compose(d, u))) throw std::invalid_argument("U and D do not commute");
}

void oriented_conditions(Report& rep, const TensorElement& x, const TensorElement& x_inv,
                         const AlgebraMap& u, const AlgebraMap& d) {
  const std::size_t n = x.n;
  const TensorElement one = TensorElement::identity(n);
  const AlgebraMap id = AlgebraMap::identity(n);
  auto add = [&](const std::string& name, bool pass) { rep.conditions.push_back({name, pass}); };
  add("@ @^-1 = 1", x * x_inv == one && x_inv * x == one);
  add("algebraic Yang-Baxter for @", check_algebraic_ybe(x));
  add("algebraic Yang-Baxter for @^-1", check_algebraic_ybe(x_inv));
  add("(U (x) U)@ = @", apply_pair(u, u, x) == x);
  add("(D (x) D)@ = @", apply_pair(d, d, x) == x);
  const TensorElement a = apply_pair(id, u, x);
  const TensorElement b = apply_pair(d, id, x_inv);
  add("[(1 (x) U)@][(D (x) 1)@^-1] = 1 in A (x) A^op", op_product(a, b) == one);
  add("[(D (x) 1)@^-1][(1 (x) U)@] = 1 in A (x) A^op", op_product(b, a) == one);
}

std::string with_symbol(std::string name, const std::string& sym) {
  for (std::size_t p = name.find('@'); p != std::string::npos; p = name.find('@', p + sym.size())) name.replace(p, 1, sym);
  return name;
}

void rename(Report& rep, std::size_t from, const std::string& sym) {
  for (std::size_t k = from; k < rep.conditions.size(); ++k) rep.conditions[k].name = with_symbol(rep.conditions[k].name, sym);
}

}  // namespace

Report check_oriented(const TensorElement& rho, const TensorElement& rho_inv, const AlgebraMap& u, const AlgebraMap& d) {
  require_automorphisms(u, d);
  Report rep;
  oriented_conditions(rep, rho, rho_inv, u, d);
  rename(rep, 0, "rho");
  return rep;
}

PolyMatrix swap_matrix(std::size_t n) {
  PolyMatrix p(n * n, n * n, VarPair::SigmaTau);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) p(a * n + b, b * n + a) = BiLaurent(VarPair::SigmaTau, CycloCoeff(1));
  return p;
}

Report check_bioriented(const TensorElement& rho, const TensorElement& rho_inv, const TensorElement& gamma,
                        const AlgebraMap& u, const AlgebraMap& d) {
  require_automorphisms(u, d);
  Report rep;
  oriented_conditions(rep, rho, rho_inv, u, d);
  rename(rep, 0, "rho");

  const std::size_t mark = rep.conditions.size();
  try {
    TensorElement gamma_inv{gamma.n, ring::inverse(gamma.data)};
    oriented_conditions(rep, gamma, gamma_inv, u, d);
  } catch (const InexactDivision&) {
    rep.conditions.push_back({"gamma invertible", false});
  }
  rename(rep, mark, "gamma");

  const std::size_t n = gamma.n;
  const PolyMatrix g12 = leg(gamma, 0, 1), g13 = leg(gamma, 0, 2), g23 = leg(gamma, 1, 2);
  const PolyMatrix r13 = leg(rho, 0, 2), r12 = leg(rho, 0, 1), r23 = leg(rho, 1, 2);
  rep.conditions.push_back({"gamma_12 gamma_21 = 1", gamma * flip(gamma) == TensorElement::identity(n)});
  rep.conditions.push_back({"gamma_12 rho_13 gamma_23 = gamma_23 rho_13 gamma_12", g12 * r13 * g23 == g23 * r13 * g12});
  rep.conditions.push_back({"gamma_12 gamma_13 rho_23 = rho_23 gamma_13 gamma_12", g12 * g13 * r23 == r23 * g13 * g12});
  rep.conditions.push_back({"rho_12 gamma_13 gamma_23 = gamma_23 gamma_13 rho_12", r12 * g13 * g23 == g23 * g13 * r12});

  if (n == 2) {
    const statesum::ModelTensors model = statesum::ModelTensors::standard();
    const PolyMatrix p = swap_matrix(2);
    rep.cross_references.push_back({"rho P = state-model R", rho.data * p == model.r});
    rep.cross_references.push_back({"gamma P = state-model virtual crossing", gamma.data * p == model.virt});
  }
  return rep;
}

Instance standard_instance() {
  using ring::BiLaurent;
  auto mono = [](int m, int e, long long c = 1) { return BiLaurent::monomial(VarPair::SigmaTau, m, e, c); };
  Instance inst;
  PolyMatrix rho(4, 4, VarPair::SigmaTau);
  rho(0, 0) = mono(-1, 1);
  rho(1, 1) = mono(1, 1);
  rho(1, 2) = statesum::z_sigma_tau();
  rho(2, 2) = mono(-1, -1);
  rho(3, 3) = mono(1, -1, -1);
  inst.rho = TensorElement::from_matrix(rho);
  inst.rho_inv = TensorElement::from_matrix(ring::inverse(rho));
  PolyMatrix gamma = PolyMatrix::identity(4, VarPair::SigmaTau);
  gamma(3, 3) = mono(0, 0, -1);
  inst.gamma = TensorElement::from_matrix(gamma);
  inst.t = AlgebraMap::scaling(2, [&](std::size_t a, std::size_t b) {
    return BiLaurent(VarPair::SigmaTau, CycloCoeff::i_power(static_cast<int>(b) - static_cast<int>(a)));
  });
  inst.interpretation =
      "A = M_2, rho = sum rho[(a,b),(c,d)] E_ac (x) E_bd; T(E_ab) = i^(b-a) E_ab with matrix positions a, b in {1, 2}";
  return inst;
}

Report check_instance(const Instance& inst) {
  Report rep = check_bioriented(inst.rho, inst.rho_inv, inst.gamma, inst.t, inst.t);
  rep.interpretation = inst.interpretation;
  return rep;
}

std::string to_text(const Report& r) {
  std::string out;
  if (!r.interpretation.empty()) out += "interpretation: " + r.interpretation + "\n";
  for (const Condition& c : r.conditions) out += std::string(c.pass ? "PASS  " : "FAIL  ") + c.name + "\n";
  for (const Condition& c : r.cross_references)
    out += std::string(c.pass ? "MATCH " : "DIFF  ") + c.name + "\n";
  out += r.all_pass() ? "all conditions hold\n" : "some conditions fail\n";
  return out;
}

}  // namespace virtlink::bioq
