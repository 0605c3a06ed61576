#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/oracles.hpp"
#include "virtlink/alexander/biquandle.hpp"
#include "virtlink/alexander/relations.hpp"
#include "virtlink/diagram/convert.hpp"
#include "virtlink/error.hpp"

using namespace virtlink;
using namespace virtlink::ring;
using alexander::gpoly;
using diagram::parse_gauss;

namespace {

BiLaurent st(const char* text) { return parse_polynomial(text, VarPair::ST); }

// Matrix with one row per relation "out = sum coeff * in", columns named by letter.
struct HandSystem {
  std::size_t n;
  PolyMatrix m;
  explicit HandSystem(std::size_t size) : n(size), m(size, size, VarPair::ST) {}
  void row(std::size_t r, char out, std::vector<std::pair<char, BiLaurent>> rhs) {
    m(r, static_cast<std::size_t>(out - 'a')) += st("1");
    for (auto& [col, c] : rhs) m(r, static_cast<std::size_t>(col - 'a')) -= c;
  }
};

const char* kFigureK = "U2- U4+ O3- O4+ U3- U1+ O2- O1+";
const char* kKishino = "U2- O4- U3+ U4- O3+ U1+ O2- O1+";

}  // namespace

TEST_CASE("virtual Hopf link relations") {
  auto rel = alexander::build_relations(parse_gauss("O1+ / U1+"));
  REQUIRE(rel.matrix.rows() == 2);
  REQUIRE(rel.matrix.cols() == 2);
  CHECK(rel.edges.size() == 2);
  // Rows are [1-s, 0] and [-(1-st), 1-t] in some order of rows and columns.
  std::vector<BiLaurent> entries;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) entries.push_back(rel.matrix(r, c));
  std::vector<BiLaurent> expected = {st("1-s"), st("0"), st("-(1-s*t)"), st("1-t")};
  auto sorted = [](std::vector<BiLaurent> v) {
    std::sort(v.begin(), v.end(), canonical_less);
    return v;
  };
  CHECK(sorted(entries) == sorted(expected));
  CHECK(normalize_units(alexander::det(rel)) == st("(1-s)*(1-t)"));
  auto ms = alexander::minors(rel, 1);
  std::vector<BiLaurent> want = {st("1-s"), st("1-s*t"), st("1-t")};
  CHECK(sorted(ms) == sorted(want));
  for (std::size_t r = 0; r < 2; ++r) {
    int nonzero = 0;
    for (std::size_t c = 0; c < 2; ++c) nonzero += !rel.matrix(r, c).is_zero();
    CHECK(nonzero <= 3);
  }
}

TEST_CASE("virtual trefoil against its hand presentation") {
  HandSystem h(4);
  h.row(0, 'a', {{'d', st("t")}, {'b', st("1-s*t")}});
  h.row(1, 'c', {{'b', st("s")}});
  h.row(2, 'd', {{'c', st("t")}, {'a', st("1-s*t")}});
  h.row(3, 'b', {{'a', st("s")}});
  const BiLaurent expected = st("(1-s)+(s^2-1)*t+(s-s^2)*t^2");
  CHECK(normalize_units(oracle::leibniz_det(h.m)) == normalize_units(expected));
  CHECK(gpoly(parse_gauss("O1+ O2+ U1+ U2+")) == normalize_units(expected));

  PolyMatrix reduced(2, 2, VarPair::ST);
  reduced(0, 0) = st("s-s^2*t-1");
  reduced(0, 1) = st("t");
  reduced(1, 0) = st("s^2*t+1-s*t");
  reduced(1, 1) = st("-1");
  CHECK(normalize_units(det(reduced)) == normalize_units(expected));
}

TEST_CASE("knot D against its six relations") {
  // a up d = b, d down a = e, c up e = d, e down c = f, f up-bar b = a, b down-bar f = c.
  HandSystem h(6);
  h.row(0, 'b', {{'a', st("t")}, {'d', st("1-s*t")}});
  h.row(1, 'e', {{'d', st("s")}});
  h.row(2, 'd', {{'c', st("t")}, {'e', st("1-s*t")}});
  h.row(3, 'f', {{'e', st("s")}});
  h.row(4, 'a', {{'f', st("t^-1")}, {'b', st("1-s^-1*t^-1")}});
  h.row(5, 'c', {{'b', st("s^-1")}});
  const BiLaurent hand = normalize_units(oracle::leibniz_det(h.m));
  const BiLaurent g = gpoly(parse_gauss("U1+ O3- U2+ O1+ O2+ U3-"));
  CHECK(g == hand);
  // The printed constant term (s - s^2) is inconsistent with G vanishing at st = 1;
  // (s - s^-1) is what the relations give.
  CHECK(g == normalize_units(st("t^2*(s^2-1)+t*(s^-1+1-s-s^2)+(s-s^-1)")));
  CHECK_FALSE(g == normalize_units(st("t^2*(s^2-1)+t*(s^-1+1-s-s^2)+(s-s^2)")));
}

TEST_CASE("G of a knot vanishes at st = 1") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    BiLaurent g = gpoly(oracle::random_gauss_code(rng, 5, 1));
    for (std::int64_t s = 1; s < 11; ++s) {
      std::int64_t t = 1;
      while (s * t % 11 != 1) ++t;
      CHECK(oracle::eval_mod(g, s, t, 11) == 0);
    }
  }
}

TEST_CASE("classical diagrams have G = 0") {
  CHECK(gpoly(parse_gauss("O1- U2- O3- U1- O2- U3-")).is_zero());
  CHECK(gpoly(parse_gauss("O1+ U2+ / U1+ O2+")).is_zero());
  auto eight = diagram::braid_closure(
      3, {{0, diagram::Event::CrossPos}, {1, diagram::Event::CrossNeg}, {0, diagram::Event::CrossPos}, {1, diagram::Event::CrossNeg}});
  CHECK(gpoly(diagram::morse_to_gauss(eight)).is_zero());
  CHECK(gpoly(parse_gauss("O1+ U1+")).is_zero());
}

TEST_CASE("crossingless components") {
  CHECK(gpoly(parse_gauss("0")).is_zero());
  CHECK(gpoly(parse_gauss("O1+ / U1+ / 0")).is_zero());
  CHECK_THROWS_AS(alexander::build_relations(parse_gauss("0")), std::invalid_argument);
}

TEST_CASE("figure K and the Kishino diagram") {
  auto k = alexander::build_relations(parse_gauss(kFigureK));
  CHECK(alexander::det(k).is_zero());
  CHECK(gpoly(parse_gauss(kKishino)).is_zero());
  auto ms = alexander::minors(k, k.matrix.rows() - 1);
  REQUIRE_FALSE(ms.empty());
  bool nonunit = false;
  for (const BiLaurent& m : ms) {
    nonunit |= !m.is_unit();
    CHECK_NOTHROW(exact_div(m, st("s^-1 - t - 1")));
  }
  CHECK(nonunit);
}

TEST_CASE("G is invariant under rotation and relabeling") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = oracle::random_gauss_code(rng, 5, 2);
    auto h = g;
    for (auto& comp : h.components)
      if (!comp.empty()) std::rotate(comp.begin(), comp.begin() + static_cast<std::ptrdiff_t>(rng() % comp.size()), comp.end());
    std::vector<int> ids = g.crossing_ids();
    std::vector<int> relabeled = ids;
    std::shuffle(relabeled.begin(), relabeled.end(), rng);
    for (auto& comp : h.components)
      for (auto& p : comp) {
        auto it = std::find(ids.begin(), ids.end(), p.crossing);
        p.crossing = relabeled[static_cast<std::size_t>(it - ids.begin())] + 100;
      }
    std::reverse(h.components.begin(), h.components.end());
    CHECK(gpoly(g) == gpoly(h));
  }
}

TEST_CASE("minors of small matrices") {
  auto ms = alexander::minors(PolyMatrix::identity(3, VarPair::ST), 2);
  REQUIRE(ms.size() == 1);
  CHECK(ms[0] == st("1"));
  CHECK(alexander::minors(PolyMatrix::identity(3, VarPair::ST), 3) == std::vector<BiLaurent>{st("1")});
}

TEST_CASE("biquandle axioms") {
  CHECK(alexander::verify_biquandle_axioms(alexander::alexander_biquandle(7, 2, 3)).all_pass());
  CHECK(alexander::verify_biquandle_axioms(alexander::alexander_biquandle(5, 1, 1)).all_pass());
  for (int p : {3, 5, 7})
    for (int s = 1; s < p; ++s)
      for (int t = 1; t < p; ++t) CHECK(alexander::verify_biquandle_axioms(alexander::alexander_biquandle(p, s, t)).all_pass());
  CHECK_THROWS_AS(alexander::alexander_biquandle(6, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(alexander::alexander_biquandle(7, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(alexander::alexander_biquandle(7, 1, 7), std::invalid_argument);
}

TEST_CASE("corrupted over-output fails axiom 1") {
  const int p = 7;
  const long long s = 2, t = 3, si = 4, ti = 5;  // 2*4 = 3*5 = 1 mod 7
  auto mod = [&](long long x) { return ((x % p) + p) % p; };
  alexander::FiniteBiquandle bad(
      p, [&](long long a, long long b) { return mod(t * a + (1 - s * t) * b); },
      [&](long long a, long long) { return mod(s * a + 1); },
      [&](long long a, long long b) { return mod(ti * a + (1 - si * ti) * b); },
      [&](long long a, long long) { return mod(si * a); });
  auto rep = alexander::verify_biquandle_axioms(bad);
  CHECK_FALSE(rep.axioms[0].pass);
  CHECK(rep.axioms[0].counterexample.has_value());
  CHECK_FALSE(rep.all_pass());
}
