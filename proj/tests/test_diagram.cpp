#include <doctest.h>

#include <random>
#include <set>

#include "support/oracles.hpp"
#include "virtlink/diagram/convert.hpp"
#include "virtlink/diagram/moves.hpp"
#include "virtlink/diagram/walk.hpp"
#include "virtlink/error.hpp"

using namespace virtlink;
using namespace virtlink::diagram;

namespace {

int classical_count(const MorseWord& w) {
  int n = 0;
  for (const auto& s : w.slices())
    for (Event e : s) n += is_classical(e);
  return n;
}

}  // namespace

TEST_CASE("Gauss code parsing") {
  GaussCode g = parse_gauss("O1+ O2+ U1+ U2+");
  REQUIRE(g.components.size() == 1);
  CHECK(g.crossing_count() == 2);
  CHECK(g.components[0][0] == Passage{PassageKind::Over, 1, Sign::Pos});
  CHECK(g.components[0][3] == Passage{PassageKind::Under, 2, Sign::Pos});

  GaussCode h = parse_gauss("O1+ / U1+");
  CHECK(h.components.size() == 2);
  CHECK(h.crossing_count() == 1);

  GaussCode u = parse_gauss("0");
  REQUIRE(u.components.size() == 1);
  CHECK(u.components[0].empty());
  CHECK(render(parse_gauss("O1+ U1+ / 0")) == "O1+ U1+ / 0");
  CHECK(render(g) == "O1+ O2+ U1+ U2+");
}

TEST_CASE("Gauss code errors carry the token") {
  auto expect_token = [](const char* text, const std::string& token) {
    try {
      parse_gauss(text);
      FAIL("expected a parse error for " << text);
    } catch (const ParseError& e) {
      CHECK(e.token() == token);
    }
  };
  expect_token("O1+ U1+ O1+", "O1+");
  expect_token("O1+ U1-", "U1-");
  expect_token("O1+ X2+", "X2+");
  expect_token("O1+ O1+", "O1+");
  expect_token("O1+", "O1+");
  CHECK_THROWS_AS(parse_gauss("O1 U1"), ParseError);
  CHECK_THROWS_AS(parse_gauss("O0+ U0+"), ParseError);
  try {
    parse_gauss("O1+\nU1+ Q");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("Morse word parsing and validation") {
  MorseWord cw = parse_morse("(>\n)>\n");
  CHECK(stats(cw).rot == 1);
  CHECK(stats(cw).v == 0);
  CHECK(stats(cw).components == 1);
  CHECK(stats(parse_morse("(<\n)<")).rot == -1);
  CHECK_THROWS_AS(parse_morse("(>\nx+\n)>"), ParseError);
  CHECK_THROWS_AS(parse_morse("(>\n|\n)>"), ParseError);
  CHECK_THROWS_AS(parse_morse("(>\n"), ParseError);
  CHECK_THROWS_AS(parse_morse("(>\n)<"), ParseError);
  try {
    parse_morse("(>\nx+\n)>");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.token() == "x+");
  }
  CHECK_THROWS_AS(MorseWord::from_slices({{Event::CupCW}, {Event::CrossPos}, {Event::CapCW}}), InvalidDiagram);
  try {
    parse_morse("(>\n| )) \n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.token() == "))");
  }
  MorseWord hopf = parse_morse("(< (>\n| x+ |\n| v |\n)< )>\n");
  CHECK(stats(hopf).v == 1);
  CHECK(stats(hopf).components == 2);
  CHECK(stats(hopf).rot == 0);
  CHECK(stats(stacked(cw, cw)).rot == 2);
  CHECK(stats(stacked(cw, cw)).components == 2);
}

TEST_CASE("rotation number counts cups and caps") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    MorseWord w = oracle::random_morse_word(rng, 3);
    int cw = 0, ccw = 0, v = 0;
    for (const auto& s : w.slices())
      for (Event e : s) {
        cw += e == Event::CupCW || e == Event::CapCW;
        ccw += e == Event::CupCCW || e == Event::CapCCW;
        v += e == Event::CrossVirtual;
      }
    CHECK(stats(w).rot * 2 == cw - ccw);
    CHECK(stats(w).v == v);
    int loops_rot = 0;
    for (const Loop& l : trace_components(w)) loops_rot += l.rot();
    CHECK(loops_rot == stats(w).rot);
  }
}

TEST_CASE("Morse text round trip") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    MorseWord w = oracle::random_morse_word(rng, 4);
    CHECK(parse_morse(render(w)) == w);
  }
}

TEST_CASE("Gauss to Morse conversion") {
  MorseWord t = gauss_to_morse(parse_gauss("O1+ O2+ U1+ U2+"));
  CHECK(classical_count(t) == 2);
  MorseWord h = gauss_to_morse(parse_gauss("O1+ / U1+"));
  CHECK(classical_count(h) == 1);
  CHECK(stats(h).v >= 1);
  CHECK(stats(h).components == 2);
  CHECK(render(gauss_to_morse(parse_gauss("0"))) == "(>\n)>");
  CHECK(stats(gauss_to_morse(parse_gauss("0 / 0"))).components == 2);
}

TEST_CASE("Gauss to Morse round trip on random codes") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    GaussCode g = oracle::random_gauss_code(rng, 8, 3);
    MorseWord w = gauss_to_morse(g);
    CHECK(stats(w).components == static_cast<int>(g.components.size()));
    CHECK(classical_count(w) == g.crossing_count());
    GaussCode back = morse_to_gauss(w);
    CHECK_MESSAGE(equivalent_codes(g, back), render(g) << " came back as " << render(back));
  }
}

TEST_CASE("code equivalence") {
  CHECK(equivalent_codes(parse_gauss("O1+ O2+ U1+ U2+"), parse_gauss("U2+ U1+ O2+ O1+")));
  CHECK(equivalent_codes(parse_gauss("O1+ O2+ U1+ U2+"), parse_gauss("O2+ U1+ U2+ O1+")));
  CHECK(equivalent_codes(parse_gauss("O1+ O2+ U1+ U2+"), parse_gauss("O7+ O3+ U7+ U3+")));
  CHECK(equivalent_codes(parse_gauss("O1+ U2- / U1+ O2-"), parse_gauss("O2- U1+ / U2- O1+")));
  CHECK_FALSE(equivalent_codes(parse_gauss("O1+ O2+ U1+ U2+"), parse_gauss("O1+ O2- U1+ U2-")));
  CHECK_FALSE(equivalent_codes(parse_gauss("O1+ U1+"), parse_gauss("O1+ / U1+")));
}

TEST_CASE("moves preserve components and shift rot as expected") {
  std::mt19937_64 rng(37);
  const MoveKind kinds[] = {MoveKind::R1KinkAdd, MoveKind::R2Add, MoveKind::R3Slide,
                            MoveKind::V2Add,     MoveKind::VDetour, MoveKind::MixedC};
  std::set<MoveKind> seen;
  for (int trial = 0; trial < 60; ++trial) {
    MorseWord w = trial % 2 ? oracle::random_morse_word(rng, 3) : gauss_to_morse(oracle::random_gauss_code(rng, 3, 2));
    // R3-type rewrites need a triangle; insert an R2 pair and a virtual pair first to create chances.
    for (MoveKind k : kinds) {
      auto moves = applicable_moves(w, k);
      if (moves.empty()) continue;
      const MoveSpec& m = moves[rng() % moves.size()];
      MorseWord out = apply_move(w, m);
      seen.insert(k);
      CHECK(stats(out).components == stats(w).components);
      int expected_rot = stats(w).rot;
      if (k == MoveKind::R1KinkAdd) expected_rot += m.clockwise ? 1 : -1;
      CHECK_MESSAGE(stats(out).rot == expected_rot, describe(m));
    }
  }
  CHECK(seen.count(MoveKind::R1KinkAdd));
  CHECK(seen.count(MoveKind::R2Add));
  CHECK(seen.count(MoveKind::V2Add));
}

TEST_CASE("triangle moves apply to planted triangles") {
  std::mt19937_64 rng(39);
  const std::pair<oracle::Triangle, MoveKind> cases[] = {{oracle::Triangle::R3, MoveKind::R3Slide},
                                                         {oracle::Triangle::Detour, MoveKind::VDetour},
                                                         {oracle::Triangle::Mixed, MoveKind::MixedC}};
  for (auto [tri, kind] : cases) {
    for (int trial = 0; trial < 10; ++trial) {
      MorseWord w = oracle::random_triangle_braid(rng, tri);
      auto moves = applicable_moves(w, kind);
      REQUIRE_FALSE(moves.empty());
      for (const MoveSpec& m : moves) {
        MorseWord out = apply_move(w, m);
        CHECK(stats(out).rot == stats(w).rot);
        CHECK(stats(out).components == stats(w).components);
        CHECK(classical_count(out) == classical_count(w));
        // The rewrite is an involution at the same anchor.
        CHECK(apply_move(out, m) == w);
      }
    }
  }
  // The forbidden pattern x+ x- x+ is not an R3 triangle.
  MorseWord w = braid_closure(3, {{0, Event::CrossPos}, {1, Event::CrossNeg}, {0, Event::CrossPos}});
  CHECK(applicable_moves(w, MoveKind::R3Slide).empty());
}

TEST_CASE("R2 on a circle and pattern mismatch") {
  MorseWord cw = parse_morse("(>\n)>");
  auto moves = applicable_moves(cw, MoveKind::R2Add);
  REQUIRE_FALSE(moves.empty());
  bool found = false;
  for (const MoveSpec& m : moves) {
    if (m.slice != 1) continue;
    found = true;
    CHECK(classical_count(apply_move(cw, m)) == 2);
  }
  CHECK(found);
  MoveSpec bad;
  bad.kind = MoveKind::R3Slide;
  bad.slice = 0;
  CHECK_THROWS_AS(apply_move(cw, bad), std::invalid_argument);
  CHECK(applicable_moves(cw, MoveKind::R3Slide).empty());
}
