#include "virtlink/diagram/gauss.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "virtlink/error.hpp"

namespace virtlink::diagram {

int GaussCode::crossing_count() const {
  return static_cast<int>(crossing_ids().size());
}

std::vector<int> GaussCode::crossing_ids() const {
  std::set<int> ids;
  for (const auto& comp : components)
    for (const auto& p : comp) ids.insert(p.crossing);
  return {ids.begin(), ids.end()};
}

namespace {

struct Occurrence {
  int overs = 0;
  int unders = 0;
  Sign sign = Sign::Pos;
  bool seen = false;
  bool sign_conflict = false;
};

std::map<int, Occurrence> tally(const GaussCode& g) {
  std::map<int, Occurrence> occ;
  for (const auto& comp : g.components)
    for (const auto& p : comp) {
      auto& o = occ[p.crossing];
      (p.kind == PassageKind::Over ? o.overs : o.unders)++;
      if (o.seen && o.sign != p.sign) o.sign_conflict = true;
      o.sign = p.sign;
      o.seen = true;
    }
  return occ;
}

std::string token_of(const Passage& p) {
  return std::string(p.kind == PassageKind::Over ? "O" : "U") + std::to_string(p.crossing) +
         (p.sign == Sign::Pos ? "+" : "-");
}

}  // namespace

void validate(const GaussCode& g) {
  if (g.components.empty()) throw std::invalid_argument("Gauss code has no components");
  for (const auto& [id, o] : tally(g)) {
    if (id <= 0) throw std::invalid_argument("crossing id " + std::to_string(id) + " is not positive");
    if (o.overs + o.unders != 2)
      throw std::invalid_argument("crossing " + std::to_string(id) + " appears " + std::to_string(o.overs + o.unders) +
                                  " times");
    if (o.overs != 1) throw std::invalid_argument("crossing " + std::to_string(id) + " needs one O and one U");
    if (o.sign_conflict) throw std::invalid_argument("crossing " + std::to_string(id) + " has mismatched signs");
  }
}

GaussCode parse_gauss(std::string_view text) {
  GaussCode g;
  g.components.emplace_back();
  std::vector<bool> explicit_zero{false};
  std::map<int, std::pair<std::size_t, std::string>> last_token;
  std::size_t line = 1;
  std::size_t pos = 0;
  auto fail = [&](const std::string& why, const std::string& tok) { throw ParseError(why, line, tok); };
  while (pos < text.size()) {
    char ch = text[pos];
    if (ch == '\n') {
      ++line;
      ++pos;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) && text[pos] != '/') ++pos;
    if (pos == start) ++pos;
    std::string tok(text.substr(start, pos - start));
    if (tok == "/") {
      if (g.components.back().empty() && !explicit_zero.back()) fail("empty component", tok);
      g.components.emplace_back();
      explicit_zero.push_back(false);
      continue;
    }
    if (tok == "0") {
      if (!g.components.back().empty() || explicit_zero.back()) fail("'0' must stand alone in its component", tok);
      explicit_zero.back() = true;
      continue;
    }
    if (explicit_zero.back()) fail("'0' must stand alone in its component", tok);
    if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U') || (tok.back() != '+' && tok.back() != '-'))
      fail("malformed passage token", tok);
    std::string digits = tok.substr(1, tok.size() - 2);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); }) ||
        digits[0] == '0' || digits.size() > 9)
      fail("malformed crossing id", tok);
    Passage p{tok[0] == 'O' ? PassageKind::Over : PassageKind::Under, std::stoi(digits),
              tok.back() == '+' ? Sign::Pos : Sign::Neg};
    g.components.back().push_back(p);
    last_token[p.crossing] = {line, tok};
  }
  if (g.components.back().empty() && !explicit_zero.back())
    throw ParseError(g.components.size() == 1 ? "empty Gauss code" : "empty component", line, "");
  for (const auto& [id, o] : tally(g)) {
    const auto& [ln, tok] = last_token[id];
    if (o.overs + o.unders != 2)
      throw ParseError("crossing " + std::to_string(id) + " appears " + std::to_string(o.overs + o.unders) + " times", ln,
                       tok);
    if (o.overs != 1) throw ParseError("crossing " + std::to_string(id) + " needs one O and one U", ln, tok);
    if (o.sign_conflict) throw ParseError("crossing " + std::to_string(id) + " has mismatched signs", ln, tok);
  }
  return g;
}

std::string render(const GaussCode& g) {
  std::ostringstream os;
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    if (c) os << " / ";
    if (g.components[c].empty()) {
      os << "0";
      continue;
    }
    for (std::size_t k = 0; k < g.components[c].size(); ++k) {
      if (k) os << ' ';
      os << token_of(g.components[c][k]);
    }
  }
  return os.str();
}

namespace {

// Backtracking search for a component bijection with rotations and a crossing
// relabeling that maps a onto b.
class CodeMatcher {
 public:
  CodeMatcher(const GaussCode& a, const GaussCode& b) : a_(a), b_(b), used_(b.components.size(), false) {}

  bool run() { return match(0); }

 private:
  bool match(std::size_t ci) {
    if (ci == a_.components.size()) return true;
    const auto& ca = a_.components[ci];
    for (std::size_t cj = 0; cj < b_.components.size(); ++cj) {
      if (used_[cj] || b_.components[cj].size() != ca.size()) continue;
      const auto& cb = b_.components[cj];
      std::size_t rotations = ca.empty() ? 1 : ca.size();
      for (std::size_t r = 0; r < rotations; ++r) {
        auto saved_fwd = fwd_;
        auto saved_bwd = bwd_;
        bool ok = true;
        for (std::size_t k = 0; k < ca.size() && ok; ++k) {
          const Passage& p = ca[k];
          const Passage& q = cb[(k + r) % cb.size()];
          if (p.kind != q.kind || p.sign != q.sign) {
            ok = false;
            break;
          }
          auto f = fwd_.find(p.crossing);
          auto bk = bwd_.find(q.crossing);
          if (f == fwd_.end() && bk == bwd_.end()) {
            fwd_[p.crossing] = q.crossing;
            bwd_[q.crossing] = p.crossing;
          } else if (f == fwd_.end() || bk == bwd_.end() || f->second != q.crossing) {
            ok = false;
          }
        }
        if (ok) {
          used_[cj] = true;
          if (match(ci + 1)) return true;
          used_[cj] = false;
        }
        fwd_ = std::move(saved_fwd);
        bwd_ = std::move(saved_bwd);
      }
    }
    return false;
  }

  const GaussCode& a_;
  const GaussCode& b_;
  std::vector<bool> used_;
  std::map<int, int> fwd_;
  std::map<int, int> bwd_;
};

}  // namespace

bool equivalent_codes(const GaussCode& a, const GaussCode& b) {
  if (a.components.size() != b.components.size()) return false;
  if (a.crossing_count() != b.crossing_count()) return false;
  return CodeMatcher(a, b).run();
}

}  // namespace virtlink::diagram
