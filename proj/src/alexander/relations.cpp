#include "virtlink/alexander/relations.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace virtlink::alexander {

using ring::BiLaurent;
using ring::VarPair;

namespace {

struct Ends {
  int in = -1;
  int out = -1;
};

struct CrossingEnds {
  Ends over, under;
  diagram::Sign sign = diagram::Sign::Pos;
};

BiLaurent st_mono(int m, int n, long long c = 1) {
  return BiLaurent::monomial(VarPair::ST, m, n, c);
}

}  // namespace

RelationMatrix build_relations(const diagram::GaussCode& g) {
  diagram::validate(g);
  RelationMatrix rm;
  std::map<int, CrossingEnds> ends;
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    const auto& comp = g.components[c];
    if (comp.empty()) throw std::invalid_argument("crossingless component in relation matrix");
    const int base = static_cast<int>(rm.edges.size());
    const int len = static_cast<int>(comp.size());
    for (int k = 0; k < len; ++k) {
      rm.edges.push_back({static_cast<int>(c), k});
      const auto& p = comp[static_cast<std::size_t>(k)];
      CrossingEnds& ce = ends[p.crossing];
      Ends& e = p.kind == diagram::PassageKind::Over ? ce.over : ce.under;
      e.in = base + (k + len - 1) % len;
      e.out = base + k;
      ce.sign = p.sign;
    }
  }
  const std::size_t n = rm.edges.size();
  rm.matrix = ring::PolyMatrix(n, n, VarPair::ST);
  std::size_t row = 0;
  const BiLaurent one = st_mono(0, 0);
  for (const auto& [id, ce] : ends) {
    const bool pos = ce.sign == diagram::Sign::Pos;
    // under-out - t^{+-1} under-in - (1 - (st)^{+-1}) over-in
    BiLaurent tu = pos ? st_mono(0, 1) : st_mono(0, -1);
    BiLaurent mix = pos ? one - st_mono(1, 1) : one - st_mono(-1, -1);
    rm.matrix(row, static_cast<std::size_t>(ce.under.out)) += one;
    rm.matrix(row, static_cast<std::size_t>(ce.under.in)) -= tu;
    rm.matrix(row, static_cast<std::size_t>(ce.over.in)) -= mix;
    // over-out - s^{+-1} over-in
    BiLaurent so = pos ? st_mono(1, 0) : st_mono(-1, 0);
    rm.matrix(row + 1, static_cast<std::size_t>(ce.over.out)) += one;
    rm.matrix(row + 1, static_cast<std::size_t>(ce.over.in)) -= so;
    row += 2;
  }
  return rm;
}

BiLaurent det(const RelationMatrix& m) {
  return ring::det(m.matrix);
}

BiLaurent gpoly(const diagram::GaussCode& g) {
  diagram::validate(g);
  for (const auto& comp : g.components)
    if (comp.empty()) return BiLaurent(VarPair::ST);
  return ring::normalize_units(det(build_relations(g)));
}

namespace {

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<BiLaurent> minors(const ring::PolyMatrix& m, std::size_t k) {
  if (k == 0 || k > m.rows() || k > m.cols()) throw std::invalid_argument("minor size out of range");
  std::vector<BiLaurent> out;
  std::vector<std::size_t> rows(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  do {
    std::vector<std::size_t> cols(k);
    for (std::size_t i = 0; i < k; ++i) cols[i] = i;
    do {
      BiLaurent d = ring::normalize_units(ring::det(m.submatrix(rows, cols)));
      if (!d.is_zero()) out.push_back(std::move(d));
    } while (next_combination(cols, m.cols()));
  } while (next_combination(rows, m.rows()));
  std::sort(out.begin(), out.end(), ring::canonical_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace virtlink::alexander
