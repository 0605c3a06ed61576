#include "virtlink/statesum/states.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace virtlink::statesum {

using diagram::Event;
using diagram::Routing;
using ring::VarPair;

namespace {

BiLaurent mono(int m, int n, long long c = 1) {
  return BiLaurent::monomial(VarPair::SigmaTau, m, n, c);
}

// Vertex weight of a classical crossing with bottom labels (a, b), 0 = minus.
BiLaurent vertex_weight(Event e, Routing r, int a, int b, MatrixIndexing indexing) {
  const bool pos = e == Event::CrossPos;
  const BiLaurent z = mono(-1, 1) - mono(1, -1);
  if (r == Routing::Smooth) {
    if (pos && a == 0 && b == 1) return z;
    if (!pos && a == 1 && b == 0) return -z;
    return BiLaurent(VarPair::SigmaTau);
  }
  const bool swap = indexing == MatrixIndexing::RowIsOutput;
  if (a == 0 && b == 0) return pos ? mono(-1, 1) : mono(1, -1);
  if (a == 1 && b == 1) return pos ? mono(1, -1, -1) : mono(-1, 1, -1);
  if (a == 0) return swap ? mono(-1, -1) : mono(1, 1);
  return swap ? mono(1, 1) : mono(-1, -1);
}

struct Site {
  std::size_t slice;
  std::size_t event;
  std::size_t in;
  Event kind;
};

}  // namespace

StateSum enumerate_states(const diagram::MorseWord& w, const StateOptions& opt) {
  const auto place = diagram::placements(w);
  std::vector<Site> classical, virtuals;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t k = 0; k < w.size(); ++k)
    for (std::size_t j = 0; j < w.slices()[k].size(); ++j) {
      Event e = w.slices()[k][j];
      if (diagram::is_classical(e)) {
        index[{k, j}] = classical.size();
        classical.push_back({k, j, place[k][j].in, e});
      } else if (e == Event::CrossVirtual) {
        virtuals.push_back({k, j, place[k][j].in, e});
      }
    }
  if (classical.size() > opt.max_classical)
    throw std::length_error("state enumeration limited to " + std::to_string(opt.max_classical) + " classical crossings");

  StateSum sum;
  const std::size_t n = classical.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Routing> routing(n);
    for (std::size_t c = 0; c < n; ++c) routing[c] = (mask >> c) & 1 ? Routing::Smooth : Routing::Through;
    auto loops = diagram::trace_loops(w, [&](std::size_t k, std::size_t j) { return routing[index.at({k, j})]; });

    std::vector<std::vector<int>> owner(w.size() + 1);
    for (std::size_t l = 0; l <= w.size(); ++l) owner[l].assign(w.level(l).size(), -1);
    for (std::size_t id = 0; id < loops.size(); ++id)
      for (const auto& node : loops[id].nodes) owner[node.level][node.pos] = static_cast<int>(id);

    // Smoothings admit one signing of their two loops; record the forced signs.
    const std::size_t nl = loops.size();
    std::vector<int> forced(nl, -1);
    bool consistent = true;
    for (std::size_t c = 0; c < n && consistent; ++c) {
      if (routing[c] != Routing::Smooth) continue;
      const Site& s = classical[c];
      int la = owner[s.slice][s.in], lb = owner[s.slice][s.in + 1];
      int want_a = s.kind == Event::CrossPos ? 0 : 1;
      for (auto [l, v] : {std::pair{la, want_a}, std::pair{lb, 1 - want_a}}) {
        if (forced[static_cast<std::size_t>(l)] >= 0 && forced[static_cast<std::size_t>(l)] != v) consistent = false;
        forced[static_cast<std::size_t>(l)] = v;
      }
    }
    if (!consistent) continue;
    std::vector<std::size_t> free_loops;
    for (std::size_t l = 0; l < nl; ++l)
      if (forced[l] < 0) free_loops.push_back(l);

    for (std::size_t sm = 0; sm < (std::size_t{1} << free_loops.size()); ++sm) {
      std::vector<int> label = forced;
      for (std::size_t f = 0; f < free_loops.size(); ++f) label[free_loops[f]] = static_cast<int>((sm >> f) & 1);
      BiLaurent weight = mono(0, 0);
      for (std::size_t c = 0; c < n && !weight.is_zero(); ++c) {
        const Site& s = classical[c];
        int a = label[static_cast<std::size_t>(owner[s.slice][s.in])];
        int b = label[static_cast<std::size_t>(owner[s.slice][s.in + 1])];
        weight *= vertex_weight(s.kind, routing[c], a, b, opt.indexing);
      }
      if (weight.is_zero()) continue;
      for (const Site& s : virtuals) {
        int a = label[static_cast<std::size_t>(owner[s.slice][s.in])];
        int b = label[static_cast<std::size_t>(owner[s.slice][s.in + 1])];
        if (a == 1 && b == 1) weight.scale(CycloCoeff(opt.virtual_plus_plus));
      }
      LoopState st;
      st.routing = routing;
      for (std::size_t l = 0; l < nl; ++l) {
        int eps = label[l] == 1 ? 1 : -1;
        int rot = loops[l].rot();
        weight.scale(CycloCoeff::i_power(eps * rot));
        st.loop_sign.push_back(eps);
        st.loop_rot.push_back(rot);
      }
      if (weight.is_zero()) continue;
      st.weight = weight;
      sum.total += weight;
      sum.states.push_back(std::move(st));
    }
  }
  return sum;
}

}  // namespace virtlink::statesum
