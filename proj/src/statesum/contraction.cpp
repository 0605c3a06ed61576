#include "virtlink/statesum/contraction.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "virtlink/alexander/relations.hpp"

namespace virtlink::statesum {

using diagram::Event;
using ring::VarPair;

namespace {

// A labeling of the strands of one level, one byte (0 or 1) per strand.
using Labels = std::string;

struct Branch {
  Labels out;
  BiLaurent weight;
};

}  // namespace

BiLaurent evaluate_W(const diagram::MorseWord& w, const ModelTensors& model) {
  const BiLaurent one(VarPair::SigmaTau, CycloCoeff(1));
  std::map<Labels, BiLaurent> states;
  states.emplace(Labels(), one);
  std::vector<Branch> branches, next;
  for (const diagram::Slice& slice : w.slices()) {
    std::map<Labels, BiLaurent> fresh;
    for (const auto& [key, value] : states) {
      branches.assign(1, Branch{Labels(), one});
      std::size_t p = 0;
      for (Event e : slice) {
        next.clear();
        for (const Branch& b : branches) {
          switch (e) {
            case Event::Identity:
              next.push_back({b.out + key[p], b.weight});
              break;
            case Event::CupCW:
            case Event::CupCCW:
              for (char a = 0; a < 2; ++a) {
                BiLaurent wt = b.weight;
                wt.scale(e == Event::CupCW ? model.cw[static_cast<std::size_t>(a)] : model.ccw[static_cast<std::size_t>(a)]);
                next.push_back({b.out + a + a, std::move(wt)});
              }
              break;
            case Event::CapCW:
            case Event::CapCCW:
              if (key[p] == key[p + 1]) {
                BiLaurent wt = b.weight;
                const std::size_t a = static_cast<std::size_t>(key[p]);
                wt.scale(e == Event::CapCW ? model.cw[a] : model.ccw[a]);
                next.push_back({b.out, std::move(wt)});
              }
              break;
            case Event::CrossPos:
            case Event::CrossNeg:
            case Event::CrossVirtual: {
              const PolyMatrix& m = e == Event::CrossPos ? model.r : e == Event::CrossNeg ? model.r_bar : model.virt;
              const int x = 2 * key[p] + key[p + 1];
              for (int y = 0; y < 4; ++y) {
                const BiLaurent& c = model.weight(m, x, y);
                if (c.is_zero()) continue;
                Labels out = b.out;
                out += static_cast<char>(y >> 1);
                out += static_cast<char>(y & 1);
                next.push_back({std::move(out), b.weight * c});
              }
              break;
            }
          }
        }
        std::swap(branches, next);
        p += static_cast<std::size_t>(diagram::strands_in(e));
      }
      for (Branch& b : branches) {
        auto it = fresh.try_emplace(std::move(b.out), VarPair::SigmaTau).first;
        it->second += value * b.weight;
      }
    }
    states.clear();
    for (auto& [k, v] : fresh)
      if (!v.is_zero()) states.emplace(k, std::move(v));
  }
  auto it = states.find(Labels());
  return it == states.end() ? BiLaurent(VarPair::SigmaTau) : it->second;
}

BiLaurent normalize_Z(const BiLaurent& w_value, const diagram::DiagramStats& stats) {
  // (sigma^-1 tau i)^k i^v = sigma^-k tau^k i^(k+v), k = rot - v.
  const int k = stats.rot - stats.v;
  BiLaurent out = w_value;
  out.scale(CycloCoeff::i_power(k + stats.v), -k, k);
  return out;
}

BiLaurent zpoly(const diagram::MorseWord& w, const ModelTensors& model) {
  BiLaurent z = normalize_Z(evaluate_W(w, model), diagram::stats(w));
  return ring::normalize_units(ring::subst_st(ring::normalize_units(z)));
}

ZGComparison compare_zg_detail(const diagram::GaussCode& g, const ModelTensors& model) {
  ZGComparison c;
  c.z = ring::normalize_units(zpoly(diagram::gauss_to_morse(g), model));
  c.g = ring::normalize_units(alexander::gpoly(g));
  c.equal = c.z == c.g;
  return c;
}

bool compare_zg(const diagram::GaussCode& g) {
  return compare_zg_detail(g).equal;
}

}  // namespace virtlink::statesum
