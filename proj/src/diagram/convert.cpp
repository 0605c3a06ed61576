#include "virtlink/diagram/convert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "virtlink/diagram/walk.hpp"

namespace virtlink::diagram {

namespace {

struct Strand {
  int arc;
  Orientation o;
};

// Incrementally emits slices over a row of labelled strands.
class Builder {
 public:
  std::vector<Slice> slices;
  std::vector<Strand> strands;

  std::size_t up_count() const {
    std::size_t n = 0;
    for (const Strand& s : strands) n += s.o == Orientation::Up ? 1 : 0;
    return n;
  }

  std::size_t find(int arc, Orientation o) const {
    for (std::size_t k = 0; k < strands.size(); ++k)
      if (strands[k].arc == arc && strands[k].o == o) return k;
    return strands.size();
  }

  bool has(int arc, Orientation o) const { return find(arc, o) < strands.size(); }

  // Slice with `local` placed at position pos consuming `consumed` strands.
  void emit(std::size_t pos, std::vector<Event> local, std::size_t consumed) {
    Slice s(pos, Event::Identity);
    s.insert(s.end(), local.begin(), local.end());
    s.insert(s.end(), strands.size() - pos - consumed, Event::Identity);
    slices.push_back(std::move(s));
  }

  void cup_cw(std::size_t pos, int arc) {
    emit(pos, {Event::CupCW}, 0);
    strands.insert(strands.begin() + static_cast<std::ptrdiff_t>(pos), {{arc, Orientation::Up}, {arc, Orientation::Down}});
  }

  void cap_cw(std::size_t pos) {
    emit(pos, {Event::CapCW}, 2);
    strands.erase(strands.begin() + static_cast<std::ptrdiff_t>(pos),
                  strands.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
  }

  void virtual_swap(std::size_t pos) {
    emit(pos, {Event::CrossVirtual}, 2);
    std::swap(strands[pos], strands[pos + 1]);
  }

  // [Up b, Down a] at (pos, pos+1) becomes [Down a, Up b] via a ccw cup, a
  // virtual crossing and a cw cap.
  void slide_up_past_down(std::size_t pos) {
    int a = strands[pos + 1].arc;
    emit(pos, {Event::CupCCW}, 0);
    strands.insert(strands.begin() + static_cast<std::ptrdiff_t>(pos), {{a, Orientation::Down}, {a, Orientation::Up}});
    virtual_swap(pos + 1);
    cap_cw(pos + 2);
  }

  void move_up_strand(std::size_t from, std::size_t to) {
    while (from > to) {
      virtual_swap(from - 1);
      --from;
    }
    while (from < to) {
      virtual_swap(from);
      ++from;
    }
  }
};

struct CrossingInfo {
  Sign sign = Sign::Pos;
  int over = -1;   // global passage index
  int under = -1;
};

}  // namespace

MorseWord gauss_to_morse(const GaussCode& g) {
  validate(g);
  // Global passage index; arc k leaves passage k.
  std::vector<int> in_arc;
  std::vector<int> crossing_order;
  std::map<int, CrossingInfo> info;
  int unknots = 0;
  for (const auto& comp : g.components) {
    if (comp.empty()) {
      ++unknots;
      continue;
    }
    int base = static_cast<int>(in_arc.size());
    int len = static_cast<int>(comp.size());
    for (int k = 0; k < len; ++k) {
      const Passage& p = comp[static_cast<std::size_t>(k)];
      int gidx = base + k;
      in_arc.push_back(base + (k + len - 1) % len);
      auto [it, fresh] = info.try_emplace(p.crossing);
      if (fresh) crossing_order.push_back(p.crossing);
      it->second.sign = p.sign;
      (p.kind == PassageKind::Over ? it->second.over : it->second.under) = gidx;
    }
  }

  Builder b;
  for (int c : crossing_order) {
    const CrossingInfo& ci = info[c];
    // x+ has the over strand entering bottom-right, x- bottom-left.
    bool over_right = ci.sign == Sign::Pos;
    int left_pass = over_right ? ci.under : ci.over;
    int right_pass = over_right ? ci.over : ci.under;
    int left_in = in_arc[static_cast<std::size_t>(left_pass)];
    int right_in = in_arc[static_cast<std::size_t>(right_pass)];
    for (int a : {left_in, right_in}) {
      if (!b.has(a, Orientation::Up)) b.cup_cw(b.up_count(), a);
    }
    std::size_t i = b.find(left_in, Orientation::Up);
    std::size_t j = b.find(right_in, Orientation::Up);
    if (j > i) {
      b.move_up_strand(j, i + 1);
    } else {
      b.move_up_strand(i, j);
    }
    std::size_t p = b.find(left_in, Orientation::Up);
    b.emit(p, {ci.sign == Sign::Pos ? Event::CrossPos : Event::CrossNeg}, 2);
    b.strands[p] = {right_pass, Orientation::Up};
    b.strands[p + 1] = {left_pass, Orientation::Up};
    for (int out : {right_pass, left_pass}) {
      if (!b.has(out, Orientation::Down)) continue;
      std::size_t u = b.find(out, Orientation::Up);
      b.move_up_strand(u, b.up_count() - 1);
      u = b.up_count() - 1;
      while (b.strands[u + 1].arc != out || b.strands[u + 1].o != Orientation::Down) {
        b.slide_up_past_down(u);
        ++u;
      }
      b.cap_cw(u);
    }
  }
  if (!b.strands.empty()) throw std::logic_error("gauss_to_morse left open strands");
  for (int k = 0; k < unknots; ++k) {
    b.cup_cw(0, -1);
    b.cap_cw(0);
  }
  return MorseWord::from_slices(std::move(b.slices));
}

GaussCode morse_to_gauss(const MorseWord& w) {
  GaussCode g;
  std::map<std::pair<std::size_t, std::size_t>, int> ids;
  for (const Loop& loop : trace_components(w)) {
    std::vector<Passage> comp;
    for (const CrossingVisit& v : loop.visits) {
      Event e = w.slices()[v.slice][v.event];
      if (!is_classical(e)) continue;
      auto [it, fresh] = ids.try_emplace({v.slice, v.event}, static_cast<int>(ids.size()) + 1);
      bool over = e == Event::CrossPos ? v.entry == 1 : v.entry == 0;
      comp.push_back({over ? PassageKind::Over : PassageKind::Under, it->second,
                      e == Event::CrossPos ? Sign::Pos : Sign::Neg});
    }
    g.components.push_back(std::move(comp));
  }
  return g;
}

}  // namespace virtlink::diagram
