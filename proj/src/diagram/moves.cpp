#include "virtlink/diagram/moves.hpp"

#include <sstream>
#include <stdexcept>

#include "virtlink/diagram/walk.hpp"

namespace virtlink::diagram {

const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::R1KinkAdd:
      return "R1-kink-add";
    case MoveKind::R2Add:
      return "R2-add";
    case MoveKind::R3Slide:
      return "R3-slide";
    case MoveKind::V2Add:
      return "V2-add";
    case MoveKind::VDetour:
      return "V-detour";
    case MoveKind::MixedC:
      return "mixed-C";
  }
  return "?";
}

std::string describe(const MoveSpec& m) {
  std::ostringstream os;
  os << move_name(m.kind) << "@slice=" << m.slice << ",pos=" << m.pos;
  if (m.kind == MoveKind::R1KinkAdd || m.kind == MoveKind::R2Add) os << "," << token(m.crossing);
  if (m.kind == MoveKind::R1KinkAdd) os << (m.clockwise ? ",cw" : ",ccw");
  return os.str();
}

namespace {

Event opposite(Event e) {
  return e == Event::CrossPos ? Event::CrossNeg : Event::CrossPos;
}

// Slices of a local gadget written against a changing strand count.
class Gadget {
 public:
  Gadget(std::size_t width, std::size_t pos) : width_(width), pos_(pos) {}

  // Events placed at offset `at` from the anchor, consuming `consumed` strands.
  void add(std::size_t at, std::vector<Event> local, std::size_t consumed, int delta) {
    Slice s(pos_ + at, Event::Identity);
    s.insert(s.end(), local.begin(), local.end());
    s.insert(s.end(), width_ - pos_ - at - consumed, Event::Identity);
    slices_.push_back(std::move(s));
    width_ = static_cast<std::size_t>(static_cast<long>(width_) + delta);
  }

  std::vector<Slice> take() { return std::move(slices_); }

 private:
  std::size_t width_;
  std::size_t pos_;
  std::vector<Slice> slices_;
};

std::vector<Slice> insertion(const MorseWord& w, const MoveSpec& m) {
  if (m.slice > w.size()) throw std::invalid_argument("move anchor beyond the last level");
  const auto& lvl = w.level(m.slice);
  const std::size_t width = lvl.size();
  const std::size_t p = m.pos;
  auto up = [&](std::size_t k) { return k < width && lvl[k] == Orientation::Up; };
  auto down = [&](std::size_t k) { return k < width && lvl[k] == Orientation::Down; };
  if (!is_classical(m.crossing) && m.kind != MoveKind::V2Add)
    throw std::invalid_argument("move needs a classical crossing type");
  Gadget g(width, p);
  switch (m.kind) {
    case MoveKind::V2Add:
      if (!up(p) || !up(p + 1)) throw std::invalid_argument("V2-add needs two upward strands");
      g.add(0, {Event::CrossVirtual}, 2, 0);
      g.add(0, {Event::CrossVirtual}, 2, 0);
      break;
    case MoveKind::R1KinkAdd:
      if (!up(p)) throw std::invalid_argument("R1-kink-add needs an upward strand");
      if (m.clockwise) {
        g.add(1, {Event::CupCW}, 0, 2);
        g.add(0, {m.crossing}, 2, 0);
        g.add(1, {Event::CapCW}, 2, -2);
      } else {
        g.add(0, {Event::CupCCW}, 0, 2);
        g.add(1, {m.crossing}, 2, 0);
        g.add(0, {Event::CapCCW}, 2, -2);
      }
      break;
    case MoveKind::R2Add:
      if (up(p) && up(p + 1)) {
        g.add(0, {m.crossing}, 2, 0);
        g.add(0, {opposite(m.crossing)}, 2, 0);
      } else if (up(p) && down(p + 1)) {
        // The downward strand is turned up, crosses, turns back, and returns.
        g.add(0, {Event::CupCCW}, 0, 2);
        g.add(1, {m.crossing}, 2, 0);
        g.add(2, {Event::CapCW}, 2, -2);
        g.add(2, {Event::CupCW}, 0, 2);
        g.add(1, {opposite(m.crossing)}, 2, 0);
        g.add(0, {Event::CapCCW}, 2, -2);
      } else if (down(p) && up(p + 1)) {
        g.add(2, {Event::CupCW}, 0, 2);
        g.add(1, {m.crossing}, 2, 0);
        g.add(0, {Event::CapCCW}, 2, -2);
        g.add(0, {Event::CupCCW}, 0, 2);
        g.add(1, {opposite(m.crossing)}, 2, 0);
        g.add(2, {Event::CapCW}, 2, -2);
      } else {
        throw std::invalid_argument("R2-add needs a strand pair that is not both downward");
      }
      break;
    default:
      throw std::logic_error("not an insertion move");
  }
  return g.take();
}

// The single non-identity event of a slice and its input offset, if any.
bool lone_crossing(const Slice& s, std::size_t& at, Event& e) {
  std::size_t p = 0;
  bool found = false;
  for (Event x : s) {
    if (x != Event::Identity) {
      if (found || (!is_classical(x) && x != Event::CrossVirtual)) return false;
      found = true;
      at = p;
      e = x;
    }
    p += static_cast<std::size_t>(strands_in(x));
  }
  return found;
}

// Checks a three-slice triangle at (slice, pos); fills the rewritten slices.
std::string triangle(const MorseWord& w, std::size_t k, std::size_t p, MoveKind kind, std::vector<Slice>* out) {
  if (k + 3 > w.size()) return "triangle needs three slices";
  std::size_t at[3];
  Event e[3];
  for (int j = 0; j < 3; ++j)
    if (!lone_crossing(w.slices()[k + static_cast<std::size_t>(j)], at[j], e[j]))
      return "slice is not a single crossing band";
  bool lower_first = at[0] == p && at[1] == p + 1 && at[2] == p;
  bool upper_first = at[0] == p + 1 && at[1] == p && at[2] == p + 1;
  if (!lower_first && !upper_first) return "crossings do not form a triangle at the anchor";
  int classical = 0;
  for (Event x : e) classical += is_classical(x) ? 1 : 0;
  switch (kind) {
    case MoveKind::R3Slide:
      if (classical != 3) return "R3-slide needs three classical crossings";
      if (e[0] == e[2] && e[1] != e[0]) return "cyclic over/under pattern";
      break;
    case MoveKind::VDetour:
      if (classical != 0) return "V-detour needs three virtual crossings";
      break;
    case MoveKind::MixedC:
      if (classical != 1) return "mixed-C needs exactly one classical crossing";
      break;
    default:
      return "not a triangle move";
  }
  if (out) {
    const std::size_t width = w.level(k).size();
    std::size_t q1 = at[1], q2 = at[0];
    for (auto [q, ev] : {std::pair{q1, e[2]}, std::pair{q2, e[1]}, std::pair{q1, e[0]}}) {
      Slice s(width - 1, Event::Identity);
      s[q] = ev;
      out->push_back(std::move(s));
    }
  }
  return {};
}

}  // namespace

MorseWord apply_move(const MorseWord& w, const MoveSpec& m) {
  std::vector<Slice> slices = w.slices();
  switch (m.kind) {
    case MoveKind::R1KinkAdd:
    case MoveKind::R2Add:
    case MoveKind::V2Add: {
      std::vector<Slice> local = insertion(w, m);
      slices.insert(slices.begin() + static_cast<std::ptrdiff_t>(m.slice), local.begin(), local.end());
      break;
    }
    default: {
      std::vector<Slice> local;
      std::string err = triangle(w, m.slice, m.pos, m.kind, &local);
      if (!err.empty()) throw std::invalid_argument(std::string(move_name(m.kind)) + ": " + err);
      for (std::size_t j = 0; j < 3; ++j) slices[m.slice + j] = std::move(local[j]);
      break;
    }
  }
  return MorseWord::from_slices(std::move(slices));
}

std::vector<MoveSpec> applicable_moves(const MorseWord& w, MoveKind k) {
  std::vector<MoveSpec> out;
  const Event signs[2] = {Event::CrossPos, Event::CrossNeg};
  for (std::size_t l = 0; l <= w.size(); ++l) {
    const auto& lvl = w.level(l);
    for (std::size_t p = 0; p < lvl.size(); ++p) {
      bool u0 = lvl[p] == Orientation::Up;
      bool u1 = p + 1 < lvl.size() && lvl[p + 1] == Orientation::Up;
      bool pair = p + 1 < lvl.size() && (u0 || u1);
      switch (k) {
        case MoveKind::V2Add:
          if (u0 && u1) out.push_back({k, l, p, Event::CrossVirtual, true});
          break;
        case MoveKind::R1KinkAdd:
          if (u0)
            for (Event e : signs)
              for (bool cw : {true, false}) out.push_back({k, l, p, e, cw});
          break;
        case MoveKind::R2Add:
          if (pair)
            for (Event e : signs) out.push_back({k, l, p, e, true});
          break;
        default:
          if (l < w.size() && triangle(w, l, p, k, nullptr).empty()) out.push_back({k, l, p, Event::CrossPos, true});
          break;
      }
    }
  }
  return out;
}

}  // namespace virtlink::diagram
