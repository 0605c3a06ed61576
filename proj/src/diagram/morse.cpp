#include "virtlink/diagram/morse.hpp"

#include <sstream>
#include <string>

#include "virtlink/diagram/walk.hpp"
#include "virtlink/error.hpp"

namespace virtlink::diagram {

int strands_in(Event e) {
  switch (e) {
    case Event::Identity:
      return 1;
    case Event::CupCW:
    case Event::CupCCW:
      return 0;
    default:
      return 2;
  }
}

int strands_out(Event e) {
  switch (e) {
    case Event::Identity:
      return 1;
    case Event::CapCW:
    case Event::CapCCW:
      return 0;
    default:
      return 2;
  }
}

bool is_classical(Event e) {
  return e == Event::CrossPos || e == Event::CrossNeg;
}

const char* token(Event e) {
  switch (e) {
    case Event::Identity:
      return "|";
    case Event::CupCW:
      return "(>";
    case Event::CupCCW:
      return "(<";
    case Event::CapCW:
      return ")>";
    case Event::CapCCW:
      return ")<";
    case Event::CrossPos:
      return "x+";
    case Event::CrossNeg:
      return "x-";
    case Event::CrossVirtual:
      return "v";
  }
  return "?";
}

namespace {

// Propagates orientations through one slice; returns an error message or "".
std::string apply_slice(const Slice& slice, const std::vector<Orientation>& below, std::vector<Orientation>& above) {
  above.clear();
  std::size_t p = 0;
  for (Event e : slice) {
    std::size_t need = static_cast<std::size_t>(strands_in(e));
    if (p + need > below.size()) return "slice consumes more strands than present";
    switch (e) {
      case Event::Identity:
        above.push_back(below[p]);
        break;
      case Event::CupCW:
        above.push_back(Orientation::Up);
        above.push_back(Orientation::Down);
        break;
      case Event::CupCCW:
        above.push_back(Orientation::Down);
        above.push_back(Orientation::Up);
        break;
      case Event::CapCW:
        if (below[p] != Orientation::Up || below[p + 1] != Orientation::Down)
          return std::string("orientation violation at ") + token(e);
        break;
      case Event::CapCCW:
        if (below[p] != Orientation::Down || below[p + 1] != Orientation::Up)
          return std::string("orientation violation at ") + token(e);
        break;
      case Event::CrossPos:
      case Event::CrossNeg:
      case Event::CrossVirtual:
        if (below[p] != Orientation::Up || below[p + 1] != Orientation::Up)
          return std::string("crossing on strands not both Up at ") + token(e);
        above.push_back(Orientation::Up);
        above.push_back(Orientation::Up);
        break;
    }
    p += need;
  }
  if (p != below.size()) return "slice consumes fewer strands than present";
  return {};
}

}  // namespace

MorseWord MorseWord::from_slices(std::vector<Slice> slices) {
  MorseWord w;
  w.levels_.emplace_back();
  for (std::size_t k = 0; k < slices.size(); ++k) {
    std::vector<Orientation> above;
    std::string err = apply_slice(slices[k], w.levels_.back(), above);
    if (!err.empty()) throw InvalidDiagram("slice " + std::to_string(k) + ": " + err);
    w.levels_.push_back(std::move(above));
  }
  if (!w.levels_.back().empty()) throw InvalidDiagram("nonzero strand count at the top boundary");
  w.slices_ = std::move(slices);
  return w;
}

std::string render(const MorseWord& w) {
  std::ostringstream os;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) os << '\n';
    const Slice& s = w.slices()[k];
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j) os << ' ';
      os << token(s[j]);
    }
  }
  return os.str();
}

MorseWord parse_morse(std::string_view text) {
  std::vector<Slice> slices;
  std::vector<Orientation> below;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    std::istringstream is{std::string(line)};
    std::string tok;
    Slice slice;
    std::vector<std::string> toks;
    while (is >> tok) {
      Event e;
      if (tok == "|") {
        e = Event::Identity;
      } else if (tok == "(>") {
        e = Event::CupCW;
      } else if (tok == "(<") {
        e = Event::CupCCW;
      } else if (tok == ")>") {
        e = Event::CapCW;
      } else if (tok == ")<") {
        e = Event::CapCCW;
      } else if (tok == "x+") {
        e = Event::CrossPos;
      } else if (tok == "x-") {
        e = Event::CrossNeg;
      } else if (tok == "v") {
        e = Event::CrossVirtual;
      } else {
        throw ParseError("unknown Morse token", line_no, tok);
      }
      slice.push_back(e);
      toks.push_back(tok);
    }
    if (slice.empty()) continue;
    std::vector<Orientation> above;
    std::string err = apply_slice(slice, below, above);
    if (!err.empty()) {
      // Name the first token whose inputs are inconsistent.
      std::size_t p = 0;
      std::string bad = toks.front();
      for (std::size_t j = 0; j < slice.size(); ++j) {
        std::size_t need = static_cast<std::size_t>(strands_in(slice[j]));
        bool ok = p + need <= below.size();
        if (ok && (slice[j] == Event::CapCW || slice[j] == Event::CapCCW || is_classical(slice[j]) ||
                   slice[j] == Event::CrossVirtual)) {
          Orientation l = below[p], r = below[p + 1];
          if (slice[j] == Event::CapCW) ok = l == Orientation::Up && r == Orientation::Down;
          if (slice[j] == Event::CapCCW) ok = l == Orientation::Down && r == Orientation::Up;
          if (is_classical(slice[j]) || slice[j] == Event::CrossVirtual)
            ok = l == Orientation::Up && r == Orientation::Up;
        }
        bad = toks[j];
        if (!ok) break;
        p += need;
      }
      throw ParseError(err, line_no, bad);
    }
    slices.push_back(std::move(slice));
    below = std::move(above);
  }
  if (!below.empty()) throw ParseError("nonzero strand count at the top boundary", line_no, "");
  return MorseWord::from_slices(std::move(slices));
}

DiagramStats stats(const MorseWord& w) {
  DiagramStats st;
  int twice_rot = 0;
  for (const Slice& s : w.slices())
    for (Event e : s) {
      if (e == Event::CupCW || e == Event::CapCW) ++twice_rot;
      if (e == Event::CupCCW || e == Event::CapCCW) --twice_rot;
      if (e == Event::CrossVirtual) ++st.v;
    }
  st.rot = twice_rot / 2;
  st.components = static_cast<int>(trace_components(w).size());
  return st;
}

MorseWord stacked(const MorseWord& lower, const MorseWord& upper) {
  std::vector<Slice> slices = lower.slices();
  slices.insert(slices.end(), upper.slices().begin(), upper.slices().end());
  return MorseWord::from_slices(std::move(slices));
}

MorseWord braid_closure(int strands, const std::vector<BraidLetter>& letters) {
  const std::size_t n = static_cast<std::size_t>(strands);
  std::vector<Slice> slices;
  for (std::size_t k = 0; k < n; ++k) {
    Slice s(2 * k + 1, Event::Identity);
    s[k] = Event::CupCW;
    slices.push_back(std::move(s));
  }
  for (const BraidLetter& b : letters) {
    if (b.position < 0 || static_cast<std::size_t>(b.position) + 1 >= n)
      throw InvalidDiagram("braid letter outside the strand range");
    if (!is_classical(b.event) && b.event != Event::CrossVirtual)
      throw InvalidDiagram("braid letter must be a crossing event");
    Slice s(2 * n - 1, Event::Identity);
    s[static_cast<std::size_t>(b.position)] = b.event;
    slices.push_back(std::move(s));
  }
  for (std::size_t k = n; k-- > 0;) {
    Slice s(2 * k + 1, Event::Identity);
    s[k] = Event::CapCW;
    slices.push_back(std::move(s));
  }
  return MorseWord::from_slices(std::move(slices));
}

std::vector<std::vector<Placement>> placements(const MorseWord& w) {
  std::vector<std::vector<Placement>> out;
  out.reserve(w.size());
  for (const Slice& s : w.slices()) {
    std::vector<Placement> row;
    row.reserve(s.size());
    std::size_t in = 0, o = 0;
    for (Event e : s) {
      row.push_back({in, o});
      in += static_cast<std::size_t>(strands_in(e));
      o += static_cast<std::size_t>(strands_out(e));
    }
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

// Index of the event in `place` whose input (below=true) or output range covers p.
std::size_t event_at(const Slice& s, const std::vector<Placement>& place, std::size_t p, bool input) {
  for (std::size_t j = 0; j < s.size(); ++j) {
    std::size_t lo = input ? place[j].in : place[j].out;
    std::size_t width = static_cast<std::size_t>(input ? strands_in(s[j]) : strands_out(s[j]));
    if (p >= lo && p < lo + width) return j;
  }
  throw InvalidDiagram("strand position not covered by any event");
}

}  // namespace

std::vector<Loop> trace_loops(const MorseWord& w, const RoutingChoice& choice) {
  const auto place = placements(w);
  std::vector<std::vector<char>> seen(w.size() + 1);
  for (std::size_t l = 0; l <= w.size(); ++l) seen[l].assign(w.level(l).size(), 0);
  std::vector<Loop> loops;
  for (std::size_t l = 0; l <= w.size(); ++l) {
    for (std::size_t p = 0; p < w.level(l).size(); ++p) {
      if (seen[l][p]) continue;
      Loop loop;
      StrandNode cur{l, p};
      while (!seen[cur.level][cur.pos]) {
        seen[cur.level][cur.pos] = 1;
        loop.nodes.push_back(cur);
        if (w.level(cur.level)[cur.pos] == Orientation::Up) {
          // Move up through slice cur.level.
          const Slice& s = w.slices()[cur.level];
          std::size_t j = event_at(s, place[cur.level], cur.pos, true);
          const Placement& pl = place[cur.level][j];
          Event e = s[j];
          int entry = static_cast<int>(cur.pos - pl.in);
          switch (e) {
            case Event::Identity:
              cur = {cur.level + 1, pl.out};
              break;
            case Event::CapCW:
              ++loop.cw_extrema;
              cur = {cur.level, pl.in + 1};
              break;
            case Event::CapCCW:
              ++loop.ccw_extrema;
              cur = {cur.level, pl.in};
              break;
            default: {
              loop.visits.push_back({cur.level, j, entry});
              Routing r = e == Event::CrossVirtual ? Routing::Through : choice(cur.level, j);
              int exit = r == Routing::Through ? 1 - entry : entry;
              cur = {cur.level + 1, pl.out + static_cast<std::size_t>(exit)};
              break;
            }
          }
        } else {
          // Move down through slice cur.level - 1.
          std::size_t k = cur.level - 1;
          const Slice& s = w.slices()[k];
          std::size_t j = event_at(s, place[k], cur.pos, false);
          const Placement& pl = place[k][j];
          switch (s[j]) {
            case Event::Identity:
              cur = {k, pl.in};
              break;
            case Event::CupCW:
              ++loop.cw_extrema;
              cur = {cur.level, pl.out};
              break;
            case Event::CupCCW:
              ++loop.ccw_extrema;
              cur = {cur.level, pl.out + 1};
              break;
            default:
              throw InvalidDiagram("downward strand entering a crossing");
          }
        }
      }
      loops.push_back(std::move(loop));
    }
  }
  return loops;
}

std::vector<Loop> trace_components(const MorseWord& w) {
  return trace_loops(w, [](std::size_t, std::size_t) { return Routing::Through; });
}

}  // namespace virtlink::diagram
