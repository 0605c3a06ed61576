#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace virtlink::diagram {

enum class PassageKind { Over, Under };
enum class Sign { Pos, Neg };

struct Passage {
  PassageKind kind;
  int crossing;
  Sign sign;
  bool operator==(const Passage&) const = default;
};

/// Signed Gauss code. Virtual crossings are not recorded. An empty component
/// is a crossingless circle.
struct GaussCode {
  std::vector<std::vector<Passage>> components;

  bool operator==(const GaussCode&) const = default;

  int crossing_count() const;
  /// Sorted distinct crossing ids.
  std::vector<int> crossing_ids() const;
};

/// Throws ParseError on malformed tokens and InvalidDiagram-style failures
/// (id count, sign mismatch) as ParseError naming the offending token.
GaussCode parse_gauss(std::string_view text);

/// Checks the invariants; throws std::invalid_argument with a reason.
void validate(const GaussCode& g);

std::string render(const GaussCode& g);

/// Same link presentation up to crossing relabeling, cyclic rotation of each
/// component and reordering of components.
bool equivalent_codes(const GaussCode& a, const GaussCode& b);

}  // namespace virtlink::diagram
