#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace virtlink::alexander {

/// Biquandle on Z_p given by its four operation tables. In the Alexander
/// case, for a positive crossing with under-input a and over-input b:
///   up(a, b)   = t a + (1 - st) b   (under output)
///   down(b, a) = s b                (over output)
/// and the barred operations are the negative-crossing versions.
class FiniteBiquandle {
 public:
  using Op = std::function<long long(long long, long long)>;

  FiniteBiquandle(int p, const Op& up, const Op& down, const Op& up_bar, const Op& down_bar);

  int order() const { return p_; }
  int up(int a, int b) const { return up_[idx(a, b)]; }
  int down(int a, int b) const { return down_[idx(a, b)]; }
  int up_bar(int a, int b) const { return up_bar_[idx(a, b)]; }
  int down_bar(int a, int b) const { return down_bar_[idx(a, b)]; }

 private:
  std::size_t idx(int a, int b) const { return static_cast<std::size_t>(a) * static_cast<std::size_t>(p_) + static_cast<std::size_t>(b); }

  int p_;
  std::vector<int> up_, down_, up_bar_, down_bar_;
};

/// Alexander biquandle on Z_p; throws std::invalid_argument unless p is prime
/// and s, t are units mod p.
FiniteBiquandle alexander_biquandle(int p, long long s, long long t);

struct AxiomResult {
  bool pass = true;
  std::optional<std::string> counterexample;
};

struct AxiomReport {
  std::array<AxiomResult, 4> axioms;
  bool all_pass() const;
};

AxiomReport verify_biquandle_axioms(const FiniteBiquandle& b);

}  // namespace virtlink::alexander
