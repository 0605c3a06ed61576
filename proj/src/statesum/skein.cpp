#include "virtlink/statesum/skein.hpp"

#include <stdexcept>

#include "virtlink/statesum/contraction.hpp"

namespace virtlink::statesum {

using diagram::Event;
using diagram::Slice;

namespace {

bool smoothing_of(const Slice& crossing, const Slice& smooth, Event want) {
  std::size_t site = crossing.size();
  for (std::size_t j = 0; j < crossing.size(); ++j)
    if (crossing[j] == want) {
      if (site != crossing.size()) return false;
      site = j;
    }
  if (site == crossing.size() || smooth.size() != crossing.size() + 1) return false;
  for (std::size_t j = 0; j < site; ++j)
    if (smooth[j] != crossing[j]) return false;
  if (smooth[site] != Event::Identity || smooth[site + 1] != Event::Identity) return false;
  for (std::size_t j = site + 1; j < crossing.size(); ++j)
    if (smooth[j + 1] != crossing[j]) return false;
  return true;
}

void check_site(const diagram::MorseWord& kp, const diagram::MorseWord& km, const diagram::MorseWord& k0) {
  if (kp.size() != km.size() || kp.size() != k0.size()) throw std::invalid_argument("skein words differ in length");
  std::size_t sites = 0;
  for (std::size_t k = 0; k < kp.size(); ++k) {
    const Slice& a = kp.slices()[k];
    const Slice& b = km.slices()[k];
    const Slice& c = k0.slices()[k];
    if (a == b && a == c) continue;
    if (a.size() != b.size()) throw std::invalid_argument("skein words differ outside the site");
    for (std::size_t j = 0; j < a.size(); ++j) {
      bool here = a[j] == Event::CrossPos && b[j] == Event::CrossNeg;
      if (a[j] != b[j] && !here) throw std::invalid_argument("skein words differ outside the site");
    }
    if (!smoothing_of(a, c, Event::CrossPos) || !smoothing_of(b, c, Event::CrossNeg))
      throw std::invalid_argument("slice " + std::to_string(k) + " is not a skein site");
    ++sites;
  }
  if (sites != 1) throw std::invalid_argument("skein triple needs exactly one differing slice");
}

}  // namespace

SkeinTriple skein_triple(const diagram::MorseWord& w, std::size_t slice, std::size_t event) {
  if (slice >= w.size() || event >= w.slices()[slice].size() || !diagram::is_classical(w.slices()[slice][event]))
    throw std::invalid_argument("skein site is not a classical crossing");
  std::vector<Slice> plus = w.slices(), minus = w.slices(), zero = w.slices();
  plus[slice][event] = Event::CrossPos;
  minus[slice][event] = Event::CrossNeg;
  zero[slice][event] = Event::Identity;
  zero[slice].insert(zero[slice].begin() + static_cast<std::ptrdiff_t>(event), Event::Identity);
  return {diagram::MorseWord::from_slices(std::move(plus)), diagram::MorseWord::from_slices(std::move(minus)),
          diagram::MorseWord::from_slices(std::move(zero))};
}

SkeinResult skein_check(const diagram::MorseWord& kplus, const diagram::MorseWord& kminus,
                        const diagram::MorseWord& kzero, const ModelTensors& model) {
  check_site(kplus, kminus, kzero);
  SkeinResult r;
  const BiLaurent z = z_sigma_tau();
  r.w_plus = evaluate_W(kplus, model);
  r.w_minus = evaluate_W(kminus, model);
  r.w_zero = evaluate_W(kzero, model);
  r.w_identity = r.w_plus - r.w_minus == z * r.w_zero;
  BiLaurent zp = normalize_Z(r.w_plus, diagram::stats(kplus));
  BiLaurent zm = normalize_Z(r.w_minus, diagram::stats(kminus));
  BiLaurent z0 = normalize_Z(r.w_zero, diagram::stats(kzero));
  r.z_identity = zp - zm == z * z0;
  return r;
}

}  // namespace virtlink::statesum
