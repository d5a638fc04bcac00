#include "softcp/softmask.hpp"

#include <cmath>

#include "softcp/error.hpp"
#include "softcp/morphology.hpp"

namespace softcp {

void SoftMaskParams::validate() const {
  if (k_erode < 0) throw Error("k_erode must be non-negative");
  if (k_dilate < 0) throw Error("k_dilate must be non-negative");
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error("alpha must lie in the open interval (0,1)");
  if (!(binarize_threshold > 0.0)) throw Error("binarize threshold must be positive");
}

SoftMask compute_soft_mask(const BinaryMask& m, const SoftMaskParams& p) {
  p.validate();

  BinaryMask core = m;
  for (int i = 0; i < p.k_erode; ++i) core = erode(core);

  SoftMask s(m.height, m.width);
  if (core.empty()) return s;

  for (std::size_t i = 0; i < core.bits.size(); ++i)
    if (core.bits[i]) s.weights[i] = 1.0;

  BinaryMask reached = core;
  for (int j = 1; j <= p.k_dilate; ++j) {
    const BinaryMask grown = dilate(reached);
    const double w = std::pow(p.alpha, j);
    for (std::size_t i = 0; i < grown.bits.size(); ++i) {
      if (grown.bits[i] && !reached.bits[i]) s.weights[i] = w;
    }
    reached = grown;
  }
  return s;
}

}  // namespace softcp
