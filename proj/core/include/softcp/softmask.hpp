#pragma once

#include "softcp/raster.hpp"

namespace softcp {

/// Controls the soft-mask construction: how far the lesion core is
/// eroded, how many context rings are grown around it, and how fast the
/// ring weights decay.
struct SoftMaskParams {
  int k_erode = 1;
  int k_dilate = 5;
  double alpha = 0.5;  // per-ring decay factor, open interval (0,1)
  double binarize_threshold = 1e-5;

  void validate() const;

  friend bool operator==(const SoftMaskParams&, const SoftMaskParams&) = default;
};

/// Builds the soft weight map for a lesion mask.
///
/// The core is the mask eroded k_erode times; it keeps weight 1. Each of
/// the k_dilate dilation steps grows one ring outward (the pixels at
/// Chebyshev distance j from the core, given the 3x3 element) and the
/// ring reached at step j receives weight alpha^j. Already assigned
/// pixels are never overwritten; everything beyond the last ring stays 0.
/// Weights come from direct exponentiation, not iterated multiplication,
/// so they match the closed form alpha^distance exactly.
///
/// An empty core (a mask annihilated by erosion) yields an all-zero map:
/// dilation cannot resurrect anything.
SoftMask compute_soft_mask(const BinaryMask& m, const SoftMaskParams& p);

}  // namespace softcp
