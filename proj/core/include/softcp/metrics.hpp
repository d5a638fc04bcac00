#pragma once

#include <cstdint>

#include "softcp/raster.hpp"

namespace softcp {

struct ConfusionCounts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;
  std::uint64_t fn = 0;

  std::uint64_t total() const { return tp + fp + tn + fn; }
  ConfusionCounts& operator+=(const ConfusionCounts& o);
};

/// Per-pixel counts of pred against truth, positive class = 1.
ConfusionCounts confusion(const BinaryMask& pred, const BinaryMask& truth);

struct SegScores {
  double dsc = 0.0;
  double accuracy = 0.0;
  double iou = 0.0;
};

/// dsc = 2tp / (2tp + fp + fn), iou = tp / (tp + fp + fn),
/// accuracy = (tp + tn) / total. Perfect agreement on emptiness
/// (tp = fp = fn = 0) scores dsc = iou = 1 so lesion-free grids stay
/// usable.
SegScores scores(const ConfusionCounts& c);

}  // namespace softcp
