#include "softcp/metrics.hpp"

#include "softcp/error.hpp"

namespace softcp {

ConfusionCounts& ConfusionCounts::operator+=(const ConfusionCounts& o) {
  tp += o.tp;
  fp += o.fp;
  tn += o.tn;
  fn += o.fn;
  return *this;
}

ConfusionCounts confusion(const BinaryMask& pred, const BinaryMask& truth) {
  if (pred.height != truth.height || pred.width != truth.width)
    throw Error("confusion: mask dimensions differ");
  ConfusionCounts c;
  for (std::size_t i = 0; i < pred.bits.size(); ++i) {
    const bool p = pred.bits[i] != 0;
    const bool t = truth.bits[i] != 0;
    if (p && t)
      ++c.tp;
    else if (p && !t)
      ++c.fp;
    else if (!p && t)
      ++c.fn;
    else
      ++c.tn;
  }
  return c;
}

SegScores scores(const ConfusionCounts& c) {
  SegScores s;
  const std::uint64_t denom_dsc = 2 * c.tp + c.fp + c.fn;
  const std::uint64_t denom_iou = c.tp + c.fp + c.fn;
  s.dsc = denom_dsc == 0 ? 1.0 : 2.0 * static_cast<double>(c.tp) / static_cast<double>(denom_dsc);
  s.iou = denom_iou == 0 ? 1.0 : static_cast<double>(c.tp) / static_cast<double>(denom_iou);
  const std::uint64_t total = c.total();
  s.accuracy =
      total == 0 ? 1.0 : static_cast<double>(c.tp + c.tn) / static_cast<double>(total);
  return s;
}

}  // namespace softcp
