#include "softcp/placement.hpp"

#include "softcp/error.hpp"

namespace softcp {

void PlacementConstraints::validate() const {
  if (s1 < 0) throw Error("placement s1 must be non-negative");
  if (max_attempts < 1) throw Error("placement max_attempts must be at least 1");
}

long overlap_count(const BinaryMask& a, const BinaryMask& b, PasteOffset at) {
  if (at.row < 0 || at.col < 0 || at.row + a.height > b.height || at.col + a.width > b.width)
    throw Error("overlap_count: translated mask overflows the target bounds");
  long n = 0;
  for (int r = 0; r < a.height; ++r)
    for (int c = 0; c < a.width; ++c)
      if (a.at(r, c) && b.at(at.row + r, at.col + c)) ++n;
  return n;
}

PlacementDecision check_placement(const BinaryMask& lesion, PasteOffset at,
                                  const LabelMap& scene, const PlacementConstraints& c) {
  c.validate();
  if (at.row < 0 || at.col < 0 || at.row + lesion.height > scene.height ||
      at.col + lesion.width > scene.width)
    throw Error("check_placement: lesion window overflows the scene");

  PlacementDecision d;
  for (int r = 0; r < lesion.height; ++r) {
    for (int cc = 0; cc < lesion.width; ++cc) {
      if (!lesion.at(r, cc)) continue;
      const int label = scene.at(at.row + r, at.col + cc);
      if (!c.reference_class || label == *c.reference_class) ++d.overlap_reference;
      if (label == c.lesion_class) ++d.overlap_lesions;
    }
  }
  if (!(d.overlap_reference > c.s1)) {
    d.reason = "reference overlap " + std::to_string(d.overlap_reference) +
               " not above s1=" + std::to_string(c.s1);
    return d;
  }
  if (!(d.overlap_lesions < c.s2)) {
    d.reason = "lesion overlap " + std::to_string(d.overlap_lesions) +
               " not below s2=" + std::to_string(c.s2);
    return d;
  }
  d.accepted = true;
  return d;
}

std::optional<PlacementResult> find_placement(const BinaryMask& lesion,
                                              const LabelMap& scene,
                                              const PlacementConstraints& c,
                                              RandomStream& rng) {
  c.validate();
  if (lesion.empty()) throw Error("find_placement: lesion mask is empty");
  if (lesion.height > scene.height || lesion.width > scene.width)
    throw Error("find_placement: lesion window larger than the scene, no feasible offset");

  const std::uint64_t row_span = scene.height - lesion.height + 1;
  const std::uint64_t col_span = scene.width - lesion.width + 1;
  for (int attempt = 1; attempt <= c.max_attempts; ++attempt) {
    const PasteOffset at{static_cast<int>(rng.uniform_index(row_span)),
                         static_cast<int>(rng.uniform_index(col_span))};
    const PlacementDecision d = check_placement(lesion, at, scene, c);
    if (d.accepted)
      return PlacementResult{at, attempt, d.overlap_reference, d.overlap_lesions};
  }
  return std::nullopt;
}

}  // namespace softcp
