#pragma once

#include <optional>
#include <string>

#include "softcp/geometry.hpp"
#include "softcp/raster.hpp"
#include "softcp/rng.hpp"

namespace softcp {

// Anatomical placement constraints: a pasted lesion must overlap the
// reference substance by strictly more than s1 pixels and overlap
// existing lesions by strictly fewer than s2 pixels. With s2 = 1 any
// overlap with another lesion rejects the offset.

struct PlacementConstraints {
  long s1 = 0;  // minimum-exclusive overlap with the reference class
  long s2 = 1;  // maximum-exclusive overlap with the lesion class
  std::optional<int> reference_class;  // absent: the whole frame counts as reference
  int lesion_class = 1;
  int max_attempts = 100;

  void validate() const;
};

/// Count of foreground pixels of `a`, translated by the offset, that land
/// on foreground pixels of `b`.
long overlap_count(const BinaryMask& a, const BinaryMask& b, PasteOffset at);

struct PlacementDecision {
  bool accepted = false;
  long overlap_reference = 0;
  long overlap_lesions = 0;
  /// For rejections: which constraint failed.
  std::string reason;
};

/// Evaluates both constraints for a lesion mask at a fixed offset
/// against the scene labels. Rejection is a value, not an error.
PlacementDecision check_placement(const BinaryMask& lesion, PasteOffset at,
                                  const LabelMap& scene, const PlacementConstraints& c);

struct PlacementResult {
  PasteOffset offset;
  int attempts_used = 0;
  long overlap_reference = 0;
  long overlap_lesions = 0;
};

/// Rejection sampling over all offsets where the lesion window fits:
/// draws uniformly, returns the first accepted offset with diagnostics,
/// or nullopt once max_attempts draws were rejected. Throws if the
/// lesion window cannot fit at all.
std::optional<PlacementResult> find_placement(const BinaryMask& lesion,
                                              const LabelMap& scene,
                                              const PlacementConstraints& c,
                                              RandomStream& rng);

}  // namespace softcp
