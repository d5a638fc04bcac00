#pragma once

#include <cstddef>
#include <vector>

#include "softcp/geometry.hpp"
#include "softcp/raster.hpp"

namespace softcp {

// Binary morphology over the fixed 3x3 all-ones structuring element.
// Out-of-bounds pixels read as 0 for both operators, so erosion strips
// the outermost ring of a full-frame mask while dilation never grows
// past the frame.

/// Output pixel is 1 iff all nine 3x3 neighbors are 1.
BinaryMask erode(const BinaryMask& m);

/// Output pixel is 1 iff any 3x3 neighbor is 1.
BinaryMask dilate(const BinaryMask& m);

/// Pixel is 1 iff its weight is strictly greater than the threshold.
BinaryMask binarize(const SoftMask& s, double threshold);

/// One 8-connected foreground component.
struct Component {
  BinaryMask support;  // same size as the input, 1 on this component only
  Rect bbox;           // tight bounding rectangle
  std::size_t area = 0;
};

struct ComponentSet {
  std::vector<Component> components;
};

/// 8-connected components with at least min_area pixels, in row-major
/// order of their first pixel. With min_area = 1 the supports partition
/// the input foreground exactly.
ComponentSet connected_components(const BinaryMask& m, std::size_t min_area = 1);

}  // namespace softcp
