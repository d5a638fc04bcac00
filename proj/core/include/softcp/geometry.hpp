#pragma once

namespace softcp {

/// Axis-aligned rectangle, top-left corner plus size, in pixel units.
struct Rect {
  int row = 0;
  int col = 0;
  int height = 0;
  int width = 0;

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Translation of a patch's top-left corner into background coordinates.
/// The translated patch rectangle must lie fully inside the background.
struct PasteOffset {
  int row = 0;
  int col = 0;

  friend bool operator==(const PasteOffset&, const PasteOffset&) = default;
};

}  // namespace softcp
