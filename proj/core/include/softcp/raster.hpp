#pragma once

#include <cstdint>
#include <vector>

#include "softcp/geometry.hpp"

namespace softcp {

/// H x W x C image with floating samples in [0,1], row-major and
/// channel-interleaved. Channels is 1 (grayscale) or 3 (RGB).
struct ImagePlane {
  int height = 0;
  int width = 0;
  int channels = 1;
  std::vector<double> samples;

  ImagePlane() = default;
  ImagePlane(int h, int w, int c, double fill = 0.0);

  double at(int r, int c, int ch = 0) const {
    return samples[(static_cast<std::size_t>(r) * width + c) * channels + ch];
  }
  double& at(int r, int c, int ch = 0) {
    return samples[(static_cast<std::size_t>(r) * width + c) * channels + ch];
  }

  friend bool operator==(const ImagePlane&, const ImagePlane&) = default;
};

/// H x W {0,1} grid.
struct BinaryMask {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> bits;

  BinaryMask() = default;
  BinaryMask(int h, int w, std::uint8_t fill = 0);

  std::uint8_t at(int r, int c) const {
    return bits[static_cast<std::size_t>(r) * width + c];
  }
  std::uint8_t& at(int r, int c) {
    return bits[static_cast<std::size_t>(r) * width + c];
  }
  /// Foreground pixel count.
  std::size_t area() const;
  bool empty() const { return area() == 0; }

  friend bool operator==(const BinaryMask&, const BinaryMask&) = default;
};

/// H x W weight grid, every weight in [0,1].
struct SoftMask {
  int height = 0;
  int width = 0;
  std::vector<double> weights;

  SoftMask() = default;
  SoftMask(int h, int w, double fill = 0.0);

  double at(int r, int c) const {
    return weights[static_cast<std::size_t>(r) * width + c];
  }
  double& at(int r, int c) {
    return weights[static_cast<std::size_t>(r) * width + c];
  }

  friend bool operator==(const SoftMask&, const SoftMask&) = default;
};

/// H x W small-integer class IDs, 0 = background.
struct LabelMap {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> labels;

  LabelMap() = default;
  LabelMap(int h, int w, std::uint8_t fill = 0);

  std::uint8_t at(int r, int c) const {
    return labels[static_cast<std::size_t>(r) * width + c];
  }
  std::uint8_t& at(int r, int c) {
    return labels[static_cast<std::size_t>(r) * width + c];
  }
  /// Number of pixels carrying the given class ID.
  std::size_t count(int class_id) const;

  friend bool operator==(const LabelMap&, const LabelMap&) = default;
};

enum class ResampleMode { bilinear, nearest };

/// Copies the sub-grid covered by `box`; the source is left unmodified.
/// Throws if the box reaches outside the input bounds.
ImagePlane extract_patch(const ImagePlane& img, const Rect& box);
BinaryMask extract_patch(const BinaryMask& mask, const Rect& box);
LabelMap extract_patch(const LabelMap& labels, const Rect& box);

/// Resamples to new_h x new_w. Sample positions are aligned to pixel
/// centers: output pixel i reads from source coordinate
/// (i + 0.5) * (in / out) - 0.5, clamped at the borders. Masks and label
/// maps accept only nearest mode so no values absent from the input can
/// appear.
ImagePlane resample(const ImagePlane& img, int new_h, int new_w, ResampleMode mode);
BinaryMask resample(const BinaryMask& mask, int new_h, int new_w, ResampleMode mode);
LabelMap resample(const LabelMap& labels, int new_h, int new_w, ResampleMode mode);

/// Replicates a single-channel image across three channels.
ImagePlane gray_to_rgb(const ImagePlane& img);

/// Viewing a binary mask as a {0,1}-valued weight grid.
SoftMask to_soft_mask(const BinaryMask& mask);

}  // namespace softcp
