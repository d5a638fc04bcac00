#pragma once

#include <cmath>
#include <vector>

namespace softcp::detail {

/// Normalized 1-D Gaussian taps for radius ceil(3*sigma).
inline std::vector<double> gaussian_taps(double sigma) {
  const int radius = static_cast<int>(std::ceil(3.0 * sigma));
  std::vector<double> taps(2 * radius + 1);
  double sum = 0.0;
  for (int i = -radius; i <= radius; ++i) {
    const double w = std::exp(-(static_cast<double>(i) * i) / (2.0 * sigma * sigma));
    taps[i + radius] = w;
    sum += w;
  }
  for (double& w : taps) w /= sum;
  return taps;
}

/// Separable Gaussian blur with replicate padding. Clamping is per axis,
/// so the two passes together equal the full 2-D clamped convolution.
/// Data is row-major with `channels` interleaved samples per pixel.
inline void gaussian_blur_inplace(std::vector<double>& data, int height, int width,
                                  int channels, double sigma) {
  if (sigma <= 0.0) return;
  const std::vector<double> taps = gaussian_taps(sigma);
  const int radius = static_cast<int>(taps.size() / 2);

  std::vector<double> tmp(data.size());
  auto idx = [&](int r, int c, int ch) {
    return (static_cast<std::size_t>(r) * width + c) * channels + ch;
  };

  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      for (int ch = 0; ch < channels; ++ch) {
        double acc = 0.0;
        for (int k = -radius; k <= radius; ++k) {
          const int cc = std::min(std::max(c + k, 0), width - 1);
          acc += taps[k + radius] * data[idx(r, cc, ch)];
        }
        tmp[idx(r, c, ch)] = acc;
      }
    }
  }
  for (int r = 0; r < height; ++r) {
    for (int c = 0; c < width; ++c) {
      for (int ch = 0; ch < channels; ++ch) {
        double acc = 0.0;
        for (int k = -radius; k <= radius; ++k) {
          const int rr = std::min(std::max(r + k, 0), height - 1);
          acc += taps[k + radius] * tmp[idx(rr, c, ch)];
        }
        data[idx(r, c, ch)] = acc;
      }
    }
  }
}

}  // namespace softcp::detail
