#include "softcp/raster.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "softcp/error.hpp"

namespace softcp {

namespace {

void check_dims(int h, int w, int c) {
  if (h < 1 || w < 1) throw Error("image dimensions must be at least 1x1");
  if (c != 1 && c != 3) throw Error("channel count must be 1 or 3");
}

void check_box(const Rect& box, int h, int w, const char* what) {
  if (box.height < 1 || box.width < 1 || box.row < 0 || box.col < 0 ||
      box.row + box.height > h || box.col + box.width > w) {
    throw Error(std::string("patch box out of bounds for ") + what);
  }
}

// Center-aligned source coordinate for an output index.
double src_coord(int dst, double scale) { return (dst + 0.5) * scale - 0.5; }

int nearest_index(double s, int size) {
  const int i = static_cast<int>(std::floor(s + 0.5));
  return std::clamp(i, 0, size - 1);
}

}  // namespace

ImagePlane::ImagePlane(int h, int w, int c, double fill)
    : height(h), width(w), channels(c) {
  check_dims(h, w, c);
  samples.assign(static_cast<std::size_t>(h) * w * c, fill);
}

BinaryMask::BinaryMask(int h, int w, std::uint8_t fill) : height(h), width(w) {
  check_dims(h, w, 1);
  if (fill > 1) throw Error("mask fill value must be 0 or 1");
  bits.assign(static_cast<std::size_t>(h) * w, fill);
}

std::size_t BinaryMask::area() const {
  return static_cast<std::size_t>(
      std::accumulate(bits.begin(), bits.end(), std::size_t{0}));
}

SoftMask::SoftMask(int h, int w, double fill) : height(h), width(w) {
  check_dims(h, w, 1);
  if (fill < 0.0 || fill > 1.0) throw Error("soft-mask weights must lie in [0,1]");
  weights.assign(static_cast<std::size_t>(h) * w, fill);
}

LabelMap::LabelMap(int h, int w, std::uint8_t fill) : height(h), width(w) {
  check_dims(h, w, 1);
  labels.assign(static_cast<std::size_t>(h) * w, fill);
}

std::size_t LabelMap::count(int class_id) const {
  return static_cast<std::size_t>(
      std::count(labels.begin(), labels.end(), class_id));
}

ImagePlane extract_patch(const ImagePlane& img, const Rect& box) {
  check_box(box, img.height, img.width, "image");
  ImagePlane out(box.height, box.width, img.channels);
  for (int r = 0; r < box.height; ++r) {
    for (int c = 0; c < box.width; ++c) {
      for (int ch = 0; ch < img.channels; ++ch) {
        out.at(r, c, ch) = img.at(box.row + r, box.col + c, ch);
      }
    }
  }
  return out;
}

BinaryMask extract_patch(const BinaryMask& mask, const Rect& box) {
  check_box(box, mask.height, mask.width, "mask");
  BinaryMask out(box.height, box.width);
  for (int r = 0; r < box.height; ++r)
    for (int c = 0; c < box.width; ++c)
      out.at(r, c) = mask.at(box.row + r, box.col + c);
  return out;
}

LabelMap extract_patch(const LabelMap& labels, const Rect& box) {
  check_box(box, labels.height, labels.width, "label map");
  LabelMap out(box.height, box.width);
  for (int r = 0; r < box.height; ++r)
    for (int c = 0; c < box.width; ++c)
      out.at(r, c) = labels.at(box.row + r, box.col + c);
  return out;
}

ImagePlane resample(const ImagePlane& img, int new_h, int new_w, ResampleMode mode) {
  if (new_h < 1 || new_w < 1) throw Error("resample target size must be at least 1x1");
  ImagePlane out(new_h, new_w, img.channels);
  const double sr = static_cast<double>(img.height) / new_h;
  const double sc = static_cast<double>(img.width) / new_w;
  for (int r = 0; r < new_h; ++r) {
    const double y = src_coord(r, sr);
    for (int c = 0; c < new_w; ++c) {
      const double x = src_coord(c, sc);
      if (mode == ResampleMode::nearest) {
        const int yi = nearest_index(y, img.height);
        const int xi = nearest_index(x, img.width);
        for (int ch = 0; ch < img.channels; ++ch) out.at(r, c, ch) = img.at(yi, xi, ch);
      } else {
        const double yc = std::clamp(y, 0.0, static_cast<double>(img.height - 1));
        const double xc = std::clamp(x, 0.0, static_cast<double>(img.width - 1));
        const int y0 = static_cast<int>(std::floor(yc));
        const int x0 = static_cast<int>(std::floor(xc));
        const int y1 = std::min(y0 + 1, img.height - 1);
        const int x1 = std::min(x0 + 1, img.width - 1);
        const double fy = yc - y0;
        const double fx = xc - x0;
        for (int ch = 0; ch < img.channels; ++ch) {
          const double v = img.at(y0, x0, ch) * (1.0 - fy) * (1.0 - fx) +
                           img.at(y0, x1, ch) * (1.0 - fy) * fx +
                           img.at(y1, x0, ch) * fy * (1.0 - fx) +
                           img.at(y1, x1, ch) * fy * fx;
          out.at(r, c, ch) = v;
        }
      }
    }
  }
  return out;
}

BinaryMask resample(const BinaryMask& mask, int new_h, int new_w, ResampleMode mode) {
  if (mode != ResampleMode::nearest)
    throw Error("masks accept only nearest-neighbor resampling");
  if (new_h < 1 || new_w < 1) throw Error("resample target size must be at least 1x1");
  BinaryMask out(new_h, new_w);
  const double sr = static_cast<double>(mask.height) / new_h;
  const double sc = static_cast<double>(mask.width) / new_w;
  for (int r = 0; r < new_h; ++r) {
    const int yi = nearest_index(src_coord(r, sr), mask.height);
    for (int c = 0; c < new_w; ++c) {
      out.at(r, c) = mask.at(yi, nearest_index(src_coord(c, sc), mask.width));
    }
  }
  return out;
}

LabelMap resample(const LabelMap& labels, int new_h, int new_w, ResampleMode mode) {
  if (mode != ResampleMode::nearest)
    throw Error("label maps accept only nearest-neighbor resampling");
  if (new_h < 1 || new_w < 1) throw Error("resample target size must be at least 1x1");
  LabelMap out(new_h, new_w);
  const double sr = static_cast<double>(labels.height) / new_h;
  const double sc = static_cast<double>(labels.width) / new_w;
  for (int r = 0; r < new_h; ++r) {
    const int yi = nearest_index(src_coord(r, sr), labels.height);
    for (int c = 0; c < new_w; ++c) {
      out.at(r, c) = labels.at(yi, nearest_index(src_coord(c, sc), labels.width));
    }
  }
  return out;
}

ImagePlane gray_to_rgb(const ImagePlane& img) {
  if (img.channels == 3) return img;
  ImagePlane out(img.height, img.width, 3);
  for (int r = 0; r < img.height; ++r)
    for (int c = 0; c < img.width; ++c)
      for (int ch = 0; ch < 3; ++ch) out.at(r, c, ch) = img.at(r, c);
  return out;
}

SoftMask to_soft_mask(const BinaryMask& mask) {
  SoftMask out(mask.height, mask.width);
  for (std::size_t i = 0; i < mask.bits.size(); ++i)
    out.weights[i] = static_cast<double>(mask.bits[i]);
  return out;
}

}  // namespace softcp
