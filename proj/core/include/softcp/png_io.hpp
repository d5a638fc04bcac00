#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <utility>

#include "softcp/raster.hpp"

namespace softcp {

/// Maps stored mask pixel values to class IDs (e.g. {0:0, 128:1, 255:2}).
/// Saving a label map uses the inverse mapping, so each class must be
/// reachable from exactly one pixel value.
class ClassConfig {
 public:
  ClassConfig() = default;
  explicit ClassConfig(std::map<int, int> value_to_class);

  /// Parses "0:0,128:1,255:2".
  static ClassConfig parse(const std::string& text);

  bool has_value(int pixel_value) const;
  int class_for_value(int pixel_value) const;
  int value_for_class(int class_id) const;
  bool has_class(int class_id) const;

  const std::map<int, int>& mapping() const { return value_to_class_; }
  std::string to_string() const;

  friend bool operator==(const ClassConfig&, const ClassConfig&) = default;

 private:
  std::map<int, int> value_to_class_;
};

/// Loads an 8-bit or 16-bit grayscale/RGB PNG and normalizes integer
/// samples into [0,1] by the bit-depth maximum (255 or 65535).
ImagePlane load_image(const std::filesystem::path& path);

/// Writes an image as PNG. bit_depth is 8 (default) or 16; samples are
/// quantized with round(v * max).
void save_image(const ImagePlane& img, const std::filesystem::path& path,
                int bit_depth = 8);

/// Loads an 8-bit single-channel PNG and maps its pixel values through
/// the class configuration. A value absent from the configuration is an
/// error naming the value and its first coordinate.
LabelMap load_label_map(const std::filesystem::path& path, const ClassConfig& classes);

/// Writes a label map through the inverse class mapping as 8-bit gray PNG.
void save_label_map(const LabelMap& labels, const ClassConfig& classes,
                    const std::filesystem::path& path);

/// Reads only the header and returns (height, width).
std::pair<int, int> png_dimensions(const std::filesystem::path& path);

}  // namespace softcp
