#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "softcp/geometry.hpp"
#include "softcp/png_io.hpp"
#include "softcp/raster.hpp"

namespace softcp {

struct DatasetRecord {
  std::filesystem::path image_path;
  std::filesystem::path mask_path;
  std::string stem;
};

struct DatasetIndex {
  std::vector<DatasetRecord> records;  // sorted by stem
  ClassConfig classes;
  int lesion_class = 1;
  std::optional<int> reference_class;
  std::vector<std::string> warnings;  // unmatched files found during the scan
};

/// Scans root/images and root/masks, pairing files by stem ('_mask'
/// suffixes on mask files are stripped). Every pair must decode to
/// identical dimensions; orphans become warnings; an empty match set is
/// an error.
DatasetIndex scan_dataset(const std::filesystem::path& root, const ClassConfig& classes,
                          int lesion_class, std::optional<int> reference_class);

/// One extracted lesion: the context-expanded image window around a
/// connected component of the lesion class, with its mask and provenance.
struct LesionInstance {
  ImagePlane patch;  // bbox expanded by the margin, clipped to the source
  BinaryMask mask;   // same window
  std::string source_stem;
  int instance_index = 0;  // ordinal within the source record
  std::size_t area = 0;
  Rect bbox;  // tight component bbox in source coordinates
};

/// Extracts every lesion-class component with at least min_area pixels
/// from every record. The patch window is the component bbox expanded by
/// `margin` pixels on each side, clipped to the source bounds. Records
/// without lesions contribute nothing.
std::vector<LesionInstance> build_lesion_bank(const DatasetIndex& idx,
                                              std::size_t min_area, int margin);

}  // namespace softcp
