#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "softcp/config.hpp"
#include "softcp/geometry.hpp"
#include "softcp/softmask.hpp"
#include "softcp/transform.hpp"

namespace softcp {

// JSON-Lines manifest: a header line carrying the full configuration
// and tool version, then one entry per synthetic sample with everything
// needed to regenerate it bit-exactly.

struct PasteRecord {
  std::string lesion_stem;
  int lesion_instance = 0;    // component ordinal within the source record
  int bank_index = 0;         // position in the lesion bank
  TransformPipeline object_pipeline;
  PasteOffset offset;
  int attempts_used = 0;
  long overlap_reference = 0;
  long overlap_lesions = 0;
  long s1 = 0;  // thresholds as resolved for this paste
  long s2 = 1;
};

struct ManifestEntry {
  int index = 0;
  std::uint64_t sample_seed = 0;
  std::string image_path;  // relative to the output root
  std::string mask_path;
  std::string background_stem;
  ImageLevelPipeline image_pipeline;
  std::vector<IntensityKind> final_intensity;
  std::uint64_t final_intensity_seed = 0;
  std::vector<PasteRecord> pastes;
  SoftMaskParams soft_mask;
  std::string blend_mode;
  int restarts = 0;
};

struct ManifestHeader {
  std::string tool = "softcp";
  std::string version;
  RunConfig config;
  std::map<std::string, std::string> overrides;  // flag overrides applied on top
};

void write_manifest(const std::filesystem::path& path, const ManifestHeader& header,
                    const std::vector<ManifestEntry>& entries);

struct LoadedManifest {
  ManifestHeader header;
  std::vector<ManifestEntry> entries;
};

LoadedManifest read_manifest(const std::filesystem::path& path);

}  // namespace softcp
