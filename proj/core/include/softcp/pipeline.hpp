#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "softcp/blend.hpp"
#include "softcp/config.hpp"
#include "softcp/dataset.hpp"
#include "softcp/manifest.hpp"
#include "softcp/placement.hpp"

namespace softcp {

// One synthesis: sample a background, image-level transform it, sample
// lesions, object-level transform them, recompute soft-masks from the
// transformed masks, find constrained placements, blend, merge labels,
// record provenance. Each sample owns a random stream derived from
// (master seed, index), so batches parallelize with bit-identical
// results for any worker count.

/// Everything drawn and computed for one sample before compositing.
struct PastePrep {
  int bank_index = 0;
  TransformPipeline object_pipeline;
  ImagePlane patch;  // post object-level transforms
  BinaryMask mask;
  SoftMask soft;
  PlacementResult placement;
  long s1 = 0;
  long s2 = 1;
};

struct SampleDraft {
  std::uint64_t sample_seed = 0;
  int background_record = 0;
  int lesion_class = 1;
  ImageLevelPipeline image_pipeline;
  ImagePlane scene_image;  // post image-level transform, pre-paste
  LabelMap scene_labels;
  std::vector<PastePrep> pastes;
  std::vector<IntensityKind> final_intensity;
  std::uint64_t final_intensity_seed = 0;
  int restarts = 0;
};

/// Draws one complete sample from the given stream seed. Rejections
/// (exhausted placement, transforms that wipe the mask, crops that drop
/// the reference) restart the draw, up to cfg.max_sample_retries; total
/// exhaustion throws with a per-reason tally.
SampleDraft draw_sample(const RunConfig& cfg, const DatasetIndex& idx,
                        std::span<const LesionInstance> bank, std::uint64_t sample_seed);

/// Composites a draft under the given blend mode. The blend mode does
/// not consume randomness, so the same draft renders consistently under
/// every mode; the final intensity pass replays from its stored seed.
std::pair<ImagePlane, LabelMap> compose_sample(const SampleDraft& draft,
                                               const BlendMode& mode);

struct SynthesisResult {
  ImagePlane image;
  LabelMap labels;
  ManifestEntry entry;
};

/// Full synthesis of sample `index` under the run configuration.
SynthesisResult synthesize_one(const RunConfig& cfg, int index, const DatasetIndex& idx,
                               std::span<const LesionInstance> bank);

struct BatchResult {
  std::filesystem::path manifest_path;
  int samples = 0;
};

/// Generates the whole batch: floor(real / ratio) samples in ratio mode
/// or exactly `count`, written as out/images/syn_NNNNNN.png plus masks
/// and a manifest sorted by index. Workers run per-index; a per-sample
/// failure aborts the batch after writing a partial manifest.
BatchResult synthesize_batch(const RunConfig& cfg, const DatasetIndex& idx,
                             std::span<const LesionInstance> bank,
                             const std::map<std::string, std::string>& overrides = {});

/// Convenience: scan + bank + batch from the configuration alone.
BatchResult synthesize_batch(const RunConfig& cfg,
                             const std::map<std::string, std::string>& overrides = {});

struct ValidationIssue {
  int index = 0;
  std::string what;
};

struct ValidationReport {
  int entries_checked = 0;
  std::vector<ValidationIssue> violations;
};

/// Independently re-validates a generated batch: replays each entry's
/// transforms from its recorded seed, re-runs the placement checks
/// against the offsets stored in the manifest, and verifies the mask on
/// disk equals the label merge of its sources. dataset_root overrides
/// the header's dataset location when the data moved.
ValidationReport validate_manifest(const std::filesystem::path& manifest_path,
                                   const std::filesystem::path& out_root,
                                   std::optional<std::filesystem::path> dataset_root = {});

/// Effective batch size for a config against a dataset.
int batch_size(const RunConfig& cfg, const DatasetIndex& idx);

/// Output file names for a sample index ("images/syn_000042.png").
std::string sample_image_name(int index);
std::string sample_mask_name(int index);

}  // namespace softcp
