#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "softcp/blend.hpp"
#include "softcp/png_io.hpp"
#include "softcp/softmask.hpp"
#include "softcp/transform.hpp"

namespace softcp {

/// Placement thresholds as configured. s1 is either an absolute pixel
/// count or, when absent, a fraction of each lesion's area (rounded
/// down), so the "must intersect the reference" intent stays scale-free.
struct PlacementConfig {
  std::optional<long> s1;
  double s1_fraction = 0.5;
  long s2 = 1;
  int max_attempts = 100;

  long resolve_s1(std::size_t lesion_area) const;
};

/// Full run configuration for a synthesis batch. Exactly one of
/// count/ratio is active; when neither is configured the ratio defaults
/// to 3 real images per synthetic one.
struct RunConfig {
  std::filesystem::path dataset_root;
  std::filesystem::path out_dir = "out";
  std::uint64_t seed = 0;
  std::optional<int> count;
  std::optional<double> ratio;
  int output_size = 256;
  int output_bit_depth = 8;

  ClassConfig classes;
  int lesion_class = 1;
  std::optional<int> reference_class;

  SoftMaskParams soft_mask;
  TransformRanges transforms;
  PlacementConfig placement;
  BlendMode blend = SoftBlend{};

  int min_lesion_area = 10;
  int lesions_min = 1;
  int lesions_max = 1;
  int max_sample_retries = 20;
  bool final_intensity_pass = true;
  int jobs = 0;  // 0 = hardware concurrency

  void validate() const;
};

/// Parses the key = value run-configuration file ('#' comments, dotted
/// keys; see default_config_text for the full key list).
RunConfig load_run_config(const std::filesystem::path& path);

RunConfig parse_run_config(const std::string& text);

/// Commented template with every key at its default.
std::string default_config_text();

BlendMode parse_blend_mode(const std::string& name, double gaussian_sigma,
                           double poisson_tol, int poisson_max_iter);

}  // namespace softcp
