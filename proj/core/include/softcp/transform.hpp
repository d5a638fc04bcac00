#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "softcp/geometry.hpp"
#include "softcp/raster.hpp"
#include "softcp/rng.hpp"

namespace softcp {

// Object-level and image-level augmentation transforms. Geometric steps
// act on patch and mask jointly (bilinear image, nearest mask) so the
// pair stays registered; intensity steps act on the image alone.

enum class FlipAxis { horizontal, vertical };

struct RigidNone {
  friend bool operator==(const RigidNone&, const RigidNone&) = default;
};
struct Flip {
  FlipAxis axis = FlipAxis::horizontal;
  friend bool operator==(const Flip&, const Flip&) = default;
};
struct Rotation {
  double angle_deg = 0.0;  // in [-180, 180]
  friend bool operator==(const Rotation&, const Rotation&) = default;
};
struct Scaling {
  double factor = 1.0;  // > 0
  friend bool operator==(const Scaling&, const Scaling&) = default;
};
struct Panning {
  int dr = 0;
  int dc = 0;
  friend bool operator==(const Panning&, const Panning&) = default;
};
using RigidKind = std::variant<RigidNone, Flip, Rotation, Scaling, Panning>;

struct IntensityNone {
  friend bool operator==(const IntensityNone&, const IntensityNone&) = default;
};
struct GammaCorrection {
  double g = 1.0;  // > 0, out = in^g
  friend bool operator==(const GammaCorrection&, const GammaCorrection&) = default;
};
struct GaussianNoise {
  double sigma = 0.0;  // intensity units, clamped result
  friend bool operator==(const GaussianNoise&, const GaussianNoise&) = default;
};
struct GaussianBlur {
  double sigma = 0.0;  // pixels
  friend bool operator==(const GaussianBlur&, const GaussianBlur&) = default;
};
using IntensityKind = std::variant<IntensityNone, GammaCorrection, GaussianNoise, GaussianBlur>;

using TransformStep = std::variant<RigidKind, IntensityKind>;

/// Exactly two rigid and two intensity steps, randomly interleaved.
struct TransformPipeline {
  std::vector<TransformStep> steps;
  friend bool operator==(const TransformPipeline&, const TransformPipeline&) = default;
};

/// Optional crop followed by a resize to the configured output size,
/// plus intensity steps applied to the image only.
struct ImageLevelPipeline {
  std::optional<Rect> crop;
  std::vector<IntensityKind> intensity;
  friend bool operator==(const ImageLevelPipeline&, const ImageLevelPipeline&) = default;
};

/// Sampling ranges for transform parameters. Every bound is a
/// configuration choice, not ground truth.
struct TransformRanges {
  double rotation_max_deg = 30.0;  // angle ~ U[-max, max]
  double scale_min = 0.8;
  double scale_max = 1.25;
  double pan_frac = 0.10;  // pan distance up to this fraction of the patch size
  double gamma_min = 0.7;
  double gamma_max = 1.5;
  double noise_sigma_max = 0.05;
  double blur_sigma_max = 1.5;
  bool crop = true;             // image-level crop-then-resize
  double crop_min_frac = 0.7;   // crop window side, as a fraction of the input
  friend bool operator==(const TransformRanges&, const TransformRanges&) = default;
};

/// Draws 2 rigid and 2 intensity kinds uniformly with replacement, binds
/// their parameters uniformly from the ranges, and interleaves the four
/// steps in random order. Pan distances are derived from the patch size.
TransformPipeline sample_object_pipeline(RandomStream& rng, const TransformRanges& cfg,
                                         int patch_h, int patch_w);

/// Draws the background pipeline: an optional crop window (uniform side
/// fraction and position) plus two intensity kinds.
ImageLevelPipeline sample_image_pipeline(RandomStream& rng, const TransformRanges& cfg,
                                         int h, int w);

/// Applies one rigid step about the patch center: bilinear for the
/// image, nearest for the mask, zero fill outside, identical output
/// dimensions. Flips and pans are exact index moves. Scaling that leaves
/// no foreground throws EmptyMaskError so the caller can resample.
std::pair<ImagePlane, BinaryMask> apply_rigid(const ImagePlane& patch,
                                              const BinaryMask& mask, const RigidKind& t);

/// Applies one intensity step. Gamma maps each sample through v^g, noise
/// adds clamped per-pixel Gaussian perturbation, blur convolves with a
/// normalized Gaussian (replicate padding).
ImagePlane apply_intensity(const ImagePlane& patch, const IntensityKind& t,
                           RandomStream& rng);

/// Runs a sampled object pipeline over a patch/mask pair. Throws
/// EmptyMaskError if the mask ends up empty.
std::pair<ImagePlane, BinaryMask> apply_object_pipeline(const ImagePlane& patch,
                                                        const BinaryMask& mask,
                                                        const TransformPipeline& pipeline,
                                                        RandomStream& rng);

/// Crops image and labels jointly, resamples both to out_h x out_w
/// (bilinear / nearest), then applies the intensity steps to the image.
/// A crop that removes every reference-substance pixel throws
/// EmptyReferenceError.
std::pair<ImagePlane, LabelMap> apply_image_level(const ImagePlane& img,
                                                  const LabelMap& labels,
                                                  const ImageLevelPipeline& p, int out_h,
                                                  int out_w, RandomStream& rng,
                                                  std::optional<int> reference_class);

std::string rigid_name(const RigidKind& k);
std::string intensity_name(const IntensityKind& k);

}  // namespace softcp
