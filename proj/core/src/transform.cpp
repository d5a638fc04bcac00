#include "softcp/transform.hpp"

#include <algorithm>
#include <cmath>

#include "separable_blur.hpp"
#include "softcp/error.hpp"

namespace softcp {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

// Snap near-axis trig values so multiples of 90 degrees become exact
// grid permutations.
double snap_trig(double v) {
  if (std::abs(v) < 1e-12) return 0.0;
  if (std::abs(v - 1.0) < 1e-12) return 1.0;
  if (std::abs(v + 1.0) < 1e-12) return -1.0;
  return v;
}

double bilinear_zero(const ImagePlane& img, double r, double c, int ch) {
  const int r0 = static_cast<int>(std::floor(r));
  const int c0 = static_cast<int>(std::floor(c));
  const double fr = r - r0;
  const double fc = c - c0;
  auto fetch = [&](int rr, int cc) -> double {
    if (rr < 0 || rr >= img.height || cc < 0 || cc >= img.width) return 0.0;
    return img.at(rr, cc, ch);
  };
  return fetch(r0, c0) * (1.0 - fr) * (1.0 - fc) + fetch(r0, c0 + 1) * (1.0 - fr) * fc +
         fetch(r0 + 1, c0) * fr * (1.0 - fc) + fetch(r0 + 1, c0 + 1) * fr * fc;
}

std::uint8_t nearest_zero(const BinaryMask& m, double r, double c) {
  const int ri = static_cast<int>(std::floor(r + 0.5));
  const int ci = static_cast<int>(std::floor(c + 0.5));
  if (ri < 0 || ri >= m.height || ci < 0 || ci >= m.width) return 0;
  return m.at(ri, ci);
}

// Inverse-mapped resampling for rotation and scaling. map(dst_r, dst_c)
// returns the source coordinate.
template <typename MapFn>
std::pair<ImagePlane, BinaryMask> warp(const ImagePlane& patch, const BinaryMask& mask,
                                       MapFn&& map) {
  ImagePlane img(patch.height, patch.width, patch.channels);
  BinaryMask out(mask.height, mask.width);
  for (int r = 0; r < patch.height; ++r) {
    for (int c = 0; c < patch.width; ++c) {
      const auto [sr, sc] = map(r, c);
      for (int ch = 0; ch < patch.channels; ++ch)
        img.at(r, c, ch) = bilinear_zero(patch, sr, sc, ch);
      out.at(r, c) = nearest_zero(mask, sr, sc);
    }
  }
  return {std::move(img), std::move(out)};
}

}  // namespace

std::pair<ImagePlane, BinaryMask> apply_rigid(const ImagePlane& patch,
                                              const BinaryMask& mask, const RigidKind& t) {
  if (patch.height != mask.height || patch.width != mask.width)
    throw Error("apply_rigid: patch and mask dimensions differ");

  return std::visit(
      [&](const auto& k) -> std::pair<ImagePlane, BinaryMask> {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, RigidNone>) {
          return {patch, mask};
        } else if constexpr (std::is_same_v<T, Flip>) {
          ImagePlane img(patch.height, patch.width, patch.channels);
          BinaryMask out(mask.height, mask.width);
          for (int r = 0; r < patch.height; ++r) {
            for (int c = 0; c < patch.width; ++c) {
              const int sr = k.axis == FlipAxis::vertical ? patch.height - 1 - r : r;
              const int sc = k.axis == FlipAxis::horizontal ? patch.width - 1 - c : c;
              for (int ch = 0; ch < patch.channels; ++ch)
                img.at(r, c, ch) = patch.at(sr, sc, ch);
              out.at(r, c) = mask.at(sr, sc);
            }
          }
          return {std::move(img), std::move(out)};
        } else if constexpr (std::is_same_v<T, Rotation>) {
          if (k.angle_deg < -180.0 || k.angle_deg > 180.0)
            throw Error("rotation angle must lie in [-180, 180] degrees");
          const double th = k.angle_deg * kPi / 180.0;
          const double cs = snap_trig(std::cos(th));
          const double sn = snap_trig(std::sin(th));
          const double cy = (patch.height - 1) / 2.0;
          const double cx = (patch.width - 1) / 2.0;
          return warp(patch, mask, [&](int r, int c) {
            const double dr = r - cy, dc = c - cx;
            // rotate the destination offset back by -angle
            return std::pair<double, double>{cy + cs * dr - sn * dc, cx + sn * dr + cs * dc};
          });
        } else if constexpr (std::is_same_v<T, Scaling>) {
          if (!(k.factor > 0.0)) throw Error("scale factor must be positive");
          const double cy = (patch.height - 1) / 2.0;
          const double cx = (patch.width - 1) / 2.0;
          auto result = warp(patch, mask, [&](int r, int c) {
            return std::pair<double, double>{cy + (r - cy) / k.factor,
                                             cx + (c - cx) / k.factor};
          });
          if (!mask.empty() && result.second.empty()) {
            throw EmptyMaskError("scaling by " + std::to_string(k.factor) +
                                 " removed every mask pixel");
          }
          return result;
        } else {  // Panning
          ImagePlane img(patch.height, patch.width, patch.channels);
          BinaryMask out(mask.height, mask.width);
          for (int r = 0; r < patch.height; ++r) {
            for (int c = 0; c < patch.width; ++c) {
              const int sr = r - k.dr, sc = c - k.dc;
              const bool in = sr >= 0 && sr < patch.height && sc >= 0 && sc < patch.width;
              for (int ch = 0; ch < patch.channels; ++ch)
                img.at(r, c, ch) = in ? patch.at(sr, sc, ch) : 0.0;
              out.at(r, c) = in ? mask.at(sr, sc) : 0;
            }
          }
          return {std::move(img), std::move(out)};
        }
      },
      t);
}

ImagePlane apply_intensity(const ImagePlane& patch, const IntensityKind& t,
                           RandomStream& rng) {
  return std::visit(
      [&](const auto& k) -> ImagePlane {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, IntensityNone>) {
          return patch;
        } else if constexpr (std::is_same_v<T, GammaCorrection>) {
          if (!(k.g > 0.0)) throw Error("gamma exponent must be positive");
          if (k.g == 1.0) return patch;
          ImagePlane out = patch;
          for (double& v : out.samples) v = std::pow(v, k.g);
          return out;
        } else if constexpr (std::is_same_v<T, GaussianNoise>) {
          if (k.sigma < 0.0) throw Error("noise sigma must be non-negative");
          ImagePlane out = patch;
          for (double& v : out.samples)
            v = std::clamp(v + k.sigma * rng.normal(), 0.0, 1.0);
          return out;
        } else {  // GaussianBlur
          if (k.sigma < 0.0) throw Error("blur sigma must be non-negative");
          ImagePlane out = patch;
          detail::gaussian_blur_inplace(out.samples, out.height, out.width, out.channels,
                                        k.sigma);
          return out;
        }
      },
      t);
}

TransformPipeline sample_object_pipeline(RandomStream& rng, const TransformRanges& cfg,
                                         int patch_h, int patch_w) {
  auto draw_rigid = [&]() -> RigidKind {
    switch (rng.uniform_index(5)) {
      case 0:
        return RigidNone{};
      case 1:
        return Flip{rng.uniform_index(2) == 0 ? FlipAxis::horizontal : FlipAxis::vertical};
      case 2:
        return Rotation{rng.uniform_real(-cfg.rotation_max_deg, cfg.rotation_max_deg)};
      case 3:
        return Scaling{rng.uniform_real(cfg.scale_min, cfg.scale_max)};
      default: {
        const long pr = std::lround(cfg.pan_frac * patch_h);
        const long pc = std::lround(cfg.pan_frac * patch_w);
        return Panning{static_cast<int>(rng.uniform_int(-pr, pr)),
                       static_cast<int>(rng.uniform_int(-pc, pc))};
      }
    }
  };
  auto draw_intensity = [&]() -> IntensityKind {
    switch (rng.uniform_index(4)) {
      case 0:
        return IntensityNone{};
      case 1:
        return GammaCorrection{rng.uniform_real(cfg.gamma_min, cfg.gamma_max)};
      case 2:
        return GaussianNoise{rng.uniform_real(0.0, cfg.noise_sigma_max)};
      default:
        return GaussianBlur{rng.uniform_real(0.0, cfg.blur_sigma_max)};
    }
  };

  TransformPipeline p;
  p.steps.emplace_back(draw_rigid());
  p.steps.emplace_back(draw_rigid());
  p.steps.emplace_back(draw_intensity());
  p.steps.emplace_back(draw_intensity());
  rng.shuffle(p.steps);
  return p;
}

ImageLevelPipeline sample_image_pipeline(RandomStream& rng, const TransformRanges& cfg,
                                         int h, int w) {
  ImageLevelPipeline p;
  if (cfg.crop) {
    const double frac = rng.uniform_real(cfg.crop_min_frac, 1.0);
    const int ch = std::max(1, static_cast<int>(std::lround(frac * h)));
    const int cw = std::max(1, static_cast<int>(std::lround(frac * w)));
    const int r0 = static_cast<int>(rng.uniform_index(h - ch + 1));
    const int c0 = static_cast<int>(rng.uniform_index(w - cw + 1));
    p.crop = Rect{r0, c0, ch, cw};
  }
  auto draw_intensity = [&]() -> IntensityKind {
    switch (rng.uniform_index(4)) {
      case 0:
        return IntensityNone{};
      case 1:
        return GammaCorrection{rng.uniform_real(cfg.gamma_min, cfg.gamma_max)};
      case 2:
        return GaussianNoise{rng.uniform_real(0.0, cfg.noise_sigma_max)};
      default:
        return GaussianBlur{rng.uniform_real(0.0, cfg.blur_sigma_max)};
    }
  };
  p.intensity.push_back(draw_intensity());
  p.intensity.push_back(draw_intensity());
  return p;
}

std::pair<ImagePlane, BinaryMask> apply_object_pipeline(const ImagePlane& patch,
                                                        const BinaryMask& mask,
                                                        const TransformPipeline& pipeline,
                                                        RandomStream& rng) {
  ImagePlane img = patch;
  BinaryMask m = mask;
  for (const TransformStep& step : pipeline.steps) {
    if (const auto* rigid = std::get_if<RigidKind>(&step)) {
      std::tie(img, m) = apply_rigid(img, m, *rigid);
    } else {
      img = apply_intensity(img, std::get<IntensityKind>(step), rng);
    }
  }
  if (m.empty() && !mask.empty())
    throw EmptyMaskError("object pipeline removed every mask pixel");
  return {std::move(img), std::move(m)};
}

std::pair<ImagePlane, LabelMap> apply_image_level(const ImagePlane& img,
                                                  const LabelMap& labels,
                                                  const ImageLevelPipeline& p, int out_h,
                                                  int out_w, RandomStream& rng,
                                                  std::optional<int> reference_class) {
  ImagePlane image = img;
  LabelMap lab = labels;
  if (p.crop) {
    const bool had_reference = reference_class && labels.count(*reference_class) > 0;
    image = extract_patch(image, *p.crop);
    lab = extract_patch(lab, *p.crop);
    if (had_reference && lab.count(*reference_class) == 0)
      throw EmptyReferenceError("crop removed every reference-substance pixel");
  }
  image = resample(image, out_h, out_w, ResampleMode::bilinear);
  lab = resample(lab, out_h, out_w, ResampleMode::nearest);
  for (const IntensityKind& k : p.intensity) image = apply_intensity(image, k, rng);
  return {std::move(image), std::move(lab)};
}

std::string rigid_name(const RigidKind& k) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, RigidNone>) return "none";
        if constexpr (std::is_same_v<T, Flip>) return "flip";
        if constexpr (std::is_same_v<T, Rotation>) return "rotation";
        if constexpr (std::is_same_v<T, Scaling>) return "scaling";
        if constexpr (std::is_same_v<T, Panning>) return "panning";
      },
      k);
}

std::string intensity_name(const IntensityKind& k) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, IntensityNone>) return "none";
        if constexpr (std::is_same_v<T, GammaCorrection>) return "gamma";
        if constexpr (std::is_same_v<T, GaussianNoise>) return "gaussian_noise";
        if constexpr (std::is_same_v<T, GaussianBlur>) return "gaussian_blur";
      },
      k);
}

}  // namespace softcp
