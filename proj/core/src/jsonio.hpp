#pragma once

// JSON converters for the manifest types. Internal to the library; the
// public headers stay free of the JSON dependency.

#include <json.hpp>

#include "softcp/config.hpp"
#include "softcp/error.hpp"
#include "softcp/manifest.hpp"

namespace softcp::detail {

using nlohmann::json;

inline json rect_to_json(const Rect& r) {
  return json{{"row", r.row}, {"col", r.col}, {"height", r.height}, {"width", r.width}};
}

inline Rect rect_from_json(const json& j) {
  return Rect{j.at("row"), j.at("col"), j.at("height"), j.at("width")};
}

inline json offset_to_json(const PasteOffset& o) {
  return json{{"row", o.row}, {"col", o.col}};
}

inline PasteOffset offset_from_json(const json& j) {
  return PasteOffset{j.at("row"), j.at("col")};
}

inline json rigid_to_json(const RigidKind& k) {
  json j{{"kind", rigid_name(k)}};
  if (const auto* f = std::get_if<Flip>(&k))
    j["axis"] = f->axis == FlipAxis::horizontal ? "horizontal" : "vertical";
  else if (const auto* r = std::get_if<Rotation>(&k))
    j["angle_deg"] = r->angle_deg;
  else if (const auto* s = std::get_if<Scaling>(&k))
    j["factor"] = s->factor;
  else if (const auto* p = std::get_if<Panning>(&k)) {
    j["dr"] = p->dr;
    j["dc"] = p->dc;
  }
  return j;
}

inline RigidKind rigid_from_json(const json& j) {
  const std::string kind = j.at("kind");
  if (kind == "none") return RigidNone{};
  if (kind == "flip")
    return Flip{j.at("axis") == "horizontal" ? FlipAxis::horizontal : FlipAxis::vertical};
  if (kind == "rotation") return Rotation{j.at("angle_deg")};
  if (kind == "scaling") return Scaling{j.at("factor")};
  if (kind == "panning") return Panning{j.at("dr"), j.at("dc")};
  throw Error("manifest: unknown rigid kind '" + kind + "'");
}

inline json intensity_to_json(const IntensityKind& k) {
  json j{{"kind", intensity_name(k)}};
  if (const auto* g = std::get_if<GammaCorrection>(&k))
    j["g"] = g->g;
  else if (const auto* n = std::get_if<GaussianNoise>(&k))
    j["sigma"] = n->sigma;
  else if (const auto* b = std::get_if<GaussianBlur>(&k))
    j["sigma"] = b->sigma;
  return j;
}

inline IntensityKind intensity_from_json(const json& j) {
  const std::string kind = j.at("kind");
  if (kind == "none") return IntensityNone{};
  if (kind == "gamma") return GammaCorrection{j.at("g")};
  if (kind == "gaussian_noise") return GaussianNoise{j.at("sigma")};
  if (kind == "gaussian_blur") return GaussianBlur{j.at("sigma")};
  throw Error("manifest: unknown intensity kind '" + kind + "'");
}

inline json pipeline_to_json(const TransformPipeline& p) {
  json steps = json::array();
  for (const TransformStep& s : p.steps) {
    if (const auto* r = std::get_if<RigidKind>(&s)) {
      json j = rigid_to_json(*r);
      j["group"] = "rigid";
      steps.push_back(std::move(j));
    } else {
      json j = intensity_to_json(std::get<IntensityKind>(s));
      j["group"] = "intensity";
      steps.push_back(std::move(j));
    }
  }
  return steps;
}

inline TransformPipeline pipeline_from_json(const json& j) {
  TransformPipeline p;
  for (const json& s : j) {
    if (s.at("group") == "rigid")
      p.steps.emplace_back(rigid_from_json(s));
    else
      p.steps.emplace_back(intensity_from_json(s));
  }
  return p;
}

inline json image_pipeline_to_json(const ImageLevelPipeline& p) {
  json j;
  if (p.crop) j["crop"] = rect_to_json(*p.crop);
  json steps = json::array();
  for (const IntensityKind& k : p.intensity) steps.push_back(intensity_to_json(k));
  j["intensity"] = std::move(steps);
  return j;
}

inline ImageLevelPipeline image_pipeline_from_json(const json& j) {
  ImageLevelPipeline p;
  if (j.contains("crop")) p.crop = rect_from_json(j.at("crop"));
  for (const json& s : j.at("intensity")) p.intensity.push_back(intensity_from_json(s));
  return p;
}

inline json softmask_to_json(const SoftMaskParams& p) {
  return json{{"k_erode", p.k_erode},
              {"k_dilate", p.k_dilate},
              {"alpha", p.alpha},
              {"binarize_threshold", p.binarize_threshold}};
}

inline SoftMaskParams softmask_from_json(const json& j) {
  return SoftMaskParams{j.at("k_erode"), j.at("k_dilate"), j.at("alpha"),
                        j.at("binarize_threshold")};
}

inline json blend_to_json(const BlendMode& m) {
  json j{{"mode", blend_mode_name(m)}};
  if (const auto* g = std::get_if<GaussianBlend>(&m)) {
    j["sigma"] = g->sigma;
  } else if (const auto* p = std::get_if<PoissonBlend>(&m)) {
    j["tolerance"] = p->tolerance;
    j["max_iterations"] = p->max_iterations;
  }
  return j;
}

inline BlendMode blend_from_json(const json& j) {
  const std::string mode = j.at("mode");
  if (mode == "soft") return SoftBlend{};
  if (mode == "hard") return HardBlend{};
  if (mode == "gaussian") return GaussianBlend{j.at("sigma")};
  if (mode == "poisson") return PoissonBlend{j.at("tolerance"), j.at("max_iterations")};
  throw Error("manifest: unknown blend mode '" + mode + "'");
}

inline json run_config_to_json(const RunConfig& c) {
  json j;
  j["dataset_root"] = c.dataset_root.string();
  j["out_dir"] = c.out_dir.string();
  j["seed"] = c.seed;
  if (c.count) j["count"] = *c.count;
  if (c.ratio) j["ratio"] = *c.ratio;
  j["output_size"] = c.output_size;
  j["output_bit_depth"] = c.output_bit_depth;
  j["class_map"] = c.classes.to_string();
  j["lesion_class"] = c.lesion_class;
  if (c.reference_class) j["reference_class"] = *c.reference_class;
  j["soft_mask"] = softmask_to_json(c.soft_mask);
  j["transforms"] = json{{"rotation_max_deg", c.transforms.rotation_max_deg},
                         {"scale_min", c.transforms.scale_min},
                         {"scale_max", c.transforms.scale_max},
                         {"pan_frac", c.transforms.pan_frac},
                         {"gamma_min", c.transforms.gamma_min},
                         {"gamma_max", c.transforms.gamma_max},
                         {"noise_sigma_max", c.transforms.noise_sigma_max},
                         {"blur_sigma_max", c.transforms.blur_sigma_max},
                         {"crop", c.transforms.crop},
                         {"crop_min_frac", c.transforms.crop_min_frac}};
  json placement;
  if (c.placement.s1) placement["s1"] = *c.placement.s1;
  placement["s1_fraction"] = c.placement.s1_fraction;
  placement["s2"] = c.placement.s2;
  placement["max_attempts"] = c.placement.max_attempts;
  j["placement"] = std::move(placement);
  j["blend"] = blend_to_json(c.blend);
  j["min_lesion_area"] = c.min_lesion_area;
  j["lesions_min"] = c.lesions_min;
  j["lesions_max"] = c.lesions_max;
  j["max_sample_retries"] = c.max_sample_retries;
  j["final_intensity_pass"] = c.final_intensity_pass;
  return j;
}

inline RunConfig run_config_from_json(const json& j) {
  RunConfig c;
  c.dataset_root = std::string(j.at("dataset_root"));
  c.out_dir = std::string(j.at("out_dir"));
  c.seed = j.at("seed");
  if (j.contains("count")) c.count = j.at("count");
  if (j.contains("ratio")) c.ratio = j.at("ratio");
  c.output_size = j.at("output_size");
  c.output_bit_depth = j.at("output_bit_depth");
  c.classes = ClassConfig::parse(j.at("class_map"));
  c.lesion_class = j.at("lesion_class");
  if (j.contains("reference_class")) c.reference_class = j.at("reference_class");
  c.soft_mask = softmask_from_json(j.at("soft_mask"));
  const json& t = j.at("transforms");
  c.transforms.rotation_max_deg = t.at("rotation_max_deg");
  c.transforms.scale_min = t.at("scale_min");
  c.transforms.scale_max = t.at("scale_max");
  c.transforms.pan_frac = t.at("pan_frac");
  c.transforms.gamma_min = t.at("gamma_min");
  c.transforms.gamma_max = t.at("gamma_max");
  c.transforms.noise_sigma_max = t.at("noise_sigma_max");
  c.transforms.blur_sigma_max = t.at("blur_sigma_max");
  c.transforms.crop = t.at("crop");
  c.transforms.crop_min_frac = t.at("crop_min_frac");
  const json& p = j.at("placement");
  if (p.contains("s1")) c.placement.s1 = p.at("s1");
  c.placement.s1_fraction = p.at("s1_fraction");
  c.placement.s2 = p.at("s2");
  c.placement.max_attempts = p.at("max_attempts");
  c.blend = blend_from_json(j.at("blend"));
  c.min_lesion_area = j.at("min_lesion_area");
  c.lesions_min = j.at("lesions_min");
  c.lesions_max = j.at("lesions_max");
  c.max_sample_retries = j.at("max_sample_retries");
  c.final_intensity_pass = j.at("final_intensity_pass");
  return c;
}

inline json paste_to_json(const PasteRecord& p) {
  return json{{"lesion_stem", p.lesion_stem},
              {"lesion_instance", p.lesion_instance},
              {"bank_index", p.bank_index},
              {"object_pipeline", pipeline_to_json(p.object_pipeline)},
              {"offset", offset_to_json(p.offset)},
              {"attempts_used", p.attempts_used},
              {"overlap_reference", p.overlap_reference},
              {"overlap_lesions", p.overlap_lesions},
              {"s1", p.s1},
              {"s2", p.s2}};
}

inline PasteRecord paste_from_json(const json& j) {
  PasteRecord p;
  p.lesion_stem = j.at("lesion_stem");
  p.lesion_instance = j.at("lesion_instance");
  p.bank_index = j.at("bank_index");
  p.object_pipeline = pipeline_from_json(j.at("object_pipeline"));
  p.offset = offset_from_json(j.at("offset"));
  p.attempts_used = j.at("attempts_used");
  p.overlap_reference = j.at("overlap_reference");
  p.overlap_lesions = j.at("overlap_lesions");
  p.s1 = j.at("s1");
  p.s2 = j.at("s2");
  return p;
}

inline json entry_to_json(const ManifestEntry& e) {
  json pastes = json::array();
  for (const PasteRecord& p : e.pastes) pastes.push_back(paste_to_json(p));
  json finals = json::array();
  for (const IntensityKind& k : e.final_intensity) finals.push_back(intensity_to_json(k));
  return json{{"index", e.index},
              {"sample_seed", e.sample_seed},
              {"image", e.image_path},
              {"mask", e.mask_path},
              {"background_stem", e.background_stem},
              {"image_pipeline", image_pipeline_to_json(e.image_pipeline)},
              {"final_intensity", std::move(finals)},
              {"final_intensity_seed", e.final_intensity_seed},
              {"pastes", std::move(pastes)},
              {"soft_mask", softmask_to_json(e.soft_mask)},
              {"blend_mode", e.blend_mode},
              {"restarts", e.restarts}};
}

inline ManifestEntry entry_from_json(const json& j) {
  ManifestEntry e;
  e.index = j.at("index");
  e.sample_seed = j.at("sample_seed");
  e.image_path = j.at("image");
  e.mask_path = j.at("mask");
  e.background_stem = j.at("background_stem");
  e.image_pipeline = image_pipeline_from_json(j.at("image_pipeline"));
  for (const json& k : j.at("final_intensity"))
    e.final_intensity.push_back(intensity_from_json(k));
  e.final_intensity_seed = j.at("final_intensity_seed");
  for (const json& p : j.at("pastes")) e.pastes.push_back(paste_from_json(p));
  e.soft_mask = softmask_from_json(j.at("soft_mask"));
  e.blend_mode = j.at("blend_mode");
  e.restarts = j.at("restarts");
  return e;
}

}  // namespace softcp::detail
