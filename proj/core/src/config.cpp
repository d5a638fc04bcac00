#include "softcp/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "softcp/error.hpp"

namespace softcp {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

struct KeyValues {
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.contains(key); }

  std::string get_string(const std::string& key, const std::string& fallback) const {
    const auto it = values.find(key);
    return it == values.end() ? fallback : it->second;
  }

  long get_long(const std::string& key, long fallback) const {
    const auto it = values.find(key);
    if (it == values.end()) return fallback;
    try {
      return std::stol(it->second);
    } catch (const std::exception&) {
      throw Error("config key '" + key + "' is not an integer: " + it->second);
    }
  }

  double get_double(const std::string& key, double fallback) const {
    const auto it = values.find(key);
    if (it == values.end()) return fallback;
    try {
      return std::stod(it->second);
    } catch (const std::exception&) {
      throw Error("config key '" + key + "' is not a number: " + it->second);
    }
  }

  bool get_bool(const std::string& key, bool fallback) const {
    const auto it = values.find(key);
    if (it == values.end()) return fallback;
    if (it->second == "true" || it->second == "1") return true;
    if (it->second == "false" || it->second == "0") return false;
    throw Error("config key '" + key + "' is not a boolean: " + it->second);
  }
};

KeyValues parse_key_values(const std::string& text) {
  KeyValues kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error("config line " + std::to_string(lineno) + " is not 'key = value': " + line);
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw Error("config line " + std::to_string(lineno) + " has an empty key");
    kv.values[key] = value;
  }
  return kv;
}

}  // namespace

long PlacementConfig::resolve_s1(std::size_t lesion_area) const {
  if (s1) return *s1;
  return static_cast<long>(std::floor(s1_fraction * static_cast<double>(lesion_area)));
}

void RunConfig::validate() const {
  if (count && ratio) throw Error("config: specify either count or ratio, not both");
  if (ratio && !(*ratio > 0.0)) throw Error("config: ratio must be positive");
  if (count && *count < 0) throw Error("config: count must be non-negative");
  if (output_size < 1) throw Error("config: output_size must be at least 1");
  if (output_bit_depth != 8 && output_bit_depth != 16)
    throw Error("config: output_bit_depth must be 8 or 16");
  if (classes.mapping().empty()) throw Error("config: class_map is required");
  if (!classes.has_class(lesion_class))
    throw Error("config: lesion_class is not in the class map");
  if (reference_class && !classes.has_class(*reference_class))
    throw Error("config: reference_class is not in the class map");
  if (lesions_min < 1 || lesions_max < lesions_min)
    throw Error("config: lesion count range must satisfy 1 <= min <= max");
  if (min_lesion_area < 1) throw Error("config: min_lesion_area must be at least 1");
  if (max_sample_retries < 1) throw Error("config: max_sample_retries must be at least 1");
  soft_mask.validate();
}

BlendMode parse_blend_mode(const std::string& name, double gaussian_sigma,
                           double poisson_tol, int poisson_max_iter) {
  if (name == "soft") return SoftBlend{};
  if (name == "hard") return HardBlend{};
  if (name == "gaussian") return GaussianBlend{gaussian_sigma};
  if (name == "poisson") return PoissonBlend{poisson_tol, poisson_max_iter};
  throw Error("unknown blend mode '" + name + "' (expected soft|hard|gaussian|poisson)");
}

RunConfig parse_run_config(const std::string& text) {
  const KeyValues kv = parse_key_values(text);

  RunConfig cfg;
  cfg.dataset_root = kv.get_string("dataset_root", "");
  if (cfg.dataset_root.empty()) throw Error("config: dataset_root is required");
  cfg.out_dir = kv.get_string("out_dir", "out");
  cfg.seed = static_cast<std::uint64_t>(kv.get_long("seed", 0));
  if (kv.has("count")) cfg.count = static_cast<int>(kv.get_long("count", 0));
  if (kv.has("ratio")) cfg.ratio = kv.get_double("ratio", 3.0);
  cfg.output_size = static_cast<int>(kv.get_long("output_size", 256));
  cfg.output_bit_depth = static_cast<int>(kv.get_long("output_bit_depth", 8));

  cfg.classes = ClassConfig::parse(kv.get_string("class_map", "0:0,255:1"));
  cfg.lesion_class = static_cast<int>(kv.get_long("lesion_class", 1));
  if (kv.has("reference_class"))
    cfg.reference_class = static_cast<int>(kv.get_long("reference_class", 0));

  cfg.soft_mask.k_erode = static_cast<int>(kv.get_long("softmask.k_erode", 1));
  cfg.soft_mask.k_dilate = static_cast<int>(kv.get_long("softmask.k_dilate", 5));
  cfg.soft_mask.alpha = kv.get_double("softmask.alpha", 0.5);
  cfg.soft_mask.binarize_threshold = kv.get_double("softmask.binarize_threshold", 1e-5);

  cfg.transforms.rotation_max_deg = kv.get_double("transform.rotation_max_deg", 30.0);
  cfg.transforms.scale_min = kv.get_double("transform.scale_min", 0.8);
  cfg.transforms.scale_max = kv.get_double("transform.scale_max", 1.25);
  cfg.transforms.pan_frac = kv.get_double("transform.pan_frac", 0.10);
  cfg.transforms.gamma_min = kv.get_double("transform.gamma_min", 0.7);
  cfg.transforms.gamma_max = kv.get_double("transform.gamma_max", 1.5);
  cfg.transforms.noise_sigma_max = kv.get_double("transform.noise_sigma_max", 0.05);
  cfg.transforms.blur_sigma_max = kv.get_double("transform.blur_sigma_max", 1.5);
  cfg.transforms.crop = kv.get_bool("transform.crop", true);
  cfg.transforms.crop_min_frac = kv.get_double("transform.crop_min_frac", 0.7);

  if (kv.has("placement.s1")) cfg.placement.s1 = kv.get_long("placement.s1", 0);
  cfg.placement.s1_fraction = kv.get_double("placement.s1_fraction", 0.5);
  cfg.placement.s2 = kv.get_long("placement.s2", 1);
  cfg.placement.max_attempts = static_cast<int>(kv.get_long("placement.max_attempts", 100));

  cfg.blend = parse_blend_mode(kv.get_string("blend.mode", "soft"),
                               kv.get_double("blend.gaussian_sigma", 2.0),
                               kv.get_double("blend.poisson_tol", 1e-6),
                               static_cast<int>(kv.get_long("blend.poisson_max_iter", 10000)));

  cfg.min_lesion_area = static_cast<int>(kv.get_long("pipeline.min_lesion_area", 10));
  cfg.lesions_min = static_cast<int>(kv.get_long("pipeline.lesions_min", 1));
  cfg.lesions_max = static_cast<int>(kv.get_long("pipeline.lesions_max", 1));
  cfg.max_sample_retries = static_cast<int>(kv.get_long("pipeline.max_sample_retries", 20));
  cfg.final_intensity_pass = kv.get_bool("pipeline.final_intensity", true);
  cfg.jobs = static_cast<int>(kv.get_long("jobs", 0));

  cfg.validate();
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config file: " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str());
}

std::string default_config_text() {
  return R"(# softcp run configuration
# Lines are 'key = value'; '#' starts a comment.

# Dataset layout: <dataset_root>/images/*.png and <dataset_root>/masks/*.png,
# paired by file stem ('_mask' suffixes on mask files are accepted).
dataset_root = ./data
out_dir = ./out

# Master seed. Every synthetic sample derives its own stream from
# (seed, sample index), so results do not depend on the worker count.
seed = 42

# Batch size: give either 'count' (absolute) or 'ratio' (real:synthetic,
# e.g. 3 means one synthetic image per three real ones). Default ratio 3.
#count = 100
#ratio = 3

# All outputs are square. Images are written at output_bit_depth (8 or 16).
output_size = 256
output_bit_depth = 8

# Mask pixel value -> class ID. 0 must map to background (0).
class_map = 0:0,128:1,255:2
lesion_class = 2
# Anatomical structure the lesion must overlap. Omit for datasets where
# the whole frame is a valid site; the overlap rule then counts every
# lesion pixel.
reference_class = 1

# Soft-mask construction: erode k_erode times to the core (weight 1),
# then grow k_dilate rings whose weights decay by alpha per ring.
softmask.k_erode = 1
softmask.k_dilate = 5
softmask.alpha = 0.5
softmask.binarize_threshold = 1e-5

# Object/image transform sampling ranges.
transform.rotation_max_deg = 30
transform.scale_min = 0.8
transform.scale_max = 1.25
transform.pan_frac = 0.1
transform.gamma_min = 0.7
transform.gamma_max = 1.5
transform.noise_sigma_max = 0.05
transform.blur_sigma_max = 1.5
transform.crop = true
transform.crop_min_frac = 0.7

# Placement: accepted offsets overlap the reference by more than s1
# pixels and existing lesions by fewer than s2. s1 defaults to
# s1_fraction of the (transformed) lesion area; set placement.s1 for an
# absolute count.
#placement.s1 = 50
placement.s1_fraction = 0.5
placement.s2 = 1
placement.max_attempts = 100

# Blend mode: soft | hard | gaussian | poisson.
blend.mode = soft
blend.gaussian_sigma = 2.0
blend.poisson_tol = 1e-6
blend.poisson_max_iter = 10000

# Lesion instances below this area (pixels) are dropped from the bank.
pipeline.min_lesion_area = 10
# Lesions pasted per synthetic image, drawn uniformly from [min, max].
pipeline.lesions_min = 1
pipeline.lesions_max = 1
# Full-sample redraws allowed when placement or transforms reject.
pipeline.max_sample_retries = 20
# Apply a final intensity-only pass to each composite.
pipeline.final_intensity = true

# Worker threads for batch generation; 0 = all cores. Outputs are
# byte-identical for any value.
jobs = 0
)";
}

}  // namespace softcp
