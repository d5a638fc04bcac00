#include "softcp/dataset.hpp"

#include <algorithm>
#include <map>

#include "softcp/error.hpp"
#include "softcp/morphology.hpp"

namespace softcp {

namespace fs = std::filesystem;

namespace {

std::string normalize_mask_stem(std::string stem) {
  static constexpr std::string_view kSuffix = "_mask";
  if (stem.size() > kSuffix.size() && stem.ends_with(kSuffix))
    stem.erase(stem.size() - kSuffix.size());
  return stem;
}

std::map<std::string, fs::path> list_pngs(const fs::path& dir, bool strip_mask_suffix) {
  if (!fs::is_directory(dir)) throw Error("not a directory: " + dir.string());
  std::map<std::string, fs::path> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (!e.is_regular_file() || e.path().extension() != ".png") continue;
    std::string stem = e.path().stem().string();
    if (strip_mask_suffix) stem = normalize_mask_stem(stem);
    out.emplace(std::move(stem), e.path());
  }
  return out;
}

}  // namespace

DatasetIndex scan_dataset(const fs::path& root, const ClassConfig& classes,
                          int lesion_class, std::optional<int> reference_class) {
  const auto images = list_pngs(root / "images", false);
  const auto masks = list_pngs(root / "masks", true);

  DatasetIndex idx;
  idx.classes = classes;
  idx.lesion_class = lesion_class;
  idx.reference_class = reference_class;

  for (const auto& [stem, image_path] : images) {
    const auto it = masks.find(stem);
    if (it == masks.end()) {
      idx.warnings.push_back("image without mask: " + image_path.string());
      continue;
    }
    const auto [ih, iw] = png_dimensions(image_path);
    const auto [mh, mw] = png_dimensions(it->second);
    if (ih != mh || iw != mw) {
      throw Error("dimension mismatch for stem '" + stem + "': image " +
                  std::to_string(ih) + "x" + std::to_string(iw) + ", mask " +
                  std::to_string(mh) + "x" + std::to_string(mw));
    }
    idx.records.push_back(DatasetRecord{image_path, it->second, stem});
  }
  for (const auto& [stem, mask_path] : masks) {
    if (!images.contains(stem))
      idx.warnings.push_back("mask without image: " + mask_path.string());
  }

  if (idx.records.empty()) throw Error("no image/mask pairs found under " + root.string());
  // std::map iteration already yields stems in sorted order; keep the
  // records sorted so batch sampling is independent of directory order.
  std::sort(idx.records.begin(), idx.records.end(),
            [](const DatasetRecord& a, const DatasetRecord& b) { return a.stem < b.stem; });
  return idx;
}

std::vector<LesionInstance> build_lesion_bank(const DatasetIndex& idx,
                                              std::size_t min_area, int margin) {
  if (min_area < 1) throw Error("min_area must be at least 1");
  if (margin < 0) throw Error("margin must be non-negative");

  std::vector<LesionInstance> bank;
  for (const DatasetRecord& rec : idx.records) {
    const ImagePlane image = load_image(rec.image_path);
    const LabelMap labels = load_label_map(rec.mask_path, idx.classes);

    BinaryMask lesion(labels.height, labels.width);
    for (std::size_t i = 0; i < labels.labels.size(); ++i)
      lesion.bits[i] = labels.labels[i] == idx.lesion_class ? 1 : 0;

    const ComponentSet comps = connected_components(lesion, min_area);
    int ordinal = 0;
    for (const Component& comp : comps.components) {
      const int r0 = std::max(0, comp.bbox.row - margin);
      const int c0 = std::max(0, comp.bbox.col - margin);
      const int r1 = std::min(labels.height, comp.bbox.row + comp.bbox.height + margin);
      const int c1 = std::min(labels.width, comp.bbox.col + comp.bbox.width + margin);
      const Rect window{r0, c0, r1 - r0, c1 - c0};

      LesionInstance inst;
      inst.patch = extract_patch(image, window);
      inst.mask = extract_patch(comp.support, window);
      inst.source_stem = rec.stem;
      inst.instance_index = ordinal++;
      inst.area = comp.area;
      inst.bbox = comp.bbox;
      bank.push_back(std::move(inst));
    }
  }
  return bank;
}

}  // namespace softcp
