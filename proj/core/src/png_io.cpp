#include "softcp/png_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "softcp/error.hpp"

namespace softcp {

namespace {

struct PngReader {
  std::FILE* fp = nullptr;
  png_structp png = nullptr;
  png_infop info = nullptr;

  ~PngReader() {
    if (png) png_destroy_read_struct(&png, info ? &info : nullptr, nullptr);
    if (fp) std::fclose(fp);
  }
};

struct PngWriter {
  std::FILE* fp = nullptr;
  png_structp png = nullptr;
  png_infop info = nullptr;

  ~PngWriter() {
    if (png) png_destroy_write_struct(&png, info ? &info : nullptr);
    if (fp) std::fclose(fp);
  }
};

// Raw decode shared by load_image / load_label_map / png_dimensions.
struct DecodedPng {
  int height = 0;
  int width = 0;
  int channels = 0;
  int bit_depth = 0;
  std::vector<std::uint16_t> pixels;  // interleaved, host endianness
};

DecodedPng decode_png(const std::filesystem::path& path, bool header_only) {
  PngReader rd;
  rd.fp = std::fopen(path.string().c_str(), "rb");
  if (!rd.fp) throw Error("cannot open PNG file: " + path.string());

  png_byte sig[8];
  if (std::fread(sig, 1, 8, rd.fp) != 8 || png_sig_cmp(sig, 0, 8) != 0)
    throw Error("not a PNG file: " + path.string());

  rd.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!rd.png) throw Error("png_create_read_struct failed");
  rd.info = png_create_info_struct(rd.png);
  if (!rd.info) throw Error("png_create_info_struct failed");

  if (setjmp(png_jmpbuf(rd.png)))
    throw Error("corrupt PNG stream: " + path.string());

  png_init_io(rd.png, rd.fp);
  png_set_sig_bytes(rd.png, 8);
  png_read_info(rd.png, rd.info);

  png_uint_32 w = 0, h = 0;
  int bit_depth = 0, color_type = 0;
  png_get_IHDR(rd.png, rd.info, &w, &h, &bit_depth, &color_type, nullptr, nullptr, nullptr);

  DecodedPng out;
  out.height = static_cast<int>(h);
  out.width = static_cast<int>(w);
  out.bit_depth = bit_depth;
  if (header_only) return out;

  if (bit_depth != 8 && bit_depth != 16)
    throw Error("unsupported PNG bit depth " + std::to_string(bit_depth) + ": " + path.string());
  if (color_type == PNG_COLOR_TYPE_GRAY) {
    out.channels = 1;
  } else if (color_type == PNG_COLOR_TYPE_RGB) {
    out.channels = 3;
  } else {
    throw Error("unsupported PNG color type " + std::to_string(color_type) +
                " (only grayscale and RGB are accepted): " + path.string());
  }

  if (bit_depth == 16) png_set_swap(rd.png);  // PNG stores big-endian
  const int passes = png_set_interlace_handling(rd.png);
  (void)passes;
  png_read_update_info(rd.png, rd.info);

  const std::size_t row_bytes = png_get_rowbytes(rd.png, rd.info);
  std::vector<png_byte> buffer(static_cast<std::size_t>(out.height) * row_bytes);
  std::vector<png_bytep> rows(out.height);
  for (int r = 0; r < out.height; ++r) rows[r] = buffer.data() + r * row_bytes;
  png_read_image(rd.png, rows.data());
  png_read_end(rd.png, nullptr);

  const std::size_t n = static_cast<std::size_t>(out.height) * out.width * out.channels;
  out.pixels.resize(n);
  if (bit_depth == 8) {
    for (std::size_t i = 0; i < n; ++i) out.pixels[i] = buffer[i];
  } else {
    const auto* p16 = reinterpret_cast<const std::uint16_t*>(buffer.data());
    for (std::size_t i = 0; i < n; ++i) out.pixels[i] = p16[i];
  }
  return out;
}

}  // namespace

ClassConfig::ClassConfig(std::map<int, int> value_to_class)
    : value_to_class_(std::move(value_to_class)) {
  for (const auto& [value, cls] : value_to_class_) {
    if (value < 0 || value > 255) throw Error("class-map pixel values must lie in [0,255]");
    if (cls < 0 || cls > 255) throw Error("class IDs must lie in [0,255]");
  }
}

ClassConfig ClassConfig::parse(const std::string& text) {
  std::map<int, int> mapping;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw Error("bad class-map entry '" + item + "' (expected value:class)");
    try {
      const int value = std::stoi(item.substr(0, colon));
      const int cls = std::stoi(item.substr(colon + 1));
      if (!mapping.emplace(value, cls).second)
        throw Error("duplicate pixel value in class map: " + std::to_string(value));
    } catch (const std::invalid_argument&) {
      throw Error("bad class-map entry '" + item + "' (expected value:class)");
    }
  }
  if (mapping.empty()) throw Error("class map is empty");
  return ClassConfig(std::move(mapping));
}

bool ClassConfig::has_value(int pixel_value) const {
  return value_to_class_.contains(pixel_value);
}

int ClassConfig::class_for_value(int pixel_value) const {
  const auto it = value_to_class_.find(pixel_value);
  if (it == value_to_class_.end())
    throw Error("pixel value " + std::to_string(pixel_value) + " not declared in class map");
  return it->second;
}

bool ClassConfig::has_class(int class_id) const {
  for (const auto& [value, cls] : value_to_class_)
    if (cls == class_id) return true;
  return false;
}

int ClassConfig::value_for_class(int class_id) const {
  int found = -1;
  for (const auto& [value, cls] : value_to_class_) {
    if (cls != class_id) continue;
    if (found >= 0)
      throw Error("class " + std::to_string(class_id) +
                  " maps from multiple pixel values; cannot invert");
    found = value;
  }
  if (found < 0)
    throw Error("class " + std::to_string(class_id) + " not present in class map");
  return found;
}

std::string ClassConfig::to_string() const {
  std::string out;
  for (const auto& [value, cls] : value_to_class_) {
    if (!out.empty()) out += ',';
    out += std::to_string(value) + ':' + std::to_string(cls);
  }
  return out;
}

ImagePlane load_image(const std::filesystem::path& path) {
  const DecodedPng png = decode_png(path, false);
  const double denom = png.bit_depth == 8 ? 255.0 : 65535.0;
  ImagePlane img(png.height, png.width, png.channels);
  for (std::size_t i = 0; i < png.pixels.size(); ++i)
    img.samples[i] = png.pixels[i] / denom;
  return img;
}

void save_image(const ImagePlane& img, const std::filesystem::path& path, int bit_depth) {
  if (bit_depth != 8 && bit_depth != 16)
    throw Error("PNG output bit depth must be 8 or 16");

  PngWriter wr;
  wr.fp = std::fopen(path.string().c_str(), "wb");
  if (!wr.fp) throw Error("cannot open PNG file for writing: " + path.string());
  wr.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!wr.png) throw Error("png_create_write_struct failed");
  wr.info = png_create_info_struct(wr.png);
  if (!wr.info) throw Error("png_create_info_struct failed");

  if (setjmp(png_jmpbuf(wr.png)))
    throw Error("failed to write PNG: " + path.string());

  png_init_io(wr.png, wr.fp);
  const int color_type = img.channels == 1 ? PNG_COLOR_TYPE_GRAY : PNG_COLOR_TYPE_RGB;
  png_set_IHDR(wr.png, wr.info, img.width, img.height, bit_depth, color_type,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(wr.png, wr.info);

  const double scale = bit_depth == 8 ? 255.0 : 65535.0;
  const std::size_t n = img.samples.size();
  if (bit_depth == 8) {
    std::vector<png_byte> buffer(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double v = std::clamp(img.samples[i], 0.0, 1.0);
      buffer[i] = static_cast<png_byte>(std::lround(v * scale));
    }
    std::vector<png_bytep> rows(img.height);
    const std::size_t row_elems = static_cast<std::size_t>(img.width) * img.channels;
    for (int r = 0; r < img.height; ++r) rows[r] = buffer.data() + r * row_elems;
    png_write_image(wr.png, rows.data());
    png_write_end(wr.png, nullptr);
  } else {
    std::vector<std::uint16_t> buffer(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double v = std::clamp(img.samples[i], 0.0, 1.0);
      buffer[i] = static_cast<std::uint16_t>(std::lround(v * scale));
    }
    png_set_swap(wr.png);
    std::vector<png_bytep> rows(img.height);
    const std::size_t row_bytes = static_cast<std::size_t>(img.width) * img.channels * 2;
    auto* bytes = reinterpret_cast<png_byte*>(buffer.data());
    for (int r = 0; r < img.height; ++r) rows[r] = bytes + r * row_bytes;
    png_write_image(wr.png, rows.data());
    png_write_end(wr.png, nullptr);
  }
}

LabelMap load_label_map(const std::filesystem::path& path, const ClassConfig& classes) {
  const DecodedPng png = decode_png(path, false);
  if (png.bit_depth != 8 || png.channels != 1)
    throw Error("label maps must be 8-bit single-channel PNGs: " + path.string());

  LabelMap out(png.height, png.width);
  for (int r = 0; r < png.height; ++r) {
    for (int c = 0; c < png.width; ++c) {
      const int value = png.pixels[static_cast<std::size_t>(r) * png.width + c];
      if (!classes.has_value(value)) {
        throw Error("mask value " + std::to_string(value) + " at (" + std::to_string(r) +
                    ", " + std::to_string(c) + ") not declared in class map: " + path.string());
      }
      out.at(r, c) = static_cast<std::uint8_t>(classes.class_for_value(value));
    }
  }
  return out;
}

void save_label_map(const LabelMap& labels, const ClassConfig& classes,
                    const std::filesystem::path& path) {
  ImagePlane img(labels.height, labels.width, 1);
  // Cache the inverse mapping once; label maps carry few distinct IDs.
  std::map<int, double> inverse;
  for (const auto& [value, cls] : classes.mapping()) {
    if (!inverse.emplace(cls, value / 255.0).second)
      throw Error("class " + std::to_string(cls) +
                  " maps from multiple pixel values; cannot invert");
  }
  for (int r = 0; r < labels.height; ++r) {
    for (int c = 0; c < labels.width; ++c) {
      const auto it = inverse.find(labels.at(r, c));
      if (it == inverse.end())
        throw Error("class " + std::to_string(labels.at(r, c)) + " not present in class map");
      img.at(r, c) = it->second;
    }
  }
  save_image(img, path, 8);
}

std::pair<int, int> png_dimensions(const std::filesystem::path& path) {
  const DecodedPng png = decode_png(path, true);
  return {png.height, png.width};
}

}  // namespace softcp
