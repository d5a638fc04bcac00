#include "softcp/manifest.hpp"

#include <fstream>

#include "jsonio.hpp"
#include "softcp/error.hpp"
#include "softcp/version.hpp"

namespace softcp {

using detail::json;

void write_manifest(const std::filesystem::path& path, const ManifestHeader& header,
                    const std::vector<ManifestEntry>& entries) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open manifest for writing: " + path.string());

  json h{{"type", "header"},
         {"tool", header.tool},
         {"version", header.version.empty() ? std::string(kVersion) : header.version},
         {"config", detail::run_config_to_json(header.config)}};
  if (!header.overrides.empty()) h["overrides"] = header.overrides;
  out << h.dump() << '\n';

  for (const ManifestEntry& e : entries) out << detail::entry_to_json(e).dump() << '\n';
  if (!out) throw Error("failed while writing manifest: " + path.string());
}

LoadedManifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open manifest: " + path.string());

  LoadedManifest m;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw Error("manifest line " + std::to_string(lineno) + " is not valid JSON: " +
                  e.what());
    }
    try {
      if (lineno == 1) {
        if (j.value("type", "") != "header")
          throw Error("manifest must start with a header line");
        m.header.tool = j.value("tool", "softcp");
        m.header.version = j.value("version", "");
        m.header.config = detail::run_config_from_json(j.at("config"));
        if (j.contains("overrides"))
          m.header.overrides = j.at("overrides").get<std::map<std::string, std::string>>();
      } else {
        m.entries.push_back(detail::entry_from_json(j));
      }
    } catch (const json::exception& e) {
      throw Error("manifest line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (lineno == 0) throw Error("manifest is empty (missing header): " + path.string());
  return m;
}

}  // namespace softcp
