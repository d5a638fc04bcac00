#include "softcp/morphology.hpp"

#include <algorithm>

#include "softcp/error.hpp"

namespace softcp {

BinaryMask erode(const BinaryMask& m) {
  BinaryMask out(m.height, m.width);
  for (int r = 0; r < m.height; ++r) {
    for (int c = 0; c < m.width; ++c) {
      std::uint8_t v = 1;
      for (int dr = -1; dr <= 1 && v; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          const int rr = r + dr, cc = c + dc;
          if (rr < 0 || rr >= m.height || cc < 0 || cc >= m.width || !m.at(rr, cc)) {
            v = 0;
            break;
          }
        }
      }
      out.at(r, c) = v;
    }
  }
  return out;
}

BinaryMask dilate(const BinaryMask& m) {
  BinaryMask out(m.height, m.width);
  for (int r = 0; r < m.height; ++r) {
    for (int c = 0; c < m.width; ++c) {
      std::uint8_t v = 0;
      for (int dr = -1; dr <= 1 && !v; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          const int rr = r + dr, cc = c + dc;
          if (rr >= 0 && rr < m.height && cc >= 0 && cc < m.width && m.at(rr, cc)) {
            v = 1;
            break;
          }
        }
      }
      out.at(r, c) = v;
    }
  }
  return out;
}

BinaryMask binarize(const SoftMask& s, double threshold) {
  if (threshold <= 0.0) throw Error("binarize threshold must be positive");
  BinaryMask out(s.height, s.width);
  for (std::size_t i = 0; i < s.weights.size(); ++i)
    out.bits[i] = s.weights[i] > threshold ? 1 : 0;
  return out;
}

ComponentSet connected_components(const BinaryMask& m, std::size_t min_area) {
  if (min_area < 1) throw Error("min_area must be at least 1");

  ComponentSet out;
  std::vector<std::uint8_t> visited(m.bits.size(), 0);
  std::vector<std::pair<int, int>> stack;

  for (int r0 = 0; r0 < m.height; ++r0) {
    for (int c0 = 0; c0 < m.width; ++c0) {
      const std::size_t i0 = static_cast<std::size_t>(r0) * m.width + c0;
      if (!m.bits[i0] || visited[i0]) continue;

      Component comp;
      comp.support = BinaryMask(m.height, m.width);
      int rmin = r0, rmax = r0, cmin = c0, cmax = c0;

      stack.clear();
      stack.emplace_back(r0, c0);
      visited[i0] = 1;
      while (!stack.empty()) {
        const auto [r, c] = stack.back();
        stack.pop_back();
        comp.support.at(r, c) = 1;
        ++comp.area;
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
        cmin = std::min(cmin, c);
        cmax = std::max(cmax, c);
        for (int dr = -1; dr <= 1; ++dr) {
          for (int dc = -1; dc <= 1; ++dc) {
            const int rr = r + dr, cc = c + dc;
            if (rr < 0 || rr >= m.height || cc < 0 || cc >= m.width) continue;
            const std::size_t ii = static_cast<std::size_t>(rr) * m.width + cc;
            if (m.bits[ii] && !visited[ii]) {
              visited[ii] = 1;
              stack.emplace_back(rr, cc);
            }
          }
        }
      }

      if (comp.area < min_area) continue;
      comp.bbox = Rect{rmin, cmin, rmax - rmin + 1, cmax - cmin + 1};
      out.components.push_back(std::move(comp));
    }
  }
  return out;
}

}  // namespace softcp
