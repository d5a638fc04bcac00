#include "softcp/blend.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "separable_blur.hpp"
#include "softcp/error.hpp"

namespace softcp {

namespace {

void check_patch_window(int patch_h, int patch_w, const ImagePlane& bg, PasteOffset at) {
  if (at.row < 0 || at.col < 0 || at.row + patch_h > bg.height ||
      at.col + patch_w > bg.width) {
    throw Error("patch window overflows the background at offset (" +
                std::to_string(at.row) + ", " + std::to_string(at.col) + ")");
  }
}

}  // namespace

std::string blend_mode_name(const BlendMode& mode) {
  return std::visit(
      [](const auto& m) -> std::string {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SoftBlend>) return "soft";
        if constexpr (std::is_same_v<T, HardBlend>) return "hard";
        if constexpr (std::is_same_v<T, GaussianBlend>) return "gaussian";
        if constexpr (std::is_same_v<T, PoissonBlend>) return "poisson";
      },
      mode);
}

ImagePlane soft_copy(const ImagePlane& patch, const SoftMask& s) {
  if (patch.height != s.height || patch.width != s.width)
    throw Error("soft_copy: patch and soft-mask dimensions differ");
  ImagePlane out = patch;
  for (int r = 0; r < patch.height; ++r)
    for (int c = 0; c < patch.width; ++c)
      for (int ch = 0; ch < patch.channels; ++ch) out.at(r, c, ch) = s.at(r, c) * patch.at(r, c, ch);
  return out;
}

ImagePlane soft_paste(const ImagePlane& i_soft, const SoftMask& s,
                      const ImagePlane& background, PasteOffset at) {
  if (i_soft.height != s.height || i_soft.width != s.width)
    throw Error("soft_paste: patch and soft-mask dimensions differ");
  if (i_soft.channels != background.channels)
    throw Error("soft_paste: channel counts differ");
  check_patch_window(i_soft.height, i_soft.width, background, at);

  ImagePlane out = background;
  for (int r = 0; r < i_soft.height; ++r) {
    for (int c = 0; c < i_soft.width; ++c) {
      const double w = s.at(r, c);
      for (int ch = 0; ch < i_soft.channels; ++ch) {
        const double v = i_soft.at(r, c, ch) + (1.0 - w) * background.at(at.row + r, at.col + c, ch);
        out.at(at.row + r, at.col + c, ch) = std::clamp(v, 0.0, 1.0);
      }
    }
  }
  return out;
}

LabelMap merge_labels(const BinaryMask& m_p, int lesion_class, const LabelMap& m_g,
                      PasteOffset at) {
  if (at.row < 0 || at.col < 0 || at.row + m_p.height > m_g.height ||
      at.col + m_p.width > m_g.width) {
    throw Error("merge_labels: mask window overflows the label map");
  }
  LabelMap out = m_g;
  for (int r = 0; r < m_p.height; ++r)
    for (int c = 0; c < m_p.width; ++c)
      if (m_p.at(r, c)) out.at(at.row + r, at.col + c) = static_cast<std::uint8_t>(lesion_class);
  return out;
}

SoftMask gaussian_mask(const BinaryMask& m, double sigma) {
  if (sigma <= 0.0) throw Error("gaussian_mask: sigma must be positive");
  SoftMask out = to_soft_mask(m);
  detail::gaussian_blur_inplace(out.weights, m.height, m.width, 1, sigma);
  for (double& w : out.weights) w = std::clamp(w, 0.0, 1.0);
  return out;
}

ImagePlane poisson_paste(const ImagePlane& patch, const BinaryMask& omega,
                         const ImagePlane& background, PasteOffset at, double tol,
                         int max_iter) {
  if (patch.height != omega.height || patch.width != omega.width)
    throw Error("poisson_paste: patch and omega dimensions differ");
  if (patch.channels != background.channels)
    throw Error("poisson_paste: channel counts differ");
  if (tol <= 0.0) throw Error("poisson_paste: tolerance must be positive");
  check_patch_window(patch.height, patch.width, background, at);

  // Collect unknowns and index them.
  std::vector<int> index(omega.bits.size(), -1);
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < omega.height; ++r) {
    for (int c = 0; c < omega.width; ++c) {
      if (!omega.at(r, c)) continue;
      if (r == 0 || c == 0 || r == omega.height - 1 || c == omega.width - 1)
        throw Error("poisson_paste: omega touches the patch border; expand the patch window");
      const int br = at.row + r, bc = at.col + c;
      if (br == 0 || bc == 0 || br == background.height - 1 || bc == background.width - 1)
        throw Error("poisson_paste: omega touches the background border");
      index[static_cast<std::size_t>(r) * omega.width + c] = static_cast<int>(cells.size());
      cells.emplace_back(r, c);
    }
  }

  ImagePlane out = background;
  const std::size_t n = cells.size();
  if (n == 0) return out;

  constexpr int kOffsets[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  auto unknown_at = [&](int r, int c) -> int {
    return index[static_cast<std::size_t>(r) * omega.width + c];
  };

  // 4f(x) - sum_{y in omega} f(y), the Dirichlet Laplacian over omega.
  auto apply_laplacian = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto [r, c] = cells[k];
      double acc = 4.0 * x[k];
      for (const auto& d : kOffsets) {
        const int nk = unknown_at(r + d[0], c + d[1]);
        if (nk >= 0) acc -= x[nk];
      }
      y[k] = acc;
    }
  };

  std::vector<double> b(n), x(n), r_vec(n), p(n), q(n);

  for (int ch = 0; ch < patch.channels; ++ch) {
    // Right-hand side: guidance Laplacian from the patch plus the
    // Dirichlet contribution of boundary background pixels.
    for (std::size_t k = 0; k < n; ++k) {
      const auto [r, c] = cells[k];
      double acc = 4.0 * patch.at(r, c, ch);
      for (const auto& d : kOffsets) {
        const int rr = r + d[0], cc = c + d[1];
        acc -= patch.at(rr, cc, ch);
        if (unknown_at(rr, cc) < 0) acc += background.at(at.row + rr, at.col + cc, ch);
      }
      b[k] = acc;
      x[k] = background.at(at.row + r, at.col + c, ch);  // warm start
    }

    auto true_residual = [&]() {
      apply_laplacian(x, q);
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        r_vec[k] = b[k] - q[k];
        s += r_vec[k] * r_vec[k];
      }
      return std::sqrt(s);
    };

    int used = 0;
    double res = true_residual();
    // Outer restarts guard against drift between the recurrence residual
    // and the true one; each restart recomputes r from scratch.
    while (res > tol) {
      p = r_vec;
      double rs = res * res;
      bool restart = false;
      while (used < max_iter && !restart) {
        apply_laplacian(p, q);
        double pq = 0.0;
        for (std::size_t k = 0; k < n; ++k) pq += p[k] * q[k];
        const double step = rs / pq;
        for (std::size_t k = 0; k < n; ++k) {
          x[k] += step * p[k];
          r_vec[k] -= step * q[k];
        }
        ++used;
        double rs_new = 0.0;
        for (std::size_t k = 0; k < n; ++k) rs_new += r_vec[k] * r_vec[k];
        if (std::sqrt(rs_new) <= 0.5 * tol) {
          restart = true;  // verify against the true residual
        } else {
          const double beta = rs_new / rs;
          rs = rs_new;
          for (std::size_t k = 0; k < n; ++k) p[k] = r_vec[k] + beta * p[k];
        }
      }
      res = true_residual();
      if (used >= max_iter && res > tol) {
        throw Error("poisson_paste: no convergence after " + std::to_string(max_iter) +
                    " iterations (residual " + std::to_string(res) + ")");
      }
    }

    for (std::size_t k = 0; k < n; ++k) {
      const auto [r, c] = cells[k];
      out.at(at.row + r, at.col + c, ch) = std::clamp(x[k], 0.0, 1.0);
    }
  }
  return out;
}

ImagePlane blend_lesion(const ImagePlane& patch, const BinaryMask& mask,
                        const SoftMask& soft, const ImagePlane& background,
                        PasteOffset at, const BlendMode& mode) {
  return std::visit(
      [&](const auto& m) -> ImagePlane {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, SoftBlend>) {
          return soft_paste(soft_copy(patch, soft), soft, background, at);
        } else if constexpr (std::is_same_v<T, HardBlend>) {
          const SoftMask hard = to_soft_mask(mask);
          return soft_paste(soft_copy(patch, hard), hard, background, at);
        } else if constexpr (std::is_same_v<T, GaussianBlend>) {
          const SoftMask blurred = gaussian_mask(mask, m.sigma);
          return soft_paste(soft_copy(patch, blurred), blurred, background, at);
        } else {
          return poisson_paste(patch, mask, background, at, m.tolerance, m.max_iterations);
        }
      },
      mode);
}

}  // namespace softcp
