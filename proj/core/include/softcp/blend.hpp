#pragma once

#include <string>
#include <variant>

#include "softcp/geometry.hpp"
#include "softcp/raster.hpp"

namespace softcp {

// Compositing a lesion patch into a background. The main route is the
// soft blend: I_syn = I_soft + (1 - S) * I_g inside the patch window,
// with I_soft = S * patch. Three comparison modes are provided: hard
// mask-select paste, Gaussian-blurred-mask paste, and gradient-domain
// (Poisson) paste.

struct SoftBlend {
  friend bool operator==(const SoftBlend&, const SoftBlend&) = default;
};
struct HardBlend {
  friend bool operator==(const HardBlend&, const HardBlend&) = default;
};
struct GaussianBlend {
  double sigma = 2.0;  // blur radius of the mask, in pixels
  friend bool operator==(const GaussianBlend&, const GaussianBlend&) = default;
};
struct PoissonBlend {
  double tolerance = 1e-6;
  int max_iterations = 10000;
  friend bool operator==(const PoissonBlend&, const PoissonBlend&) = default;
};

using BlendMode = std::variant<SoftBlend, HardBlend, GaussianBlend, PoissonBlend>;

std::string blend_mode_name(const BlendMode& mode);

/// Multiplies the patch by the weight map, per pixel and channel.
ImagePlane soft_copy(const ImagePlane& patch, const SoftMask& s);

/// Composites a soft-copied patch into the background at the offset:
/// inside the patch window output = i_soft + (1 - s) * background, and
/// the background is untouched elsewhere. The result is clamped to
/// [0,1]; with a binary weight map this degenerates to a bit-exact hard
/// copy-paste.
ImagePlane soft_paste(const ImagePlane& i_soft, const SoftMask& s,
                      const ImagePlane& background, PasteOffset at);

/// Pastes the lesion's binary mask into a label map. Lesion pixels take
/// lesion_class, overwriting any prior label; everything else persists.
LabelMap merge_labels(const BinaryMask& m_p, int lesion_class, const LabelMap& m_g,
                      PasteOffset at);

/// Convolves the mask with a normalized Gaussian kernel of radius
/// ceil(3*sigma), replicate padding, so constant masks are fixed points.
SoftMask gaussian_mask(const BinaryMask& m, double sigma);

/// Gradient-domain paste: solves the discrete Poisson equation over the
/// omega pixels with guidance gradients taken from the patch and
/// Dirichlet values from the background, by conjugate-gradient iteration
/// to residual 2-norm <= tol per channel. Pixels outside omega are
/// untouched; the solved region is clamped to [0,1] since gradient-domain
/// solutions can exit the sample range.
///
/// Omega must keep one pixel of clearance from both the patch border
/// (the guidance needs every 4-neighbor) and the background border.
/// Throws on non-convergence within max_iter, reporting the residual.
ImagePlane poisson_paste(const ImagePlane& patch, const BinaryMask& omega,
                         const ImagePlane& background, PasteOffset at, double tol,
                         int max_iter);

/// Runs the blend selected by `mode`: soft uses the soft weight map,
/// hard uses the binary mask, gaussian blurs the binary mask, poisson
/// solves over the binary mask region.
ImagePlane blend_lesion(const ImagePlane& patch, const BinaryMask& mask,
                        const SoftMask& soft, const ImagePlane& background,
                        PasteOffset at, const BlendMode& mode);

}  // namespace softcp
