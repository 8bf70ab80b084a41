#include "ksr/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "ksr/errors.hpp"

namespace ksr {

namespace {

// Plans are cached per (H, W, direction) for the process lifetime. Planning
// is not thread-safe in FFTW, execution on distinct arrays is; the
// FFTW_UNALIGNED flag keeps the cached plan valid for the std::vector
// storage we execute on.
std::mutex g_plan_mutex;
std::map<std::tuple<int, int, int>, fftw_plan> g_plans;

fftw_plan plan_for(int h, int w, int sign) {
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto key = std::make_tuple(h, w, sign);
  auto it = g_plans.find(key);
  if (it != g_plans.end()) return it->second;
  fftw_complex* in = fftw_alloc_complex(static_cast<std::size_t>(h) * w);
  fftw_complex* out = fftw_alloc_complex(static_cast<std::size_t>(h) * w);
  fftw_plan plan = fftw_plan_dft_2d(h, w, in, out, sign,
                                    FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(in);
  fftw_free(out);
  g_plans.emplace(key, plan);
  return plan;
}

void raw_dft(const std::vector<cdouble>& in, std::vector<cdouble>& out, int h,
             int w, int sign) {
  fftw_plan plan = plan_for(h, w, sign);
  fftw_execute_dft(
      plan,
      reinterpret_cast<fftw_complex*>(const_cast<cdouble*>(in.data())),
      reinterpret_cast<fftw_complex*>(out.data()));
}

// fftshift moves index 0 to H/2; ifftshift moves H/2 to 0. They coincide for
// even sizes and are mutual inverses for odd sizes.
std::vector<cdouble> fftshift2(const std::vector<cdouble>& in, int h, int w) {
  std::vector<cdouble> out(in.size());
  int sh = h / 2, sw = w / 2;
  for (int r = 0; r < h; ++r) {
    int rr = (r + sh) % h;
    for (int c = 0; c < w; ++c) {
      out[static_cast<std::size_t>(rr) * w + (c + sw) % w] =
          in[static_cast<std::size_t>(r) * w + c];
    }
  }
  return out;
}

std::vector<cdouble> ifftshift2(const std::vector<cdouble>& in, int h, int w) {
  std::vector<cdouble> out(in.size());
  int sh = h / 2, sw = w / 2;
  for (int r = 0; r < h; ++r) {
    int rr = (r + sh) % h;
    for (int c = 0; c < w; ++c) {
      out[static_cast<std::size_t>(r) * w + c] =
          in[static_cast<std::size_t>(rr) * w + (c + sw) % w];
    }
  }
  return out;
}

} // namespace

KSpace fft2c(const ComplexImage& img) {
  require_valid(img, "fft2c");
  const int h = img.height, w = img.width;
  std::vector<cdouble> shifted = ifftshift2(img.data, h, w);
  std::vector<cdouble> raw(shifted.size());
  raw_dft(shifted, raw, h, w, FFTW_FORWARD);
  const double scale = 1.0 / std::sqrt(static_cast<double>(h) * w);
  for (cdouble& z : raw) z *= scale;
  KSpace out(h, w);
  out.data = fftshift2(raw, h, w);
  return out;
}

ComplexImage ifft2c(const KSpace& ksp) {
  require_valid(ksp, "ifft2c");
  const int h = ksp.height, w = ksp.width;
  std::vector<cdouble> shifted = ifftshift2(ksp.data, h, w);
  std::vector<cdouble> raw(shifted.size());
  raw_dft(shifted, raw, h, w, FFTW_BACKWARD);
  const double scale = 1.0 / std::sqrt(static_cast<double>(h) * w);
  for (cdouble& z : raw) z *= scale;
  ComplexImage out(h, w);
  out.data = fftshift2(raw, h, w);
  return out;
}

KSpace apply_mask(const KSpace& ksp, const Mask& mask) {
  require_same_shape(ksp, mask, "apply_mask");
  KSpace out(ksp.height, ksp.width);
  for (std::size_t i = 0; i < ksp.data.size(); ++i) {
    out.data[i] = mask.kept[i] ? ksp.data[i] : cdouble{0.0, 0.0};
  }
  return out;
}

KSpace encode(const ComplexImage& img, const Mask& mask) {
  require_same_shape(img, mask, "encode");
  require_valid(mask, "encode");
  return apply_mask(fft2c(img), mask);
}

ComplexImage encode_adjoint(const KSpace& ksp, const Mask& mask) {
  require_same_shape(ksp, mask, "encode_adjoint");
  require_valid(mask, "encode_adjoint");
  return ifft2c(apply_mask(ksp, mask));
}

KSpace data_consistency(const KSpace& recon_k, const KSpace& acquired_k,
                        const Mask& mask) {
  require_same_shape(recon_k, acquired_k, "data_consistency");
  require_same_shape(recon_k, mask, "data_consistency");
  require_valid(mask, "data_consistency");
  KSpace out = recon_k;
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    if (mask.kept[i]) out.data[i] = acquired_k.data[i];
  }
  return out;
}

} // namespace ksr
