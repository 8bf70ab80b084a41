#include "ksr/wavelet.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "ksr/errors.hpp"

namespace ksr {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_divisible(int h, int w, int levels) {
  if (levels < 1) throw DimensionError("haar: levels must be >= 1");
  const int factor = 1 << levels;
  if (h % factor != 0 || w % factor != 0) {
    throw DimensionError("haar: " + std::to_string(h) + "x" +
                         std::to_string(w) + " not divisible by 2^" +
                         std::to_string(levels));
  }
}

// One forward pass over the top-left hb x wb block: rows then columns.
void forward_block(ComplexImage& a, int hb, int wb) {
  std::vector<cdouble> tmp(static_cast<std::size_t>(std::max(hb, wb)));
  for (int r = 0; r < hb; ++r) {
    for (int c = 0; c < wb / 2; ++c) {
      cdouble x0 = a.at(r, 2 * c), x1 = a.at(r, 2 * c + 1);
      tmp[c] = (x0 + x1) * kInvSqrt2;
      tmp[wb / 2 + c] = (x0 - x1) * kInvSqrt2;
    }
    for (int c = 0; c < wb; ++c) a.at(r, c) = tmp[c];
  }
  for (int c = 0; c < wb; ++c) {
    for (int r = 0; r < hb / 2; ++r) {
      cdouble x0 = a.at(2 * r, c), x1 = a.at(2 * r + 1, c);
      tmp[r] = (x0 + x1) * kInvSqrt2;
      tmp[hb / 2 + r] = (x0 - x1) * kInvSqrt2;
    }
    for (int r = 0; r < hb; ++r) a.at(r, c) = tmp[r];
  }
}

void inverse_block(ComplexImage& a, int hb, int wb) {
  std::vector<cdouble> tmp(static_cast<std::size_t>(std::max(hb, wb)));
  for (int c = 0; c < wb; ++c) {
    for (int r = 0; r < hb / 2; ++r) {
      cdouble s = a.at(r, c), d = a.at(hb / 2 + r, c);
      tmp[2 * r] = (s + d) * kInvSqrt2;
      tmp[2 * r + 1] = (s - d) * kInvSqrt2;
    }
    for (int r = 0; r < hb; ++r) a.at(r, c) = tmp[r];
  }
  for (int r = 0; r < hb; ++r) {
    for (int c = 0; c < wb / 2; ++c) {
      cdouble s = a.at(r, c), d = a.at(r, wb / 2 + c);
      tmp[2 * c] = (s + d) * kInvSqrt2;
      tmp[2 * c + 1] = (s - d) * kInvSqrt2;
    }
    for (int c = 0; c < wb; ++c) a.at(r, c) = tmp[c];
  }
}

} // namespace

ComplexImage haar_forward(const ComplexImage& img, int levels) {
  require_valid(img, "haar_forward");
  check_divisible(img.height, img.width, levels);
  ComplexImage out = img;
  for (int l = 0; l < levels; ++l) {
    forward_block(out, img.height >> l, img.width >> l);
  }
  return out;
}

ComplexImage haar_inverse(const ComplexImage& coeffs, int levels) {
  require_valid(coeffs, "haar_inverse");
  check_divisible(coeffs.height, coeffs.width, levels);
  ComplexImage out = coeffs;
  for (int l = levels - 1; l >= 0; --l) {
    inverse_block(out, coeffs.height >> l, coeffs.width >> l);
  }
  return out;
}

} // namespace ksr
