#include "ksr/tensor.hpp"

#include <cmath>
#include <string>

#include "ksr/errors.hpp"

namespace ksr {

namespace {

bool finite_range(const std::vector<cdouble>& v) {
  for (const cdouble& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  }
  return true;
}

void check_dims(int h, int w, std::size_t len, std::string_view who) {
  if (h <= 0 || w <= 0) {
    throw DimensionError(std::string(who) + ": non-positive dimensions " +
                         std::to_string(h) + "x" + std::to_string(w));
  }
  if (len != static_cast<std::size_t>(h) * static_cast<std::size_t>(w)) {
    throw DimensionError(std::string(who) + ": data length " +
                         std::to_string(len) + " does not match " +
                         std::to_string(h) + "x" + std::to_string(w));
  }
}

} // namespace

long Mask::kept_count() const {
  long n = 0;
  for (std::uint8_t k : kept) n += (k != 0);
  return n;
}

bool all_finite(const ComplexImage& img) { return finite_range(img.data); }
bool all_finite(const KSpace& ksp) { return finite_range(ksp.data); }

void require_valid(const ComplexImage& img, std::string_view who) {
  check_dims(img.height, img.width, img.data.size(), who);
  if (!all_finite(img)) {
    throw InvalidInputError(std::string(who) + ": non-finite image sample");
  }
}

void require_valid(const KSpace& ksp, std::string_view who) {
  check_dims(ksp.height, ksp.width, ksp.data.size(), who);
  if (!all_finite(ksp)) {
    throw InvalidInputError(std::string(who) + ": non-finite k-space sample");
  }
}

void require_valid(const Mask& mask, std::string_view who) {
  check_dims(mask.height, mask.width, mask.kept.size(), who);
  if (mask.kept_count() == 0) {
    throw InvalidInputError(std::string(who) + ": mask keeps no points");
  }
}

void require_same_shape(int h1, int w1, int h2, int w2, std::string_view who) {
  if (h1 != h2 || w1 != w2) {
    throw DimensionError(std::string(who) + ": shape mismatch " +
                         std::to_string(h1) + "x" + std::to_string(w1) +
                         " vs " + std::to_string(h2) + "x" +
                         std::to_string(w2));
  }
}

} // namespace ksr
