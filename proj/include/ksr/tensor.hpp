#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

namespace ksr {

using cdouble = std::complex<double>;

/// H x W grid of complex samples in the image domain, row-major.
struct ComplexImage {
  int height = 0;
  int width = 0;
  std::vector<cdouble> data;

  ComplexImage() = default;
  ComplexImage(int h, int w)
      : height(h), width(w), data(static_cast<std::size_t>(h) * w) {}

  std::size_t size() const { return data.size(); }
  cdouble& at(int r, int c) { return data[static_cast<std::size_t>(r) * width + c]; }
  const cdouble& at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * width + c];
  }
  bool operator==(const ComplexImage&) const = default;
};

/// H x W grid of complex samples in the frequency domain, DC at
/// (height/2, width/2), row-major.
struct KSpace {
  int height = 0;
  int width = 0;
  std::vector<cdouble> data;

  KSpace() = default;
  KSpace(int h, int w)
      : height(h), width(w), data(static_cast<std::size_t>(h) * w) {}

  std::size_t size() const { return data.size(); }
  cdouble& at(int r, int c) { return data[static_cast<std::size_t>(r) * width + c]; }
  const cdouble& at(int r, int c) const {
    return data[static_cast<std::size_t>(r) * width + c];
  }
  bool operator==(const KSpace&) const = default;
};

/// H x W boolean sampling pattern. kept[i] != 0 marks an acquired point.
struct Mask {
  int height = 0;
  int width = 0;
  std::vector<std::uint8_t> kept;

  Mask() = default;
  Mask(int h, int w)
      : height(h), width(w), kept(static_cast<std::size_t>(h) * w, 0) {}

  static Mask full(int h, int w) {
    Mask m(h, w);
    std::fill(m.kept.begin(), m.kept.end(), std::uint8_t{1});
    return m;
  }

  std::size_t size() const { return kept.size(); }
  std::uint8_t& at(int r, int c) { return kept[static_cast<std::size_t>(r) * width + c]; }
  std::uint8_t at(int r, int c) const {
    return kept[static_cast<std::size_t>(r) * width + c];
  }
  long kept_count() const;
  bool operator==(const Mask&) const = default;
};

bool all_finite(const ComplexImage& img);
bool all_finite(const KSpace& ksp);

// Throwing validators; `who` names the operation for the error message.
void require_valid(const ComplexImage& img, std::string_view who);
void require_valid(const KSpace& ksp, std::string_view who);
void require_valid(const Mask& mask, std::string_view who);
void require_same_shape(int h1, int w1, int h2, int w2, std::string_view who);

template <typename A, typename B>
void require_same_shape(const A& a, const B& b, std::string_view who) {
  require_same_shape(a.height, a.width, b.height, b.width, who);
}

} // namespace ksr
