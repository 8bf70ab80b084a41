#pragma once

#include "ksr/tensor.hpp"

namespace ksr {

// Orthonormal multilevel 2-D Haar transform. Coefficients are returned in
// the usual nested layout: approximation block top-left, detail blocks
// around it, recursively. Requires H and W divisible by 2^levels.
ComplexImage haar_forward(const ComplexImage& img, int levels);
ComplexImage haar_inverse(const ComplexImage& coeffs, int levels);

} // namespace ksr
