#pragma once

#include "ksr/tensor.hpp"

namespace ksr {

// Centered orthonormal 2-D DFT: fftshift(fft(ifftshift(x))) / sqrt(H*W).
// Preserves the L2 norm; DC lands at (H/2, W/2).
KSpace fft2c(const ComplexImage& img);

// Exact inverse of fft2c up to floating-point error.
ComplexImage ifft2c(const KSpace& ksp);

// Copies kept points, writes exact zeros elsewhere.
KSpace apply_mask(const KSpace& ksp, const Mask& mask);

// E_omega: mask o fft2c(img). Unkept points are exactly zero.
KSpace encode(const ComplexImage& img, const Mask& mask);

// Adjoint of encode: ifft2c(mask o ksp).
ComplexImage encode_adjoint(const KSpace& ksp, const Mask& mask);

// acquired_k bit-exactly on kept points, recon_k elsewhere.
KSpace data_consistency(const KSpace& recon_k, const KSpace& acquired_k,
                        const Mask& mask);

} // namespace ksr
