#pragma once

#include <filesystem>
#include <memory>
#include <vector>

#include "ksr/fourier.hpp"
#include "ksr/tensor.hpp"

namespace ksr {

struct ReconConfig {
  double reg_weight = 1e-3;  // lambda, weight of the l1 term
  int num_iters = 50;
  enum class Transform { Identity, Haar };
  Transform transform = Transform::Haar;
  int haar_levels = 2;
  double step_size = 1.0;  // must stay <= 1: ||E^H E|| = 1 for a binary mask
                           // under the orthonormal DFT
  void validate() const;
};

/// Per-phase scalar parameters of the unrolled reconstructor.
struct UnrolledParams {
  struct Phase {
    double rho = 1.0;    // gradient step size
    double theta = 0.01; // soft threshold
    bool operator==(const Phase&) const = default;
  };
  std::vector<Phase> phases;

  static UnrolledParams init_default(int num_phases);
  int num_phases() const { return static_cast<int>(phases.size()); }
  void validate() const;
  bool operator==(const UnrolledParams&) const = default;
};

struct PhaseGrad {
  double d_rho = 0.0;
  double d_theta = 0.0;
};

ComplexImage zero_filled(const KSpace& y, const Mask& omega);

// v * max(|v| - theta, 0) / |v|; zero for v = 0. Phase preserving.
cdouble soft_threshold(cdouble v, double theta);

// 1/2 * sum_{p in omega} |F(x)_p - y_p|^2 + reg_weight * ||Psi x||_1
double ista_objective(const ComplexImage& x, const KSpace& y,
                      const Mask& omega, const ReconConfig& cfg);

// Proximal gradient solver for the masked-DFT l1 problem, starting from the
// zero-filled image. The objective is checked to be non-increasing every
// iteration; an increase beyond 1e-9 means a broken adjoint and throws.
ComplexImage ista_classical(const KSpace& y, const Mask& omega,
                            const ReconConfig& cfg);

/// Intermediates of one unrolled forward pass, sufficient for exact
/// reverse-mode differentiation with respect to the per-phase scalars.
struct ForwardTape {
  KSpace y_masked;
  Mask omega;
  UnrolledParams params;
  ReconConfig cfg;
  std::vector<ComplexImage> x_in;  // iterate entering phase k
  std::vector<ComplexImage> grad;  // E^H(E x - y) at phase k
  std::vector<ComplexImage> wav;   // transform coefficients before threshold
  ComplexImage x_out;
};

std::pair<ComplexImage, ForwardTape> unrolled_forward(const KSpace& y,
                                                      const Mask& omega,
                                                      const UnrolledParams& params,
                                                      const ReconConfig& cfg);

// Exact analytic gradients of a scalar loss with respect to every (rho,
// theta), given dL/dx_out in the convention dL = Re(sum gbar * conj(dx)).
// At the threshold kink |v| = theta the zero-side subgradient is used.
std::vector<PhaseGrad> unrolled_backward(const ForwardTape& tape,
                                         const ComplexImage& loss_grad);

// Versioned binary checkpoint: magic "KRFP", u16 version, u32 phase count,
// then (rho, theta) little-endian f64 pairs.
void save_checkpoint(const std::filesystem::path& path,
                     const UnrolledParams& params);
UnrolledParams load_checkpoint(const std::filesystem::path& path);

struct Reconstructor {
  virtual ~Reconstructor() = default;
  virtual ComplexImage reconstruct(const KSpace& y, const Mask& omega) const = 0;
  virtual std::unique_ptr<Reconstructor> clone() const = 0;
};

struct ZeroFilledReconstructor final : Reconstructor {
  ComplexImage reconstruct(const KSpace& y, const Mask& omega) const override;
  std::unique_ptr<Reconstructor> clone() const override;
};

struct IstaReconstructor final : Reconstructor {
  explicit IstaReconstructor(ReconConfig cfg) : cfg(cfg) {}
  ReconConfig cfg;
  ComplexImage reconstruct(const KSpace& y, const Mask& omega) const override;
  std::unique_ptr<Reconstructor> clone() const override;
};

struct UnrolledReconstructor final : Reconstructor {
  UnrolledReconstructor(UnrolledParams params, ReconConfig cfg)
      : params(std::move(params)), cfg(cfg) {}
  UnrolledParams params;
  ReconConfig cfg;
  ComplexImage reconstruct(const KSpace& y, const Mask& omega) const override;
  std::unique_ptr<Reconstructor> clone() const override;
};

} // namespace ksr
