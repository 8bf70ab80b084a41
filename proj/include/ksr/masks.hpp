#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ksr/tensor.hpp"

namespace ksr {

/// Cartesian line-mask recipe along the phase-encode (row) dimension.
struct MaskSpec {
  int height = 0;
  int width = 0;
  int acceleration = 4;   // undersampling factor R
  int acs_lines = 0;      // fully sampled central rows
  enum class Kind { RandomLine, EquispacedLine };
  Kind kind = Kind::RandomLine;
  std::uint64_t seed = 0;
};

/// Recipe for the self-supervision input subset.
struct LambdaSpec {
  double target_ratio = 0.5;
  int low_freq_band = 0;  // half-width of the central band whose acquired
                          // rows are always selected
  std::uint64_t seed = 0;
};

struct MaskStats {
  long kept_count = 0;
  double kept_ratio = 0.0;
  double low_freq_coverage = 0.0;
};

// Line mask with all ACS rows kept and max(ceil(H/R), acs_lines) kept rows
// total. Deterministic in the spec.
Mask gen_omega(const MaskSpec& spec);

// Row subset of omega: every acquired row inside the central band plus
// randomly drawn high-frequency rows, round(target_ratio * acquired_rows)
// rows in total. Deterministic in (omega, spec).
Mask gen_lambda(const Mask& omega, const LambdaSpec& spec);

// `count` pairwise-distinct masks sharing base's geometry, reseeded per slot.
std::vector<Mask> gen_mask_bank(const MaskSpec& base, int count,
                                std::uint64_t seed);

// Coverage is evaluated on the central row band of the given half-width
// (rows [H/2 - b, H/2 + b - 1]); an empty band counts as fully covered.
MaskStats mask_stats(const Mask& mask, int band_half_width);

// Rows with at least one kept point, ascending.
std::vector<int> acquired_rows(const Mask& mask);

// Pointwise OR of two masks.
Mask mask_union(const Mask& a, const Mask& b);

// True when every kept point of `sub` is kept in `super`.
bool is_subset(const Mask& sub, const Mask& super);

// One row index per line, newline separated; for eyeballing masks.
std::string format_row_list(const Mask& mask);

} // namespace ksr
