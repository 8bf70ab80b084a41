#include "ksr/masks.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "ksr/errors.hpp"
#include "ksr/rng.hpp"

namespace ksr {

namespace {

constexpr std::uint64_t kOmegaTag = 0x6f6d656761; // "omega"
constexpr std::uint64_t kBankTag = 0x62616e6b;    // "bank"

void validate_spec(const MaskSpec& spec) {
  if (spec.height <= 0 || spec.width <= 0) {
    throw DimensionError("gen_omega: non-positive mask dimensions");
  }
  if (spec.acceleration < 1) {
    throw InfeasibleSpecError("gen_omega: acceleration must be >= 1");
  }
  if (spec.acceleration > spec.height) {
    throw InfeasibleSpecError("gen_omega: acceleration " +
                              std::to_string(spec.acceleration) +
                              " exceeds height " + std::to_string(spec.height));
  }
  if (spec.acs_lines < 0 || spec.acs_lines > spec.height) {
    throw InfeasibleSpecError("gen_omega: acs_lines out of range");
  }
}

// ACS band: acs consecutive rows with the DC row (H/2) inside.
std::pair<int, int> acs_range(int height, int acs_lines) {
  int start = height / 2 - acs_lines / 2;
  return {start, start + acs_lines};
}

void keep_row(Mask& m, const Mask& source, int row) {
  for (int c = 0; c < m.width; ++c) m.at(row, c) = source.at(row, c);
}

} // namespace

Mask gen_omega(const MaskSpec& spec) {
  validate_spec(spec);
  const int h = spec.height, w = spec.width;
  const int total = std::max((h + spec.acceleration - 1) / spec.acceleration,
                             spec.acs_lines);
  auto [acs_lo, acs_hi] = acs_range(h, spec.acs_lines);

  std::vector<int> rows;
  for (int r = acs_lo; r < acs_hi; ++r) rows.push_back(r);

  std::vector<int> candidates;
  for (int r = 0; r < h; ++r) {
    if (r < acs_lo || r >= acs_hi) candidates.push_back(r);
  }

  const int need = total - spec.acs_lines;
  if (need > 0) {
    if (spec.kind == MaskSpec::Kind::RandomLine) {
      Rng rng(derive_seed(spec.seed, {kOmegaTag}));
      rng.shuffle(candidates);
      rows.insert(rows.end(), candidates.begin(), candidates.begin() + need);
    } else {
      // evenly spaced over the non-ACS rows, rotated by the seed so
      // different seeds still give different masks
      const std::size_t n = candidates.size();
      const std::size_t offset = n ? spec.seed % n : 0;
      for (int i = 0; i < need; ++i) {
        std::size_t idx = (offset + static_cast<std::size_t>(i) * n /
                                        static_cast<std::size_t>(need)) %
                          n;
        rows.push_back(candidates[idx]);
      }
    }
  }

  Mask m(h, w);
  for (int r : rows) {
    for (int c = 0; c < w; ++c) m.at(r, c) = 1;
  }
  return m;
}

Mask gen_lambda(const Mask& omega, const LambdaSpec& spec) {
  require_valid(omega, "gen_lambda");
  if (!(spec.target_ratio > 0.0 && spec.target_ratio < 1.0)) {
    throw InfeasibleSpecError("gen_lambda: target_ratio must lie in (0,1)");
  }
  if (spec.low_freq_band < 0 || spec.low_freq_band > omega.height / 2) {
    throw InfeasibleSpecError("gen_lambda: low_freq_band out of range");
  }

  const std::vector<int> acq = acquired_rows(omega);
  const int center = omega.height / 2;
  const int band_lo = center - spec.low_freq_band;
  const int band_hi = center + spec.low_freq_band; // exclusive

  std::vector<int> mandatory, pool;
  for (int r : acq) {
    if (r >= band_lo && r < band_hi) {
      mandatory.push_back(r);
    } else {
      pool.push_back(r);
    }
  }

  const long target = std::lround(spec.target_ratio *
                                  static_cast<double>(acq.size()));
  if (target < static_cast<long>(mandatory.size())) {
    throw InfeasibleRatioError(
        "gen_lambda: target row count " + std::to_string(target) +
        " is below the " + std::to_string(mandatory.size()) +
        " mandatory low-frequency rows; shrink low_freq_band");
  }

  const long need = target - static_cast<long>(mandatory.size());
  Rng rng(spec.seed);
  rng.shuffle(pool);

  Mask lambda(omega.height, omega.width);
  for (int r : mandatory) keep_row(lambda, omega, r);
  for (long i = 0; i < need; ++i) keep_row(lambda, omega, pool[i]);
  return lambda;
}

std::vector<Mask> gen_mask_bank(const MaskSpec& base, int count,
                                std::uint64_t seed) {
  if (count < 1) {
    throw InfeasibleSpecError("gen_mask_bank: count must be >= 1");
  }
  std::vector<Mask> bank;
  bank.reserve(count);
  std::uint64_t salt = 0;
  for (int i = 0; i < count; ++i) {
    MaskSpec spec = base;
    Mask m;
    // reseed until distinct from earlier entries (bounded retry)
    for (;;) {
      spec.seed = derive_seed(seed, {kBankTag, static_cast<std::uint64_t>(i), salt});
      m = gen_omega(spec);
      bool duplicate = false;
      for (const Mask& prev : bank) {
        if (prev == m) { duplicate = true; break; }
      }
      if (!duplicate) break;
      if (++salt > 64ull * static_cast<std::uint64_t>(count)) {
        throw InfeasibleSpecError(
            "gen_mask_bank: cannot generate " + std::to_string(count) +
            " distinct masks for this spec");
      }
    }
    bank.push_back(std::move(m));
  }
  return bank;
}

MaskStats mask_stats(const Mask& mask, int band_half_width) {
  require_valid(mask, "mask_stats");
  MaskStats s;
  s.kept_count = mask.kept_count();
  s.kept_ratio = static_cast<double>(s.kept_count) /
                 static_cast<double>(mask.size());
  const int center = mask.height / 2;
  const int lo = std::max(0, center - band_half_width);
  const int hi = std::min(mask.height, center + band_half_width);
  long band_total = static_cast<long>(hi - lo) * mask.width;
  if (band_total <= 0) {
    s.low_freq_coverage = 1.0;
    return s;
  }
  long band_kept = 0;
  for (int r = lo; r < hi; ++r) {
    for (int c = 0; c < mask.width; ++c) band_kept += (mask.at(r, c) != 0);
  }
  s.low_freq_coverage =
      static_cast<double>(band_kept) / static_cast<double>(band_total);
  return s;
}

std::vector<int> acquired_rows(const Mask& mask) {
  std::vector<int> rows;
  for (int r = 0; r < mask.height; ++r) {
    for (int c = 0; c < mask.width; ++c) {
      if (mask.at(r, c)) {
        rows.push_back(r);
        break;
      }
    }
  }
  return rows;
}

Mask mask_union(const Mask& a, const Mask& b) {
  require_same_shape(a, b, "mask_union");
  Mask out(a.height, a.width);
  for (std::size_t i = 0; i < out.kept.size(); ++i) {
    out.kept[i] = (a.kept[i] || b.kept[i]) ? 1 : 0;
  }
  return out;
}

bool is_subset(const Mask& sub, const Mask& super) {
  require_same_shape(sub, super, "is_subset");
  for (std::size_t i = 0; i < sub.kept.size(); ++i) {
    if (sub.kept[i] && !super.kept[i]) return false;
  }
  return true;
}

std::string format_row_list(const Mask& mask) {
  std::string out;
  for (int r : acquired_rows(mask)) {
    out += std::to_string(r);
    out += '\n';
  }
  return out;
}

} // namespace ksr
