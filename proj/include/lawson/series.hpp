#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lawson/grading.hpp"

namespace lawson {

/// Bivariate power series sum c(a,b) z^a t^b truncated to 0 <= a <= max_z,
/// 0 <= b <= max_t. Coefficients are exact.
class TruncatedBiSeries {
 public:
  TruncatedBiSeries(std::int64_t max_z, std::int64_t max_t);

  static TruncatedBiSeries one(std::int64_t max_z, std::int64_t max_t);

  std::int64_t max_z() const { return max_z_; }
  std::int64_t max_t() const { return max_t_; }

  bool in_box(std::int64_t a, std::int64_t b) const {
    return a >= 0 && b >= 0 && a <= max_z_ && b <= max_t_;
  }

  // Both throw std::out_of_range outside the truncation box.
  const BigInt& coefficient(std::int64_t a, std::int64_t b) const;
  BigInt& coefficient(std::int64_t a, std::int64_t b);

  /// Coefficients of t^b for z^0 .. z^max_z.
  std::vector<BigInt> t_row(std::int64_t b) const;

  bool operator==(const TruncatedBiSeries&) const = default;

 private:
  std::size_t index(std::int64_t a, std::int64_t b) const {
    return static_cast<std::size_t>(b * (max_z_ + 1) + a);
  }

  std::int64_t max_z_;
  std::int64_t max_t_;
  std::vector<BigInt> coefficients_;
};

/// Largest truncation degree in t accepted by the generating-function builders.
inline constexpr std::int64_t kMaxSeriesDegree = 128;

/// Cauchy product within the shared box. OpenMP-parallel over output t-rows.
TruncatedBiSeries series_mul(const TruncatedBiSeries& a, const TruncatedBiSeries& b);

/// Plain serial Cauchy product over the full box; reference for series_mul.
TruncatedBiSeries series_mul_serial(const TruncatedBiSeries& a, const TruncatedBiSeries& b);

/// (1 - z^z_exp t^t_exp)^(-multiplicity), truncated.
TruncatedBiSeries geometric_factor(std::int64_t z_exp, std::int64_t t_exp,
                                   std::int64_t multiplicity, std::int64_t max_z,
                                   std::int64_t max_t);

/// prod_{k>=1} 1 / ((1 - z^{2k-2} t^k)(1 - z^{2k} t^k)^b2 (1 - z^{2k+2} t^k)),
/// truncated at z^{4 max_d}, t^{max_d}. The coefficient of z^k t^d is the k-th
/// Betti number of the Hilbert scheme of d points on a rational surface with
/// second Betti number b2.
TruncatedBiSeries cheah_series(std::int64_t b2, std::int64_t max_d);

/// prod_i (1 - z^{2i} t)^(-b_{2i}) for a space with homology in even degrees
/// only; the coefficient of z^k t^d is dim H_k(SP^d X; Q). Truncated at
/// z^{2 n max_d}, t^{max_d} with n = even_betti.size() - 1.
TruncatedBiSeries macdonald_series(std::span<const BigInt> even_betti, std::int64_t max_d);

}  // namespace lawson
