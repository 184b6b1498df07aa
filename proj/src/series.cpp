#include "lawson/series.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "lawson/errors.hpp"

namespace lawson {

TruncatedBiSeries::TruncatedBiSeries(std::int64_t max_z, std::int64_t max_t)
    : max_z_(max_z), max_t_(max_t) {
  if (max_z < 0 || max_t < 0) throw DomainError("truncation bounds must be nonnegative");
  coefficients_.resize(static_cast<std::size_t>((max_z + 1) * (max_t + 1)));
}

TruncatedBiSeries TruncatedBiSeries::one(std::int64_t max_z, std::int64_t max_t) {
  TruncatedBiSeries s(max_z, max_t);
  s.coefficient(0, 0) = 1;
  return s;
}

const BigInt& TruncatedBiSeries::coefficient(std::int64_t a, std::int64_t b) const {
  if (!in_box(a, b)) {
    throw std::out_of_range("coefficient z^" + std::to_string(a) + " t^" + std::to_string(b) +
                            " outside the truncation box");
  }
  return coefficients_[index(a, b)];
}

BigInt& TruncatedBiSeries::coefficient(std::int64_t a, std::int64_t b) {
  return const_cast<BigInt&>(std::as_const(*this).coefficient(a, b));
}

std::vector<BigInt> TruncatedBiSeries::t_row(std::int64_t b) const {
  std::vector<BigInt> row;
  row.reserve(static_cast<std::size_t>(max_z_ + 1));
  for (std::int64_t a = 0; a <= max_z_; ++a) row.push_back(coefficient(a, b));
  return row;
}

namespace {

// (1 - z^a t^b)^(-m) with an arbitrary-precision multiplicity; the coefficient
// of x^j is C(m - 1 + j, j), built by the exact ratio recurrence.
TruncatedBiSeries geometric_factor_big(std::int64_t z_exp, std::int64_t t_exp,
                                       const BigInt& multiplicity, std::int64_t max_z,
                                       std::int64_t max_t) {
  if (t_exp < 1) throw DomainError("geometric_factor: t exponent must be positive");
  if (z_exp < 0) throw DomainError("geometric_factor: z exponent must be nonnegative");
  if (multiplicity < 0) throw DomainError("geometric_factor: negative multiplicity");
  auto s = TruncatedBiSeries::one(max_z, max_t);
  BigInt c = 1;
  for (std::int64_t j = 1; t_exp * j <= max_t && z_exp * j <= max_z; ++j) {
    c *= multiplicity - 1 + j;
    c /= j;
    if (c == 0) break;
    s.coefficient(z_exp * j, t_exp * j) = c;
  }
  return s;
}

}  // namespace

TruncatedBiSeries geometric_factor(std::int64_t z_exp, std::int64_t t_exp,
                                   std::int64_t multiplicity, std::int64_t max_z,
                                   std::int64_t max_t) {
  return geometric_factor_big(z_exp, t_exp, BigInt(multiplicity), max_z, max_t);
}

namespace {

void check_degree(std::int64_t max_d) {
  if (max_d < 1) throw DomainError("series truncation degree must be at least 1");
  if (max_d > kMaxSeriesDegree) {
    throw UnsupportedQuery("series truncation degree " + std::to_string(max_d) +
                           " exceeds the supported limit " + std::to_string(kMaxSeriesDegree));
  }
}

}  // namespace

TruncatedBiSeries cheah_series(std::int64_t b2, std::int64_t max_d) {
  if (b2 < 0) throw DomainError("cheah_series: b2 must be nonnegative");
  check_degree(max_d);
  const std::int64_t max_z = 4 * max_d;
  auto product = TruncatedBiSeries::one(max_z, max_d);
  // the factors with index k start at t^k
  for (std::int64_t k = 1; k <= max_d; ++k) {
    product = series_mul(product, geometric_factor(2 * k - 2, k, 1, max_z, max_d));
    product = series_mul(product, geometric_factor(2 * k, k, b2, max_z, max_d));
    product = series_mul(product, geometric_factor(2 * k + 2, k, 1, max_z, max_d));
  }
  return product;
}

TruncatedBiSeries macdonald_series(std::span<const BigInt> even_betti, std::int64_t max_d) {
  if (even_betti.empty()) throw DomainError("macdonald_series: empty Betti list");
  if (even_betti.front() < 1) throw DomainError("macdonald_series: b_0 must be at least 1");
  check_degree(max_d);
  const auto n = static_cast<std::int64_t>(even_betti.size()) - 1;
  const std::int64_t max_z = 2 * n * max_d;
  auto product = TruncatedBiSeries::one(max_z, max_d);
  for (std::int64_t i = 0; i <= n; ++i) {
    const BigInt& b = even_betti[static_cast<std::size_t>(i)];
    if (b < 0) throw DomainError("macdonald_series: negative Betti number");
    if (b == 0) continue;
    product = series_mul(product, geometric_factor_big(2 * i, 1, b, max_z, max_d));
  }
  return product;
}

}  // namespace lawson
