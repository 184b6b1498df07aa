#include <cstdint>
#include <string>
#include <vector>

#include "lawson/errors.hpp"
#include "lawson/series.hpp"
#include "series_internal.hpp"

namespace lawson {

namespace {

struct Term {
  std::int64_t a;
  const BigInt* value;
};

// nonzero terms of each t-row
std::vector<std::vector<Term>> sparse_rows(const TruncatedBiSeries& s) {
  std::vector<std::vector<Term>> rows(static_cast<std::size_t>(s.max_t() + 1));
  for (std::int64_t b = 0; b <= s.max_t(); ++b) {
    for (std::int64_t a = 0; a <= s.max_z(); ++a) {
      const BigInt& c = s.coefficient(a, b);
      if (c != 0) rows[static_cast<std::size_t>(b)].push_back({a, &c});
    }
  }
  return rows;
}

}  // namespace

void require_same_box(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
  if (a.max_z() != b.max_z() || a.max_t() != b.max_t()) {
    throw DomainError("series_mul: mismatched truncation bounds (" + std::to_string(a.max_z()) +
                      "," + std::to_string(a.max_t()) + ") vs (" + std::to_string(b.max_z()) +
                      "," + std::to_string(b.max_t()) + ")");
  }
}

TruncatedBiSeries series_mul(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
  require_same_box(a, b);
  const auto lhs = sparse_rows(a);
  const auto rhs = sparse_rows(b);
  const std::int64_t max_z = a.max_z();
  const std::int64_t max_t = a.max_t();
  TruncatedBiSeries out(max_z, max_t);

  // each iteration owns output row t^row, so rows can be filled independently
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t row = 0; row <= max_t; ++row) {
    std::vector<BigInt> acc(static_cast<std::size_t>(max_z + 1));
    for (std::int64_t i = 0; i <= row; ++i) {
      for (const Term& x : lhs[static_cast<std::size_t>(i)]) {
        for (const Term& y : rhs[static_cast<std::size_t>(row - i)]) {
          if (x.a + y.a > max_z) break;
          acc[static_cast<std::size_t>(x.a + y.a)] += *x.value * *y.value;
        }
      }
    }
    for (std::int64_t z = 0; z <= max_z; ++z) {
      out.coefficient(z, row) = std::move(acc[static_cast<std::size_t>(z)]);
    }
  }
  return out;
}

}  // namespace lawson
