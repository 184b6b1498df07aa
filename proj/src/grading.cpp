#include "lawson/grading.hpp"

#include <algorithm>
#include <string>

#include "lawson/errors.hpp"

namespace lawson {

const char* coefficient_symbol(Coefficients c) {
  return c == Coefficients::Integer ? "Z" : "Q";
}

BiGradedTable::BiGradedTable(std::int64_t complex_dimension, bool proper,
                             Coefficients coefficients)
    : BiGradedTable(complex_dimension, proper, coefficients, {}) {}

BiGradedTable::BiGradedTable(std::int64_t complex_dimension, bool proper,
                             Coefficients coefficients, RankMap ranks)
    : dimension_(complex_dimension), proper_(proper), coefficients_(coefficients) {
  if (complex_dimension < 0) {
    throw DomainError("complex dimension must be nonnegative");
  }
  for (auto& [key, rank] : ranks) {
    if (key.r < 0 || 2 * key.r > key.k || key.k > 2 * dimension_) {
      throw DomainError("rank key (" + std::to_string(key.r) + "," + std::to_string(key.k) +
                        ") outside 0 <= 2r <= k <= 2n");
    }
    if (rank < 0) throw DomainError("negative rank");
    if (rank != 0) ranks_.emplace(key, std::move(rank));
  }
}

bool same_ranks(const BiGradedTable& a, const BiGradedTable& b) {
  return a.complex_dimension() == b.complex_dimension() && a.ranks() == b.ranks();
}

BigInt binomial(std::int64_t n, std::int64_t j) {
  if (n < 0) throw DomainError("binomial: n must be nonnegative, got " + std::to_string(n));
  if (j < 0 || j > n) return 0;
  j = std::min(j, n - j);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= j; ++i) {
    result *= n - j + i;
    result /= i;
  }
  return result;
}

BigInt rank_at(const BiGradedTable& table, std::int64_t r, std::int64_t k) {
  if (r < 0) r = 0;
  if (r >= 1 && k < 2 * r) throw OutsideLawsonRange(r, k);
  if (k < 0 || k > 2 * table.complex_dimension()) return 0;
  auto it = table.ranks().find({r, k});
  return it == table.ranks().end() ? BigInt(0) : it->second;
}

BiGradedTable shift_and_sum(std::span<const ShiftedSummand> summands,
                            std::int64_t target_dimension, bool proper) {
  if (summands.empty()) throw DomainError("shift_and_sum: empty summand list");
  const Coefficients tag = summands.front().table.coefficients();
  for (const auto& s : summands) {
    if (s.table.coefficients() != tag) {
      throw DomainError("shift_and_sum: mixed coefficient tags");
    }
    if (s.shift < 0) throw DomainError("shift_and_sum: negative shift");
    if (target_dimension < s.table.complex_dimension() + s.shift) {
      throw DomainError("shift_and_sum: target dimension " + std::to_string(target_dimension) +
                        " below summand dimension plus shift");
    }
  }

  BiGradedTable::RankMap ranks;
  for (std::int64_t r = 0; r <= target_dimension; ++r) {
    for (std::int64_t k = 2 * r; k <= 2 * target_dimension; ++k) {
      BigInt total = 0;
      for (const auto& s : summands) {
        const std::int64_t shifted_k = k - 2 * s.shift;
        if (shifted_k < 0 || shifted_k > 2 * s.table.complex_dimension()) continue;
        // k >= 2r implies shifted_k >= 2(r - shift), so this never leaves the range.
        total += s.multiplicity * rank_at(s.table, r - s.shift, shifted_k);
      }
      if (total != 0) ranks.emplace(Bidegree{r, k}, std::move(total));
    }
  }
  return BiGradedTable(target_dimension, proper, tag, std::move(ranks));
}

BigInt euler_chi(const BiGradedTable& table, std::int64_t p) {
  if (p < 0 || p > table.complex_dimension()) {
    throw DomainError("chi_p needs 0 <= p <= " + std::to_string(table.complex_dimension()) +
                      ", got p = " + std::to_string(p));
  }
  BigInt chi = 0;
  for (std::int64_t k = 2 * p; k <= 2 * table.complex_dimension(); ++k) {
    if (k % 2 == 0) {
      chi += rank_at(table, p, k);
    } else {
      chi -= rank_at(table, p, k);
    }
  }
  return chi;
}

ChiProfile chi_profile(const BiGradedTable& table) {
  ChiProfile profile;
  for (std::int64_t p = 0; p <= table.complex_dimension(); ++p) {
    profile.values.push_back(euler_chi(table, p));
  }
  return profile;
}

}  // namespace lawson
