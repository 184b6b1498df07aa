#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lawson {

using BigInt = boost::multiprecision::cpp_int;

enum class Coefficients { Integer, Rational };

const char* coefficient_symbol(Coefficients c);  // "Z" or "Q"

struct Bidegree {
  std::int64_t r = 0;
  std::int64_t k = 0;
  auto operator<=>(const Bidegree&) const = default;
};

/// Ranks of L_rH_k over 0 <= 2r <= k <= 2n. Only strictly positive ranks are
/// stored, so two tables are equal exactly when their groups agree.
class BiGradedTable {
 public:
  using RankMap = std::map<Bidegree, BigInt>;

  BiGradedTable(std::int64_t complex_dimension, bool proper, Coefficients coefficients);

  /// Zero entries are dropped. Throws DomainError for keys outside the valid
  /// range or negative ranks.
  BiGradedTable(std::int64_t complex_dimension, bool proper, Coefficients coefficients,
                RankMap ranks);

  std::int64_t complex_dimension() const { return dimension_; }
  bool proper() const { return proper_; }
  Coefficients coefficients() const { return coefficients_; }
  const RankMap& ranks() const { return ranks_; }

  bool operator==(const BiGradedTable&) const = default;

 private:
  std::int64_t dimension_;
  bool proper_;
  Coefficients coefficients_;
  RankMap ranks_;
};

/// Same ranks and dimension; ignores the proper flag and coefficient tag.
bool same_ranks(const BiGradedTable& a, const BiGradedTable& b);

struct ChiProfile {
  std::vector<BigInt> values;  // indexed by p = 0 .. n
  bool operator==(const ChiProfile&) const = default;
};

/// n choose j, zero outside 0 <= j <= n.
BigInt binomial(std::int64_t n, std::int64_t j);

/// Negative r reads the Dold-Thom row r = 0. Throws OutsideLawsonRange for
/// r >= 1 and k < 2r.
BigInt rank_at(const BiGradedTable& table, std::int64_t r, std::int64_t k);

struct ShiftedSummand {
  BiGradedTable table;
  std::int64_t shift = 0;
  BigInt multiplicity = 1;
};

/// The direct sum  (+)_j L_{r - shift_j} H_{k - 2 shift_j}(F_j).
BiGradedTable shift_and_sum(std::span<const ShiftedSummand> summands,
                            std::int64_t target_dimension, bool proper);

/// chi_p = sum_{k >= 2p} (-1)^k rank L_pH_k.
BigInt euler_chi(const BiGradedTable& table, std::int64_t p);

ChiProfile chi_profile(const BiGradedTable& table);

}  // namespace lawson
