#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lawson/grading.hpp"
#include "lawson/varieties.hpp"

namespace lawson {

struct EvaluationResult {
  std::string expr_text;
  VarietyAttributes attributes;
  BiGradedTable table;
};

/// Validates, then evaluates the table by the rule matching each node.
/// Throws UnsupportedQuery for non-smooth toric input.
EvaluationResult evaluate(const VarietyExpr& expr);

// Table builders, one per closed formula.

/// rank(r, k) = #{cells c : 2c = k}.
BiGradedTable cellular_table(const CellProfile& cells, bool proper);
BiGradedTable cellular_table(std::span<const std::int64_t> cells, bool proper);

/// L_rH_k((C*)^n) has rank C(n, k - n) when k >= r + n, else 0.
BiGradedTable torus_table(std::int64_t n);

/// L_rH_k(X x C*) = L_{r-1}H_{k-2}(X) + L_rH_{k-1}(X) for projective X.
BiGradedTable cstar_product(const BiGradedTable& projective);

/// Direct sum over fixed components: L_rH_k(X) = (+)_j L_{r-l_j}H_{k-2l_j}(F_j).
/// Components must be proper with integral coefficients.
BiGradedTable decompose(std::span<const node::FixedComponent> components);

/// Algebraic suspension of a projective variety.
BiGradedTable suspend(const BiGradedTable& x);

/// Bundle with cellular fibres over `base`. The result is proper when both the
/// base and the fibre are.
BiGradedTable fiber_bundle_table(const BiGradedTable& base, const CellProfile& fiber_cells,
                                 bool fiber_proper = true);
BiGradedTable fiber_bundle_table(const BiGradedTable& base,
                                 std::span<const std::int64_t> fiber_cells);

/// Split quadric of dimension 2d, from its closed form.
BiGradedTable quadric_table(std::int64_t d);

BiGradedTable toric_smooth_table(const std::vector<std::int64_t>& cone_counts);

/// Hilbert scheme of d points on a rational surface with second Betti number b2.
BiGradedTable hilb_table(std::int64_t b2, std::int64_t d);

/// d-th symmetric product of a cellular variety; rational coefficients.
BiGradedTable sp_table(const CellProfile& inner_profile, std::int64_t d, bool proper = true);

BigInt chi_torus(std::int64_t n, std::int64_t p);
BigInt chi_toric(const std::vector<std::int64_t>& cone_counts, std::int64_t p);

/// chi_p of any expression: the cone-count formula for toric(...) nodes that
/// lack a full table, euler_chi of the evaluated table otherwise.
BigInt chi(const VarietyExpr& expr, std::int64_t p);
ChiProfile chi_profile(const VarietyExpr& expr);

/// Rank of Ch_r(X, m) = L_rH_{2r+m}(X); toric-flagged expressions only.
BigInt higher_chow(const VarietyExpr& expr, std::int64_t r, std::int64_t m);

namespace detail {
/// The C* splitting without the projectivity check, for the induction over
/// tori of increasing dimension.
BiGradedTable cstar_splitting(const BiGradedTable& x);
}  // namespace detail

}  // namespace lawson
