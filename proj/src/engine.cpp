#include "lawson/engine.hpp"

#include <algorithm>
#include <string>

#include "lawson/errors.hpp"
#include "lawson/series.hpp"

namespace lawson {

namespace {

// rank with terms below the Lawson line or at negative degree read as zero
BigInt rank_or_zero(const BiGradedTable& t, std::int64_t r, std::int64_t k) {
  if (k < 0 || (r >= 1 && k < 2 * r)) return 0;
  return rank_at(t, r, k);
}

BiGradedTable evaluate_table(const VarietyExpr& expr);

struct TableRule {
  BiGradedTable operator()(const node::Point&) const {
    return cellular_table(CellProfile::from_cells({0}), true);
  }
  BiGradedTable operator()(const node::ProjectiveSpace& p) const {
    std::vector<std::int64_t> cells(static_cast<std::size_t>(p.n) + 1);
    for (std::int64_t i = 0; i <= p.n; ++i) cells[static_cast<std::size_t>(i)] = i;
    return cellular_table(cells, true);
  }
  BiGradedTable operator()(const node::AffineSpace& a) const {
    return cellular_table(CellProfile::from_cells({a.n}), false);
  }
  BiGradedTable operator()(const node::Torus& t) const { return torus_table(t.n); }
  BiGradedTable operator()(const node::SplitQuadric& q) const { return quadric_table(q.d); }
  BiGradedTable operator()(const node::SingularHypersurface& h) const {
    return quadric_table(h.d);
  }
  BiGradedTable operator()(const node::Cellular& c) const {
    return cellular_table(c.cells, c.proper);
  }
  BiGradedTable operator()(const node::Toric& t) const {
    if (t.smoothness != node::Smoothness::Smooth) {
      throw UnsupportedQuery("unsupported full-table query; use `chi`");
    }
    return toric_smooth_table(t.cone_counts);
  }
  BiGradedTable operator()(const node::Suspension& s) const {
    return suspend(evaluate_table(*s.inner));
  }
  BiGradedTable operator()(const node::Product& p) const {
    // X x Y is a bundle over one factor with the other (cellular) factor as fibre;
    // prefer a proper cellular fibre
    const auto left = validate(*p.left);
    const auto right = validate(*p.right);
    const bool fiber_right =
        right.cell_profile && (right.proper || !left.cell_profile || !left.proper);
    const auto& base = fiber_right ? p.left : p.right;
    const auto& fiber = fiber_right ? right : left;
    return fiber_bundle_table(evaluate_table(*base), *fiber.cell_profile, fiber.proper);
  }
  BiGradedTable operator()(const node::CellularFiberBundle& b) const {
    return fiber_bundle_table(evaluate_table(*b.base), b.fiber_cells);
  }
  BiGradedTable operator()(const node::Decomposition& d) const {
    return decompose(d.components);
  }
  BiGradedTable operator()(const node::SymmetricProduct& s) const {
    const auto inner = validate(*s.inner);
    return sp_table(*inner.cell_profile, s.d, inner.proper);
  }
  BiGradedTable operator()(const node::HilbertScheme& h) const { return hilb_table(h.b2, h.d); }
};

BiGradedTable evaluate_table(const VarietyExpr& expr) { return std::visit(TableRule{}, expr.node()); }

// rank(r, k) = row[k] on every admissible row
BiGradedTable row_independent_table(std::int64_t dim, bool proper, Coefficients tag,
                                    const std::vector<BigInt>& row) {
  BiGradedTable::RankMap ranks;
  for (std::int64_t k = 0; k <= 2 * dim && k < static_cast<std::int64_t>(row.size()); ++k) {
    const BigInt& rank = row[static_cast<std::size_t>(k)];
    if (rank == 0) continue;
    for (std::int64_t r = 0; 2 * r <= k; ++r) ranks.emplace(Bidegree{r, k}, rank);
  }
  return BiGradedTable(dim, proper, tag, std::move(ranks));
}

}  // namespace

EvaluationResult evaluate(const VarietyExpr& expr) {
  auto attributes = validate(expr);
  auto table = evaluate_table(expr);
  return {render(expr), std::move(attributes), std::move(table)};
}

BiGradedTable cellular_table(const CellProfile& cells, bool proper) {
  if (cells.max_cell() < 0) throw DomainError("cellular_table: empty cell list");
  const auto dim = cells.max_cell();
  std::vector<BigInt> row(static_cast<std::size_t>(2 * dim + 1));
  for (std::int64_t c = 0; c <= dim; ++c) row[static_cast<std::size_t>(2 * c)] = cells.count(c);
  return row_independent_table(dim, proper, Coefficients::Integer, row);
}

BiGradedTable cellular_table(std::span<const std::int64_t> cells, bool proper) {
  return cellular_table(CellProfile::from_cells({cells.begin(), cells.end()}), proper);
}

BiGradedTable torus_table(std::int64_t n) {
  if (n < 1) throw DomainError("torus_table: n must be positive");
  BiGradedTable::RankMap ranks;
  for (std::int64_t r = 0; r <= n; ++r) {
    for (std::int64_t k = std::max(2 * r, r + n); k <= 2 * n; ++k) {
      ranks.emplace(Bidegree{r, k}, binomial(n, k - n));
    }
  }
  return BiGradedTable(n, false, Coefficients::Integer, std::move(ranks));
}

BiGradedTable detail::cstar_splitting(const BiGradedTable& x) {
  const auto dim = x.complex_dimension() + 1;
  BiGradedTable::RankMap ranks;
  for (std::int64_t r = 0; r <= dim; ++r) {
    for (std::int64_t k = 2 * r; k <= 2 * dim; ++k) {
      ranks.emplace(Bidegree{r, k}, rank_or_zero(x, r - 1, k - 2) + rank_or_zero(x, r, k - 1));
    }
  }
  return BiGradedTable(dim, false, x.coefficients(), std::move(ranks));
}

BiGradedTable cstar_product(const BiGradedTable& projective) {
  if (!projective.proper()) {
    throw DomainError("cstar_product: the C* splitting is stated for projective varieties");
  }
  return detail::cstar_splitting(projective);
}

BiGradedTable decompose(std::span<const node::FixedComponent> components) {
  if (components.empty()) throw DomainError("decompose: empty component list");
  std::vector<ShiftedSummand> summands;
  std::int64_t dim = 0;
  for (const auto& c : components) {
    auto table = evaluate(*c.component).table;
    if (!table.proper() || table.coefficients() != Coefficients::Integer) {
      throw DomainError("decompose: fixed components must be proper with integral coefficients");
    }
    dim = std::max(dim, table.complex_dimension() + c.shift);
    summands.push_back({std::move(table), c.shift});
  }
  return shift_and_sum(summands, dim, true);
}

BiGradedTable suspend(const BiGradedTable& x) {
  if (!x.proper() || x.coefficients() != Coefficients::Integer) {
    throw DomainError("suspend: requires a proper table with integral coefficients");
  }
  const auto dim = x.complex_dimension() + 1;
  BiGradedTable::RankMap ranks;
  for (std::int64_t r = 0; r <= dim; ++r) {
    for (std::int64_t k = 2 * r; k <= 2 * dim; ++k) {
      BigInt rank;
      if (r > 0) {
        rank = rank_at(x, r - 1, k - 2);
      } else if (k == 0) {
        rank = 1;  // the vertex
      } else if (k >= 2) {
        rank = rank_at(x, 0, k - 2);
      }
      ranks.emplace(Bidegree{r, k}, std::move(rank));
    }
  }
  return BiGradedTable(dim, true, Coefficients::Integer, std::move(ranks));
}

BiGradedTable fiber_bundle_table(const BiGradedTable& base, const CellProfile& fiber_cells,
                                 bool fiber_proper) {
  if (fiber_cells.max_cell() < 0) throw DomainError("fiber_bundle_table: empty fibre cells");
  std::vector<ShiftedSummand> summands;
  for (std::int64_t c = 0; c <= fiber_cells.max_cell(); ++c) {
    auto count = fiber_cells.count(c);
    if (count != 0) summands.push_back({base, c, std::move(count)});
  }
  return shift_and_sum(summands, base.complex_dimension() + fiber_cells.max_cell(),
                       base.proper() && fiber_proper);
}

BiGradedTable fiber_bundle_table(const BiGradedTable& base,
                                 std::span<const std::int64_t> fiber_cells) {
  return fiber_bundle_table(base, CellProfile::from_cells({fiber_cells.begin(), fiber_cells.end()}));
}

BiGradedTable quadric_table(std::int64_t d) {
  if (d < 1) throw DomainError("quadric_table: d must be positive");
  std::vector<BigInt> row(static_cast<std::size_t>(4 * d + 1));
  for (std::int64_t k = 0; k <= 4 * d; k += 2) row[static_cast<std::size_t>(k)] = k == 2 * d ? 2 : 1;
  return row_independent_table(2 * d, true, Coefficients::Integer, row);
}

BiGradedTable toric_smooth_table(const std::vector<std::int64_t>& cone_counts) {
  const auto betti = toric_betti(cone_counts);
  const auto n = static_cast<std::int64_t>(betti.size()) - 1;
  std::vector<BigInt> row(static_cast<std::size_t>(2 * n + 1));
  for (std::int64_t m = 0; m <= n; ++m) {
    row[static_cast<std::size_t>(2 * m)] = betti[static_cast<std::size_t>(m)];
  }
  return row_independent_table(n, true, Coefficients::Integer, row);
}

BiGradedTable hilb_table(std::int64_t b2, std::int64_t d) {
  if (d < 1) throw DomainError("hilb_table: d must be positive");
  const auto series = cheah_series(b2, d);
  return row_independent_table(2 * d, true, Coefficients::Integer, series.t_row(d));
}

BiGradedTable sp_table(const CellProfile& inner_profile, std::int64_t d, bool proper) {
  if (inner_profile.max_cell() < 0) throw DomainError("sp_table: empty cell profile");
  if (d < 1) throw DomainError("sp_table: d must be positive");
  const auto& betti = inner_profile.counts();
  const auto series = macdonald_series(betti, d);
  return row_independent_table(d * inner_profile.max_cell(), proper, Coefficients::Rational,
                               series.t_row(d));
}

BigInt chi_torus(std::int64_t n, std::int64_t p) {
  if (n < 0) throw DomainError("chi_torus: n must be nonnegative");
  if (p < 0 || p > n) {
    throw DomainError("chi_p needs 0 <= p <= " + std::to_string(n) + ", got p = " +
                      std::to_string(p));
  }
  BigInt chi = 0;
  for (std::int64_t i = p; i <= n; ++i) {
    if ((n + i) % 2 == 0) {
      chi += binomial(n, i);
    } else {
      chi -= binomial(n, i);
    }
  }
  return chi;
}

BigInt chi_toric(const std::vector<std::int64_t>& cone_counts, std::int64_t p) {
  if (cone_counts.empty() || cone_counts.front() != 1) {
    throw ValidationError("toric: d_0 must be 1");
  }
  const auto n = static_cast<std::int64_t>(cone_counts.size()) - 1;
  if (p < 0 || p > n) {
    throw DomainError("chi_p needs 0 <= p <= " + std::to_string(n) + ", got p = " +
                      std::to_string(p));
  }
  BigInt chi = 0;
  for (std::int64_t i = 0; i <= n - p; ++i) {
    const auto d_i = cone_counts[static_cast<std::size_t>(i)];
    for (std::int64_t j = p; j <= n - i; ++j) {
      BigInt term = d_i * binomial(n - i, j);
      if ((n - i + j) % 2 == 0) {
        chi += term;
      } else {
        chi -= term;
      }
    }
  }
  return chi;
}

BigInt chi(const VarietyExpr& expr, std::int64_t p) {
  const auto attrs = validate(expr);
  if (const auto* t = expr.as<node::Toric>(); t && t->smoothness != node::Smoothness::Smooth) {
    return chi_toric(t->cone_counts, p);
  }
  return euler_chi(evaluate_table(expr), p);
}

ChiProfile chi_profile(const VarietyExpr& expr) {
  const auto attrs = validate(expr);
  if (const auto* t = expr.as<node::Toric>(); t && t->smoothness != node::Smoothness::Smooth) {
    ChiProfile profile;
    for (std::int64_t p = 0; p <= attrs.complex_dimension; ++p) {
      profile.values.push_back(chi_toric(t->cone_counts, p));
    }
    return profile;
  }
  return chi_profile(evaluate_table(expr));
}

BigInt higher_chow(const VarietyExpr& expr, std::int64_t r, std::int64_t m) {
  if (r < 0 || m < 0) throw DomainError("higher_chow: r and m must be nonnegative");
  const auto attrs = validate(expr);
  if (!attrs.toric) {
    throw UnsupportedQuery("identification proven only for toric varieties");
  }
  return rank_at(evaluate_table(expr), r, 2 * r + m);
}

}  // namespace lawson
