#include <doctest.h>

#include <vector>

#include "lawson/checks.hpp"
#include "lawson/engine.hpp"
#include "lawson/errors.hpp"
#include "support/oracles.hpp"

using namespace lawson;

namespace {

BiGradedTable table_of(const VarietyExpr& e) { return evaluate(e).table; }

// r = 0 row as b_0 .. b_2n
std::vector<BigInt> first_row(const BiGradedTable& t) {
  std::vector<BigInt> row;
  for (std::int64_t k = 0; k <= 2 * t.complex_dimension(); ++k) row.push_back(rank_at(t, 0, k));
  return row;
}

bool row_independent(const BiGradedTable& t) {
  for (std::int64_t k = 0; k <= 2 * t.complex_dimension(); ++k) {
    for (std::int64_t r = 1; 2 * r <= k; ++r) {
      if (rank_at(t, r, k) != rank_at(t, 0, k)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("cellular tables") {
  const auto p2 = table_of(vx::proj(2));
  CHECK(first_row(p2) == std::vector<BigInt>{1, 0, 1, 0, 1});
  CHECK(rank_at(p2, 2, 4) == 1);
  CHECK_THROWS_AS(rank_at(p2, 1, 1), OutsideLawsonRange);
  CHECK(row_independent(p2));

  const auto a3 = table_of(vx::affine(3));
  CHECK_FALSE(a3.proper());
  CHECK(a3.ranks().size() == 4);
  CHECK(rank_at(a3, 3, 6) == 1);

  const std::vector<std::int64_t> hirz{0, 1, 1, 2};
  CHECK(oracle::grid_of(cellular_table(hirz, true)) == oracle::cells_grid(hirz, 2));
}

TEST_CASE("torus tables match the closed form and the recursion") {
  for (std::int64_t n = 1; n <= 6; ++n) {
    const auto g = oracle::grid_of(torus_table(n));
    CHECK(g == oracle::torus_closed_form(n));
    CHECK(g == oracle::torus_by_recursion(n));
  }
  const auto t1 = torus_table(1);
  CHECK(t1.ranks().size() == 3);
  CHECK(rank_at(t1, 1, 2) == 1);
  CHECK(rank_at(torus_table(3), 2, 4) == 0);
  CHECK_THROWS_AS(torus_table(0), DomainError);
}

TEST_CASE("C* splitting") {
  const auto pt = table_of(vx::point());
  CHECK(cstar_product(pt) == torus_table(1));
  const auto p1 = table_of(vx::proj(1));
  CHECK(rank_at(cstar_product(p1), 0, 3) == 1);
  CHECK(rank_at(cstar_product(pt), 0, 0) == 0);
  CHECK_THROWS_AS(cstar_product(torus_table(1)), DomainError);
}

TEST_CASE("quadrics") {
  for (std::int64_t d = 1; d <= 6; ++d) {
    const auto q = quadric_table(d);
    const std::vector<node::FixedComponent> comps{{vx::proj(d), 0}, {vx::proj(d), d}};
    CHECK(q == decompose(comps));
    CHECK(table_of(vx::singquadric(3, d)) == q);
    for (std::int64_t k = 0; k <= 4 * d; ++k) {
      const BigInt expected = k % 2 ? 0 : (k == 2 * d ? 2 : 1);
      for (std::int64_t r = 0; 2 * r <= k; ++r) CHECK(rank_at(q, r, k) == expected);
    }
  }
  CHECK(rank_at(quadric_table(2), 2, 4) == 2);
  CHECK(rank_at(quadric_table(3), 1, 5) == 0);
}

TEST_CASE("decompose agrees with direct summation") {
  const std::vector<node::FixedComponent> comps{{vx::proj(2), 0}, {vx::point(), 0}};
  const auto t = decompose(comps);
  CHECK(rank_at(t, 0, 0) == 2);
  CHECK(oracle::grid_of(t) ==
        oracle::shifted_sum({{oracle::grid_of(table_of(vx::proj(2))), 2, 0},
                             {oracle::grid_of(table_of(vx::point())), 0, 0}},
                            2));
  const std::vector<node::FixedComponent> bad{{vx::torus(1), 0}};
  CHECK_THROWS_AS(decompose(bad), DomainError);
}

TEST_CASE("suspension") {
  const auto pt = table_of(vx::point());
  CHECK(suspend(pt) == table_of(vx::proj(1)));
  CHECK(suspend(table_of(vx::proj(1))) == table_of(vx::proj(2)));
  CHECK(rank_at(suspend(quadric_table(1)), 0, 1) == 0);
  CHECK_THROWS_AS(suspend(torus_table(1)), DomainError);
}

TEST_CASE("fibre bundles and products") {
  const std::vector<std::int64_t> fiber{0, 1};
  const auto h = fiber_bundle_table(table_of(vx::proj(1)), fiber);
  CHECK(h == cellular_table(std::vector<std::int64_t>{0, 1, 1, 2}, true));
  const std::vector<std::int64_t> p3{0, 1, 2, 3};
  CHECK(fiber_bundle_table(table_of(vx::point()), p3) == table_of(vx::proj(3)));
  const std::vector<std::int64_t> dot{0};
  CHECK(fiber_bundle_table(torus_table(1), dot) == torus_table(1));

  CHECK(same_ranks(table_of(vx::prod(vx::proj(1), vx::proj(1))), quadric_table(1)));
  // C* x A^1: base torus, non-proper fibre
  const auto ta = table_of(vx::prod(vx::torus(1), vx::affine(1)));
  CHECK_FALSE(ta.proper());
  CHECK(ta.complex_dimension() == 2);
}

TEST_CASE("smooth toric tables") {
  CHECK(first_row(toric_smooth_table({1, 3, 3})) == std::vector<BigInt>{1, 0, 1, 0, 1});
  CHECK(toric_smooth_table({1, 3, 3}) == table_of(vx::proj(2)));
  CHECK(same_ranks(toric_smooth_table({1, 4, 4}), quadric_table(1)));
  CHECK_THROWS_AS(toric_smooth_table({1, 0, 5}), InconsistentConeCounts);
  CHECK_THROWS_AS(evaluate(vx::toric({1, 3, 3}, node::Smoothness::Simplicial)), UnsupportedQuery);
}

TEST_CASE("Hilbert schemes") {
  CHECK(same_ranks(hilb_table(1, 1), toric_smooth_table({1, 3, 3})));
  const auto h2 = hilb_table(1, 2);
  CHECK(first_row(h2) == std::vector<BigInt>{1, 0, 2, 0, 3, 0, 2, 0, 1});
  CHECK(rank_at(h2, 3, 6) == 2);
  CHECK(row_independent(h2));
}

TEST_CASE("symmetric products") {
  const auto p1 = CellProfile::from_cells({0, 1});
  const auto s3 = sp_table(p1, 3);
  CHECK(s3.coefficients() == Coefficients::Rational);
  CHECK(same_ranks(s3, table_of(vx::proj(3))));
  CHECK(same_ranks(sp_table(CellProfile::from_cells({0}), 7), table_of(vx::point())));
  CHECK(first_row(sp_table(CellProfile::from_cells({0, 1, 1, 2}), 2)) ==
        std::vector<BigInt>{1, 0, 2, 0, 4, 0, 2, 0, 1});
}

TEST_CASE("Euler characteristics") {
  CHECK(euler_chi(table_of(vx::point()), 0) == 1);
  CHECK(euler_chi(quadric_table(1), 1) == 3);
  CHECK(euler_chi(table_of(vx::proj(2)), 0) == 3);
  for (std::int64_t n = 1; n <= 6; ++n) {
    CHECK(chi_torus(n, 0) == 0);
    CHECK(chi_torus(n, n) == 1);
    for (std::int64_t p = 0; p <= n; ++p) {
      CHECK(chi_torus(n, p) == oracle::euler(oracle::torus_closed_form(n), p, n));
    }
  }
  CHECK(chi_torus(2, 1) == -1);
  CHECK(chi_toric({1, 3, 3}, 0) == 3);
  CHECK(chi_toric({1, 3, 3}, 1) == 2);
  CHECK(chi_toric({1, 4, 4}, 2) == 1);
  CHECK_THROWS_AS(chi_toric({1, 3, 3}, 3), DomainError);

  std::mt19937_64 rng(5);
  for (int i = 0; i < 10; ++i) {
    const auto d = random_smooth_fan(rng, 1 + i % 4);
    for (std::size_t p = 0; p < d.size(); ++p) {
      CHECK(chi_toric(d, static_cast<std::int64_t>(p)) ==
            oracle::chi_by_orbits(d, static_cast<std::int64_t>(p)));
    }
  }
}

TEST_CASE("chi dispatch") {
  CHECK(chi(vx::toric({1, 3, 3}, node::Smoothness::General), 1) == 2);
  CHECK(chi_profile(vx::toric({1, 3, 3})).values == std::vector<BigInt>{3, 2, 1});
  CHECK(chi(vx::torus(2), 1) == -1);
}

TEST_CASE("higher Chow groups") {
  CHECK(higher_chow(vx::torus(2), 0, 3) == 2);
  CHECK(higher_chow(vx::proj(3), 1, 2) == 1);
  CHECK_THROWS_AS(higher_chow(vx::quadric(1), 0, 0), UnsupportedQuery);
  try {
    higher_chow(vx::quadric(1), 0, 0);
  } catch (const UnsupportedQuery& e) {
    CHECK(std::string(e.what()) == "identification proven only for toric varieties");
  }
}

TEST_CASE("built-in suites pass") {
  for (const auto& suite : check_suites()) {
    const auto report = run_checks(suite);
    CHECK_MESSAGE(report.all_passed(), suite);
    CHECK_FALSE(report.outcomes.empty());
  }
  CHECK_THROWS_AS(run_checks("nope"), DomainError);
}

TEST_CASE("random smooth fans are consistent") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const auto d = random_smooth_fan(rng, 1 + i % 5);
    CHECK_NOTHROW(toric_betti(d));
    CHECK(d.front() == 1);
  }
}
