#include "lawson/checks.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include "lawson/engine.hpp"
#include "lawson/errors.hpp"
#include "lawson/grading.hpp"
#include "lawson/series.hpp"

namespace lawson {

bool CheckReport::all_passed() const {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const CheckOutcome& o) { return o.passed; });
}

const std::vector<std::string>& check_suites() {
  static const std::vector<std::string> names = {"all", "torus", "toric", "quadric",
                                                 "hilb", "sp", "suspension"};
  return names;
}

std::vector<std::int64_t> random_smooth_fan(std::mt19937_64& rng, std::int64_t n,
                                            int max_blowups) {
  if (n < 0) throw DomainError("random_smooth_fan: negative dimension");
  std::vector<BigInt> counts{1};
  // product of P^a factors: the cone counts multiply as polynomials
  for (std::int64_t left = n; left > 0;) {
    const auto a = std::uniform_int_distribution<std::int64_t>(1, left)(rng);
    std::vector<BigInt> factor;
    for (std::int64_t i = 0; i <= a; ++i) factor.push_back(binomial(a + 1, i));
    std::vector<BigInt> next(counts.size() + factor.size() - 1);
    for (std::size_t i = 0; i < counts.size(); ++i) {
      for (std::size_t j = 0; j < factor.size(); ++j) next[i + j] += counts[i] * factor[j];
    }
    counts = std::move(next);
    left -= a;
  }
  // star subdivision of a maximal cone: one new ray joined to each proper face
  const int blowups = n >= 2 ? std::uniform_int_distribution<int>(0, max_blowups)(rng) : 0;
  for (int b = 0; b < blowups; ++b) {
    for (std::int64_t j = 0; j < n; ++j) counts[static_cast<std::size_t>(j + 1)] += binomial(n, j);
    counts[static_cast<std::size_t>(n)] -= 1;
  }
  std::vector<std::int64_t> out;
  for (const auto& c : counts) out.push_back(c.convert_to<std::int64_t>());
  return out;
}

std::vector<VarietyExpr> profiled_corpus() {
  using namespace vx;
  return {
      point(),
      proj(1),
      proj(2),
      proj(3),
      quadric(1),
      singquadric(2, 1),
      cellular({0, 1, 1, 2}),
      cellular({0, 1, 2, 2, 3}),
      toric({1, 3, 3}),
      toric({1, 4, 4}),
      toric({1, 4, 6, 4}),
      susp(proj(1)),
      susp(quadric(1)),
      prod(proj(1), proj(1)),
      prod(proj(1), proj(2)),
      bundle(proj(1), {0, 1}),
      bundle(point(), {0, 1, 2, 3}),
      decomp({{proj(1), 0}, {point(), 2}}),
      decomp({{proj(1), 0}, {proj(1), 1}}),
  };
}

namespace {

using Property = std::function<std::optional<std::string>()>;

struct NamedProperty {
  std::string name;
  std::string instances;
  Property run;
};

std::string describe(const VarietyExpr& e) { return render(e); }

// first bidegree where the two tables differ
std::optional<std::string> compare_tables(const BiGradedTable& a, const BiGradedTable& b) {
  if (a.complex_dimension() != b.complex_dimension()) {
    return "dimension " + std::to_string(a.complex_dimension()) + " vs " +
           std::to_string(b.complex_dimension());
  }
  const auto n = a.complex_dimension();
  for (std::int64_t r = 0; r <= n; ++r) {
    for (std::int64_t k = 2 * r; k <= 2 * n; ++k) {
      const auto x = rank_at(a, r, k);
      const auto y = rank_at(b, r, k);
      if (x != y) {
        return "(r,k)=(" + std::to_string(r) + "," + std::to_string(k) + "): " + x.str() +
               " vs " + y.str();
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> torus_recursion() {
  auto iterated = BiGradedTable(0, true, Coefficients::Integer, {{{0, 0}, 1}});
  for (std::int64_t n = 1; n <= 8; ++n) {
    iterated = detail::cstar_splitting(iterated);
    if (auto diff = compare_tables(torus_table(n), iterated)) {
      return "n=" + std::to_string(n) + " " + *diff;
    }
  }
  return std::nullopt;
}

std::optional<std::string> quadric_decomposition() {
  for (std::int64_t d = 1; d <= 6; ++d) {
    const std::vector<node::FixedComponent> comps{{vx::proj(d), 0}, {vx::proj(d), d}};
    if (auto diff = compare_tables(quadric_table(d), decompose(comps))) {
      return "d=" + std::to_string(d) + " " + *diff;
    }
    if (quadric_table(d) != evaluate(vx::singquadric(2, d)).table) {
      return "singquadric(2," + std::to_string(d) + ") differs from quadric";
    }
  }
  return std::nullopt;
}

std::vector<std::vector<std::int64_t>> toric_instances() {
  std::vector<std::vector<std::int64_t>> fans{{1, 3, 3}, {1, 4, 4}};
  std::mt19937_64 rng(20091101);
  for (int i = 0; i < 20; ++i) {
    fans.push_back(random_smooth_fan(rng, std::uniform_int_distribution<std::int64_t>(1, 6)(rng)));
  }
  return fans;
}

std::string fan_text(const std::vector<std::int64_t>& fan) {
  return render(vx::toric(fan));
}

std::optional<std::string> toric_coherence() {
  for (const auto& fan : toric_instances()) {
    const auto table = toric_smooth_table(fan);
    for (std::int64_t p = 0; p <= table.complex_dimension(); ++p) {
      if (euler_chi(table, p) != chi_toric(fan, p)) {
        return fan_text(fan) + " p=" + std::to_string(p);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> toric_chi0() {
  for (const auto& fan : toric_instances()) {
    if (chi_toric(fan, 0) != fan.back()) return fan_text(fan);
  }
  return std::nullopt;
}

std::optional<std::string> higher_chow_aliasing() {
  std::vector<VarietyExpr> corpus;
  for (std::int64_t n = 1; n <= 4; ++n) {
    corpus.push_back(vx::torus(n));
    corpus.push_back(vx::proj(n));
  }
  corpus.push_back(vx::toric({1, 3, 3}));
  for (const auto& e : corpus) {
    const auto table = evaluate(e).table;
    for (std::int64_t r = 0; r <= table.complex_dimension(); ++r) {
      for (std::int64_t m = 0; 2 * r + m <= 2 * table.complex_dimension() + 1; ++m) {
        if (higher_chow(e, r, m) != rank_at(table, r, 2 * r + m)) {
          return describe(e) + " r=" + std::to_string(r) + " m=" + std::to_string(m);
        }
      }
    }
  }
  try {
    higher_chow(vx::quadric(1), 0, 0);
    return std::string("quadric(1) accepted as toric");
  } catch (const UnsupportedQuery&) {
  }
  return std::nullopt;
}

std::optional<std::string> hilb_parity() {
  for (std::int64_t b2 = 0; b2 <= 3; ++b2) {
    for (std::int64_t d = 1; d <= 5; ++d) {
      const auto table = hilb_table(b2, d);
      for (std::int64_t r = 0; r <= 2 * d; ++r) {
        for (std::int64_t k = 2 * r + 1; k <= 4 * d; k += 2) {
          if (rank_at(table, r, k) != 0) {
            return "hilb(" + std::to_string(b2) + "," + std::to_string(d) + ") k=" +
                   std::to_string(k);
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> hilb_first_row() {
  for (std::int64_t b2 = 0; b2 <= 6; ++b2) {
    const auto series = cheah_series(b2, 4);
    const std::vector<BigInt> expected{1, 0, b2, 0, 1};
    for (std::int64_t z = 0; z <= 16; ++z) {
      const BigInt want = z < 5 ? expected[static_cast<std::size_t>(z)] : BigInt(0);
      if (series.coefficient(z, 1) != want) return "b2=" + std::to_string(b2);
    }
  }
  return std::nullopt;
}

std::optional<std::string> sp_projective_line() {
  for (std::int64_t d = 1; d <= 6; ++d) {
    const auto table = evaluate(vx::sp(vx::proj(1), d)).table;
    if (table.coefficients() != Coefficients::Rational) return "sp tag not rational";
    if (auto diff = compare_tables(table, evaluate(vx::proj(d)).table)) {
      return "d=" + std::to_string(d) + " " + *diff;
    }
  }
  if (auto diff = compare_tables(evaluate(vx::sp(vx::point(), 7)).table,
                                 evaluate(vx::point()).table)) {
    return "sp(pt,7) " + *diff;
  }
  return std::nullopt;
}

std::optional<std::string> suspension_coherence() {
  for (const auto& x : profiled_corpus()) {
    if (validate(x).complex_dimension > 3) continue;
    const auto lhs = suspend(evaluate(x).table);
    const std::vector<node::FixedComponent> comps{{x, 1}, {vx::point(), 0}};
    if (auto diff = compare_tables(lhs, decompose(comps))) return describe(x) + " " + *diff;
  }
  if (suspend(evaluate(vx::point()).table) != evaluate(vx::proj(1)).table) {
    return std::string("susp(pt) != P(1)");
  }
  return std::nullopt;
}

std::optional<std::string> suspension_edge() {
  for (const auto& x : profiled_corpus()) {
    if (rank_at(suspend(evaluate(x).table), 0, 1) != 0) return describe(x);
  }
  return std::nullopt;
}

std::optional<std::string> dold_thom_rows() {
  for (const auto& x : profiled_corpus()) {
    const auto result = evaluate(x);
    const auto& profile = *result.attributes.cell_profile;
    const auto n = result.table.complex_dimension();
    BigInt total = 0;
    for (std::int64_t k = 0; k <= 2 * n; ++k) {
      const BigInt expected = k % 2 == 0 ? profile.count(k / 2) : BigInt(0);
      const auto row0 = rank_at(result.table, 0, k);
      total += row0;
      if (row0 != expected) return describe(x) + " k=" + std::to_string(k);
      for (std::int64_t r = 1; r <= 3; ++r) {
        if (rank_at(result.table, -r, k) != row0) return describe(x) + " r=-" + std::to_string(r);
      }
    }
    if (total != profile.cardinality()) return describe(x) + " cell count";
  }
  return std::nullopt;
}

std::optional<std::string> row_independence() {
  for (const auto& x : profiled_corpus()) {
    const auto table = evaluate(x).table;
    const auto n = table.complex_dimension();
    for (std::int64_t k = 0; k <= 2 * n; ++k) {
      for (std::int64_t r = 1; 2 * r <= k; ++r) {
        if (rank_at(table, r, k) != rank_at(table, 0, k)) {
          return describe(x) + " (r,k)=(" + std::to_string(r) + "," + std::to_string(k) + ")";
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<NamedProperty> properties_for(std::string_view suite) {
  const bool all = suite == "all";
  std::vector<NamedProperty> out;
  auto add = [&](std::string_view owner, NamedProperty p) {
    if (all || owner == suite) out.push_back(std::move(p));
  };
  add("torus", {"torus closed form = iterated C* splitting", "n=1..8, all 0<=2r<=k<=2n",
                torus_recursion});
  add("quadric", {"quadric closed form = decomp(P(d):0, P(d):d)", "d=1..6", quadric_decomposition});
  add("toric", {"chi_p of smooth toric table = cone-count formula",
                "P2, P1xP1, 20 random smooth fans (n<=6)", toric_coherence});
  add("toric", {"chi_0 = d_n", "P2, P1xP1, 20 random smooth fans", toric_chi0});
  add("toric", {"higher Chow rank = rank at (r, 2r+m)", "torus(1..4), P(1..4), toric([1,3,3])",
                higher_chow_aliasing});
  add("hilb", {"Hilbert-scheme Betti numbers vanish in odd degree", "b2=0..3, d=1..5",
               hilb_parity});
  add("hilb", {"Hilbert scheme of one point is the surface", "b2=0..6", hilb_first_row});
  add("sp", {"SP^d(P1) = P^d and SP^d(pt) = pt", "d=1..6", sp_projective_line});
  add("suspension", {"suspend(X) = decomp(X:1, pt:0)", "profiled corpus, dim X<=3",
                     suspension_coherence});
  add("suspension", {"L_0H_1 of a suspension vanishes", "profiled corpus", suspension_edge});
  add("dold-thom", {"r=0 row counts cells; r<0 rows repeat it", "profiled corpus",
                    dold_thom_rows});
  add("cellular", {"cellular tables are independent of r", "profiled corpus", row_independence});
  return out;
}

}  // namespace

CheckReport run_checks(std::string_view suite) {
  const auto& names = check_suites();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    throw DomainError("unknown check suite '" + std::string(suite) + "'");
  }
  CheckReport report;
  for (auto& p : properties_for(suite)) {
    CheckOutcome outcome{p.name, p.instances, false, {}};
    try {
      if (auto failure = p.run()) {
        outcome.detail = *failure;
      } else {
        outcome.passed = true;
      }
    } catch (const std::exception& e) {
      outcome.detail = std::string("exception: ") + e.what();
    }
    report.outcomes.push_back(std::move(outcome));
  }
  return report;
}

}  // namespace lawson
