#pragma once

// Test-side reference computations. None of these call into the library's
// table builders or series code; they recompute the same quantities the slow
// way so the library can be compared against them.

#include <cstdint>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "lawson/grading.hpp"

namespace oracle {

using lawson::BigInt;

// Pascal's triangle, built by additions only.
inline BigInt pascal(std::int64_t n, std::int64_t j) {
  if (n < 0 || j < 0 || j > n) return 0;
  static std::vector<std::vector<BigInt>> rows{{1}};
  while (static_cast<std::int64_t>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(prev.size() + 1, 1);
    for (std::size_t i = 1; i < prev.size(); ++i) row[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(row));
  }
  return rows[n][j];
}

// Plain (r, k) -> rank map; zeros are simply absent.
using Grid = std::map<std::pair<std::int64_t, std::int64_t>, BigInt>;

inline BigInt at(const Grid& g, std::int64_t r, std::int64_t k) {
  if (r < 0) r = 0;
  auto it = g.find({r, k});
  return it == g.end() ? BigInt(0) : it->second;
}

inline Grid grid_of(const lawson::BiGradedTable& t) {
  Grid g;
  for (const auto& [key, rank] : t.ranks()) g[{key.r, key.k}] = rank;
  return g;
}

// rank = C(n, k - n) when k >= r + n.
inline Grid torus_closed_form(std::int64_t n) {
  Grid g;
  for (std::int64_t k = 0; k <= 2 * n; ++k) {
    for (std::int64_t r = 0; 2 * r <= k; ++r) {
      if (k >= r + n && pascal(n, k - n) != 0) g[{r, k}] = pascal(n, k - n);
    }
  }
  return g;
}

// n-fold  L_rH_k(X x C*) = L_{r-1}H_{k-2}(X) + L_rH_{k-1}(X)  starting at the point.
inline Grid torus_by_recursion(std::int64_t n) {
  Grid g{{{0, 0}, 1}};
  for (std::int64_t m = 1; m <= n; ++m) {
    Grid next;
    for (std::int64_t k = 0; k <= 2 * m; ++k) {
      for (std::int64_t r = 0; 2 * r <= k; ++r) {
        BigInt v = 0;
        // below the line 2r <= k the old table has nothing
        if (2 * (r - 1) <= k - 2 && k - 2 >= 0) v += at(g, r - 1, k - 2);
        if (2 * r <= k - 1) v += at(g, r, k - 1);
        if (v != 0) next[{r, k}] = v;
      }
    }
    g = std::move(next);
  }
  return g;
}

// Direct-sum of shifted tables, straight from the definition.
struct Shifted {
  Grid grid;
  std::int64_t dim;
  std::int64_t shift;
};

inline Grid shifted_sum(const std::vector<Shifted>& parts, std::int64_t dim) {
  Grid g;
  for (std::int64_t k = 0; k <= 2 * dim; ++k) {
    for (std::int64_t r = 0; 2 * r <= k; ++r) {
      BigInt v = 0;
      for (const auto& p : parts) {
        const auto kk = k - 2 * p.shift;
        const auto rr = r - p.shift;
        if (kk < 0 || kk > 2 * p.dim) continue;
        if (rr >= 1 && kk < 2 * rr) continue;
        v += at(p.grid, rr, kk);
      }
      if (v != 0) g[{r, k}] = v;
    }
  }
  return g;
}

// Row-independent table with rank #{cells c : 2c = k}.
inline Grid cells_grid(const std::vector<std::int64_t>& cells, std::int64_t dim) {
  Grid g;
  for (std::int64_t k = 0; k <= 2 * dim; ++k) {
    for (std::int64_t r = 0; 2 * r <= k; ++r) {
      std::int64_t c = 0;
      for (auto x : cells) c += (2 * x == k) ? 1 : 0;
      if (c) g[{r, k}] = c;
    }
  }
  return g;
}

// Coefficients of z^a t^d in prod over the listed generators (z_exp, t_exp)
// of 1 / (1 - z^z_exp t^t_exp), by enumerating every exponent tuple with
// sum e_i t_i = d. Returns rows[d][a] for d = 0..max_d.
inline std::vector<std::vector<BigInt>> count_exponent_tuples(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& gens, std::int64_t max_d,
    std::int64_t max_z) {
  std::vector<std::vector<BigInt>> rows(max_d + 1, std::vector<BigInt>(max_z + 1, 0));
  std::function<void(std::size_t, std::int64_t, std::int64_t)> walk =
      [&](std::size_t i, std::int64_t t, std::int64_t z) {
        if (i == gens.size()) {
          if (z <= max_z) rows[t][z] += 1;
          return;
        }
        const auto [ze, te] = gens[i];
        for (std::int64_t e = 0; t + e * te <= max_d; ++e) walk(i + 1, t + e * te, z + e * ze);
      };
  walk(0, 0, 0);
  return rows;
}

// Cheah's product: per k, one generator (2k-2, k), b2 generators (2k, k),
// one generator (2k+2, k).
inline std::vector<std::vector<BigInt>> hilbert_betti(std::int64_t b2, std::int64_t max_d) {
  std::vector<std::pair<std::int64_t, std::int64_t>> gens;
  for (std::int64_t k = 1; k <= max_d; ++k) {
    gens.emplace_back(2 * k - 2, k);
    for (std::int64_t i = 0; i < b2; ++i) gens.emplace_back(2 * k, k);
    gens.emplace_back(2 * k + 2, k);
  }
  return count_exponent_tuples(gens, max_d, 4 * max_d);
}

// Betti numbers of SP^d of a cell complex: multisets of d cells, each of
// complex dimension c contributing degree 2c. Returns b_0 .. b_{2 n d}.
inline std::vector<BigInt> symmetric_power_betti(const std::vector<std::int64_t>& cells,
                                                 std::int64_t d) {
  std::int64_t n = 0;
  for (auto c : cells) n = std::max(n, c);
  std::vector<BigInt> betti(2 * n * d + 1, 0);
  std::function<void(std::size_t, std::int64_t, std::int64_t)> walk =
      [&](std::size_t from, std::int64_t left, std::int64_t degree) {
        if (left == 0) {
          betti[degree] += 1;
          return;
        }
        for (std::size_t i = from; i < cells.size(); ++i) walk(i, left - 1, degree + 2 * cells[i]);
      };
  walk(0, d, 0);
  return betti;
}

// chi_p of a table grid: sum over k >= 2p of (-1)^k rank(p, k).
inline BigInt euler(const Grid& g, std::int64_t p, std::int64_t dim) {
  BigInt s = 0;
  for (std::int64_t k = 2 * p; k <= 2 * dim; ++k) s += (k % 2 ? -1 : 1) * at(g, p, k);
  return s;
}

// chi_p summed over torus orbits: sum_i d_i chi_p((C*)^{n-i}), each orbit's
// chi read off the recursion table (the point stratum has chi_0 = 1).
inline BigInt chi_by_orbits(const std::vector<std::int64_t>& d, std::int64_t p) {
  const auto n = static_cast<std::int64_t>(d.size()) - 1;
  BigInt s = 0;
  for (std::int64_t i = 0; i <= n; ++i) {
    const auto m = n - i;
    if (p > m) continue;
    s += d[i] * euler(torus_by_recursion(m), p, m);
  }
  return s;
}

}  // namespace oracle
