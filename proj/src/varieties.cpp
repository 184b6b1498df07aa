#include "lawson/varieties.hpp"

#include <algorithm>
#include <string>

#include "lawson/errors.hpp"

namespace lawson {

namespace vx {

VarietyExpr point() { return node::Point{}; }
VarietyExpr proj(std::int64_t n) { return node::ProjectiveSpace{n}; }
VarietyExpr affine(std::int64_t n) { return node::AffineSpace{n}; }
VarietyExpr torus(std::int64_t n) { return node::Torus{n}; }
VarietyExpr quadric(std::int64_t d) { return node::SplitQuadric{d}; }
VarietyExpr singquadric(std::int64_t m, std::int64_t d) {
  return node::SingularHypersurface{m, d};
}
VarietyExpr cellular(std::vector<std::int64_t> cells, bool proper) {
  return node::Cellular{std::move(cells), proper};
}
VarietyExpr toric(std::vector<std::int64_t> cone_counts, node::Smoothness smoothness) {
  return node::Toric{std::move(cone_counts), smoothness};
}
VarietyExpr susp(VarietyExpr inner) { return node::Suspension{std::move(inner)}; }
VarietyExpr prod(VarietyExpr left, VarietyExpr right) {
  return node::Product{std::move(left), std::move(right)};
}
VarietyExpr bundle(VarietyExpr base, std::vector<std::int64_t> fiber_cells) {
  return node::CellularFiberBundle{std::move(base), std::move(fiber_cells)};
}
VarietyExpr decomp(std::vector<std::pair<VarietyExpr, std::int64_t>> components) {
  node::Decomposition d;
  for (auto& [expr, shift] : components) {
    d.components.push_back({std::move(expr), shift});
  }
  return d;
}
VarietyExpr sp(VarietyExpr inner, std::int64_t d) {
  return node::SymmetricProduct{std::move(inner), d};
}
VarietyExpr hilb(std::int64_t b2, std::int64_t d) { return node::HilbertScheme{b2, d}; }

}  // namespace vx

// ---------------------------------------------------------------------------
// CellProfile

CellProfile CellProfile::from_cells(const std::vector<std::int64_t>& cells) {
  CellProfile p;
  for (std::int64_t c : cells) {
    if (c < 0) throw ValidationError("cell dimensions must be nonnegative");
    if (static_cast<std::size_t>(c) >= p.counts_.size()) {
      p.counts_.resize(static_cast<std::size_t>(c) + 1);
    }
    p.counts_[static_cast<std::size_t>(c)] += 1;
  }
  return p;
}

CellProfile CellProfile::from_counts(std::vector<BigInt> counts) {
  CellProfile p;
  p.counts_ = std::move(counts);
  p.trim();
  return p;
}

void CellProfile::trim() {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

BigInt CellProfile::count(std::int64_t dim) const {
  if (dim < 0 || dim > max_cell()) return 0;
  return counts_[static_cast<std::size_t>(dim)];
}

BigInt CellProfile::cardinality() const {
  BigInt total = 0;
  for (const auto& c : counts_) total += c;
  return total;
}

CellProfile CellProfile::shifted(std::int64_t by) const {
  if (counts_.empty()) return *this;
  CellProfile p;
  p.counts_.assign(static_cast<std::size_t>(by), BigInt(0));
  p.counts_.insert(p.counts_.end(), counts_.begin(), counts_.end());
  return p;
}

CellProfile CellProfile::convolve(const CellProfile& other) const {
  if (counts_.empty() || other.counts_.empty()) return {};
  CellProfile p;
  p.counts_.resize(counts_.size() + other.counts_.size() - 1);
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] == 0) continue;
    for (std::size_t j = 0; j < other.counts_.size(); ++j) {
      p.counts_[i + j] += counts_[i] * other.counts_[j];
    }
  }
  p.trim();
  return p;
}

CellProfile& CellProfile::operator+=(const CellProfile& other) {
  if (other.counts_.size() > counts_.size()) counts_.resize(other.counts_.size());
  for (std::size_t i = 0; i < other.counts_.size(); ++i) counts_[i] += other.counts_[i];
  trim();
  return *this;
}

// ---------------------------------------------------------------------------
// Toric Betti numbers

std::vector<BigInt> toric_betti(const std::vector<std::int64_t>& cone_counts) {
  if (cone_counts.empty()) throw ValidationError("toric: empty cone-count list");
  if (cone_counts.front() != 1) throw ValidationError("toric: d_0 must be 1");
  const auto n = static_cast<std::int64_t>(cone_counts.size()) - 1;
  // b_2m = sum_{i=m}^{n} (-1)^{i-m} C(i, m) d_{n-i}
  std::vector<BigInt> betti;
  for (std::int64_t m = 0; m <= n; ++m) {
    BigInt b = 0;
    for (std::int64_t i = m; i <= n; ++i) {
      BigInt term = binomial(i, m) * cone_counts[static_cast<std::size_t>(n - i)];
      if ((i - m) % 2 == 0) {
        b += term;
      } else {
        b -= term;
      }
    }
    if (b < 0) {
      throw InconsistentConeCounts("inconsistent cone counts: b_" + std::to_string(2 * m) +
                                   " = " + b.str() + " is negative");
    }
    betti.push_back(std::move(b));
  }
  if (betti.front() != 1) {
    throw InconsistentConeCounts("inconsistent cone counts: b_0 = " + betti.front().str() +
                                 ", a complete connected fan has b_0 = 1");
  }
  for (std::int64_t m = 0; m <= n; ++m) {
    if (betti[static_cast<std::size_t>(m)] != betti[static_cast<std::size_t>(n - m)]) {
      throw InconsistentConeCounts("inconsistent cone counts: b_" + std::to_string(2 * m) +
                                   " != b_" + std::to_string(2 * (n - m)) +
                                   " violates Poincare duality");
    }
  }
  return betti;
}

// ---------------------------------------------------------------------------
// validate

namespace {

void require_positive(std::int64_t v, const char* what) {
  if (v < 1) {
    throw ValidationError(std::string(what) + " must be positive, got " + std::to_string(v));
  }
}

void require_cells(const std::vector<std::int64_t>& cells, const char* what) {
  if (cells.empty()) throw ValidationError(std::string(what) + ": empty cell list");
  for (auto c : cells) {
    if (c < 0) throw ValidationError(std::string(what) + ": cell dimensions must be nonnegative");
  }
}

void require_dimension_limit(std::int64_t dim) {
  if (dim > kMaxComplexDimension) {
    throw ValidationError("complex dimension " + std::to_string(dim) +
                          " exceeds the supported limit " +
                          std::to_string(kMaxComplexDimension));
  }
}

CellProfile interval_profile(std::int64_t lo, std::int64_t hi) {
  std::vector<BigInt> counts(static_cast<std::size_t>(hi) + 1);
  for (auto i = lo; i <= hi; ++i) counts[static_cast<std::size_t>(i)] = 1;
  return CellProfile::from_counts(std::move(counts));
}

struct Validator {
  VarietyAttributes operator()(const node::Point&) const {
    return {0, true, Coefficients::Integer, CellProfile::from_cells({0}), true};
  }

  VarietyAttributes operator()(const node::ProjectiveSpace& p) const {
    require_positive(p.n, "P(n): n");
    require_dimension_limit(p.n);
    return {p.n, true, Coefficients::Integer, interval_profile(0, p.n), true};
  }

  VarietyAttributes operator()(const node::AffineSpace& a) const {
    require_positive(a.n, "affine(n): n");
    require_dimension_limit(a.n);
    return {a.n, false, Coefficients::Integer, CellProfile::from_cells({a.n}), true};
  }

  VarietyAttributes operator()(const node::Torus& t) const {
    require_positive(t.n, "torus(n): n");
    require_dimension_limit(t.n);
    return {t.n, false, Coefficients::Integer, std::nullopt, true};
  }

  VarietyAttributes operator()(const node::SplitQuadric& q) const {
    require_positive(q.d, "quadric(d): d");
    return quadric_attributes(q.d);
  }

  VarietyAttributes operator()(const node::SingularHypersurface& h) const {
    if (h.m <= 1) {
      throw ValidationError("singquadric(m,d): m must exceed 1, got " + std::to_string(h.m));
    }
    require_positive(h.d, "singquadric(m,d): d");
    return quadric_attributes(h.d);
  }

  VarietyAttributes operator()(const node::Cellular& c) const {
    require_cells(c.cells, "cellular");
    const auto dim = *std::max_element(c.cells.begin(), c.cells.end());
    require_dimension_limit(dim);
    return {dim, c.proper, Coefficients::Integer, CellProfile::from_cells(c.cells), false};
  }

  VarietyAttributes operator()(const node::Toric& t) const {
    if (t.cone_counts.empty()) throw ValidationError("toric: empty cone-count list");
    for (auto d : t.cone_counts) {
      if (d < 0) throw ValidationError("toric: cone counts must be nonnegative");
    }
    if (t.cone_counts.front() != 1) throw ValidationError("toric: d_0 must be 1");
    const auto dim = static_cast<std::int64_t>(t.cone_counts.size()) - 1;
    require_dimension_limit(dim);
    VarietyAttributes attrs{dim, false, Coefficients::Integer, std::nullopt, true};
    switch (t.smoothness) {
      case node::Smoothness::Smooth:
        attrs.proper = true;
        attrs.cell_profile = CellProfile::from_counts(toric_betti(t.cone_counts));
        break;
      case node::Smoothness::Simplicial:
        attrs.coefficients = Coefficients::Rational;
        break;
      case node::Smoothness::General:
        break;
    }
    return attrs;
  }

  VarietyAttributes operator()(const node::Suspension& s) const {
    const auto inner = validate(*s.inner);
    require_proper_integral(inner, "susp");
    const auto dim = inner.complex_dimension + 1;
    require_dimension_limit(dim);
    VarietyAttributes attrs{dim, true, Coefficients::Integer, std::nullopt, false};
    if (inner.cell_profile) {
      CellProfile profile = CellProfile::from_cells({0});
      profile += inner.cell_profile->shifted(1);
      attrs.cell_profile = std::move(profile);
    }
    return attrs;
  }

  VarietyAttributes operator()(const node::Product& p) const {
    const auto left = validate(*p.left);
    const auto right = validate(*p.right);
    if (!left.cell_profile && !right.cell_profile) {
      throw ValidationError(
          "prod: neither factor has a cell profile; only products with a cellular factor are "
          "supported");
    }
    const auto dim = left.complex_dimension + right.complex_dimension;
    require_dimension_limit(dim);
    VarietyAttributes attrs{dim, left.proper && right.proper,
                            combine(left.coefficients, right.coefficients), std::nullopt,
                            left.toric && right.toric};
    if (left.cell_profile && right.cell_profile) {
      attrs.cell_profile = left.cell_profile->convolve(*right.cell_profile);
    }
    return attrs;
  }

  VarietyAttributes operator()(const node::CellularFiberBundle& b) const {
    require_cells(b.fiber_cells, "bundle");
    const auto base = validate(*b.base);
    const auto fiber_dim = *std::max_element(b.fiber_cells.begin(), b.fiber_cells.end());
    const auto dim = base.complex_dimension + fiber_dim;
    require_dimension_limit(dim);
    VarietyAttributes attrs{dim, base.proper, base.coefficients, std::nullopt, false};
    if (base.cell_profile) {
      attrs.cell_profile = base.cell_profile->convolve(CellProfile::from_cells(b.fiber_cells));
    }
    return attrs;
  }

  VarietyAttributes operator()(const node::Decomposition& d) const {
    if (d.components.empty()) throw ValidationError("decomp: empty component list");
    std::int64_t dim = 0;
    std::optional<CellProfile> profile = CellProfile{};
    for (const auto& c : d.components) {
      if (c.shift < 0) throw ValidationError("decomp: shifts must be nonnegative");
      const auto attrs = validate(*c.component);
      require_proper_integral(attrs, "decomp");
      dim = std::max(dim, attrs.complex_dimension + c.shift);
      require_dimension_limit(dim);
      if (profile && attrs.cell_profile) {
        *profile += attrs.cell_profile->shifted(c.shift);
      } else {
        profile.reset();
      }
    }
    return {dim, true, Coefficients::Integer, std::move(profile), false};
  }

  VarietyAttributes operator()(const node::SymmetricProduct& s) const {
    require_positive(s.d, "sp(X,d): d");
    const auto inner = validate(*s.inner);
    if (!inner.cell_profile) {
      throw ValidationError("sp: the inner expression has no cell profile");
    }
    const auto dim = inner.complex_dimension * s.d;
    require_dimension_limit(dim);
    return {dim, inner.proper, Coefficients::Rational, std::nullopt, false};
  }

  VarietyAttributes operator()(const node::HilbertScheme& h) const {
    if (h.b2 < 0) throw ValidationError("hilb(b2,d): b2 must be nonnegative");
    require_positive(h.d, "hilb(b2,d): d");
    require_dimension_limit(2 * h.d);
    return {2 * h.d, true, Coefficients::Integer, std::nullopt, false};
  }

 private:
  static VarietyAttributes quadric_attributes(std::int64_t d) {
    require_dimension_limit(2 * d);
    // cells of the two P^d components, the second shifted by d
    CellProfile profile = interval_profile(0, d);
    profile += interval_profile(d, 2 * d);
    return {2 * d, true, Coefficients::Integer, std::move(profile), false};
  }

  static void require_proper_integral(const VarietyAttributes& attrs, const char* what) {
    if (!attrs.proper) {
      throw ValidationError(std::string(what) + ": requires a proper (projective) expression");
    }
    if (attrs.coefficients != Coefficients::Integer) {
      throw ValidationError(std::string(what) +
                            ": requires an integral expression, got rational coefficients");
    }
  }

  static Coefficients combine(Coefficients a, Coefficients b) {
    return a == Coefficients::Rational || b == Coefficients::Rational ? Coefficients::Rational
                                                                      : Coefficients::Integer;
  }
};

}  // namespace

VarietyAttributes validate(const VarietyExpr& expr) {
  return std::visit(Validator{}, expr.node());
}

}  // namespace lawson
