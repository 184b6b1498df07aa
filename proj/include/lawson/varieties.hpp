#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lawson/grading.hpp"

namespace lawson {

class VarietyExpr;

/// Shared, immutable child pointer that compares by value.
class ExprRef {
 public:
  ExprRef(VarietyExpr expr);  // NOLINT(google-explicit-constructor)

  const VarietyExpr& operator*() const { return *ptr_; }
  const VarietyExpr* operator->() const { return ptr_.get(); }

  friend bool operator==(const ExprRef& a, const ExprRef& b);

 private:
  std::shared_ptr<const VarietyExpr> ptr_;
};

namespace node {

struct Point {
  bool operator==(const Point&) const = default;
};
struct ProjectiveSpace {
  std::int64_t n;
  bool operator==(const ProjectiveSpace&) const = default;
};
struct AffineSpace {
  std::int64_t n;
  bool operator==(const AffineSpace&) const = default;
};
struct Torus {
  std::int64_t n;
  bool operator==(const Torus&) const = default;
};
// even-dimensional split quadric sum x_i y_i = 0 in P^{2d+1}
struct SplitQuadric {
  std::int64_t d;
  bool operator==(const SplitQuadric&) const = default;
};
// sum x_i^m y_i = 0 in P^{2d+1}, singular along {x = 0}
struct SingularHypersurface {
  std::int64_t m;
  std::int64_t d;
  bool operator==(const SingularHypersurface&) const = default;
};
struct Cellular {
  std::vector<std::int64_t> cells;
  bool proper = true;
  bool operator==(const Cellular&) const = default;
};

enum class Smoothness { Smooth, Simplicial, General };

struct Toric {
  std::vector<std::int64_t> cone_counts;  // d_0 .. d_n
  Smoothness smoothness = Smoothness::Smooth;
  bool operator==(const Toric&) const = default;
};
struct Suspension {
  ExprRef inner;
  bool operator==(const Suspension&) const = default;
};
struct Product {
  ExprRef left;
  ExprRef right;
  bool operator==(const Product&) const = default;
};
struct CellularFiberBundle {
  ExprRef base;
  std::vector<std::int64_t> fiber_cells;
  bool operator==(const CellularFiberBundle&) const = default;
};
struct FixedComponent {
  ExprRef component;
  std::int64_t shift;
  bool operator==(const FixedComponent&) const = default;
};
struct Decomposition {
  std::vector<FixedComponent> components;
  bool operator==(const Decomposition&) const = default;
};
struct SymmetricProduct {
  ExprRef inner;
  std::int64_t d;
  bool operator==(const SymmetricProduct&) const = default;
};
struct HilbertScheme {
  std::int64_t b2;
  std::int64_t d;
  bool operator==(const HilbertScheme&) const = default;
};

}  // namespace node

using ExprNode =
    std::variant<node::Point, node::ProjectiveSpace, node::AffineSpace, node::Torus,
                 node::SplitQuadric, node::SingularHypersurface, node::Cellular, node::Toric,
                 node::Suspension, node::Product, node::CellularFiberBundle, node::Decomposition,
                 node::SymmetricProduct, node::HilbertScheme>;

class VarietyExpr {
 public:
  template <typename Node>
    requires std::is_constructible_v<ExprNode, Node>
  VarietyExpr(Node n) : node_(std::move(n)) {}  // NOLINT(google-explicit-constructor)

  const ExprNode& node() const { return node_; }

  template <typename Node>
  const Node* as() const {
    return std::get_if<Node>(&node_);
  }

  bool operator==(const VarietyExpr&) const = default;

 private:
  ExprNode node_;
};

inline ExprRef::ExprRef(VarietyExpr expr)
    : ptr_(std::make_shared<const VarietyExpr>(std::move(expr))) {}

inline bool operator==(const ExprRef& a, const ExprRef& b) {
  return a.ptr_ == b.ptr_ || *a.ptr_ == *b.ptr_;
}

/// Shorthand constructors.
namespace vx {
VarietyExpr point();
VarietyExpr proj(std::int64_t n);
VarietyExpr affine(std::int64_t n);
VarietyExpr torus(std::int64_t n);
VarietyExpr quadric(std::int64_t d);
VarietyExpr singquadric(std::int64_t m, std::int64_t d);
VarietyExpr cellular(std::vector<std::int64_t> cells, bool proper = true);
VarietyExpr toric(std::vector<std::int64_t> cone_counts,
                  node::Smoothness smoothness = node::Smoothness::Smooth);
VarietyExpr susp(VarietyExpr inner);
VarietyExpr prod(VarietyExpr left, VarietyExpr right);
VarietyExpr bundle(VarietyExpr base, std::vector<std::int64_t> fiber_cells);
VarietyExpr decomp(std::vector<std::pair<VarietyExpr, std::int64_t>> components);
VarietyExpr sp(VarietyExpr inner, std::int64_t d);
VarietyExpr hilb(std::int64_t b2, std::int64_t d);
}  // namespace vx

/// Multiset of cell dimensions stored as counts: count(i) cells of dimension i.
class CellProfile {
 public:
  CellProfile() = default;
  static CellProfile from_cells(const std::vector<std::int64_t>& cells);
  static CellProfile from_counts(std::vector<BigInt> counts);

  /// Largest dimension with a nonzero count; -1 when empty.
  std::int64_t max_cell() const { return static_cast<std::int64_t>(counts_.size()) - 1; }
  BigInt count(std::int64_t dim) const;
  BigInt cardinality() const;
  const std::vector<BigInt>& counts() const { return counts_; }

  CellProfile shifted(std::int64_t by) const;
  /// Pairwise sums (cells of a product).
  CellProfile convolve(const CellProfile& other) const;
  CellProfile& operator+=(const CellProfile& other);

  bool operator==(const CellProfile&) const = default;

 private:
  void trim();
  std::vector<BigInt> counts_;
};

struct VarietyAttributes {
  std::int64_t complex_dimension = 0;
  bool proper = true;
  Coefficients coefficients = Coefficients::Integer;
  std::optional<CellProfile> cell_profile;
  bool toric = false;
};

/// Largest complex dimension validate accepts; tables are materialized eagerly.
inline constexpr std::int64_t kMaxComplexDimension = 512;

/// Throws ValidationError (or InconsistentConeCounts) on unsupported input.
VarietyAttributes validate(const VarietyExpr& expr);

/// Betti numbers b_0, b_2, ..., b_2n of a smooth projective toric variety from
/// its cone counts. Throws InconsistentConeCounts when no such variety exists.
std::vector<BigInt> toric_betti(const std::vector<std::int64_t>& cone_counts);

/// Canonical expression text; parse(render(e)) == e.
std::string render(const VarietyExpr& expr);

}  // namespace lawson
