#include <sstream>
#include <string>

#include "lawson/varieties.hpp"

namespace lawson {

namespace {

void write_natlist(std::ostream& os, const std::vector<std::int64_t>& values) {
  os << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  os << ']';
}

void write(std::ostream& os, const VarietyExpr& expr);

struct Writer {
  std::ostream& os;

  void operator()(const node::Point&) const { os << "pt"; }
  void operator()(const node::ProjectiveSpace& p) const { os << "P(" << p.n << ')'; }
  void operator()(const node::AffineSpace& a) const { os << "affine(" << a.n << ')'; }
  void operator()(const node::Torus& t) const { os << "torus(" << t.n << ')'; }
  void operator()(const node::SplitQuadric& q) const { os << "quadric(" << q.d << ')'; }
  void operator()(const node::SingularHypersurface& h) const {
    os << "singquadric(" << h.m << ',' << h.d << ')';
  }
  void operator()(const node::Cellular& c) const {
    os << "cellular(";
    write_natlist(os, c.cells);
    if (!c.proper) os << ",open";
    os << ')';
  }
  void operator()(const node::Toric& t) const {
    os << "toric(";
    write_natlist(os, t.cone_counts);
    switch (t.smoothness) {
      case node::Smoothness::Smooth:
        break;
      case node::Smoothness::Simplicial:
        os << ",simplicial";
        break;
      case node::Smoothness::General:
        os << ",general";
        break;
    }
    os << ')';
  }
  void operator()(const node::Suspension& s) const {
    os << "susp(";
    write(os, *s.inner);
    os << ')';
  }
  void operator()(const node::Product& p) const {
    os << "prod(";
    write(os, *p.left);
    os << ", ";
    write(os, *p.right);
    os << ')';
  }
  void operator()(const node::CellularFiberBundle& b) const {
    os << "bundle(";
    write(os, *b.base);
    os << ", ";
    write_natlist(os, b.fiber_cells);
    os << ')';
  }
  void operator()(const node::Decomposition& d) const {
    os << "decomp(";
    for (std::size_t i = 0; i < d.components.size(); ++i) {
      if (i) os << ", ";
      write(os, *d.components[i].component);
      os << ':' << d.components[i].shift;
    }
    os << ')';
  }
  void operator()(const node::SymmetricProduct& s) const {
    os << "sp(";
    write(os, *s.inner);
    os << ", " << s.d << ')';
  }
  void operator()(const node::HilbertScheme& h) const {
    os << "hilb(" << h.b2 << ',' << h.d << ')';
  }
};

void write(std::ostream& os, const VarietyExpr& expr) { std::visit(Writer{os}, expr.node()); }

}  // namespace

std::string render(const VarietyExpr& expr) {
  std::ostringstream os;
  write(os, expr);
  return os.str();
}

}  // namespace lawson
