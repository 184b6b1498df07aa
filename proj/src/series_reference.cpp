#include <cstdint>

#include "series_internal.hpp"

namespace lawson {

TruncatedBiSeries series_mul_serial(const TruncatedBiSeries& a, const TruncatedBiSeries& b) {
  require_same_box(a, b);
  TruncatedBiSeries out(a.max_z(), a.max_t());
  for (std::int64_t za = 0; za <= a.max_z(); ++za) {
    for (std::int64_t ta = 0; ta <= a.max_t(); ++ta) {
      for (std::int64_t zb = 0; za + zb <= a.max_z(); ++zb) {
        for (std::int64_t tb = 0; ta + tb <= a.max_t(); ++tb) {
          out.coefficient(za + zb, ta + tb) += a.coefficient(za, ta) * b.coefficient(zb, tb);
        }
      }
    }
  }
  return out;
}

}  // namespace lawson
