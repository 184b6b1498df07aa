#pragma once

#include "lawson/series.hpp"

namespace lawson {

// Throws DomainError unless both series share one truncation box.
void require_same_box(const TruncatedBiSeries& a, const TruncatedBiSeries& b);

}  // namespace lawson
