#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lawson/varieties.hpp"

namespace lawson {

struct CheckOutcome {
  std::string property;
  std::string instances;  // the instance range exercised
  bool passed = false;
  std::string detail;     // first counterexample when failed
};

struct CheckReport {
  std::vector<CheckOutcome> outcomes;
  bool all_passed() const;
};

/// Suite names accepted by run_checks.
const std::vector<std::string>& check_suites();

/// Runs the oracle equivalences of one suite ("all" runs every property).
/// Throws DomainError for an unknown suite name.
CheckReport run_checks(std::string_view suite);

/// Cone counts d_0..d_n of a random smooth projective toric variety: a product
/// of projective spaces followed by random blow-ups at torus-fixed points.
std::vector<std::int64_t> random_smooth_fan(std::mt19937_64& rng, std::int64_t n,
                                            int max_blowups = 4);

/// Proper integral expressions with a cell profile used by the suites.
std::vector<VarietyExpr> profiled_corpus();

}  // namespace lawson
