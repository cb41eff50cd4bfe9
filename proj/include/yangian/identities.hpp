#pragma once

#include "yangian/bivariate.hpp"
#include "yangian/parabolic.hpp"
#include "yangian/report.hpp"

namespace yangian {

// The power-series lemma catalog. Identities carrying a (u - v) prefactor are
// compared in cross-multiplied polynomial form: both sides are expanded to
// bivariate order `order`, with the bracketed side computed one order deeper
// and then multiplied by (u - v). Division by (u - v) never happens.
const std::vector<std::string>& identity_ids();

// Truncation order the ParabolicContext must carry for the given bivariate
// comparison order.
int identity_order_for(int order);

// Verifies every admissible instance of one identity on pc's shape, with the
// power parameter bounded by ell_budget where the identity has one.
// Coefficient requests beyond pc's truncation are reported as skipped.
std::vector<CheckReport> verify_series_identity(const std::string& id,
                                                const ParabolicContext& pc,
                                                int order, int ell_budget);

}  // namespace yangian
